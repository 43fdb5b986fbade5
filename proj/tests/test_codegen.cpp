#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "ann/codegen.hpp"
#include "ann/parser.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ann;
using test_support::count_occurrences;
using test_support::fixture_path;
using test_support::parse_ann;
using test_support::read_file;

namespace {

const AnnotationDecl& decl_named(const AnnotationUnit& unit, const std::string& name) {
    for (const AnnotationDecl& decl : unit.declarations) {
        if (decl.name == name) return decl;
    }
    throw std::runtime_error("no declaration named " + name);
}

}  // namespace

TEST_CASE("the person annotation renders with target and defaults") {
    AnnotationUnit unit = parse_ann(read_file(fixture_path("person.ann")), "person.ann");
    GeneratedFile file = render_annotation_declaration(unit.declarations[0], unit.package_name);
    CHECK(file.relative_path == "examples/Person.java");
    CHECK(file.content ==
          "package examples;\n"
          "\n"
          "import java.lang.annotation.Target;\n"
          "import java.lang.annotation.ElementType;\n"
          "\n"
          "@Target(ElementType.TYPE)\n"
          "public @interface Person {\n"
          "    String name() default \"Mary\";\n"
          "    int age() default 21;\n"
          "    float weight() default 52.3f;\n"
          "}\n");
}

TEST_CASE("the person require processor is a complete compilable unit") {
    AnnotationUnit unit = parse_ann(read_file(fixture_path("person.ann")), "person.ann");
    std::vector<GeneratedFile> files = render_processors(unit.declarations[0], unit.package_name);
    REQUIRE(files.size() == 2);
    CHECK(files[0].relative_path == "examples/PersonRequireProcessor.java");
    CHECK(files[0].content ==
          "package examples;\n"
          "\n"
          "import java.util.Set;\n"
          "import javax.annotation.processing.AbstractProcessor;\n"
          "import javax.annotation.processing.RoundEnvironment;\n"
          "import javax.annotation.processing.SupportedAnnotationTypes;\n"
          "import javax.annotation.processing.SupportedSourceVersion;\n"
          "import javax.lang.model.SourceVersion;\n"
          "import javax.lang.model.element.Element;\n"
          "import javax.lang.model.element.ElementKind;\n"
          "import javax.lang.model.element.Modifier;\n"
          "import javax.lang.model.element.TypeElement;\n"
          "import javax.tools.Diagnostic.Kind;\n"
          "\n"
          "@SupportedAnnotationTypes(\"Person\")\n"
          "@SupportedSourceVersion(SourceVersion.RELEASE_8)\n"
          "public class PersonRequireProcessor extends AbstractProcessor\n"
          "{\n"
          "    @Override\n"
          "    public boolean process(Set<? extends TypeElement> annotations,\n"
          "                           RoundEnvironment objects)\n"
          "    {\n"
          "        for (Element elt : objects.getElementsAnnotatedWith(Person.class))\n"
          "        {\n"
          "            // require public class;\n"
          "            if (!(matches(elt, ElementKind.CLASS, Modifier.PUBLIC)))\n"
          "            {\n"
          "                report(elt, \"@Person violates: require public class;\");\n"
          "            }\n"
          "        }\n"
          "        return true;\n"
          "    }\n"
          "\n"
          "    private void report(Element elt, String message)\n"
          "    {\n"
          "        this.processingEnv.getMessager().printMessage(Kind.ERROR, message, elt);\n"
          "    }\n"
          "\n"
          "    private static boolean matches(Element elt, ElementKind kind, Modifier... modifiers)\n"
          "    {\n"
          "        if (elt.getKind() != kind)\n"
          "        {\n"
          "            return false;\n"
          "        }\n"
          "        for (Modifier modifier : modifiers)\n"
          "        {\n"
          "            if (!elt.getModifiers().contains(modifier))\n"
          "            {\n"
          "                return false;\n"
          "            }\n"
          "        }\n"
          "        return true;\n"
          "    }\n"
          "}\n");
}

TEST_CASE("the person forbid processor walks related fields") {
    AnnotationUnit unit = parse_ann(read_file(fixture_path("person.ann")), "person.ann");
    std::vector<GeneratedFile> files = render_processors(unit.declarations[0], unit.package_name);
    REQUIRE(files.size() == 2);
    const std::string& content = files[1].content;
    CHECK(files[1].relative_path == "examples/PersonForbidProcessor.java");
    CHECK(content.find("import java.util.ArrayList;") != std::string::npos);
    CHECK(content.find("// at class: forbid final field;") != std::string::npos);
    CHECK(content.find("if (elt.getKind() == ElementKind.CLASS)") != std::string::npos);
    CHECK(content.find("for (Element rel : related(elt, ElementKind.FIELD))") !=
          std::string::npos);
    CHECK(content.find("if (matches(rel, ElementKind.FIELD, Modifier.FINAL))") !=
          std::string::npos);
    CHECK(content.find("report(elt, \"@Person violates: at class: forbid final field;\");") !=
          std::string::npos);
    CHECK(content.find("private static List<Element> related(Element elt, ElementKind kind)") !=
          std::string::npos);
    CHECK(content.find("private static boolean isTypeKind(ElementKind kind)") !=
          std::string::npos);
    // No annotation references in person.ann, so no mirror machinery.
    CHECK(content.find("AnnotationMirror") == std::string::npos);
    CHECK(content.find("matchesAnnotated") == std::string::npos);
}

TEST_CASE("runtime annotations get a retention header") {
    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");
    GeneratedFile entity = render_annotation_declaration(decl_named(jpa, "Entity"), "");
    CHECK(entity.relative_path == "Entity.java");
    CHECK(entity.content.find("@Retention(RetentionPolicy.RUNTIME)") != std::string::npos);
    CHECK(entity.content.find("@Target(ElementType.TYPE)") != std::string::npos);
    CHECK(entity.content.find("String name() default \"\";") != std::string::npos);

    GeneratedFile id = render_annotation_declaration(decl_named(jpa, "Id"), "");
    CHECK(id.content.find("@Target({ElementType.FIELD, ElementType.METHOD})") !=
          std::string::npos);
    CHECK(id.content.find("public @interface Id { }") != std::string::npos);

    GeneratedFile id_class = render_annotation_declaration(decl_named(jpa, "IdClass"), "");
    CHECK(id_class.content.find("Class<?> value();") != std::string::npos);
}

TEST_CASE("an unconstrained annotation renders without target or processors") {
    AnnotationUnit unit = parse_ann("annotation Marker { }");
    GeneratedFile file = render_annotation_declaration(unit.declarations[0], "");
    CHECK(file.content == "public @interface Marker { }\n");
    CHECK(render_processors(unit.declarations[0], "").empty());
}

TEST_CASE("processor files split by polarity with one comment per constraint") {
    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");

    std::vector<GeneratedFile> entity = render_processors(decl_named(jpa, "Entity"), "");
    REQUIRE(entity.size() == 2);
    CHECK(entity[0].relative_path == "EntityRequireProcessor.java");
    CHECK(entity[1].relative_path == "EntityForbidProcessor.java");
    CHECK(count_occurrences(entity[0].content, "@SupportedAnnotationTypes") == 1);
    CHECK(count_occurrences(entity[0].content, "\n            // ") == 3);
    CHECK(count_occurrences(entity[1].content, "\n            // ") == 4);
    CHECK(entity[0].content.find("matchesAnnotated(rel, \"Id\", ElementKind.METHOD)") !=
          std::string::npos);

    CHECK(render_processors(decl_named(jpa, "Embeddable"), "").size() == 2);
    CHECK(render_processors(decl_named(jpa, "EmbeddedId"), "").size() == 1);
    CHECK(render_processors(decl_named(jpa, "Id"), "").size() == 1);
    CHECK(render_processors(decl_named(jpa, "IdClass"), "").size() == 1);
}

TEST_CASE("scoped requires aggregate disjuncts per related kind") {
    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");
    std::vector<GeneratedFile> files = render_processors(decl_named(jpa, "Entity"), "");
    const std::string& require = files[0].content;
    // The four-disjunct primary-key constraint loops once per distinct kind
    // with its own disjuncts or-joined.
    CHECK(require.find("boolean satisfied = false;") != std::string::npos);
    CHECK(require.find("for (Element rel : related(elt, ElementKind.METHOD))") !=
          std::string::npos);
    CHECK(require.find("for (Element rel : related(elt, ElementKind.FIELD))") !=
          std::string::npos);
    CHECK(require.find("if (matchesAnnotated(rel, \"Id\", ElementKind.METHOD) || "
                       "matchesAnnotated(rel, \"EmbeddedId\", ElementKind.METHOD))") !=
          std::string::npos);
    CHECK(require.find("if (!satisfied)") != std::string::npos);
}

TEST_CASE("file count follows declarations plus polarities") {
    oracles::Rng rng(333);
    std::vector<std::string> names{"Entity", "Id", "EmbeddedId"};
    for (int round = 0; round < 200; ++round) {
        AnnotationUnit unit;
        int count = 1 + rng.below(3);
        for (int i = 0; i < count; ++i) {
            AnnotationDecl decl = oracles::random_decl(rng, names);
            decl.name = "A" + std::to_string(i);
            unit.declarations.push_back(std::move(decl));
        }
        int with_require = 0;
        int with_forbid = 0;
        for (const AnnotationDecl& decl : unit.declarations) {
            bool require = false;
            bool forbid = false;
            for (const Constraint& constraint : decl.constraints) {
                (constraint.polarity == Constraint::Polarity::Require ? require : forbid) = true;
            }
            with_require += require ? 1 : 0;
            with_forbid += forbid ? 1 : 0;
        }
        CHECK(render_unit(unit).size() ==
              unit.declarations.size() + static_cast<std::size_t>(with_require + with_forbid));
    }
}

TEST_CASE("rendering is byte stable") {
    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");
    std::vector<GeneratedFile> first = render_unit(jpa);
    std::vector<GeneratedFile> second = render_unit(jpa);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].relative_path == second[i].relative_path);
        CHECK(first[i].content == second[i].content);
    }
}

TEST_CASE("the source version option accepts numbers and constant names") {
    AnnotationUnit unit = parse_ann("annotation A { require class; }");
    GenOptions options;
    options.source_version = "6";
    std::vector<GeneratedFile> files = render_processors(unit.declarations[0], "", options);
    CHECK(files[0].content.find("@SupportedSourceVersion(SourceVersion.RELEASE_6)") !=
          std::string::npos);
    options.source_version = "RELEASE_7";
    files = render_processors(unit.declarations[0], "", options);
    CHECK(files[0].content.find("@SupportedSourceVersion(SourceVersion.RELEASE_7)") !=
          std::string::npos);
}

TEST_CASE("generate writes the fixture corpus to disk once") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "annc_codegen_test";
    fs::remove_all(root);

    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");

    GenResult result = generate(jpa, root);
    CHECK(result.diagnostics.empty());
    CHECK(result.files.size() == 12);
    CHECK(fs::exists(root / "Entity.java"));
    CHECK(fs::exists(root / "EntityForbidProcessor.java"));
    CHECK(fs::exists(root / "IdClassRequireProcessor.java"));
    CHECK(read_file((root / "Entity.java").string()).find("public @interface Entity") !=
          std::string::npos);

    SUBCASE("a second run without force refuses to overwrite") {
        GenResult again = generate(jpa, root);
        CHECK(again.files.empty());
        REQUIRE_FALSE(again.diagnostics.empty());
        CHECK(again.diagnostics[0].code == "ANN0401");
        CHECK(again.diagnostics[0].message.find("already exists") != std::string::npos);
        CHECK(again.diagnostics[0].message.find("--force") != std::string::npos);
    }

    SUBCASE("force overwrites in place") {
        GenOptions options;
        options.force = true;
        GenResult again = generate(jpa, root, options);
        CHECK(again.diagnostics.empty());
        CHECK(again.files.size() == 12);
    }

    fs::remove_all(root);
}

TEST_CASE("the services manifest lists processors in declaration order") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "annc_codegen_services";
    fs::remove_all(root);

    AnnotationUnit jpa = parse_ann(read_file(fixture_path("jpa.ann")), "jpa.ann");
    GenOptions options;
    options.services = true;
    GenResult result = generate(jpa, root, options);
    CHECK(result.diagnostics.empty());
    CHECK(result.files.size() == 13);
    std::string manifest =
        read_file((root / "META-INF/services/javax.annotation.processing.Processor").string());
    CHECK(manifest ==
          "EntityRequireProcessor\n"
          "EntityForbidProcessor\n"
          "EmbeddableRequireProcessor\n"
          "EmbeddableForbidProcessor\n"
          "EmbeddedIdRequireProcessor\n"
          "IdRequireProcessor\n"
          "IdClassRequireProcessor\n");

    fs::remove_all(root);
}

TEST_CASE("package names turn into directories and qualified manifest entries") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "annc_codegen_pkg";
    fs::remove_all(root);

    AnnotationUnit person = parse_ann(read_file(fixture_path("person.ann")), "person.ann");
    GenOptions options;
    options.services = true;
    GenResult result = generate(person, root, options);
    CHECK(result.diagnostics.empty());
    CHECK(fs::exists(root / "examples/Person.java"));
    CHECK(fs::exists(root / "examples/PersonRequireProcessor.java"));
    std::string manifest =
        read_file((root / "META-INF/services/javax.annotation.processing.Processor").string());
    CHECK(manifest ==
          "examples.PersonRequireProcessor\n"
          "examples.PersonForbidProcessor\n");

    fs::remove_all(root);
}

TEST_CASE("clashing output paths across units fail before writing") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "annc_codegen_clash";
    fs::remove_all(root);

    AnnotationUnit first = parse_ann("annotation A { require class; }");
    AnnotationUnit second = parse_ann("annotation A { forbid final class; }");
    GenResult result = generate(std::vector<AnnotationUnit>{first, second}, root);
    CHECK(result.files.empty());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].code == "ANN0401");
    CHECK(result.diagnostics[0].message == "output path produced more than once: A.java");
    CHECK_FALSE(fs::exists(root / "A.java"));

    fs::remove_all(root);
}
