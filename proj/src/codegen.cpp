#include "ann/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <system_error>

#include "ann/printer.hpp"

namespace ann {

namespace {

std::string package_dir(const std::string& package_name) {
    std::string dir = package_name;
    std::replace(dir.begin(), dir.end(), '.', '/');
    if (!dir.empty()) dir += '/';
    return dir;
}

std::string element_kind_constant(TargetKind kind) {
    switch (kind) {
        case TargetKind::Class: return "ElementKind.CLASS";
        case TargetKind::Interface: return "ElementKind.INTERFACE";
        case TargetKind::Enum: return "ElementKind.ENUM";
        case TargetKind::Field: return "ElementKind.FIELD";
        case TargetKind::Method: return "ElementKind.METHOD";
        case TargetKind::Constructor: return "ElementKind.CONSTRUCTOR";
    }
    return "ElementKind.CLASS";
}

std::string modifier_constant(Modifier mod) {
    switch (mod) {
        case Modifier::Public: return "Modifier.PUBLIC";
        case Modifier::Protected: return "Modifier.PROTECTED";
        case Modifier::Private: return "Modifier.PRIVATE";
        case Modifier::Static: return "Modifier.STATIC";
        case Modifier::Final: return "Modifier.FINAL";
        case Modifier::Abstract: return "Modifier.ABSTRACT";
    }
    return "Modifier.PUBLIC";
}

std::string source_version_constant(const std::string& value) {
    bool digits = !value.empty() && std::all_of(value.begin(), value.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
    return digits ? "RELEASE_" + value : value;
}

std::string attribute_type_text(AttrType type) {
    switch (type) {
        case AttrType::String: return "String";
        case AttrType::Int: return "int";
        case AttrType::Float: return "float";
        case AttrType::Boolean: return "boolean";
        case AttrType::Class: return "Class<?>";
    }
    return "String";
}

std::string attribute_default_text(const AttributeDecl& attr) {
    const Literal& lit = *attr.default_value;
    if (lit.kind == Literal::Kind::String) return quote_string_literal(lit.text);
    if (attr.type == AttrType::Float) return lit.text + "f";
    return lit.text;
}

// matches(elt, ElementKind.K, Modifier.X, ...) or the annotated variant with
// the referenced name first.
std::string match_call(const Statement& stmt, const std::string& subject) {
    std::string call = stmt.annotation_ref ? "matchesAnnotated(" : "matches(";
    call += subject;
    if (stmt.annotation_ref) {
        call += ", \"" + *stmt.annotation_ref + "\"";
    }
    call += ", " + element_kind_constant(stmt.kind);
    for (Modifier mod : all_modifiers) {
        if (stmt.modifiers.contains(mod)) call += ", " + modifier_constant(mod);
    }
    call += ")";
    return call;
}

std::string join_match_calls(const std::vector<const Statement*>& stmts, const std::string& subject,
                             const char* joiner) {
    std::string out;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        if (i > 0) out += joiner;
        out += match_call(*stmts[i], subject);
    }
    return out;
}

struct ProcessorNeeds {
    bool refs = false;    // any statement names another annotation
    bool scoped = false;  // any constraint uses a scope
};

class JavaWriter {
public:
    void line(int indent, std::string_view text) {
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += text;
        out_ += '\n';
    }
    void blank() { out_ += '\n'; }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

std::vector<TargetKind> distinct_statement_kinds(const Constraint& constraint) {
    std::vector<TargetKind> kinds;
    TargetKindSet seen;
    for (const Statement& stmt : constraint.statements) {
        if (seen.contains(stmt.kind)) continue;
        seen.insert(stmt.kind);
        kinds.push_back(stmt.kind);
    }
    return kinds;
}

std::vector<const Statement*> statements_of_kind(const Constraint& constraint, TargetKind kind) {
    std::vector<const Statement*> out;
    for (const Statement& stmt : constraint.statements) {
        if (stmt.kind == kind) out.push_back(&stmt);
    }
    return out;
}

void emit_report(JavaWriter& java, int indent, const std::string& decl_name,
                 const Constraint& constraint) {
    std::string message = "@" + decl_name + " violates: " + print_constraint(constraint);
    java.line(indent, "report(elt, " + quote_string_literal(message) + ");");
}

void emit_unscoped_require(JavaWriter& java, const std::string& decl_name,
                           const Constraint& constraint) {
    std::vector<const Statement*> stmts;
    for (const Statement& s : constraint.statements) stmts.push_back(&s);
    java.line(3, "if (!(" + join_match_calls(stmts, "elt", " || ") + "))");
    java.line(3, "{");
    emit_report(java, 4, decl_name, constraint);
    java.line(3, "}");
}

void emit_unscoped_forbid(JavaWriter& java, const std::string& decl_name,
                          const Constraint& constraint) {
    std::vector<const Statement*> stmts;
    for (const Statement& s : constraint.statements) stmts.push_back(&s);
    java.line(3, "if (" + join_match_calls(stmts, "elt", " && ") + ")");
    java.line(3, "{");
    emit_report(java, 4, decl_name, constraint);
    java.line(3, "}");
}

void emit_scoped_require(JavaWriter& java, const std::string& decl_name,
                         const Constraint& constraint) {
    java.line(3, "if (elt.getKind() == " + element_kind_constant(*constraint.scope) + ")");
    java.line(3, "{");
    bool universal = constraint.all_quantifier;
    java.line(4, universal ? "boolean satisfied = true;" : "boolean satisfied = false;");
    for (TargetKind kind : distinct_statement_kinds(constraint)) {
        // Under `all` every related element must satisfy a disjunct of its own
        // kind; otherwise one satisfying element anywhere is enough.
        std::vector<const Statement*> stmts = statements_of_kind(constraint, kind);
        java.line(4, "for (Element rel : related(elt, " + element_kind_constant(kind) + "))");
        java.line(4, "{");
        if (universal) {
            java.line(5, "if (!(" + join_match_calls(stmts, "rel", " || ") + "))");
            java.line(5, "{");
            java.line(6, "satisfied = false;");
            java.line(5, "}");
        } else {
            java.line(5, "if (" + join_match_calls(stmts, "rel", " || ") + ")");
            java.line(5, "{");
            java.line(6, "satisfied = true;");
            java.line(5, "}");
        }
        java.line(4, "}");
    }
    java.line(4, "if (!satisfied)");
    java.line(4, "{");
    emit_report(java, 5, decl_name, constraint);
    java.line(4, "}");
    java.line(3, "}");
}

void emit_scoped_forbid(JavaWriter& java, const std::string& decl_name,
                        const Constraint& constraint) {
    java.line(3, "if (elt.getKind() == " + element_kind_constant(*constraint.scope) + ")");
    java.line(3, "{");
    std::string condition;
    for (std::size_t i = 0; i < constraint.statements.size(); ++i) {
        const Statement& stmt = constraint.statements[i];
        std::string flag = "found" + std::to_string(i + 1);
        java.line(4, "boolean " + flag + " = false;");
        java.line(4, "for (Element rel : related(elt, " + element_kind_constant(stmt.kind) + "))");
        java.line(4, "{");
        java.line(5, "if (" + match_call(stmt, "rel") + ")");
        java.line(5, "{");
        java.line(6, flag + " = true;");
        java.line(5, "}");
        java.line(4, "}");
        if (i > 0) condition += " && ";
        condition += flag;
    }
    java.line(4, "if (" + condition + ")");
    java.line(4, "{");
    emit_report(java, 5, decl_name, constraint);
    java.line(4, "}");
    java.line(3, "}");
}

GeneratedFile render_processor(const AnnotationDecl& decl, const std::string& package_name,
                               Constraint::Polarity polarity, const GenOptions& options) {
    std::vector<const Constraint*> constraints;
    ProcessorNeeds needs;
    for (const Constraint& constraint : decl.constraints) {
        if (constraint.polarity != polarity) continue;
        constraints.push_back(&constraint);
        if (constraint.scope) needs.scoped = true;
        for (const Statement& stmt : constraint.statements) {
            if (stmt.annotation_ref) needs.refs = true;
        }
    }

    std::string class_name =
        decl.name + (polarity == Constraint::Polarity::Require ? "RequireProcessor"
                                                               : "ForbidProcessor");
    JavaWriter java;
    if (!package_name.empty()) {
        java.line(0, "package " + package_name + ";");
        java.blank();
    }
    java.line(0, "import java.util.Set;");
    if (needs.scoped) {
        java.line(0, "import java.util.ArrayList;");
        java.line(0, "import java.util.List;");
    }
    java.line(0, "import javax.annotation.processing.AbstractProcessor;");
    java.line(0, "import javax.annotation.processing.RoundEnvironment;");
    java.line(0, "import javax.annotation.processing.SupportedAnnotationTypes;");
    java.line(0, "import javax.annotation.processing.SupportedSourceVersion;");
    java.line(0, "import javax.lang.model.SourceVersion;");
    if (needs.refs) {
        java.line(0, "import javax.lang.model.element.AnnotationMirror;");
    }
    java.line(0, "import javax.lang.model.element.Element;");
    java.line(0, "import javax.lang.model.element.ElementKind;");
    java.line(0, "import javax.lang.model.element.Modifier;");
    java.line(0, "import javax.lang.model.element.TypeElement;");
    java.line(0, "import javax.tools.Diagnostic.Kind;");
    java.blank();
    java.line(0, "@SupportedAnnotationTypes(\"" + decl.name + "\")");
    java.line(0, "@SupportedSourceVersion(SourceVersion." +
                     source_version_constant(options.source_version) + ")");
    java.line(0, "public class " + class_name + " extends AbstractProcessor");
    java.line(0, "{");
    java.line(1, "@Override");
    java.line(1, "public boolean process(Set<? extends TypeElement> annotations,");
    java.line(1, "                       RoundEnvironment objects)");
    java.line(1, "{");
    java.line(2, "for (Element elt : objects.getElementsAnnotatedWith(" + decl.name + ".class))");
    java.line(2, "{");
    bool first = true;
    for (const Constraint* constraint : constraints) {
        if (!first) java.blank();
        first = false;
        java.line(3, "// " + print_constraint(*constraint));
        if (!constraint->scope) {
            if (polarity == Constraint::Polarity::Require) {
                emit_unscoped_require(java, decl.name, *constraint);
            } else {
                emit_unscoped_forbid(java, decl.name, *constraint);
            }
        } else if (polarity == Constraint::Polarity::Require) {
            emit_scoped_require(java, decl.name, *constraint);
        } else {
            emit_scoped_forbid(java, decl.name, *constraint);
        }
    }
    java.line(2, "}");
    java.line(2, "return true;");
    java.line(1, "}");
    java.blank();
    java.line(1, "private void report(Element elt, String message)");
    java.line(1, "{");
    java.line(2, "this.processingEnv.getMessager().printMessage(Kind.ERROR, message, elt);");
    java.line(1, "}");
    java.blank();
    java.line(1, "private static boolean matches(Element elt, ElementKind kind, Modifier... modifiers)");
    java.line(1, "{");
    java.line(2, "if (elt.getKind() != kind)");
    java.line(2, "{");
    java.line(3, "return false;");
    java.line(2, "}");
    java.line(2, "for (Modifier modifier : modifiers)");
    java.line(2, "{");
    java.line(3, "if (!elt.getModifiers().contains(modifier))");
    java.line(3, "{");
    java.line(4, "return false;");
    java.line(3, "}");
    java.line(2, "}");
    java.line(2, "return true;");
    java.line(1, "}");
    if (needs.refs) {
        java.blank();
        java.line(1, "private static boolean matchesAnnotated(Element elt, String annotation,");
        java.line(1, "                                         ElementKind kind, Modifier... modifiers)");
        java.line(1, "{");
        java.line(2, "return matches(elt, kind, modifiers) && hasAnnotation(elt, annotation);");
        java.line(1, "}");
        java.blank();
        java.line(1, "private static boolean hasAnnotation(Element elt, String simpleName)");
        java.line(1, "{");
        java.line(2, "for (AnnotationMirror mirror : elt.getAnnotationMirrors())");
        java.line(2, "{");
        java.line(3, "Element annotation = mirror.getAnnotationType().asElement();");
        java.line(3, "if (annotation.getSimpleName().contentEquals(simpleName))");
        java.line(3, "{");
        java.line(4, "return true;");
        java.line(3, "}");
        java.line(2, "}");
        java.line(2, "return false;");
        java.line(1, "}");
    }
    if (needs.scoped) {
        java.blank();
        java.line(1, "// Related elements for a scoped constraint: the enclosing type for");
        java.line(1, "// type kinds (the element itself when it already is a type), otherwise");
        java.line(1, "// the surrounding type's members of the requested kind.");
        java.line(1, "private static List<Element> related(Element elt, ElementKind kind)");
        java.line(1, "{");
        java.line(2, "List<Element> out = new ArrayList<>();");
        java.line(2, "Element container = isTypeKind(elt.getKind()) ? elt : elt.getEnclosingElement();");
        java.line(2, "if (container == null)");
        java.line(2, "{");
        java.line(3, "return out;");
        java.line(2, "}");
        java.line(2, "if (isTypeKind(kind))");
        java.line(2, "{");
        java.line(3, "out.add(container);");
        java.line(3, "return out;");
        java.line(2, "}");
        java.line(2, "for (Element member : container.getEnclosedElements())");
        java.line(2, "{");
        java.line(3, "if (member.getKind() == kind)");
        java.line(3, "{");
        java.line(4, "out.add(member);");
        java.line(3, "}");
        java.line(2, "}");
        java.line(2, "return out;");
        java.line(1, "}");
        java.blank();
        java.line(1, "private static boolean isTypeKind(ElementKind kind)");
        java.line(1, "{");
        java.line(2, "return kind == ElementKind.CLASS || kind == ElementKind.INTERFACE");
        java.line(2, "        || kind == ElementKind.ENUM;");
        java.line(1, "}");
    }
    java.line(0, "}");

    return GeneratedFile{package_dir(package_name) + class_name + ".java", java.take()};
}

}  // namespace

GeneratedFile render_annotation_declaration(const AnnotationDecl& decl,
                                            const std::string& package_name) {
    TargetKindSet kinds = derive_target_kinds(decl);
    bool emit_target = kinds != TargetKindSet::all();

    JavaWriter java;
    if (!package_name.empty()) {
        java.line(0, "package " + package_name + ";");
        java.blank();
    }
    if (emit_target || decl.runtime) {
        if (emit_target) {
            java.line(0, "import java.lang.annotation.Target;");
            java.line(0, "import java.lang.annotation.ElementType;");
        }
        if (decl.runtime) {
            java.line(0, "import java.lang.annotation.Retention;");
            java.line(0, "import java.lang.annotation.RetentionPolicy;");
        }
        java.blank();
    }
    if (emit_target) {
        std::vector<std::string> element_types = java_element_types(kinds);
        std::string arg;
        for (std::size_t i = 0; i < element_types.size(); ++i) {
            if (i > 0) arg += ", ";
            arg += "ElementType." + element_types[i];
        }
        if (element_types.size() > 1) arg = "{" + arg + "}";
        java.line(0, "@Target(" + arg + ")");
    }
    if (decl.runtime) {
        java.line(0, "@Retention(RetentionPolicy.RUNTIME)");
    }
    if (decl.attributes.empty()) {
        java.line(0, "public @interface " + decl.name + " { }");
    } else {
        java.line(0, "public @interface " + decl.name + " {");
        for (const AttributeDecl& attr : decl.attributes) {
            std::string line = attribute_type_text(attr.type) + " " + attr.name + "()";
            if (attr.default_value) {
                line += " default " + attribute_default_text(attr);
            }
            line += ";";
            java.line(1, line);
        }
        java.line(0, "}");
    }

    return GeneratedFile{package_dir(package_name) + decl.name + ".java", java.take()};
}

std::vector<GeneratedFile> render_processors(const AnnotationDecl& decl,
                                             const std::string& package_name,
                                             const GenOptions& options) {
    bool has_require = false;
    bool has_forbid = false;
    for (const Constraint& constraint : decl.constraints) {
        (constraint.polarity == Constraint::Polarity::Require ? has_require : has_forbid) = true;
    }
    std::vector<GeneratedFile> files;
    if (has_require) {
        files.push_back(
            render_processor(decl, package_name, Constraint::Polarity::Require, options));
    }
    if (has_forbid) {
        files.push_back(
            render_processor(decl, package_name, Constraint::Polarity::Forbid, options));
    }
    return files;
}

namespace {

void render_unit_into(const AnnotationUnit& unit, const GenOptions& options,
                      std::vector<GeneratedFile>& files,
                      std::vector<std::string>& processor_names) {
    for (const AnnotationDecl& decl : unit.declarations) {
        files.push_back(render_annotation_declaration(decl, unit.package_name));
        for (GeneratedFile& file : render_processors(decl, unit.package_name, options)) {
            std::string stem = file.relative_path.substr(package_dir(unit.package_name).size());
            stem = stem.substr(0, stem.size() - 5);  // drop ".java"
            processor_names.push_back(
                unit.package_name.empty() ? stem : unit.package_name + "." + stem);
            files.push_back(std::move(file));
        }
    }
}

GeneratedFile services_manifest(const std::vector<std::string>& processor_names) {
    std::string content;
    for (const std::string& name : processor_names) {
        content += name;
        content += '\n';
    }
    return GeneratedFile{"META-INF/services/javax.annotation.processing.Processor",
                         std::move(content)};
}

std::vector<GeneratedFile> render_all(const std::vector<AnnotationUnit>& units,
                                      const GenOptions& options) {
    std::vector<GeneratedFile> files;
    std::vector<std::string> processor_names;
    for (const AnnotationUnit& unit : units) {
        render_unit_into(unit, options, files, processor_names);
    }
    if (options.services && !processor_names.empty()) {
        files.push_back(services_manifest(processor_names));
    }
    return files;
}

}  // namespace

std::vector<GeneratedFile> render_unit(const AnnotationUnit& unit, const GenOptions& options) {
    return render_all({unit}, options);
}

GenResult generate(const std::vector<AnnotationUnit>& units,
                   const std::filesystem::path& output_root, const GenOptions& options) {
    GenResult result;
    std::vector<GeneratedFile> files = render_all(units, options);

    auto path_span = [&](const std::filesystem::path& path) {
        return SourceSpan{path.generic_string(), 1, 1, 0, 0};
    };

    std::vector<std::string> seen;
    for (const GeneratedFile& file : files) {
        seen.push_back(file.relative_path);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i] == seen[i - 1] && (i + 1 == seen.size() || seen[i + 1] != seen[i])) {
            result.diagnostics.push_back(
                make_error("ANN0401", "output path produced more than once: " + seen[i],
                           path_span(output_root / seen[i])));
        }
    }
    if (!options.force) {
        for (const GeneratedFile& file : files) {
            std::filesystem::path dest = output_root / file.relative_path;
            std::error_code ec;
            if (std::filesystem::exists(dest, ec)) {
                result.diagnostics.push_back(make_error(
                    "ANN0401",
                    "output file already exists: " + dest.generic_string() +
                        " (pass --force to overwrite)",
                    path_span(dest)));
            }
        }
    }
    if (!result.diagnostics.empty()) {
        sort_diagnostics(result.diagnostics);
        return result;
    }

    for (const GeneratedFile& file : files) {
        std::filesystem::path dest = output_root / file.relative_path;
        std::error_code ec;
        std::filesystem::create_directories(dest.parent_path(), ec);
        if (ec) {
            result.diagnostics.push_back(make_error(
                "ANN0402",
                "cannot create directory " + dest.parent_path().generic_string() + ": " +
                    ec.message(),
                path_span(dest)));
            result.files.clear();
            return result;
        }
        std::filesystem::path temp = dest;
        temp += ".tmp";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            out.write(file.content.data(),
                      static_cast<std::streamsize>(file.content.size()));
            if (!out) {
                result.diagnostics.push_back(make_error(
                    "ANN0402", "cannot write " + temp.generic_string(), path_span(dest)));
                result.files.clear();
                return result;
            }
        }
        std::filesystem::rename(temp, dest, ec);
        if (ec) {
            result.diagnostics.push_back(make_error(
                "ANN0402",
                "cannot move " + temp.generic_string() + " into place: " + ec.message(),
                path_span(dest)));
            result.files.clear();
            return result;
        }
        result.files.push_back(file);
    }
    return result;
}

GenResult generate(const AnnotationUnit& unit, const std::filesystem::path& output_root,
                   const GenOptions& options) {
    return generate(std::vector<AnnotationUnit>{unit}, output_root, options);
}

}  // namespace ann
