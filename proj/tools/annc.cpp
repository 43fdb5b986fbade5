#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ann/checker.hpp"
#include "ann/codegen.hpp"
#include "ann/diagnostic.hpp"
#include "ann/java_parser.hpp"
#include "ann/parser.hpp"
#include "ann/validator.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    bool json = false;
    bool deny_warnings = false;
    std::vector<std::string> allowlist;
};

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buffer).str();
}

nlohmann::json diagnostic_to_json(const ann::Diagnostic& diag) {
    nlohmann::json entry{
        {"file", diag.span.file},       {"line", diag.span.line},
        {"column", diag.span.column},   {"severity", std::string(severity_name(diag.severity))},
        {"code", diag.code},            {"message", diag.message},
    };
    nlohmann::json fixes = nlohmann::json::array();
    for (const ann::QuickFix& fix : diag.quick_fixes) {
        fixes.push_back(nlohmann::json{
            {"label", fix.label},
            {"kind", fix.edit.kind == ann::QuickFixEdit::Kind::RemoveConstraint
                         ? "remove_constraint"
                         : "remove_statement"},
            {"file", fix.edit.span.file},
            {"line", fix.edit.span.line},
            {"column", fix.edit.span.column},
            {"length", fix.edit.span.length},
        });
    }
    entry["quick_fixes"] = std::move(fixes);
    return entry;
}

void print_diagnostics(const std::vector<ann::Diagnostic>& diags, bool json) {
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const ann::Diagnostic& diag : diags) out.push_back(diagnostic_to_json(diag));
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const ann::Diagnostic& diag : diags) {
        std::cout << ann::format_diagnostic(diag) << "\n";
    }
}

int exit_code_for(const std::vector<ann::Diagnostic>& diags, const CommonFlags& flags) {
    if (ann::has_errors(diags)) return kExitDiagnostics;
    if (flags.deny_warnings && !diags.empty()) return kExitDiagnostics;
    return kExitOk;
}

int usage_error(const std::string& message) {
    std::cerr << "annc: error: " << message << "\n";
    return kExitUsage;
}

struct LoadedUnits {
    std::vector<ann::AnnotationUnit> units;  // the files that parsed cleanly
    std::vector<ann::Diagnostic> diagnostics;
    bool io_failed = false;
};

// Parse every .ann file, then validate each against the names declared across
// all of them (plus --allow names), so cross-file references do not warn.
LoadedUnits load_ann_files(const std::vector<std::string>& paths, const CommonFlags& flags) {
    LoadedUnits loaded;
    std::vector<std::pair<std::string, ann::ParseResult>> parses;
    for (const std::string& path : paths) {
        std::optional<std::string> text = read_file(path);
        if (!text) {
            std::cerr << "annc: error: cannot read " << path << "\n";
            loaded.io_failed = true;
            return loaded;
        }
        parses.emplace_back(path, ann::parse_unit(*text, path));
    }

    std::vector<std::string> allowlist = flags.allowlist;
    for (const auto& [path, result] : parses) {
        if (!result.unit) continue;
        for (const ann::AnnotationDecl& decl : result.unit->declarations) {
            allowlist.push_back(decl.name);
        }
    }

    for (auto& [path, result] : parses) {
        loaded.diagnostics.insert(loaded.diagnostics.end(), result.diagnostics.begin(),
                                  result.diagnostics.end());
        if (!result.unit) continue;
        std::vector<ann::Diagnostic> validation = ann::validate_unit(*result.unit, allowlist);
        loaded.diagnostics.insert(loaded.diagnostics.end(), validation.begin(), validation.end());
        loaded.units.push_back(std::move(*result.unit));
    }
    return loaded;
}

std::vector<std::string> collect_java_files(const std::vector<std::string>& paths,
                                            bool& io_failed) {
    std::vector<std::string> files;
    for (const std::string& path : paths) {
        std::error_code ec;
        if (fs::is_directory(path, ec)) {
            std::vector<std::string> in_dir;
            for (const fs::directory_entry& entry :
                 fs::recursive_directory_iterator(path, ec)) {
                if (entry.is_regular_file() && entry.path().extension() == ".java") {
                    in_dir.push_back(entry.path().generic_string());
                }
            }
            std::sort(in_dir.begin(), in_dir.end());
            files.insert(files.end(), in_dir.begin(), in_dir.end());
        } else if (fs::exists(path, ec)) {
            files.push_back(path);
        } else {
            std::cerr << "annc: error: no such file or directory: " << path << "\n";
            io_failed = true;
            return files;
        }
    }
    return files;
}

int cmd_check(const std::vector<std::string>& paths, const CommonFlags& flags) {
    LoadedUnits loaded = load_ann_files(paths, flags);
    if (loaded.io_failed) return kExitUsage;
    print_diagnostics(loaded.diagnostics, flags.json);
    return exit_code_for(loaded.diagnostics, flags);
}

int cmd_verify(const std::vector<std::string>& ann_paths,
               const std::vector<std::string>& java_paths, const CommonFlags& flags) {
    LoadedUnits loaded = load_ann_files(ann_paths, flags);
    if (loaded.io_failed) return kExitUsage;

    std::vector<ann::Diagnostic> all = std::move(loaded.diagnostics);
    if (!ann::has_errors(all)) {
        bool io_failed = false;
        std::vector<std::string> files = collect_java_files(java_paths, io_failed);
        if (io_failed) return kExitUsage;

        std::vector<ann::CompilationUnit> program;
        bool java_parse_failed = false;
        for (const std::string& file : files) {
            std::optional<std::string> text = read_file(file);
            if (!text) {
                std::cerr << "annc: error: cannot read " << file << "\n";
                return kExitUsage;
            }
            ann::JavaParseResult result = ann::parse_java_source(*text, file);
            all.insert(all.end(), result.diagnostics.begin(), result.diagnostics.end());
            if (result.unit) {
                program.push_back(std::move(*result.unit));
            } else {
                java_parse_failed = true;
            }
        }
        // Checking a partially parsed program would produce misleading
        // results, so constraint checking runs only on a clean parse.
        if (!java_parse_failed) {
            for (const ann::AnnotationUnit& unit : loaded.units) {
                std::vector<ann::Diagnostic> found = ann::check_program(unit, program);
                all.insert(all.end(), found.begin(), found.end());
            }
        }
    }
    print_diagnostics(all, flags.json);
    return exit_code_for(all, flags);
}

int cmd_gen(const std::vector<std::string>& paths, const std::string& out_dir,
            const ann::GenOptions& options, const CommonFlags& flags) {
    LoadedUnits loaded = load_ann_files(paths, flags);
    if (loaded.io_failed) return kExitUsage;

    std::vector<ann::Diagnostic> all = std::move(loaded.diagnostics);
    if (exit_code_for(all, flags) != kExitOk || loaded.units.size() != paths.size()) {
        print_diagnostics(all, flags.json);
        return kExitDiagnostics;
    }

    ann::GenResult result = ann::generate(loaded.units, out_dir, options);
    all.insert(all.end(), result.diagnostics.begin(), result.diagnostics.end());
    print_diagnostics(all, flags.json);
    if (ann::has_errors(result.diagnostics)) {
        for (const ann::Diagnostic& diag : result.diagnostics) {
            if (diag.code == "ANN0402") return kExitUsage;
        }
        return kExitDiagnostics;
    }
    if (!flags.json) {
        for (const ann::GeneratedFile& file : result.files) {
            std::cout << (fs::path(out_dir) / file.relative_path).generic_string() << "\n";
        }
    }
    return exit_code_for(all, flags);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compiler for annotation-family definitions: validates them, checks "
                 "annotated Java sources against their constraints, and generates the "
                 "Java annotation types plus annotation processors."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    CommonFlags flags;
    ann::GenOptions gen_options;
    std::vector<std::string> ann_paths;
    std::vector<std::string> java_paths;
    std::string out_dir;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", flags.json, "Emit diagnostics as a JSON array");
        cmd->add_flag("--deny-warnings", flags.deny_warnings, "Treat warnings as failures");
        cmd->add_option("--allow", flags.allowlist,
                        "Annotation name to treat as known when resolving references "
                        "(repeatable)");
    };

    CLI::App* check = app.add_subcommand("check", "Parse and validate annotation definitions");
    check->add_option("files", ann_paths, "Annotation definition files")->required();
    add_common(check);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check annotated Java sources against annotation constraints");
    verify->add_option("files", ann_paths, "Annotation definition files")->required();
    verify->add_option("--java", java_paths, "Java files or directories to check")->required();
    add_common(verify);

    CLI::App* gen = app.add_subcommand(
        "gen", "Generate Java annotation types and annotation processors");
    gen->add_option("files", ann_paths, "Annotation definition files")->required();
    gen->add_option("-o,--out", out_dir, "Output directory")->required();
    gen->add_flag("--force", gen_options.force, "Overwrite existing output files");
    gen->add_flag("--services", gen_options.services,
                  "Also write the processor service-loader manifest");
    gen->add_option("--source-version", gen_options.source_version,
                    "Value for @SupportedSourceVersion (default RELEASE_8)");
    add_common(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 renders --help through this path with a zero exit code.
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const std::string& path : ann_paths) {
        if (!fs::exists(path)) {
            return usage_error("no such file: " + path);
        }
    }

    if (check->parsed()) return cmd_check(ann_paths, flags);
    if (verify->parsed()) return cmd_verify(ann_paths, java_paths, flags);
    return cmd_gen(ann_paths, out_dir, gen_options, flags);
}
