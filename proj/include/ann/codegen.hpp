#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ann/ast.hpp"
#include "ann/diagnostic.hpp"

namespace ann {

struct GeneratedFile {
    std::string relative_path;  // package dirs + filename, '/'-separated
    std::string content;
};

struct GenOptions {
    bool force = false;     // overwrite existing output files
    bool services = false;  // also emit the processor service-loader manifest
    // Value of @SupportedSourceVersion; bare release numbers are accepted
    // ("8" renders as RELEASE_8).
    std::string source_version = "RELEASE_8";
};

struct GenResult {
    std::vector<GeneratedFile> files;  // empty when diagnostics has errors
    std::vector<Diagnostic> diagnostics;
};

// The Java annotation-type declaration for one decl.
GeneratedFile render_annotation_declaration(const AnnotationDecl& decl,
                                            const std::string& package_name);

// Annotation processors mirroring the checker semantics: one file per polarity
// present in the decl's constraints (zero, one, or two files).
std::vector<GeneratedFile> render_processors(const AnnotationDecl& decl,
                                             const std::string& package_name,
                                             const GenOptions& options = {});

// Declaration plus processors for every decl in the unit, in declaration
// order, plus the optional services manifest.
std::vector<GeneratedFile> render_unit(const AnnotationUnit& unit, const GenOptions& options = {});

// Renders the units and writes them under output_root. Duplicate output paths
// and collisions with existing files (without force) are detected before
// anything is written; each file goes through a temp file and rename. With
// several units the services manifest is merged into one file. An empty
// manifest with error diagnostics means the run failed.
GenResult generate(const std::vector<AnnotationUnit>& units,
                   const std::filesystem::path& output_root, const GenOptions& options = {});
GenResult generate(const AnnotationUnit& unit, const std::filesystem::path& output_root,
                   const GenOptions& options = {});

}  // namespace ann
