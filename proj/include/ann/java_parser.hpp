#pragma once

#include <optional>
#include <string_view>

#include "ann/diagnostic.hpp"
#include "ann/java_model.hpp"

namespace ann {

struct JavaParseResult {
    std::optional<CompilationUnit> unit;  // present iff diagnostics is empty
    std::vector<Diagnostic> diagnostics;
};

// Tolerant parser for the Java subset the checker needs: packages, imports,
// type declarations with modifiers and annotations, fields, methods
// (bodies skipped by balanced-brace matching), constructors, and nested types.
// Generic parameters, parameter lists and initializers are kept as opaque
// text. ANN0301: unbalanced braces, ANN0302: construct outside the subset.
JavaParseResult parse_java_source(std::string_view text, std::string_view source_name);

}  // namespace ann
