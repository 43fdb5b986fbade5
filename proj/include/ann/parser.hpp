#pragma once

#include <optional>
#include <string_view>

#include "ann/ast.hpp"
#include "ann/diagnostic.hpp"

namespace ann {

struct ParseResult {
    std::optional<AnnotationUnit> unit;  // present iff diagnostics is empty
    std::vector<Diagnostic> diagnostics;
};

// Recursive-descent parser for .ann sources. Recovers at ';' boundaries so a
// file can report several syntax errors at once. ANN0110: unexpected token,
// ANN0111: misplaced 'all', ANN0112: constraint without statements.
ParseResult parse_unit(std::string_view text, std::string_view source_name);

}  // namespace ann
