#pragma once

#include <string>
#include <vector>

#include "ann/ast.hpp"

namespace ann {

enum class Severity : std::uint8_t { Error, Warning };

std::string_view severity_name(Severity severity);

struct QuickFixEdit {
    enum class Kind : std::uint8_t { RemoveConstraint, RemoveStatement };
    Kind kind = Kind::RemoveConstraint;
    SourceSpan span;
};

struct QuickFix {
    std::string label;
    QuickFixEdit edit;
};

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;  // stable identifier, e.g. ANN0210
    std::string message;
    SourceSpan span;
    std::vector<QuickFix> quick_fixes;
};

Diagnostic make_error(std::string code, std::string message, SourceSpan span);
Diagnostic make_warning(std::string code, std::string message, SourceSpan span);

// path:line:col: severity[CODE]: message, quick-fix labels appended as
// " [fix: <label>]".
std::string format_diagnostic(const Diagnostic& diag);

bool span_less(const SourceSpan& a, const SourceSpan& b);

// Total order: file, then span, then code, then message.
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace ann
