#include "ann/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace ann {

std::string_view severity_name(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

Diagnostic make_error(std::string code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Error, std::move(code), std::move(message), std::move(span), {}};
}

Diagnostic make_warning(std::string code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Warning, std::move(code), std::move(message), std::move(span), {}};
}

std::string format_diagnostic(const Diagnostic& diag) {
    std::string out = diag.span.file;
    out += ':';
    out += std::to_string(diag.span.line);
    out += ':';
    out += std::to_string(diag.span.column);
    out += ": ";
    out += severity_name(diag.severity);
    out += '[';
    out += diag.code;
    out += "]: ";
    out += diag.message;
    for (const QuickFix& fix : diag.quick_fixes) {
        out += " [fix: ";
        out += fix.label;
        out += ']';
    }
    return out;
}

bool span_less(const SourceSpan& a, const SourceSpan& b) {
    return std::tie(a.offset, a.length) < std::tie(b.offset, b.length);
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.span.file != b.span.file) return a.span.file < b.span.file;
        if (a.span.offset != b.span.offset) return a.span.offset < b.span.offset;
        if (a.code != b.code) return a.code < b.code;
        return a.message < b.message;
    });
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace ann
