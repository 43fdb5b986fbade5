#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ann/ast.hpp"
#include "ann/diagnostic.hpp"

namespace ann {

struct Contradiction {
    std::size_t require_index = 0;  // into decl.constraints
    std::size_t forbid_index = 0;
    SourceSpan require_span;
    SourceSpan forbid_span;
    QuickFix remove_require;
    QuickFix remove_forbid;
};

// Conservative pairwise rule: a Require R and a single-statement Forbid F at
// the same scope contradict when F's statement subsumes every disjunct of R
// (same kind, modifier subset, compatible annotation reference). Such an R can
// never be satisfied without violating F. Multi-constraint interactions are
// deliberately not solved.
std::vector<Contradiction> find_contradictions(const AnnotationDecl& decl);

// ANN0201 duplicate declaration, ANN0202 duplicate attribute, ANN0203 default
// type mismatch, ANN0204 unresolved annotation reference (warning), ANN0205
// unreachable scoped constraint (warning), ANN0210 contradiction. Results are
// sorted by span.
std::vector<Diagnostic> validate_unit(const AnnotationUnit& unit,
                                      const std::vector<std::string>& external_allowlist = {});

}  // namespace ann
