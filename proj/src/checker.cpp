#include "ann/checker.hpp"

#include <algorithm>

#include "ann/printer.hpp"

namespace ann {

namespace {

bool any_disjunct_matches(const Constraint& constraint, const ElementRef& element) {
    return std::any_of(constraint.statements.begin(), constraint.statements.end(),
                       [&](const Statement& s) { return statement_matches(s, element); });
}

// Some related element satisfies at least one disjunct.
bool scoped_require_holds(const Constraint& constraint, const ElementRef& element,
                          const std::vector<CompilationUnit>& program) {
    for (const Statement& stmt : constraint.statements) {
        for (const ElementRef& related : scope_elements(element, stmt.kind, program)) {
            if (statement_matches(stmt, related)) return true;
        }
    }
    return false;
}

// Per-kind universal: for each kind named by a disjunct, every related element
// of that kind satisfies some disjunct. Matching implies equal kinds, so the
// inner test needs no extra kind filter.
bool scoped_require_all_holds(const Constraint& constraint, const ElementRef& element,
                              const std::vector<CompilationUnit>& program) {
    TargetKindSet seen;
    for (const Statement& stmt : constraint.statements) {
        if (seen.contains(stmt.kind)) continue;
        seen.insert(stmt.kind);
        for (const ElementRef& related : scope_elements(element, stmt.kind, program)) {
            if (!any_disjunct_matches(constraint, related)) return false;
        }
    }
    return true;
}

// A conjunction of existentials: violated only when every conjunct finds a
// matching related element.
bool scoped_forbid_violated(const Constraint& constraint, const ElementRef& element,
                            const std::vector<CompilationUnit>& program) {
    for (const Statement& stmt : constraint.statements) {
        bool found = false;
        for (const ElementRef& related : scope_elements(element, stmt.kind, program)) {
            if (statement_matches(stmt, related)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

const char* violation_code(const Constraint& constraint) {
    if (!constraint.scope) {
        return constraint.polarity == Constraint::Polarity::Require ? "ANN0310" : "ANN0311";
    }
    if (constraint.polarity == Constraint::Polarity::Forbid) return "ANN0314";
    return constraint.all_quantifier ? "ANN0313" : "ANN0312";
}

std::string indefinite_article(std::string_view noun) {
    return noun.empty() || std::string_view("aeiou").find(noun[0]) == std::string_view::npos
               ? "a"
               : "an";
}

std::string kind_list(const TargetKindSet& kinds) {
    std::string out;
    for (TargetKind kind : all_target_kinds) {
        if (!kinds.contains(kind)) continue;
        if (!out.empty()) out += ", ";
        out += target_kind_keyword(kind);
    }
    return out;
}

}  // namespace

bool statement_matches(const Statement& statement, const ElementRef& element) {
    if (element_kind(element) != statement.kind) return false;
    if (!statement.modifiers.subset_of(element_modifiers(element))) return false;
    if (statement.annotation_ref && !element_has_annotation(element, *statement.annotation_ref)) {
        return false;
    }
    return true;
}

std::vector<ElementRef> scope_elements(const ElementRef& target, TargetKind stmt_kind,
                                       const std::vector<CompilationUnit>& /*program*/) {
    std::vector<ElementRef> out;
    if (is_type_kind(stmt_kind)) {
        if (!target.member) {
            out.push_back(target);
        } else {
            // The enclosing type of a containing type is unknown from here and
            // nothing downstream reads it.
            out.push_back(ElementRef{target.unit, target.type, nullptr, nullptr});
        }
        return out;
    }
    // Member kinds select from the relevant type body: the target's own
    // members for type targets, the sibling members for member targets.
    for (const MemberDecl& member : target.type->members) {
        if (member_kind_to_target(member.kind) != stmt_kind) continue;
        out.push_back(ElementRef{target.unit, target.type, &member, target.type});
    }
    return out;
}

PlacementReport check_placement(const AnnotationDecl& decl, const ElementRef& element,
                                const std::vector<CompilationUnit>& program) {
    PlacementReport report;
    report.element = element;
    report.annotation = decl.name;

    const AnnotationUse* use = find_annotation_use(element, decl.name);
    const SourceSpan& span = use ? use->span : element_span(element);

    for (const Constraint& constraint : decl.constraints) {
        bool violated = false;
        if (!constraint.scope) {
            if (constraint.polarity == Constraint::Polarity::Require) {
                violated = !any_disjunct_matches(constraint, element);
            } else {
                violated = std::all_of(
                    constraint.statements.begin(), constraint.statements.end(),
                    [&](const Statement& s) { return statement_matches(s, element); });
            }
        } else if (element_kind(element) == *constraint.scope) {
            if (constraint.polarity == Constraint::Polarity::Forbid) {
                violated = scoped_forbid_violated(constraint, element, program);
            } else if (constraint.all_quantifier) {
                violated = !scoped_require_all_holds(constraint, element, program);
            } else {
                violated = !scoped_require_holds(constraint, element, program);
            }
        }
        if (violated) {
            report.violations.push_back(make_error(
                violation_code(constraint),
                "@" + decl.name + " violates: " + print_constraint(constraint), span));
        }
    }
    return report;
}

std::vector<Diagnostic> check_program(const AnnotationUnit& unit,
                                      const std::vector<CompilationUnit>& program) {
    std::vector<Diagnostic> diagnostics;
    for (const AnnotationDecl& decl : unit.declarations) {
        TargetKindSet allowed = derive_target_kinds(decl);
        for (const ElementRef& element : annotated_elements(program, decl.name)) {
            PlacementReport report = check_placement(decl, element, program);
            for (Diagnostic& diag : report.violations) {
                diagnostics.push_back(std::move(diag));
            }
            if (!allowed.contains(element_kind(element))) {
                const AnnotationUse* use = find_annotation_use(element, decl.name);
                std::string kind(target_kind_keyword(element_kind(element)));
                diagnostics.push_back(make_error(
                    "ANN0315",
                    "@" + decl.name + " cannot be placed on " + indefinite_article(kind) + " " +
                        kind + " (allowed targets: " + kind_list(allowed) + ")",
                    use ? use->span : element_span(element)));
            }
        }
    }
    sort_diagnostics(diagnostics);
    return diagnostics;
}

}  // namespace ann
