#include "ann/validator.hpp"

#include <unordered_set>

#include "ann/printer.hpp"

namespace ann {

namespace {

// S' subsumes S: every element matching S also matches S'.
bool subsumes(const Statement& sprime, const Statement& s) {
    if (sprime.kind != s.kind) return false;
    if (!sprime.modifiers.subset_of(s.modifiers)) return false;
    return !sprime.annotation_ref || sprime.annotation_ref == s.annotation_ref;
}

bool default_compatible(AttrType type, const Literal& lit) {
    switch (type) {
        case AttrType::String: return lit.kind == Literal::Kind::String;
        case AttrType::Int: return lit.kind == Literal::Kind::Int;
        // Widening int -> float, as in Java.
        case AttrType::Float:
            return lit.kind == Literal::Kind::Float || lit.kind == Literal::Kind::Int;
        case AttrType::Boolean: return lit.kind == Literal::Kind::Bool;
        case AttrType::Class: return false;  // no Class literal exists in Ann
    }
    return false;
}

}  // namespace

std::vector<Contradiction> find_contradictions(const AnnotationDecl& decl) {
    std::vector<Contradiction> findings;
    for (std::size_t ri = 0; ri < decl.constraints.size(); ++ri) {
        const Constraint& require = decl.constraints[ri];
        if (require.polarity != Constraint::Polarity::Require) continue;
        for (std::size_t fi = 0; fi < decl.constraints.size(); ++fi) {
            const Constraint& forbid = decl.constraints[fi];
            if (forbid.polarity != Constraint::Polarity::Forbid) continue;
            if (forbid.scope != require.scope) continue;
            if (forbid.statements.size() != 1) continue;
            const Statement& sprime = forbid.statements.front();
            bool all_subsumed = !require.statements.empty();
            for (const Statement& s : require.statements) {
                if (!subsumes(sprime, s)) {
                    all_subsumed = false;
                    break;
                }
            }
            if (!all_subsumed) continue;
            Contradiction finding;
            finding.require_index = ri;
            finding.forbid_index = fi;
            finding.require_span = require.span;
            finding.forbid_span = forbid.span;
            finding.remove_require =
                QuickFix{"Remove the 'require' constraint",
                         QuickFixEdit{QuickFixEdit::Kind::RemoveConstraint, require.span}};
            finding.remove_forbid =
                QuickFix{"Remove the 'forbid' constraint",
                         QuickFixEdit{QuickFixEdit::Kind::RemoveConstraint, forbid.span}};
            findings.push_back(std::move(finding));
        }
    }
    return findings;
}

std::vector<Diagnostic> validate_unit(const AnnotationUnit& unit,
                                      const std::vector<std::string>& external_allowlist) {
    std::vector<Diagnostic> diags;

    std::unordered_set<std::string> known_names(external_allowlist.begin(),
                                                external_allowlist.end());
    for (const AnnotationDecl& decl : unit.declarations) known_names.insert(decl.name);

    std::unordered_set<std::string> seen_decls;
    for (const AnnotationDecl& decl : unit.declarations) {
        if (!seen_decls.insert(decl.name).second) {
            diags.push_back(make_error("ANN0201",
                                       "duplicate annotation name '" + decl.name + "'",
                                       decl.span));
        }

        std::unordered_set<std::string> seen_attrs;
        for (const AttributeDecl& attr : decl.attributes) {
            if (!seen_attrs.insert(attr.name).second) {
                diags.push_back(make_error("ANN0202",
                                           "duplicate attribute name '" + attr.name +
                                               "' in annotation '" + decl.name + "'",
                                           attr.span));
            }
            if (attr.default_value && !default_compatible(attr.type, *attr.default_value)) {
                diags.push_back(make_error(
                    "ANN0203",
                    "default value of attribute '" + attr.name + "' is not compatible with type '" +
                        std::string(attr_type_keyword(attr.type)) + "'",
                    attr.default_value->span));
            }
        }

        TargetKindSet targets = derive_target_kinds(decl);
        for (const Constraint& c : decl.constraints) {
            for (const Statement& s : c.statements) {
                if (s.annotation_ref && known_names.count(*s.annotation_ref) == 0) {
                    Diagnostic diag = make_warning(
                        "ANN0204", "reference to undeclared annotation '@" + *s.annotation_ref + "'",
                        s.span);
                    diag.quick_fixes.push_back(
                        QuickFix{"Remove the statement referring to '@" + *s.annotation_ref + "'",
                                 QuickFixEdit{QuickFixEdit::Kind::RemoveStatement, s.span}});
                    diags.push_back(std::move(diag));
                }
            }
            if (c.scope && !targets.contains(*c.scope)) {
                std::string allowed;
                for (TargetKind k : all_target_kinds) {
                    if (!targets.contains(k)) continue;
                    if (!allowed.empty()) allowed += ", ";
                    allowed += target_kind_keyword(k);
                }
                diags.push_back(make_warning(
                    "ANN0205",
                    "constraint scoped at '" + std::string(target_kind_keyword(*c.scope)) +
                        "' can never apply: '" + decl.name + "' only targets " + allowed,
                    c.span));
            }
        }

        for (const Contradiction& finding : find_contradictions(decl)) {
            const Constraint& require = decl.constraints[finding.require_index];
            const Constraint& forbid = decl.constraints[finding.forbid_index];
            Diagnostic diag = make_error(
                "ANN0210",
                "contradictory constraints: '" + print_constraint(require) +
                    "' can never be satisfied together with '" + print_constraint(forbid) + "'",
                finding.require_span);
            diag.quick_fixes.push_back(finding.remove_require);
            diag.quick_fixes.push_back(finding.remove_forbid);
            diags.push_back(std::move(diag));
        }
    }

    sort_diagnostics(diags);
    return diags;
}

}  // namespace ann
