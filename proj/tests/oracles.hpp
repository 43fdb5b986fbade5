#pragma once

// Reference implementations the tests compare the library against. Everything
// here is written as plain exhaustive loops over explicit data, independent of
// the library's evaluation code paths, so a logic slip in either side shows up
// as a disagreement.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ann/ast.hpp"
#include "ann/java_model.hpp"
#include "ann/printer.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Contradiction oracle: decide satisfiability by enumerating every element
// description (kind x modifier subset x optional annotation name).

struct ElementDescription {
    ann::TargetKind kind = ann::TargetKind::Class;
    ann::ModifierSet modifiers;
    std::optional<std::string> annotation;
};

inline bool description_matches(const ann::Statement& stmt, const ElementDescription& desc) {
    if (stmt.kind != desc.kind) return false;
    for (ann::Modifier mod : ann::all_modifiers) {
        if (stmt.modifiers.contains(mod) && !desc.modifiers.contains(mod)) return false;
    }
    if (stmt.annotation_ref) {
        if (!desc.annotation || *desc.annotation != *stmt.annotation_ref) return false;
    }
    return true;
}

inline std::vector<ElementDescription> all_descriptions(const std::vector<std::string>& names) {
    std::vector<ElementDescription> out;
    for (ann::TargetKind kind : ann::all_target_kinds) {
        for (unsigned mask = 0; mask < 64; ++mask) {
            ann::ModifierSet mods;
            for (std::size_t i = 0; i < ann::all_modifiers.size(); ++i) {
                if (mask & (1u << i)) mods.insert(ann::all_modifiers[i]);
            }
            out.push_back(ElementDescription{kind, mods, std::nullopt});
            for (const std::string& name : names) {
                out.push_back(ElementDescription{kind, mods, name});
            }
        }
    }
    return out;
}

inline std::vector<std::string> referenced_names(const ann::AnnotationDecl& decl) {
    std::vector<std::string> names;
    for (const ann::Constraint& constraint : decl.constraints) {
        for (const ann::Statement& stmt : constraint.statements) {
            if (!stmt.annotation_ref) continue;
            if (std::find(names.begin(), names.end(), *stmt.annotation_ref) == names.end()) {
                names.push_back(*stmt.annotation_ref);
            }
        }
    }
    return names;
}

// Some element description satisfies the Require (matches a disjunct) without
// violating the Forbid (matching all its statements). When this returns false
// the pair really is contradictory at the statement level.
inline bool satisfiable_against_forbid(const ann::Constraint& require,
                                       const ann::Constraint& forbid,
                                       const std::vector<std::string>& names) {
    for (const ElementDescription& desc : all_descriptions(names)) {
        bool satisfies = false;
        for (const ann::Statement& stmt : require.statements) {
            if (description_matches(stmt, desc)) satisfies = true;
        }
        if (!satisfies) continue;
        bool violates = true;
        for (const ann::Statement& stmt : forbid.statements) {
            if (!description_matches(stmt, desc)) violates = false;
        }
        if (!violates) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Naive checker: re-derives every report by explicit iteration over the
// program structure. Reports are (code, constraint text, file, offset); the
// constraint text is empty for wrong-target reports.

using NaiveReport = std::tuple<std::string, std::string, std::string, std::size_t>;

struct NaiveElement {
    const ann::TypeDecl* owner = nullptr;   // containing type (self for types)
    const ann::MemberDecl* member = nullptr;  // null when the element is the type
};

inline std::string simple_name(const std::string& dotted) {
    std::size_t dot = dotted.rfind('.');
    return dot == std::string::npos ? dotted : dotted.substr(dot + 1);
}

inline ann::TargetKind naive_kind(const NaiveElement& elem) {
    if (elem.member) {
        switch (elem.member->kind) {
            case ann::MemberDecl::Kind::Field: return ann::TargetKind::Field;
            case ann::MemberDecl::Kind::Method: return ann::TargetKind::Method;
            case ann::MemberDecl::Kind::Constructor: return ann::TargetKind::Constructor;
        }
    }
    switch (elem.owner->kind) {
        case ann::TypeDecl::Kind::Class: return ann::TargetKind::Class;
        case ann::TypeDecl::Kind::Interface: return ann::TargetKind::Interface;
        case ann::TypeDecl::Kind::Enum: return ann::TargetKind::Enum;
    }
    return ann::TargetKind::Class;
}

inline const ann::AnnotationUse* naive_find_use(const NaiveElement& elem,
                                                const std::string& name) {
    const std::vector<ann::AnnotationUse>& uses =
        elem.member ? elem.member->annotations : elem.owner->annotations;
    for (const ann::AnnotationUse& use : uses) {
        if (simple_name(use.name) == name) return &use;
    }
    return nullptr;
}

inline bool naive_matches(const ann::Statement& stmt, const NaiveElement& elem) {
    if (naive_kind(elem) != stmt.kind) return false;
    const ann::ModifierSet& mods = elem.member ? elem.member->modifiers : elem.owner->modifiers;
    for (ann::Modifier mod : ann::all_modifiers) {
        if (stmt.modifiers.contains(mod) && !mods.contains(mod)) return false;
    }
    if (stmt.annotation_ref && naive_find_use(elem, *stmt.annotation_ref) == nullptr) {
        return false;
    }
    return true;
}

inline std::vector<NaiveElement> naive_related(const NaiveElement& elem, ann::TargetKind kind) {
    std::vector<NaiveElement> out;
    if (ann::is_type_kind(kind)) {
        out.push_back(NaiveElement{elem.owner, nullptr});
        return out;
    }
    for (const ann::MemberDecl& member : elem.owner->members) {
        NaiveElement candidate{elem.owner, &member};
        if (naive_kind(candidate) == kind) out.push_back(candidate);
    }
    return out;
}

inline bool naive_violated(const ann::Constraint& constraint, const NaiveElement& elem) {
    bool is_require = constraint.polarity == ann::Constraint::Polarity::Require;
    if (!constraint.scope) {
        if (is_require) {
            for (const ann::Statement& stmt : constraint.statements) {
                if (naive_matches(stmt, elem)) return false;
            }
            return true;
        }
        for (const ann::Statement& stmt : constraint.statements) {
            if (!naive_matches(stmt, elem)) return false;
        }
        return true;
    }
    if (naive_kind(elem) != *constraint.scope) return false;
    if (is_require && !constraint.all_quantifier) {
        for (const ann::Statement& stmt : constraint.statements) {
            for (const NaiveElement& related : naive_related(elem, stmt.kind)) {
                if (naive_matches(stmt, related)) return false;
            }
        }
        return true;
    }
    if (is_require) {
        for (const ann::Statement& stmt : constraint.statements) {
            for (const NaiveElement& related : naive_related(elem, stmt.kind)) {
                bool matched_some = false;
                for (const ann::Statement& disjunct : constraint.statements) {
                    if (naive_matches(disjunct, related)) matched_some = true;
                }
                if (!matched_some) return true;
            }
        }
        return false;
    }
    for (const ann::Statement& stmt : constraint.statements) {
        bool found = false;
        for (const NaiveElement& related : naive_related(elem, stmt.kind)) {
            if (naive_matches(stmt, related)) found = true;
        }
        if (!found) return false;
    }
    return true;
}

inline void naive_collect_types(const ann::TypeDecl& type, std::vector<const ann::TypeDecl*>& out) {
    out.push_back(&type);
    for (const ann::TypeDecl& nested : type.nested_types) naive_collect_types(nested, out);
}

inline std::string violation_code_text(const ann::Constraint& constraint) {
    bool is_require = constraint.polarity == ann::Constraint::Polarity::Require;
    if (!constraint.scope) return is_require ? "ANN0310" : "ANN0311";
    if (!is_require) return "ANN0314";
    return constraint.all_quantifier ? "ANN0313" : "ANN0312";
}

inline std::vector<NaiveReport> naive_check_program(const ann::AnnotationUnit& unit,
                                                    const std::vector<ann::CompilationUnit>& program) {
    std::vector<NaiveReport> reports;
    for (const ann::AnnotationDecl& decl : unit.declarations) {
        bool any_unscoped_require = false;
        ann::TargetKindSet allowed;
        for (const ann::Constraint& constraint : decl.constraints) {
            if (constraint.polarity != ann::Constraint::Polarity::Require || constraint.scope) {
                continue;
            }
            any_unscoped_require = true;
            for (const ann::Statement& stmt : constraint.statements) allowed.insert(stmt.kind);
        }
        if (!any_unscoped_require) allowed = ann::TargetKindSet::all();

        for (const ann::CompilationUnit& java_unit : program) {
            std::vector<const ann::TypeDecl*> types;
            for (const ann::TypeDecl& type : java_unit.types) naive_collect_types(type, types);
            for (const ann::TypeDecl* type : types) {
                std::vector<NaiveElement> elements;
                elements.push_back(NaiveElement{type, nullptr});
                for (const ann::MemberDecl& member : type->members) {
                    elements.push_back(NaiveElement{type, &member});
                }
                for (const NaiveElement& elem : elements) {
                    const ann::AnnotationUse* use = naive_find_use(elem, decl.name);
                    if (!use) continue;
                    const ann::SourceSpan& span = use->span;
                    for (const ann::Constraint& constraint : decl.constraints) {
                        if (naive_violated(constraint, elem)) {
                            reports.emplace_back(violation_code_text(constraint),
                                                 ann::print_constraint(constraint), span.file,
                                                 span.offset);
                        }
                    }
                    if (!allowed.contains(naive_kind(elem))) {
                        reports.emplace_back("ANN0315", "", span.file, span.offset);
                    }
                }
            }
        }
    }
    std::sort(reports.begin(), reports.end());
    return reports;
}

// ---------------------------------------------------------------------------
// Seeded random inputs.

struct Rng {
    std::mt19937 engine;
    explicit Rng(unsigned seed) : engine(seed) {}
    int below(int n) { return static_cast<int>(engine() % static_cast<unsigned>(n)); }
    bool chance(int percent) { return below(100) < percent; }
};

inline ann::Statement random_statement(Rng& rng, const std::vector<std::string>& names) {
    ann::Statement stmt;
    stmt.kind = ann::all_target_kinds[rng.below(6)];
    if (!names.empty() && rng.chance(40)) {
        stmt.annotation_ref = names[rng.below(static_cast<int>(names.size()))];
    }
    int access = rng.below(4);  // 3 = none
    if (access < 3) {
        stmt.modifiers.insert(std::array{ann::Modifier::Public, ann::Modifier::Protected,
                                         ann::Modifier::Private}[access]);
    }
    for (ann::Modifier mod : {ann::Modifier::Static, ann::Modifier::Final, ann::Modifier::Abstract}) {
        if (rng.chance(25)) stmt.modifiers.insert(mod);
    }
    return stmt;
}

inline ann::Constraint random_constraint(Rng& rng, const std::vector<std::string>& names) {
    ann::Constraint constraint;
    constraint.polarity = rng.chance(50) ? ann::Constraint::Polarity::Require
                                         : ann::Constraint::Polarity::Forbid;
    if (rng.chance(50)) {
        constraint.scope = ann::all_target_kinds[rng.below(6)];
        if (constraint.polarity == ann::Constraint::Polarity::Require) {
            constraint.all_quantifier = rng.chance(30);
        }
    }
    int count = 1 + rng.below(3);
    for (int i = 0; i < count; ++i) {
        constraint.statements.push_back(random_statement(rng, names));
    }
    return constraint;
}

inline ann::AttributeDecl random_attribute(Rng& rng, int index) {
    ann::AttributeDecl attr;
    attr.name = "attr" + std::to_string(index);
    attr.type = std::array{ann::AttrType::String, ann::AttrType::Int, ann::AttrType::Float,
                           ann::AttrType::Boolean, ann::AttrType::Class}[rng.below(5)];
    if (attr.type != ann::AttrType::Class && rng.chance(60)) {
        ann::Literal lit;
        switch (attr.type) {
            case ann::AttrType::String:
                lit.kind = ann::Literal::Kind::String;
                lit.text = std::string("v\"") + std::to_string(rng.below(100)) + "\\";
                break;
            case ann::AttrType::Int:
                lit.kind = ann::Literal::Kind::Int;
                lit.text = std::to_string(rng.below(1000));
                break;
            case ann::AttrType::Float:
                lit.kind = ann::Literal::Kind::Float;
                lit.text = std::to_string(rng.below(100)) + "." + std::to_string(rng.below(100));
                break;
            default:
                lit.kind = ann::Literal::Kind::Bool;
                lit.text = rng.chance(50) ? "true" : "false";
                break;
        }
        attr.default_value = std::move(lit);
    }
    return attr;
}

inline ann::AnnotationDecl random_decl(Rng& rng, const std::vector<std::string>& names) {
    ann::AnnotationDecl decl;
    decl.name = "A" + std::to_string(rng.below(1000));
    decl.runtime = rng.chance(50);
    int attributes = rng.below(3);
    for (int i = 0; i < attributes; ++i) {
        decl.attributes.push_back(random_attribute(rng, i));
    }
    int constraints = 1 + rng.below(5);
    for (int i = 0; i < constraints; ++i) {
        decl.constraints.push_back(random_constraint(rng, names));
    }
    return decl;
}

// Appends a forbid built from one disjunct of an existing require, weakened by
// dropping modifiers or the reference. Fully random decls almost never land on
// a flaggable pair; this steers the generator toward them while still leaving
// near misses (multi-kind requires, scrambled scopes) in the mix.
inline void add_near_contradiction(Rng& rng, ann::AnnotationDecl& decl) {
    std::vector<const ann::Constraint*> candidates;
    for (const ann::Constraint& constraint : decl.constraints) {
        if (constraint.polarity == ann::Constraint::Polarity::Require) {
            candidates.push_back(&constraint);
        }
    }
    if (candidates.empty()) return;
    const ann::Constraint& target = *candidates[rng.below(static_cast<int>(candidates.size()))];

    ann::Constraint forbid;
    forbid.polarity = ann::Constraint::Polarity::Forbid;
    forbid.scope = target.scope;
    if (rng.chance(20)) {
        forbid.scope = ann::all_target_kinds[rng.below(6)];
    }
    ann::Statement stmt =
        target.statements[rng.below(static_cast<int>(target.statements.size()))];
    for (ann::Modifier mod : ann::all_modifiers) {
        if (stmt.modifiers.contains(mod) && rng.chance(50)) stmt.modifiers.erase(mod);
    }
    if (stmt.annotation_ref && rng.chance(50)) stmt.annotation_ref.reset();
    forbid.statements.push_back(std::move(stmt));
    decl.constraints.push_back(std::move(forbid));
}

// A synthetic compilation unit; spans get increasing offsets so source order
// is well defined.
struct ProgramBuilder {
    ann::CompilationUnit unit;
    std::size_t next_offset = 0;

    ann::SourceSpan next_span() {
        ann::SourceSpan span;
        span.file = "Synthetic.java";
        span.line = static_cast<int>(next_offset) + 1;
        span.column = 1;
        span.length = 1;
        span.offset = next_offset;
        next_offset += 10;
        return span;
    }

    ann::AnnotationUse use(const std::string& name) {
        ann::AnnotationUse u;
        u.name = name;
        u.span = next_span();
        return u;
    }
};

inline ann::CompilationUnit random_program(Rng& rng, const std::vector<std::string>& alphabet) {
    ProgramBuilder builder;
    builder.unit.source_name = "Synthetic.java";
    int type_count = 1 + rng.below(2);
    for (int t = 0; t < type_count; ++t) {
        ann::TypeDecl type;
        type.kind = std::array{ann::TypeDecl::Kind::Class, ann::TypeDecl::Kind::Interface,
                               ann::TypeDecl::Kind::Enum}[rng.below(3)];
        type.name = "T" + std::to_string(t);
        for (const std::string& name : alphabet) {
            if (rng.chance(30)) type.annotations.push_back(builder.use(name));
        }
        if (rng.chance(60)) type.modifiers.insert(ann::Modifier::Public);
        if (rng.chance(20)) type.modifiers.insert(ann::Modifier::Final);
        type.span = builder.next_span();
        int member_count = rng.below(4);
        for (int m = 0; m < member_count; ++m) {
            ann::MemberDecl member;
            member.kind = std::array{ann::MemberDecl::Kind::Field, ann::MemberDecl::Kind::Method,
                                     ann::MemberDecl::Kind::Constructor}[rng.below(3)];
            member.name = "m" + std::to_string(m);
            for (const std::string& name : alphabet) {
                if (rng.chance(30)) member.annotations.push_back(builder.use(name));
            }
            int access = rng.below(3);  // 2 = package-private
            if (access == 0) member.modifiers.insert(ann::Modifier::Public);
            if (access == 1) member.modifiers.insert(ann::Modifier::Private);
            if (rng.chance(30)) member.modifiers.insert(ann::Modifier::Final);
            member.span = builder.next_span();
            type.members.push_back(std::move(member));
        }
        builder.unit.types.push_back(std::move(type));
    }
    return builder.unit;
}

}  // namespace oracles
