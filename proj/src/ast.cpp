#include "ann/ast.hpp"

namespace ann {

std::string_view target_kind_keyword(TargetKind kind) {
    switch (kind) {
        case TargetKind::Class: return "class";
        case TargetKind::Interface: return "interface";
        case TargetKind::Enum: return "enum";
        case TargetKind::Field: return "field";
        case TargetKind::Method: return "method";
        case TargetKind::Constructor: return "constructor";
    }
    return "";
}

std::string_view modifier_keyword(Modifier mod) {
    switch (mod) {
        case Modifier::Public: return "public";
        case Modifier::Protected: return "protected";
        case Modifier::Private: return "private";
        case Modifier::Static: return "static";
        case Modifier::Final: return "final";
        case Modifier::Abstract: return "abstract";
    }
    return "";
}

std::string_view attr_type_keyword(AttrType type) {
    switch (type) {
        case AttrType::String: return "String";
        case AttrType::Int: return "int";
        case AttrType::Float: return "float";
        case AttrType::Boolean: return "boolean";
        case AttrType::Class: return "Class";
    }
    return "";
}

TargetKindSet derive_target_kinds(const AnnotationDecl& decl) {
    TargetKindSet kinds;
    bool has_unscoped_require = false;
    for (const Constraint& c : decl.constraints) {
        if (c.polarity != Constraint::Polarity::Require || c.scope.has_value()) continue;
        has_unscoped_require = true;
        for (const Statement& s : c.statements) kinds.insert(s.kind);
    }
    return has_unscoped_require ? kinds : TargetKindSet::all();
}

std::vector<std::string> java_element_types(const TargetKindSet& kinds) {
    std::vector<std::string> out;
    if (kinds.contains(TargetKind::Class) || kinds.contains(TargetKind::Interface) ||
        kinds.contains(TargetKind::Enum)) {
        out.emplace_back("TYPE");
    }
    if (kinds.contains(TargetKind::Field)) out.emplace_back("FIELD");
    if (kinds.contains(TargetKind::Method)) out.emplace_back("METHOD");
    if (kinds.contains(TargetKind::Constructor)) out.emplace_back("CONSTRUCTOR");
    return out;
}

bool same_structure(const Literal& a, const Literal& b) {
    return a.kind == b.kind && a.text == b.text;
}

bool same_structure(const Statement& a, const Statement& b) {
    return a.annotation_ref == b.annotation_ref && a.modifiers == b.modifiers && a.kind == b.kind;
}

bool same_structure(const Constraint& a, const Constraint& b) {
    if (a.polarity != b.polarity || a.scope != b.scope || a.all_quantifier != b.all_quantifier ||
        a.statements.size() != b.statements.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        if (!same_structure(a.statements[i], b.statements[i])) return false;
    }
    return true;
}

bool same_structure(const AttributeDecl& a, const AttributeDecl& b) {
    if (a.name != b.name || a.type != b.type ||
        a.default_value.has_value() != b.default_value.has_value()) {
        return false;
    }
    return !a.default_value || same_structure(*a.default_value, *b.default_value);
}

bool same_structure(const AnnotationDecl& a, const AnnotationDecl& b) {
    if (a.name != b.name || a.runtime != b.runtime || a.attributes.size() != b.attributes.size() ||
        a.constraints.size() != b.constraints.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.attributes.size(); ++i) {
        if (!same_structure(a.attributes[i], b.attributes[i])) return false;
    }
    for (std::size_t i = 0; i < a.constraints.size(); ++i) {
        if (!same_structure(a.constraints[i], b.constraints[i])) return false;
    }
    return true;
}

bool same_structure(const AnnotationUnit& a, const AnnotationUnit& b) {
    if (a.package_name != b.package_name || a.declarations.size() != b.declarations.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.declarations.size(); ++i) {
        if (!same_structure(a.declarations[i], b.declarations[i])) return false;
    }
    return true;
}

}  // namespace ann
