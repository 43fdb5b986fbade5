#include "ann/java_model.hpp"

#include <algorithm>

namespace ann {

namespace {

std::string_view simple_name_of(std::string_view dotted) {
    std::size_t dot = dotted.rfind('.');
    return dot == std::string_view::npos ? dotted : dotted.substr(dot + 1);
}

bool uses_contain(const std::vector<AnnotationUse>& uses, std::string_view simple_name) {
    return std::any_of(uses.begin(), uses.end(), [&](const AnnotationUse& use) {
        return simple_name_of(use.name) == simple_name;
    });
}

template <typename Visit>
void walk_type(const CompilationUnit& unit, const TypeDecl& type, const TypeDecl* enclosing,
               Visit&& visit) {
    visit(ElementRef{&unit, &type, nullptr, enclosing});
    // Members and nested types interleave in source; order by span offset.
    std::size_t mi = 0;
    std::size_t ni = 0;
    while (mi < type.members.size() || ni < type.nested_types.size()) {
        bool take_member =
            ni >= type.nested_types.size() ||
            (mi < type.members.size() &&
             type.members[mi].span.offset < type.nested_types[ni].span.offset);
        if (take_member) {
            visit(ElementRef{&unit, &type, &type.members[mi], &type});
            ++mi;
        } else {
            walk_type(unit, type.nested_types[ni], &type, visit);
            ++ni;
        }
    }
}

}  // namespace

TargetKind type_kind_to_target(TypeDecl::Kind kind) {
    switch (kind) {
        case TypeDecl::Kind::Class: return TargetKind::Class;
        case TypeDecl::Kind::Interface: return TargetKind::Interface;
        case TypeDecl::Kind::Enum: return TargetKind::Enum;
    }
    return TargetKind::Class;
}

TargetKind member_kind_to_target(MemberDecl::Kind kind) {
    switch (kind) {
        case MemberDecl::Kind::Field: return TargetKind::Field;
        case MemberDecl::Kind::Method: return TargetKind::Method;
        case MemberDecl::Kind::Constructor: return TargetKind::Constructor;
    }
    return TargetKind::Field;
}

TargetKind element_kind(const ElementRef& elem) {
    return elem.member ? member_kind_to_target(elem.member->kind)
                       : type_kind_to_target(elem.type->kind);
}

const ModifierSet& element_modifiers(const ElementRef& elem) {
    return elem.member ? elem.member->modifiers : elem.type->modifiers;
}

const std::vector<AnnotationUse>& element_annotations(const ElementRef& elem) {
    return elem.member ? elem.member->annotations : elem.type->annotations;
}

const SourceSpan& element_span(const ElementRef& elem) {
    return elem.member ? elem.member->span : elem.type->span;
}

bool element_has_annotation(const ElementRef& elem, std::string_view simple_name) {
    return uses_contain(element_annotations(elem), simple_name);
}

const AnnotationUse* find_annotation_use(const ElementRef& elem, std::string_view simple_name) {
    for (const AnnotationUse& use : element_annotations(elem)) {
        if (simple_name_of(use.name) == simple_name) return &use;
    }
    return nullptr;
}

std::vector<ElementRef> all_elements(const std::vector<CompilationUnit>& units) {
    std::vector<ElementRef> out;
    for (const CompilationUnit& unit : units) {
        for (const TypeDecl& type : unit.types) {
            walk_type(unit, type, nullptr, [&](const ElementRef& elem) { out.push_back(elem); });
        }
    }
    return out;
}

std::vector<ElementRef> annotated_elements(const std::vector<CompilationUnit>& units,
                                           std::string_view annotation_name) {
    std::vector<ElementRef> out;
    for (const ElementRef& elem : all_elements(units)) {
        if (element_has_annotation(elem, annotation_name)) out.push_back(elem);
    }
    return out;
}

}  // namespace ann
