#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ann/ast.hpp"

namespace ann {

struct AnnotationUse {
    std::string name;  // as written, possibly dotted, without '@'
    std::optional<std::string> args_text;
    SourceSpan span;
};

struct MemberDecl {
    enum class Kind : std::uint8_t { Field, Method, Constructor };
    Kind kind = Kind::Field;
    std::string name;
    ModifierSet modifiers;
    std::vector<AnnotationUse> annotations;
    std::string type_text;  // field/return type, opaque; empty for constructors
    SourceSpan span;
};

struct TypeDecl {
    enum class Kind : std::uint8_t { Class, Interface, Enum };
    Kind kind = Kind::Class;
    std::string name;
    ModifierSet modifiers;
    std::vector<AnnotationUse> annotations;
    std::vector<MemberDecl> members;
    std::vector<TypeDecl> nested_types;
    SourceSpan span;
};

struct CompilationUnit {
    std::string package_name;
    std::vector<std::string> imports;  // recorded, not resolved
    std::vector<TypeDecl> types;
    std::string source_name;
};

TargetKind type_kind_to_target(TypeDecl::Kind kind);
TargetKind member_kind_to_target(MemberDecl::Kind kind);

// A type or member together with its enclosing context. Pointers stay valid
// for the lifetime of the units they were taken from.
struct ElementRef {
    const CompilationUnit* unit = nullptr;
    const TypeDecl* type = nullptr;      // the element itself when member is null
    const MemberDecl* member = nullptr;  // null for type elements
    const TypeDecl* enclosing = nullptr;  // null for top-level types
};

TargetKind element_kind(const ElementRef& elem);
const ModifierSet& element_modifiers(const ElementRef& elem);
const std::vector<AnnotationUse>& element_annotations(const ElementRef& elem);
const SourceSpan& element_span(const ElementRef& elem);

// Simple-name match: a dotted use like javax.persistence.Entity matches "Entity".
bool element_has_annotation(const ElementRef& elem, std::string_view simple_name);
const AnnotationUse* find_annotation_use(const ElementRef& elem, std::string_view simple_name);

// Every type and member carrying the annotation, in source order, each element
// listed once even if the use is repeated.
std::vector<ElementRef> annotated_elements(const std::vector<CompilationUnit>& units,
                                           std::string_view annotation_name);

// All elements of the program in source order (test and oracle support).
std::vector<ElementRef> all_elements(const std::vector<CompilationUnit>& units);

}  // namespace ann
