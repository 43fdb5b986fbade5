#pragma once

#include <vector>

#include "ann/ast.hpp"
#include "ann/diagnostic.hpp"
#include "ann/java_model.hpp"

namespace ann {

// Result of evaluating one annotation's constraints against one element.
// Empty violations means the placement is accepted.
struct PlacementReport {
    ElementRef element;
    std::string annotation;
    std::vector<Diagnostic> violations;  // constraint declaration order
};

// True when the element satisfies the statement: kinds are equal, every
// modifier listed by the statement is present on the element, and a referenced
// annotation (if any) appears on the element.
bool statement_matches(const Statement& statement, const ElementRef& element);

// Elements related to `target` for a constraint scoped at kind(target),
// resolved per statement kind:
//  - type target, member kind:  the type's direct members of that kind
//  - type target, type kind:    the target itself (singleton)
//  - member target, type kind:  the enclosing type (singleton)
//  - member target, member kind: sibling members of that kind, target included
std::vector<ElementRef> scope_elements(const ElementRef& target, TargetKind stmt_kind,
                                       const std::vector<CompilationUnit>& program);

// Evaluates every constraint of `decl` against `element` assuming the
// annotation is placed on it.
PlacementReport check_placement(const AnnotationDecl& decl, const ElementRef& element,
                                const std::vector<CompilationUnit>& program);

// Checks every annotated element of `program` against the declarations in
// `unit`. Uses of annotations not declared there are ignored. Adds a
// wrong-target diagnostic when an element's kind is outside the declaration's
// derived targets. Ordered by file and position.
std::vector<Diagnostic> check_program(const AnnotationUnit& unit,
                                      const std::vector<CompilationUnit>& program);

}  // namespace ann
