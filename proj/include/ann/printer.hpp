#pragma once

#include <string>

#include "ann/ast.hpp"

namespace ann {

// Canonical source form. print_unit output reparses to a structurally
// identical AST; print_constraint is the single-line text used in checker
// and generated-processor messages.
std::string print_statement(const Statement& stmt);
std::string print_constraint(const Constraint& constraint);
std::string print_attribute(const AttributeDecl& attr);
std::string print_literal(const Literal& lit);
std::string print_decl(const AnnotationDecl& decl);
std::string print_unit(const AnnotationUnit& unit);

std::string quote_string_literal(const std::string& value);

}  // namespace ann
