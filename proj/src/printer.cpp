#include "ann/printer.hpp"

namespace ann {

std::string quote_string_literal(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string print_literal(const Literal& lit) {
    if (lit.kind == Literal::Kind::String) return quote_string_literal(lit.text);
    return lit.text;
}

std::string print_statement(const Statement& stmt) {
    std::string out;
    if (stmt.annotation_ref) {
        out += '@';
        out += *stmt.annotation_ref;
        out += ' ';
    }
    for (Modifier m : all_modifiers) {
        if (stmt.modifiers.contains(m)) {
            out += modifier_keyword(m);
            out += ' ';
        }
    }
    out += target_kind_keyword(stmt.kind);
    return out;
}

std::string print_constraint(const Constraint& constraint) {
    std::string out;
    if (constraint.scope) {
        out += "at ";
        out += target_kind_keyword(*constraint.scope);
        out += ": ";
    }
    out += constraint.polarity == Constraint::Polarity::Require ? "require" : "forbid";
    if (constraint.all_quantifier) out += " all";
    const char* joiner = constraint.polarity == Constraint::Polarity::Require ? " or " : " and ";
    for (std::size_t i = 0; i < constraint.statements.size(); ++i) {
        out += i == 0 ? " " : joiner;
        out += print_statement(constraint.statements[i]);
    }
    out += ';';
    return out;
}

std::string print_attribute(const AttributeDecl& attr) {
    std::string out(attr_type_keyword(attr.type));
    out += ' ';
    out += attr.name;
    if (attr.default_value) {
        out += " = ";
        out += print_literal(*attr.default_value);
    }
    out += ';';
    return out;
}

std::string print_decl(const AnnotationDecl& decl) {
    std::string out;
    if (decl.runtime) out += "runtime ";
    out += "annotation ";
    out += decl.name;
    out += " {\n";
    for (const AttributeDecl& attr : decl.attributes) {
        out += "    ";
        out += print_attribute(attr);
        out += '\n';
    }
    for (const Constraint& c : decl.constraints) {
        out += "    ";
        out += print_constraint(c);
        out += '\n';
    }
    out += "}\n";
    return out;
}

std::string print_unit(const AnnotationUnit& unit) {
    std::string out;
    if (!unit.package_name.empty()) {
        out += "package ";
        out += unit.package_name;
        out += ";\n\n";
    }
    for (std::size_t i = 0; i < unit.declarations.size(); ++i) {
        if (i > 0) out += '\n';
        out += print_decl(unit.declarations[i]);
    }
    return out;
}

}  // namespace ann
