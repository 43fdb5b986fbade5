#pragma once

#include <string_view>
#include <vector>

#include "ann/ast.hpp"
#include "ann/diagnostic.hpp"

namespace ann {

struct Token {
    enum class Kind : std::uint8_t {
        Keyword,
        Identifier,
        AnnotationRef,  // '@' + identifier, text includes the '@'
        IntLiteral,
        FloatLiteral,  // digits '.' digits, no exponent, no suffix
        StringLiteral,
        BoolLiteral,
        Punct,
        Eof,
    };
    Kind kind = Kind::Eof;
    std::string text;  // exact source slice; for strings, the decoded value
    SourceSpan span;
};

struct LexResult {
    std::vector<Token> tokens;  // ends with an Eof token when diagnostics is empty
    std::vector<Diagnostic> diagnostics;
};

bool is_ann_keyword(std::string_view word);

// Skips whitespace and // line comments. ANN0101: unknown character,
// ANN0102: unterminated string.
LexResult tokenize(std::string_view text, std::string_view source_name);

}  // namespace ann
