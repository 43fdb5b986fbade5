#include "ann/lexer.hpp"

#include <cctype>
#include <unordered_set>

namespace ann {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "package",   "annotation", "runtime", "require", "forbid",      "at",
    "all",       "and",        "or",      "String",  "int",         "float",
    "boolean",   "Class",      "class",   "interface", "enum",      "field",
    "method",    "constructor", "public", "protected", "private",   "static",
    "final",     "abstract",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
    Lexer(std::string_view text, std::string_view source_name)
        : text_(text), source_name_(source_name) {}

    LexResult run() {
        LexResult result;
        while (!at_end()) {
            skip_trivia();
            if (at_end()) break;
            lex_token(result);
        }
        result.tokens.push_back(Token{Token::Kind::Eof, "", here(0)});
        return result;
    }

private:
    std::string_view text_;
    std::string_view source_name_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    SourceSpan here(int length) const {
        return SourceSpan{std::string(source_name_), line_, column_, length, pos_};
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void lex_token(LexResult& result) {
        SourceSpan start = here(0);
        char c = peek();

        if (ident_start(c)) {
            std::size_t begin = pos_;
            while (!at_end() && ident_part(peek())) advance();
            std::string_view word = text_.substr(begin, pos_ - begin);
            Token::Kind kind = Token::Kind::Identifier;
            if (word == "true" || word == "false") {
                kind = Token::Kind::BoolLiteral;
            } else if (is_ann_keyword(word)) {
                kind = Token::Kind::Keyword;
            }
            push(result, kind, std::string(word), start);
            return;
        }

        if (digit(c)) {
            std::size_t begin = pos_;
            while (!at_end() && digit(peek())) advance();
            Token::Kind kind = Token::Kind::IntLiteral;
            if (peek() == '.' && digit(peek(1))) {
                advance();
                while (!at_end() && digit(peek())) advance();
                kind = Token::Kind::FloatLiteral;
            }
            push(result, kind, std::string(text_.substr(begin, pos_ - begin)), start);
            return;
        }

        if (c == '@') {
            advance();
            if (!ident_start(peek())) {
                start.length = 1;
                result.diagnostics.push_back(
                    make_error("ANN0101", "expected identifier after '@'", start));
                return;
            }
            std::size_t begin = pos_;
            while (!at_end() && ident_part(peek())) advance();
            push(result, Token::Kind::AnnotationRef,
                 "@" + std::string(text_.substr(begin, pos_ - begin)), start);
            return;
        }

        if (c == '"') {
            lex_string(result, start);
            return;
        }

        if (c == '{' || c == '}' || c == ';' || c == ':' || c == '=' || c == '.') {
            advance();
            push(result, Token::Kind::Punct, std::string(1, c), start);
            return;
        }

        advance();
        start.length = 1;
        result.diagnostics.push_back(
            make_error("ANN0101", std::string("unknown character '") + c + "'", start));
    }

    // Escapes limited to \" and \\; strings do not span lines.
    void lex_string(LexResult& result, SourceSpan start) {
        advance();  // opening quote
        std::string value;
        while (!at_end() && peek() != '"' && peek() != '\n') {
            char c = peek();
            if (c == '\\') {
                char next = peek(1);
                if (next == '"' || next == '\\') {
                    advance();
                    value.push_back(next);
                    advance();
                    continue;
                }
            }
            value.push_back(c);
            advance();
        }
        if (at_end() || peek() == '\n') {
            start.length = static_cast<int>(pos_ - start.offset);
            result.diagnostics.push_back(
                make_error("ANN0102", "unterminated string literal", start));
            return;
        }
        advance();  // closing quote
        push(result, Token::Kind::StringLiteral, std::move(value), start);
    }

    void push(LexResult& result, Token::Kind kind, std::string text, SourceSpan start) {
        start.length = static_cast<int>(pos_ - start.offset);
        result.tokens.push_back(Token{kind, std::move(text), std::move(start)});
    }
};

}  // namespace

bool is_ann_keyword(std::string_view word) { return kKeywords.count(word) != 0; }

LexResult tokenize(std::string_view text, std::string_view source_name) {
    return Lexer(text, source_name).run();
}

}  // namespace ann
