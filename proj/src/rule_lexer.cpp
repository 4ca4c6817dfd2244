#include "pmsmetrics/rule_lexer.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "pmsmetrics/assessment.hpp"

namespace pmsmetrics::rules {

namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "IF", "THEN", "ELSE", "SET", "SWITCH", "CASE", "DEFAULT", "WHILE",
    "DO", "END", "FOR", "TO", "AND", "OR", "NOT",
};

bool is_keyword(std::string_view upper) {
    for (auto k : kKeywords)
        if (k == upper)
            return true;
    return false;
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
    std::string_view source;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool done() const { return pos >= source.size(); }
    char peek() const { return source[pos]; }
    char peek2() const { return pos + 1 < source.size() ? source[pos + 1] : '\0'; }

    void advance() {
        if (source[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    Cursor cur{source};

    while (!cur.done()) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }

        Token token;
        token.line = cur.line;
        token.column = cur.column;

        if (is_ident_start_char(c)) {
            std::size_t start = cur.pos;
            while (!cur.done() && is_ident_char_char(cur.peek()))
                cur.advance();
            token.text = std::string(source.substr(start, cur.pos - start));
            std::string upper = to_upper(token.text);
            if (upper == "TRUE" || upper == "FALSE")
                token.kind = TokenKind::BoolLiteral;
            else if (is_keyword(upper))
                token.kind = TokenKind::Keyword;
            else
                token.kind = TokenKind::Identifier;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = cur.pos;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                cur.advance();
            if (!cur.done() && cur.peek() == '.' &&
                std::isdigit(static_cast<unsigned char>(cur.peek2()))) {
                cur.advance();
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    cur.advance();
            }
            token.kind = TokenKind::Number;
            token.text = std::string(source.substr(start, cur.pos - start));
        } else if (c == '<' || c == '>' || c == '=' || c == '+' || c == '-' || c == '*' ||
                   c == '/') {
            token.kind = TokenKind::Operator;
            if (c == '<' && (cur.peek2() == '=' || cur.peek2() == '>')) {
                token.text = std::string{c, cur.peek2()};
                cur.advance();
                cur.advance();
            } else if (c == '>' && cur.peek2() == '=') {
                token.text = ">=";
                cur.advance();
                cur.advance();
            } else {
                token.text = std::string(1, c);
                cur.advance();
            }
        } else if (c == '(' || c == ')' || c == '{' || c == '}' || c == ':' || c == ';' ||
                   c == ',') {
            token.kind = TokenKind::Punctuation;
            token.text = std::string(1, c);
            cur.advance();
        } else {
            std::ostringstream msg;
            msg << "line " << cur.line << ", column " << cur.column << ": character '" << c
                << "' is not part of the rule language";
            throw LexError(msg.str(), cur.line, cur.column);
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

} // namespace pmsmetrics::rules
