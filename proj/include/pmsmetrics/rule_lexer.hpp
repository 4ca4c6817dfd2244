#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pmsmetrics/errors.hpp"

namespace pmsmetrics::rules {

enum class TokenKind {
    Keyword,
    Identifier,
    Number,
    Operator,
    Punctuation,
    BoolLiteral,
};

struct Token {
    TokenKind kind;
    std::string text; // original lexeme, casing preserved
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Splits rule-language source into tokens. Keywords are recognized
/// case-insensitively; TRUE/FALSE lex as boolean literals. Positions are
/// 1-based. Throws LexError on any character outside the alphabet.
std::vector<Token> tokenize(std::string_view source);

} // namespace pmsmetrics::rules
