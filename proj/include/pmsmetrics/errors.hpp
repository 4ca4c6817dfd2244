#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmsmetrics {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed document text (not valid JSON). Position is 1-based.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Structurally wrong document: missing field, unknown field, wrong type.
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// A value broke a documented bound. Message names the field and the bound.
struct RangeError : Error {
    RangeError(const std::string& field, const std::string& msg)
        : Error(field + ": " + msg), field(field) {}
    std::string field;
};

/// Character outside the rule-language alphabet. Position is 1-based.
struct LexError : Error {
    LexError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Token stream does not match the rule-language grammar.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Filesystem failure (unreadable input, unwritable output).
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};

struct NonpositiveWeightError : Error {
    explicit NonpositiveWeightError(const std::string& msg) : Error(msg) {}
};

/// Coverage evidence in counts form with a zero task total.
struct ZeroTotalError : Error {
    explicit ZeroTotalError(const std::string& msg) : Error(msg) {}
};

struct TooFewCandidatesError : Error {
    explicit TooFewCandidatesError(const std::string& msg) : Error(msg) {}
};

struct NonpositiveReferenceError : Error {
    explicit NonpositiveReferenceError(const std::string& msg) : Error(msg) {}
};

struct TooFewPanelsError : Error {
    explicit TooFewPanelsError(const std::string& msg) : Error(msg) {}
};

} // namespace pmsmetrics
