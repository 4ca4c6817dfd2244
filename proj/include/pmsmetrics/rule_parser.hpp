#pragma once

#include <string_view>
#include <vector>

#include "pmsmetrics/rule_ast.hpp"
#include "pmsmetrics/rule_lexer.hpp"

namespace pmsmetrics::rules {

/// Recursive-descent parse of a token stream into a rule module.
/// Deterministic; throws ParseError with the expected construct and the
/// position of the offending token.
RuleModuleAst parse(const std::vector<Token>& tokens);

/// tokenize + parse.
RuleModuleAst parse_source(std::string_view source);

} // namespace pmsmetrics::rules
