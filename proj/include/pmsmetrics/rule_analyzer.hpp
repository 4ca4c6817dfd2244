#pragma once

#include <set>
#include <string>
#include <string_view>

#include "pmsmetrics/assessment.hpp"
#include "pmsmetrics/rule_ast.hpp"

namespace pmsmetrics::rules {

/// Partition of every identifier in a module. The four sets are pairwise
/// disjoint and jointly cover all identifiers; fan-in = |inputs|,
/// fan-out = |outputs|.
struct IoClassification {
    std::set<std::string> inputs;    // read, never written
    std::set<std::string> outputs;   // written, never read
    std::set<std::string> internals; // read and written, plus defined equations
    std::set<std::string> excluded;  // constants, builtins, symbolic values, builtin functions
};

/// Decision points + 1. IF counts 1, each CASE guard counts 1 (DEFAULT
/// none), each loop counts 1. With extended_decision_counting, every
/// AND/OR inside a condition adds 1.
int cyclomatic(const RuleModuleAst& ast, const AnalyzerConfig& config);

/// Variable-role classification: read-only identifiers are inputs,
/// write-only are outputs, read+written are internal. Identifiers matching
/// a constant pattern, named in builtins/symbolic_constants, or used only
/// as an undefined call target are excluded. A parameterized equation
/// defines its target as internal; its body's free reads register at the
/// definition and its formal binds to the call-site argument.
IoClassification classify_io(const RuleModuleAst& ast, const AnalyzerConfig& config);

/// Statement-weighted mean of per-statement levels over the top-level
/// statements: IF/SWITCH/action 1, equation 2, loop 3. Empty module: 1.
double readability(const RuleModuleAst& ast);

/// tokenize + parse + (readability, cyclomatic, |inputs|, |outputs|).
ComplexityInputs analyze_module(std::string_view source, const AnalyzerConfig& config);

/// Black-box element: r = 3, m = 1, fan counts straight from the spec.
ComplexityInputs blackbox_inputs(const BlackBoxSpec& spec);

} // namespace pmsmetrics::rules
