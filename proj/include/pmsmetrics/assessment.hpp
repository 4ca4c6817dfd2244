#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmsmetrics/errors.hpp"

namespace pmsmetrics {

/// Identifies one power-management system under evaluation.
struct PmsIdentity {
    std::string name;
    std::string version;
    bool operator==(const PmsIdentity&) const = default;
};

/// Raw inputs of the per-module complexity product: readability r in [1,3],
/// decision count + 1 (m >= 1), and external variable counts.
struct ComplexityInputs {
    double readability = 1.0;
    int mccabe = 1;
    int fan_in = 0;
    int fan_out = 0;
    bool operator==(const ComplexityInputs&) const = default;
};

struct ManualComplexity {
    ComplexityInputs inputs;
    bool operator==(const ManualComplexity&) const = default;
};

/// Rule-language source file analyzed with the document's analyzer config.
struct SourceComplexity {
    std::string path;
    bool operator==(const SourceComplexity&) const = default;
};

/// Black-box element (e.g. a neural network) assessed by I/O count alone.
struct BlackBoxSpec {
    int inputs = 0;
    int outputs = 0;
    bool operator==(const BlackBoxSpec&) const = default;
};

using ComplexitySource = std::variant<ManualComplexity, SourceComplexity, BlackBoxSpec>;

/// One software module's weight, portability/scalability factors (0..3,
/// fractional levels allowed), and where its complexity inputs come from.
struct ModuleAssessment {
    std::string name;
    double weight = 1.0;
    double portability = 0.0;
    double scalability = 0.0;
    ComplexitySource complexity;
    bool operator==(const ModuleAssessment&) const = default;
};

/// Task/alarm tally: `automated` of `total` now handled by the PMS.
struct CoverageCounts {
    int automated = 0;
    int total = 1;
    bool operator==(const CoverageCounts&) const = default;
};

/// Directly assessed percentage, for evaluators without a task inventory.
struct CoveragePercent {
    double value = 0.0;
    bool operator==(const CoveragePercent&) const = default;
};

using CoverageEvidence = std::variant<CoverageCounts, CoveragePercent>;

/// Qualitative percentage assessed against a band table, with free-text
/// justification.
struct BandedScore {
    double percent = 0.0;
    std::string justification;
    bool operator==(const BandedScore&) const = default;
};

/// The four autonomy sub-metrics of one whole PMS.
struct AutonomyAssessment {
    CoverageEvidence operator_independence;
    CoverageEvidence self_preservation;
    BandedScore strategy;
    BandedScore coordination;
    bool operator==(const AutonomyAssessment&) const = default;
};

/// Knobs of the rule-language analyzer.
///
/// constant_patterns use a tiny sub-grammar: a literal identifier prefix
/// followed by a single '#', the digit-run marker. "K#" matches K1, K42, ...
/// builtins and symbolic_constants are exact identifier names excluded from
/// fan-in/fan-out; all matching is on upper-cased identifiers.
struct AnalyzerConfig {
    std::vector<std::string> constant_patterns;
    std::set<std::string> builtins;
    std::set<std::string> symbolic_constants;
    bool extended_decision_counting = false;

    static AnalyzerConfig defaults();
    bool operator==(const AnalyzerConfig&) const = default;
};

/// A complete assessment: identity, at least one module, autonomy evidence,
/// and the analyzer configuration (defaults applied when omitted).
struct AssessmentDocument {
    PmsIdentity pms;
    std::vector<ModuleAssessment> modules;
    AutonomyAssessment autonomy;
    AnalyzerConfig analyzer_config = AnalyzerConfig::defaults();
    bool operator==(const AssessmentDocument&) const = default;
};

struct Violation {
    std::string path;    // e.g. "modules[2].portability"
    std::string message; // names the bound that was broken
    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Parses document text. Throws SyntaxError / SchemaError; out-of-range
/// values are kept as data for validate_assessment to report.
AssessmentDocument parse_assessment(std::string_view text);

/// parse_assessment + validate_assessment; the first violation becomes a
/// RangeError. On success every default (weight 1.0, analyzer config) has
/// been applied.
AssessmentDocument load_assessment(std::string_view text);

/// Checks every documented invariant. Violations are data, not errors.
ValidationReport validate_assessment(const AssessmentDocument& doc);

/// Deterministic serialization: stable key order, stable number formatting.
/// Round-trips through load_assessment.
std::string serialize_assessment(const AssessmentDocument& doc);

/// Parses a standalone analyzer-config JSON object (the `analyzer_config`
/// document section as its own file).
AnalyzerConfig load_analyzer_config(std::string_view text);

/// True when `pattern` follows the constant-pattern sub-grammar.
bool valid_constant_pattern(std::string_view pattern);

/// True when the (upper-cased) identifier matches the pattern.
bool matches_constant_pattern(std::string_view identifier, std::string_view pattern);

/// ASCII upper-casing used to canonicalize rule-language identifiers.
std::string to_upper(std::string_view text);

} // namespace pmsmetrics
