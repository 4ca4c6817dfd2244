#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmsmetrics/metrics.hpp"

namespace pmsmetrics {

/// Full evaluation of a document: resolves each module's complexity source
/// (manual passthrough, rule-language analysis, black-box I/O), then
/// computes every metric. Source paths resolve against base_dir. Errors
/// from source modules carry the module name.
MetricsReport evaluate_pms(const AssessmentDocument& doc,
                           const std::filesystem::path& base_dir = ".");

/// Signed after-minus-before differences of every top-level metric.
struct MetricDeltas {
    double portability = 0.0;
    double scalability = 0.0;
    double complexity = 0.0;
    double operator_independence = 0.0;
    double self_preservation = 0.0;
    double strategy = 0.0;
    double coordination = 0.0;
    double autonomy_total = 0.0;
};

struct ModuleDelta {
    std::string module;
    std::optional<double> old_c; // absent: module added
    std::optional<double> new_c; // absent: module removed
};

struct DeltaReport {
    PmsIdentity before;
    PmsIdentity after;
    MetricDeltas deltas;
    std::vector<ModuleDelta> changed_modules;
};

/// Metric-wise subtraction; modules matched by name, additions and
/// removals listed with the missing side absent.
DeltaReport diff_reports(const MetricsReport& before, const MetricsReport& after);

/// One candidate-pair observation: moving first -> second gained one
/// metric and lost another.
struct TradeoffNote {
    std::string first;
    std::string second;
    std::string gained;
    std::string lost;
};

struct ComparisonReport {
    std::vector<MetricsReport> candidates;
    // metric name -> candidate display names, best first
    std::vector<std::pair<std::string, std::vector<std::string>>> per_metric_ranking;
    std::vector<TradeoffNote> tradeoff_notes;
};

/// Ranks >= 2 candidates per metric (higher is better except complexity),
/// ties broken by input order, and detects strict tradeoffs between every
/// candidate pair. Throws TooFewCandidatesError.
ComparisonReport compare_candidates(std::vector<MetricsReport> reports);

/// "name@version", the candidate key used in rankings and tradeoff notes.
std::string candidate_display_name(const PmsIdentity& pms);

/// The fixed metric order used by rankings and tradeoff detection.
std::span<const std::string_view> metric_names();

// Stable-key-order JSON, full numeric precision.
std::string serialize_report(const MetricsReport& report);
MetricsReport load_report(std::string_view text);

std::string serialize_delta(const DeltaReport& delta);

std::string serialize_comparison(const ComparisonReport& comparison);
ComparisonReport load_comparison(std::string_view text);

} // namespace pmsmetrics
