#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmsmetrics/assessment.hpp"

namespace pmsmetrics {

struct WeightedValue {
    double weight = 1.0;
    double value = 0.0;
};

/// Weighted mean: sum(w*v) / sum(w). The result lies between the smallest
/// and largest value. Throws EmptyInputError / NonpositiveWeightError.
double weighted_factor_score(std::span<const WeightedValue> pairs);

/// Weighted mean of the per-module portability factors. Result in [0,3].
double portability_score(std::span<const ModuleAssessment> modules);

/// Weighted mean of the per-module scalability factors. Result in [0,3].
double scalability_score(std::span<const ModuleAssessment> modules);

/// One module's complexity product c = r * m * fan_in * fan_out,
/// deliberately un-squared. zero_io_warning flags fan_in * fan_out == 0.
struct ModuleComplexity {
    std::string module;
    ComplexityInputs inputs;
    double c = 0.0;
    bool zero_io_warning = false;
};

ModuleComplexity module_complexity(std::string module_name, const ComplexityInputs& inputs);

/// Weighted mean of the module complexities.
double pms_complexity(std::span<const std::pair<double, ModuleComplexity>> modules);

/// Counts form: automated / total * 100. Percent form passes through.
/// Throws ZeroTotalError when a counts total is zero.
double coverage_ratio(const CoverageEvidence& evidence);

/// Upper-inclusive strategy bands over [0,100]; total, no overlaps, no gaps.
std::string_view strategy_band(double percent);

/// Upper-inclusive coordination bands over [0,100].
std::string_view coordination_band(double percent);

/// (a_i/100 + a_p/100) * (a_s/100 + a_c/100), in [0,4]. Twice the
/// geometric area of the autonomy radar quadrilateral.
double autonomy_total(double a_i, double a_p, double a_s, double a_c);

/// Combined view of portability and scalability: total length P + S and
/// center offset (S - P) / 2, positive toward scalability.
struct ModifiabilityProfile {
    double length = 0.0;
    double offset = 0.0;
};

ModifiabilityProfile modifiability_profile(double portability, double scalability);

/// Resolved autonomy of one PMS: the four sub-metrics as percentages,
/// their band labels, and the combined total.
struct AutonomyProfile {
    double a_i = 0.0;
    double a_p = 0.0;
    double a_s = 0.0;
    double a_c = 0.0;
    std::string strategy_band;
    std::string coordination_band;
    double total = 0.0;
};

AutonomyProfile autonomy_profile(const AutonomyAssessment& assessment);

/// Every computed metric for one PMS version.
struct MetricsReport {
    PmsIdentity pms;
    double portability = 0.0;
    double scalability = 0.0;
    double modifiability_length = 0.0;
    double modifiability_offset = 0.0;
    double complexity = 0.0;
    std::vector<ModuleComplexity> module_complexities;
    AutonomyProfile autonomy;
};

/// Assembles the full report from a document plus one resolved
/// ComplexityInputs per module (same order as doc.modules).
MetricsReport compute_report(const AssessmentDocument& doc,
                             std::span<const ComplexityInputs> resolved);

} // namespace pmsmetrics
