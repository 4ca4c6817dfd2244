#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "pmsmetrics/metrics.hpp"

namespace pmsmetrics {

/// Figure geometry knobs. All coordinates scale proportionally with the
/// panel size; complexity_reference defaults to the largest complexity
/// among the rendered reports.
struct RenderSpec {
    int width = 600;  // per panel, >= 100
    int height = 600; // >= 100
    std::optional<double> complexity_reference;
    bool labels = true;
};

/// Horizontal bar on a [-3,+3] axis: portability grows leftward,
/// scalability rightward, midpoint marker at (S-P)/2.
std::string render_modifiability(const MetricsReport& report, const RenderSpec& spec = {});

/// Three radial axes: portability upper-left, scalability upper-right,
/// normalized complexity C/C_ref straight down; filled triangle through
/// the three values.
std::string render_surface(const MetricsReport& report, const RenderSpec& spec = {});

/// Four radial axes: operator independence up, self-preservation down,
/// coordination right, strategy left; quadrilateral at percent/100 of each
/// axis, annotated with the autonomy total.
std::string render_autonomy(const AutonomyProfile& profile, const RenderSpec& spec = {});

/// Side-by-side autonomy radars (>= 2), shared scale, input order kept
/// left to right. Throws TooFewPanelsError.
std::string render_panels(std::span<const std::pair<std::string, AutonomyProfile>> items,
                          const RenderSpec& spec = {});

/// Panels from whole reports; titles default to each candidate's identity.
std::string render_panels(std::span<const MetricsReport> reports, const RenderSpec& spec = {});

} // namespace pmsmetrics
