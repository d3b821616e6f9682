#pragma once

#include "logspiral/analysis.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace logspiral {

enum class Suite { forms, curves, liouville, analysis, all };

[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;
[[nodiscard]] std::string_view to_string(Suite suite) noexcept;

struct BatteryOptions {
    JetMode jets = JetMode::analytic;
    /// Multiplies every nonzero tolerance; finite-difference jets add a further factor 100.
    double tol_scale = 1.0;
};

/// Runs the selected checks in a fixed order; the result is deterministic.
[[nodiscard]] std::vector<VerificationReport> run_battery(Suite suite, const BatteryOptions& options = {});

} // namespace logspiral
