#pragma once

#include "logspiral/analysis.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace logspiral {

/// One line per report ("PASS name max_error=... tolerance=... n=...") followed
/// by one indented line per failing observation.
void write_text(std::ostream& os, std::span<const VerificationReport> reports);

/// {"reports": [{"check_name", "passed", "tolerance", "observations": [{"input",
/// "expected", "actual", "error"}]}], "passed": bool}
[[nodiscard]] std::string to_json(std::span<const VerificationReport> reports, int indent = 2);

[[nodiscard]] bool all_passed(std::span<const VerificationReport> reports) noexcept;

} // namespace logspiral
