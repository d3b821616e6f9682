#pragma once

#include "logspiral/vec3.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace logspiral::figures {

inline constexpr std::string_view kNames[] = {"spiral", "pseudosphere", "sphere-loxodrome",
                                              "pseudosphere-loxodrome", "k-surface"};

/// Deterministic SVG for one of kNames; std::invalid_argument otherwise.
[[nodiscard]] std::string render(std::string_view name);

enum class View { top, side };

/// Curve drawn as a polyline, orthographically projected along +z (top) or
/// from a raised viewpoint (side), with the outline of the surface it lies on.
[[nodiscard]] std::string render_curve(const std::vector<Vec3>& points, std::string_view surface,
                                       double R, const std::string& title);

} // namespace logspiral::figures
