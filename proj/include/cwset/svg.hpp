#pragma once

#include "cwset/groups.hpp"
#include "cwset/region.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwset {

struct RenderLayer {
    Region region;
    /// CSS class: "set", "alt", or "orbit-N".
    std::string style = "set";
};

/// One panel of a figure.
struct RenderSpec {
    std::string title;
    std::vector<RenderLayer> layers;
    /// x0, y0, x1, y1; computed from the layers when absent. Must contain them.
    std::optional<std::array<Scalar, 4>> viewport;
    bool orbit_coloring = false;
};

/// Panel showing r with its images under the point group of g, one style per element.
RenderSpec orbit_panel(std::string title, const WallpaperGroup& g, const Region& r);

/// Panels side by side in one SVG document. Every convex piece becomes one
/// <path> carrying its exact vertices in data-exact.
std::string render_svg(std::span<const RenderSpec> panels);

struct Figure {
    int number = 0;
    std::string label;
    std::vector<RenderSpec> panels;
};

inline constexpr int kFigureCount = 9;
/// Counterparts of the paper's figures 1 through 9. Throws
/// std::invalid_argument for other numbers.
Figure figure(int number);

}  // namespace cwset
