#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deskcalc/calculus.hpp"
#include "deskcalc/stats.hpp"

namespace deskcalc::svg {

/// Standalone SVG 1.1 line chart of a tabulated function. Domain-error
/// rows break the polyline into segments.
std::string line_chart(const calculus::FunctionTable& table, const std::string& title,
                       int width = 640, int height = 480);

/// Standalone SVG 1.1 box-and-whisker plot, one glyph per group.
std::string box_plot(const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups,
                     const std::string& title, int width = 640, int height = 480);

}  // namespace deskcalc::svg
