#pragma once

#include "hankel/lgv.hpp"

#include <span>
#include <string>

namespace hankel {

/// Character-grid picture of a path configuration, top row = largest y.
///
///   A  start point          E  end point
///   a, b, c, ...  vertices of path 0, 1, 2, ... (when a family is given)
///   /  lattice point on the line x = mu*y
///   +, -, |  origin and axes;  .  empty
///
/// Output is deterministic and ends with a newline.
std::string render_ascii(const PathSystemConfig& config, std::span<const LatticePath> family = {});

}  // namespace hankel
