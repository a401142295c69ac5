#pragma once

#include <string>

#include "satopo/stratified.hpp"

namespace satopo {

/// Level curves of f at its fibration breakpoints and between them, the
/// critical points (coloured by local degree) and the polar curve. Display
/// only: curves are traced in double precision on a grid.
std::string render_svg(const BPoly& f, unsigned seed = 0);

/// The set X shaded, its boundary curve, and the boundary critical points
/// of v* = x.
std::string render_svg(const PlaneSet& X);

}  // namespace satopo
