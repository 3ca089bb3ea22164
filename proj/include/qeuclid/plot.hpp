#pragma once

#include <string>

#include "qeuclid/covering.hpp"

namespace qeuclid {

enum class FigureFormat { kSvg, kTikz };

// Draws S0, the regions of the certificate (shaded, tagged with their owner pair), their
// boundary arcs and the labelled points. Coordinates are converted to double only here;
// the picture is an illustration, not part of any proof.
std::string renderFigure(const Certificate& cert, FigureFormat format);

}  // namespace qeuclid
