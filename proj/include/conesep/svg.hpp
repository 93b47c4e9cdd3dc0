#pragma once

#include "conesep/separation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conesep::svg {

struct NamedRegion {
  std::string name;
  ConeRegion region;
};

struct Figure {
  std::vector<NamedRegion> cones;  // drawn in order, colors assigned by position
  // Indices into `cones` of the pair whose bodies S_C and S_K^0 are drawn.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<SeparationCertificate> certificate;
};

/// Planar figure: unit circle, cone sectors, the pair's convexified bases and
/// the Bishop-Phelps sector of the certificate. Throws DimensionNot2D.
std::string render(const Figure& figure);

/// Angular extent [from, to] (radians, to > from) of a 2-D convex piece; the
/// arc opposite the largest gap between generator angles. Full circle when
/// every gap is below pi.
std::pair<double, double> angular_extent(const PolyCone& cone);

/// Convex hull (counterclockwise) of planar points, monotone chain.
std::vector<Vector> convex_hull(std::vector<Vector> pts);

}  // namespace conesep::svg
