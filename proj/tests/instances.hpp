#pragma once

// Small planar instances used across the test suites.

#include "conesep/region.hpp"
#include "test_support.hpp"

namespace instances {

using conesep::ConeRegion;
using conesep::make_polycone;
using testsupport::polar;

inline ConeRegion sector(double from_deg, double to_deg) {
  return ConeRegion::piece(make_polycone({polar(from_deg), polar(to_deg)}));
}
inline ConeRegion ray(double deg) { return ConeRegion::piece(make_polycone({polar(deg)})); }

// Narrow cone about +y and the two horizontal rays.
inline ConeRegion narrow_up() { return sector(80, 100); }
inline ConeRegion horizontal_rays() { return ConeRegion::union_of({ray(0), ray(180)}); }
// Solid variant of the horizontal pair.
inline ConeRegion horizontal_sectors() { return ConeRegion::union_of({sector(-10, 10), sector(170, 190)}); }

// Convex C about +y against a union of two cones below the axis.
inline ConeRegion lower_pair_c() { return sector(80, 100); }
inline ConeRegion lower_pair_k() { return ConeRegion::union_of({sector(195, 205), sector(335, 345)}); }
// Union C above the axis against a convex cone about -y.
inline ConeRegion split_pair_c() { return ConeRegion::union_of({sector(15, 25), sector(155, 165)}); }
inline ConeRegion split_pair_k() { return sector(260, 280); }

inline ConeRegion orthant() { return sector(0, 90); }
inline ConeRegion upper_half_plane() {
  return ConeRegion::piece(make_polycone({polar(0), polar(90), polar(180)}));
}

}  // namespace instances
