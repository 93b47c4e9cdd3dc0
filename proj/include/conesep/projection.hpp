#pragma once

#include "conesep/polycone.hpp"

namespace conesep {

struct Projection {
  Vector proj;                 // Euclidean projection of y onto the cone
  Vector polar_part;           // y - proj, lies in the polar cone
  double moreau_residual = 0;  // |<proj, y - proj>|
  double polar_violation = 0;  // max_i <y - proj, g_i>, <= 0 up to rounding
  bool certified = true;       // NNLS finished within its iteration cap
};

/// Moreau decomposition y = proj + polar_part with respect to cone(G).
Projection project_cone(const PolyCone& cone, const Vector& y);

}  // namespace conesep
