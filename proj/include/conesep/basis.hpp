#pragma once

#include "conesep/oracle.hpp"
#include "conesep/separation.hpp"

#include <optional>
#include <vector>

namespace conesep {

enum class BaseKind { WellBased, ConvexBase, NotWellBased, NoConvexBase };

std::string_view to_string(BaseKind k);

struct BaseCertificate {
  BaseKind kind = BaseKind::NotWellBased;
  Vector x_star;                     // unit functional (positive kinds)
  double alpha = 0;                  // WellBased: x*(x) >= alpha ||x|| on the cone
  double distance = 0;               // dist(0, S_cone)
  std::vector<Vector> base_vertices;  // rays scaled to x*(r) = 1 (single pieces)
  // Negative kinds: rays whose convex combination (weights) is the origin.
  std::vector<Vector> witness_rays;
  std::vector<double> witness_weights;
  Vector witness_point;              // the combination itself, ~0
};

/// Well-based iff dist(0, S_cone) > 0; then alpha = dist (1 - 1e-6).
BaseCertificate is_well_based(const ConeRegion& cone, double tol = 1e-9);

/// Convex base iff 0 is not in conv of the unit generator rays.
BaseCertificate has_convex_base(const ConeRegion& cone, double tol = 1e-9);

/// Generators scaled to <x*, g> = 1. Throws NonPositiveRay.
std::vector<Vector> make_base(const PolyCone& cone, const Vector& x_star);

struct InterpolationCheck {
  int inner_samples = 0;
  int gamma_samples = 0;
  int violations = 0;
  bool passed = false;
};

struct Interpolation {
  BishopPhelpsCone gamma;             // C \ {0} in int gamma, gamma \ {0} in int K
  SeparationCertificate certificate;  // C against the complement of K
  InterpolationCheck check;
};

/// Bishop-Phelps cone between C and K via separation of C from
/// (X \ K) u {0}. K must be solid and contain C.
std::optional<Interpolation> interpolate(const ConeRegion& c, const PolyCone& k, const SeparationOptions& options = {},
                                         int verify_samples = 1000, std::uint64_t seed = 1);

/// Samples B_C (must be Interior to gamma) and the norm-base of gamma (must
/// lie in int K).
InterpolationCheck verify_interpolation(const ConeRegion& c, const PolyCone& k, const BishopPhelpsCone& gamma,
                                        int samples = 1000, std::uint64_t seed = 1);

struct SymInterpolation {
  Orientation orientation = Orientation::CfromK;
  BishopPhelpsCone gamma;  // encloses the inner cone, meets the other only at 0
  SeparationCertificate certificate;
};

std::optional<SymInterpolation> interpolate_sym(const ConeRegion& c, const ConeRegion& k,
                                                const SeparationOptions& options = {});

}  // namespace conesep
