#pragma once

#include "conesep/region.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace conesep {

struct SampleCloud {
  std::vector<Vector> points;  // unit vectors of B_region
  double resolution_deg = 0;   // angular step; 0 for count-based random clouds
};

/// Dense sampling of the norm-base: an angular sweep in the plane, a
/// Fibonacci sphere filtered by membership plus great arcs along the edges in
/// d = 3, and `count` Gaussian rejection samples for d >= 4. Extreme rays are
/// always included; near-duplicates (cosine > 1 - 1e-12) are merged.
SampleCloud sample_norm_base(const ConeRegion& region, double resolution_deg, int count = 4000,
                             std::uint64_t seed = 1);

/// `count` random unit vectors of B_region (not uniform; every face is hit).
std::vector<Vector> random_base_samples(const ConeRegion& region, int count, std::mt19937_64& rng);

/// Worst-case gap between a sampled extremum of <f, .> and the true one.
double covering_bound(const Vector& functional, double resolution_deg, int dim);

struct SupportRange {
  double min = 0;
  double max = 0;
};

SupportRange oracle_support(const SampleCloud& cloud, const Vector& functional);
SupportRange oracle_support(const ConeRegion& region, const Vector& functional, double resolution_deg);

struct OracleVerdict {
  bool positive = false;
  Vector x_star;      // best sampled unit direction
  double lo = 0;      // max(0, max over sampled B_K of x*)
  double hi = 0;      // min over sampled B_C of x*
  double margin = 0;  // hi - lo at the best direction
  double bound = 0;   // covering bound for unit functionals
};

/// Brute-force non-symmetric test: searches a direction grid (spacing
/// `direction_resolution_deg`, default: the sampling resolution) for x* with
/// max(0, sup_{B_K} x*) < inf_{B_C} x* over dense samples.
OracleVerdict oracle_separation(const ConeRegion& c, const ConeRegion& k, double resolution_deg,
                                double direction_resolution_deg = 0);

/// Unit vectors of a Fibonacci lattice on S^2.
std::vector<Vector> fibonacci_sphere(int n);

}  // namespace conesep
