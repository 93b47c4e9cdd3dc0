#pragma once

#include "conesep/region.hpp"

namespace conesep {

enum class DistanceCertificate { Positive, Zero };

struct DistanceOptions {
  double tol = 1e-9;
  int max_iterations = 100000;
};

struct DistanceResult {
  double distance = 0;  // ||witness_a - witness_b||
  Vector witness_a;     // point of A
  Vector witness_b;     // point of B
  DistanceCertificate certificate = DistanceCertificate::Zero;
  Vector functional;    // witness_a - witness_b
  /// inf_A <functional, .> - sup_B <functional, .>, re-evaluated through the
  /// body LMOs; positive exactly when the functional strictly separates.
  double gap_value = 0;
  double lower_bound = 0;  // certified lower bound on dist(A, B)
  int iterations = 0;
  bool converged = false;  // false: iteration cap hit, best iterate returned
};

/// dist(A, B) by fully corrective Frank-Wolfe on A - B using the body LMOs.
DistanceResult body_distance(const ConvexBody& a, const ConvexBody& b, const DistanceOptions& options = {});

enum class Verdict { Positive, Zero, Inconclusive };

std::string_view to_string(Verdict v);

/// Positive when the certified lower bound exceeds 10 tol, Zero when the
/// witnesses are within tol, Inconclusive in between.
Verdict classify(const DistanceResult& r, double tol);

}  // namespace conesep
