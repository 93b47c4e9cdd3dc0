#pragma once

#include "conesep/vector.hpp"

namespace conesep {

struct NnlsOptions {
  int max_iterations = 0;  // 0 selects 3 * number of columns + 10
  double tol = 1e-12;
};

struct NnlsResult {
  Vector lambda;        // nonnegative coefficients, one per column
  double residual = 0;  // ||G lambda - y||
  double kkt_residual = 0;
  int iterations = 0;
  bool certified = true;  // false when the iteration cap was hit
};

/// Lawson-Hanson active-set solver for min ||G lambda - y|| s.t. lambda >= 0.
/// Never throws on the iteration cap; the best iterate is returned with
/// `certified == false`.
NnlsResult nnls(const Matrix& G, const Vector& y, const NnlsOptions& options = {});

/// KKT residual of a candidate NNLS solution, scaled by max(1, ||y||):
/// max over i of |w_i| on the support and max(w_i, 0) off it, w = G^T (y - G lambda).
double nnls_kkt_residual(const Matrix& G, const Vector& y, const Vector& lambda);

struct HullPoint {
  Vector point;    // minimum-norm point of conv(columns)
  Vector weights;  // convex combination weights, one per column
  double distance = 0;
  bool converged = true;
};

/// Minimum-norm point of the convex hull of the columns of `points`
/// (Wolfe's algorithm).
HullPoint min_norm_hull(const Matrix& points, double tol = 1e-12);

}  // namespace conesep
