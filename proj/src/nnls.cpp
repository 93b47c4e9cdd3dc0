#include "conesep/nnls.hpp"

#include "min_norm.hpp"

#include <algorithm>
#include <vector>

namespace conesep {

namespace {

// Unconstrained least squares restricted to the passive columns.
Vector solve_passive(const Matrix& G, const Vector& y, const std::vector<Eigen::Index>& passive) {
  Matrix Gp(G.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t j = 0; j < passive.size(); ++j) Gp.col(static_cast<Eigen::Index>(j)) = G.col(passive[j]);
  Eigen::ColPivHouseholderQR<Matrix> qr(Gp);
  return qr.solve(y);
}

}  // namespace

double nnls_kkt_residual(const Matrix& G, const Vector& y, const Vector& lambda) {
  const Vector w = G.transpose() * (y - G * lambda);
  double worst = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    worst = std::max(worst, lambda[i] > 0 ? std::abs(w[i]) : std::max(w[i], 0.0));
  }
  return worst / std::max(1.0, y.norm());
}

NnlsResult nnls(const Matrix& G, const Vector& y, const NnlsOptions& options) {
  const Eigen::Index n = G.cols();
  const int max_iter = options.max_iterations > 0 ? options.max_iterations : 3 * static_cast<int>(n) + 10;
  const double tol = options.tol * std::max(1.0, y.norm());

  NnlsResult result;
  result.lambda = Vector::Zero(n);
  std::vector<bool> in_passive(static_cast<std::size_t>(n), false);
  Vector& x = result.lambda;
  Vector w = G.transpose() * y;

  int it = 0;
  for (; it < max_iter; ++it) {
    // Entering index: largest positive gradient among active (zero) variables;
    // lowest index wins ties.
    Eigen::Index enter = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[static_cast<std::size_t>(j)] && w[j] > best) {
        best = w[j];
        enter = j;
      }
    }
    if (enter < 0) break;
    in_passive[static_cast<std::size_t>(enter)] = true;

    for (int inner = 0; inner <= static_cast<int>(n); ++inner) {
      std::vector<Eigen::Index> passive;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (in_passive[static_cast<std::size_t>(j)]) passive.push_back(j);
      }
      const Vector zp = solve_passive(G, y, passive);
      bool feasible = true;
      for (Eigen::Index k = 0; k < zp.size(); ++k) {
        if (zp[k] <= 0) feasible = false;
      }
      if (feasible) {
        x.setZero();
        for (std::size_t k = 0; k < passive.size(); ++k) x[passive[k]] = zp[static_cast<Eigen::Index>(k)];
        break;
      }
      // Step toward z until the first passive variable hits zero.
      double alpha = 1.0;
      for (std::size_t k = 0; k < passive.size(); ++k) {
        const double zk = zp[static_cast<Eigen::Index>(k)];
        const double xk = x[passive[k]];
        if (zk <= 0 && xk - zk > 0) alpha = std::min(alpha, xk / (xk - zk));
      }
      for (std::size_t k = 0; k < passive.size(); ++k) {
        const Eigen::Index j = passive[k];
        x[j] += alpha * (zp[static_cast<Eigen::Index>(k)] - x[j]);
        if (x[j] <= 1e-15) {
          x[j] = 0;
          in_passive[static_cast<std::size_t>(j)] = false;
        }
      }
    }
    w = G.transpose() * (y - G * x);
  }

  result.iterations = it;
  result.certified = it < max_iter;
  result.residual = (G * x - y).norm();
  result.kkt_residual = nnls_kkt_residual(G, y, x);
  return result;
}

HullPoint min_norm_hull(const Matrix& points, double tol) {
  const Eigen::Index m = points.cols();
  auto lmo = [&](const Vector& dir) {
    Eigen::Index best = 0;
    double best_value = dir.dot(points.col(0));
    for (Eigen::Index j = 1; j < m; ++j) {
      const double v = dir.dot(points.col(j));
      if (v < best_value) {
        best_value = v;
        best = j;
      }
    }
    detail::Atom atom;
    atom.z = points.col(best);
    atom.a = atom.z;
    atom.b = Vector::Zero(points.rows());
    atom.tag = static_cast<int>(best);
    return atom;
  };

  // Start from the shortest point.
  Eigen::Index start = 0;
  for (Eigen::Index j = 1; j < m; ++j) {
    if (points.col(j).norm() < points.col(start).norm()) start = j;
  }
  detail::Atom initial = lmo(-points.col(start));
  initial.z = points.col(start);
  initial.a = initial.z;
  initial.tag = static_cast<int>(start);

  detail::MinNormOptions opt;
  opt.zero_tol = tol;
  opt.max_iterations = 1000 + 100 * static_cast<int>(m);
  const detail::MinNormOutcome out = detail::minimize_norm(lmo, std::move(initial), opt);

  HullPoint hull;
  hull.point = out.z;
  hull.distance = out.upper;
  hull.converged = out.converged;
  hull.weights = Vector::Zero(m);
  for (std::size_t i = 0; i < out.atoms.size(); ++i) hull.weights[out.atoms[i].tag] += out.weights[i];
  return hull;
}

}  // namespace conesep
