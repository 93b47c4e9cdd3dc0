#pragma once

// Fully corrective Frank-Wolfe (Wolfe / GJK) minimization of ||z|| over a
// compact convex set D that is accessible only through a linear minimization
// oracle. The active set holds at most d + 1 atoms; after every oracle call
// the minimum-norm point of their hull is recomputed exactly.

#include "conesep/vector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace conesep::detail {

struct Atom {
  Vector z;  // point of D
  Vector a;  // payload: first witness (z = a - b)
  Vector b;  // payload: second witness
  int tag = -1;
};

struct MinNormOptions {
  double zero_tol = 1e-9;  // stop once ||z|| <= zero_tol
  double gap_tol = 1e-18;  // absolute duality-gap target
  double rel_floor = 1e-13;  // gap floor relative to ||z||^2 (rounding level)
  int max_iterations = 100000;
};

struct MinNormOutcome {
  std::vector<Atom> atoms;
  std::vector<double> weights;
  Vector z;
  Vector a;
  Vector b;
  double upper = 0;  // ||z||
  double lower = 0;  // max over iterations of <z, s>/||z||; a lower bound on dist(0, D)
  double gap = 0;    // last duality gap ||z||^2 - <z, s>
  int iterations = 0;
  bool converged = false;
};

namespace min_norm_impl {

// Coefficients (summing to one) of the minimum-norm point of aff{z_i}.
inline Vector affine_min_norm(const std::vector<Atom>& atoms) {
  const auto k = static_cast<Eigen::Index>(atoms.size());
  Vector mu = Vector::Zero(k);
  if (k == 1) {
    mu[0] = 1.0;
    return mu;
  }
  const Vector& z0 = atoms.front().z;
  Matrix E(z0.size(), k - 1);
  for (Eigen::Index i = 1; i < k; ++i) E.col(i - 1) = atoms[static_cast<std::size_t>(i)].z - z0;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(E);
  cod.setThreshold(1e-13);
  const Vector t = cod.solve(-z0);
  mu[0] = 1.0 - t.sum();
  mu.tail(k - 1) = t;
  return mu;
}

inline Vector combine(const std::vector<Atom>& atoms, const std::vector<double>& w,
                      Vector Atom::*field) {
  Vector out = Vector::Zero((atoms.front().*field).size());
  for (std::size_t i = 0; i < atoms.size(); ++i) out += w[i] * (atoms[i].*field);
  return out;
}

// Wolfe's minor cycle: the last atom was just appended with weight zero.
// Returns false when no strict improvement could be made.
inline bool minor_cycle(std::vector<Atom>& atoms, std::vector<double>& w) {
  constexpr double kPositive = 1e-14;
  for (int guard = 0; guard < 64; ++guard) {
    const Vector mu = affine_min_norm(atoms);
    bool all_positive = true;
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      if (!(mu[i] > kPositive)) all_positive = false;
    }
    if (all_positive) {
      for (std::size_t i = 0; i < atoms.size(); ++i) w[i] = mu[static_cast<Eigen::Index>(i)];
      return true;
    }
    double theta = 1.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const double m = mu[static_cast<Eigen::Index>(i)];
      if (m <= kPositive && w[i] > m) theta = std::min(theta, w[i] / (w[i] - m));
    }
    theta = std::clamp(theta, 0.0, 1.0);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      w[i] = w[i] + theta * (mu[static_cast<Eigen::Index>(i)] - w[i]);
    }
    // Drop atoms whose weight vanished; keep at least one.
    std::vector<Atom> kept;
    std::vector<double> kept_w;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (w[i] > kPositive) {
        kept.push_back(std::move(atoms[i]));
        kept_w.push_back(w[i]);
      }
    }
    if (kept.empty()) return false;
    const bool dropped_new = kept.size() < atoms.size() && theta == 0.0;
    double total = 0;
    for (double x : kept_w) total += x;
    for (double& x : kept_w) x /= total;
    atoms = std::move(kept);
    w = std::move(kept_w);
    if (dropped_new) return false;
  }
  return false;
}

}  // namespace min_norm_impl

template <class Lmo>
MinNormOutcome minimize_norm(Lmo&& lmo, Atom initial, const MinNormOptions& opt) {
  using namespace min_norm_impl;
  MinNormOutcome out;
  out.atoms.push_back(std::move(initial));
  out.weights.push_back(1.0);
  Vector z = out.atoms.front().z;
  double lower = -std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  int stalls = 0;
  int it = 0;
  bool converged = false;
  const auto dim = z.size();
  for (; it < opt.max_iterations; ++it) {
    const double nz = z.norm();
    if (nz <= opt.zero_tol) {
      converged = true;
      break;
    }
    Atom s = lmo(z);
    const double zs = z.dot(s.z);
    lower = std::max(lower, zs / nz);
    gap = nz * nz - zs;
    if (gap <= std::max(opt.gap_tol, opt.rel_floor * nz * nz)) {
      converged = true;
      break;
    }
    bool duplicate = false;
    for (const Atom& atom : out.atoms) {
      if ((atom.z - s.z).norm() <= 1e-14 * (1.0 + s.z.norm())) duplicate = true;
    }
    if (duplicate) {
      // z is already optimal over a hull that contains s.
      converged = true;
      break;
    }
    out.atoms.push_back(std::move(s));
    out.weights.push_back(0.0);
    if (static_cast<Eigen::Index>(out.atoms.size()) > dim + 1) {
      // Rounding can leave a redundant atom; drop the lightest old one.
      std::size_t lightest = 0;
      for (std::size_t i = 1; i + 1 < out.atoms.size(); ++i) {
        if (out.weights[i] < out.weights[lightest]) lightest = i;
      }
      const double moved = out.weights[lightest];
      out.atoms.erase(out.atoms.begin() + static_cast<std::ptrdiff_t>(lightest));
      out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(lightest));
      out.weights.front() += moved;
    }
    const std::vector<Atom> saved_atoms = out.atoms;
    const std::vector<double> saved_w = out.weights;
    if (!minor_cycle(out.atoms, out.weights)) {
      out.atoms = saved_atoms;
      out.weights = saved_w;
      out.atoms.pop_back();
      out.weights.pop_back();
      break;
    }
    const Vector next = combine(out.atoms, out.weights, &Atom::z);
    if (next.norm() >= nz * (1.0 - 1e-15)) {
      if (++stalls > 20) {
        z = next;
        break;
      }
    } else {
      stalls = 0;
    }
    z = next;
  }
  out.z = combine(out.atoms, out.weights, &Atom::z);
  out.a = combine(out.atoms, out.weights, &Atom::a);
  out.b = combine(out.atoms, out.weights, &Atom::b);
  out.upper = out.z.norm();
  out.lower = std::clamp(lower, 0.0, out.upper);
  out.gap = gap;
  out.iterations = it;
  out.converged = converged;
  return out;
}

}  // namespace conesep::detail
