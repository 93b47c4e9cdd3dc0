#include "conesep/oracle.hpp"

#include "conesep/error.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <numbers>

namespace conesep {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void push_unique(std::vector<Vector>& out, const Vector& u) {
  for (const Vector& p : out) {
    if (p.dot(u) > 1.0 - 1e-12) return;
  }
  out.push_back(u);
}

// Leaves whose union (as a norm-base) is the region, each with a cheap
// membership test for unit vectors.
struct Leaf {
  std::vector<Vector> rays;     // extreme rays, edges are sampled between pairs
  Matrix normals;               // inward normals; empty => no dense fill
  bool complement = false;      // membership = not in int K
  bool everything = false;      // a solid cone without facets is the whole space
};

void collect_leaves(const ConeRegion& r, std::vector<Leaf>& out) {
  switch (r.kind()) {
    case RegionKind::Union:
      for (const ConeRegion& c : r.children()) collect_leaves(c, out);
      return;
    case RegionKind::Piece: {
      Leaf leaf;
      leaf.rays = r.rays();
      if (solidity(r.cone()) && (r.dim() <= 4 || r.cone().has_facets())) {
        leaf.normals = *r.cone().with_facets().facet_normals();
        leaf.everything = leaf.normals.cols() == 0;
      }
      out.push_back(std::move(leaf));
      return;
    }
    case RegionKind::Boundary:
      for (const PolyCone& p : r.facet_pieces()) {
        Leaf leaf;
        for (Eigen::Index j = 0; j < p.size(); ++j) leaf.rays.push_back(p.generator(j));
        out.push_back(std::move(leaf));
      }
      return;
    case RegionKind::Complement: {
      Leaf leaf;
      leaf.normals = r.facet_normals();
      leaf.complement = true;
      out.push_back(std::move(leaf));
      // Boundary of K belongs to the closed complement.
      for (const PolyCone& p : r.facet_pieces()) {
        Leaf f;
        for (Eigen::Index j = 0; j < p.size(); ++j) f.rays.push_back(p.generator(j));
        out.push_back(std::move(f));
      }
      return;
    }
  }
}

bool leaf_contains(const Leaf& leaf, const Vector& u) {
  if (leaf.everything) return true;
  if (leaf.normals.cols() == 0) return false;
  const double slack = (leaf.normals.transpose() * u).minCoeff();
  return leaf.complement ? slack <= 1e-12 : slack >= -1e-12;
}

// Great-circle arc from a to b (unit, not antipodal) at the given step.
void add_arc(std::vector<Vector>& out, const Vector& a, const Vector& b, double step_rad) {
  const double angle = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  if (angle < 1e-12 || angle > std::numbers::pi - 1e-9) return;
  const int n = static_cast<int>(std::ceil(angle / step_rad));
  for (int i = 1; i < n; ++i) {
    const double t = angle * i / n;
    out.push_back((std::sin(angle - t) * a + std::sin(t) * b) / std::sin(angle));
  }
}

// Dedup by angle bucket in the plane (sorted sweep keeps this linear).
std::vector<Vector> dedup(std::vector<Vector> pts) {
  std::vector<Vector> out;
  if (!pts.empty() && pts.front().size() == 2) {
    std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
      return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
    for (const Vector& p : pts) {
      if (!out.empty() && out.back().dot(p) > 1.0 - 1e-12) continue;
      out.push_back(p);
    }
    if (out.size() > 1 && out.front().dot(out.back()) > 1.0 - 1e-12) out.pop_back();
    return out;
  }
  for (const Vector& p : pts) push_unique(out, p);
  return out;
}

}  // namespace

std::vector<Vector> fibonacci_sphere(int n) {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    Vector v(3);
    v << r * std::cos(phi), r * std::sin(phi), z;
    out.push_back(v);
  }
  return out;
}

SampleCloud sample_norm_base(const ConeRegion& region, double resolution_deg, int count, std::uint64_t seed) {
  if (!(resolution_deg > 0)) throw ConeError(ErrorKind::InvalidArgument, "resolution must be positive");
  const int d = region.dim();
  SampleCloud cloud;
  cloud.resolution_deg = resolution_deg;
  std::vector<Vector> pts;

  if (d >= 4) {
    std::mt19937_64 rng(seed);
    cloud.points = random_base_samples(region, count, rng);
    cloud.resolution_deg = 0;
    return cloud;
  }

  std::vector<Leaf> leaves;
  collect_leaves(region, leaves);
  const double step = resolution_deg * kDeg;

  for (const Leaf& leaf : leaves) {
    for (const Vector& r : leaf.rays) pts.push_back(r);
    if (d >= 2) {
      for (std::size_t i = 0; i < leaf.rays.size(); ++i) {
        for (std::size_t j = i + 1; j < leaf.rays.size(); ++j) add_arc(pts, leaf.rays[i], leaf.rays[j], step);
      }
    }
  }
  if (d == 1) {
    cloud.points = dedup(std::move(pts));
    return cloud;
  }

  std::vector<Vector> fill;
  if (d == 2) {
    const int n = static_cast<int>(std::llround(360.0 / resolution_deg));
    for (int i = 0; i < n; ++i) {
      const double t = i * resolution_deg * kDeg;
      Vector u(2);
      u << std::cos(t), std::sin(t);
      fill.push_back(u);
    }
  } else {
    fill = fibonacci_sphere(static_cast<int>(std::ceil(4 * std::numbers::pi / (step * step))));
  }
  for (const Vector& u : fill) {
    for (const Leaf& leaf : leaves) {
      if (leaf_contains(leaf, u)) {
        pts.push_back(u);
        break;
      }
    }
  }
  if (d == 2) {
    cloud.points = dedup(std::move(pts));
  } else {
    cloud.points = std::move(pts);  // Fibonacci points are distinct by construction
  }
  if (cloud.points.empty()) throw ConeError(ErrorKind::TrivialRegion, "no samples in the norm-base");
  return cloud;
}

std::vector<Vector> random_base_samples(const ConeRegion& region, int count, std::mt19937_64& rng) {
  std::vector<Vector> out;
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = region.dim();

  auto from_cone = [&](const PolyCone& p) -> std::optional<Vector> {
    Vector x = Vector::Zero(d);
    const bool face = unit(rng) < 0.25;  // bias toward lower-dimensional faces
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      if (face && unit(rng) < 0.5) continue;
      x += expo(rng) * p.generator(j);
    }
    if (x.norm() < 1e-12) return std::nullopt;
    return Vector(x.normalized());
  };

  std::function<std::optional<Vector>(const ConeRegion&)> draw = [&](const ConeRegion& r) -> std::optional<Vector> {
    switch (r.kind()) {
      case RegionKind::Piece: return from_cone(r.cone());
      case RegionKind::Union: {
        const auto i = static_cast<std::size_t>(unit(rng) * static_cast<double>(r.children().size()));
        return draw(r.children()[std::min(i, r.children().size() - 1)]);
      }
      case RegionKind::Boundary: {
        const auto i = static_cast<std::size_t>(unit(rng) * static_cast<double>(r.facet_pieces().size()));
        return from_cone(r.facet_pieces()[std::min(i, r.facet_pieces().size() - 1)]);
      }
      case RegionKind::Complement: {
        if (unit(rng) < 0.25) {
          const auto i = static_cast<std::size_t>(unit(rng) * static_cast<double>(r.facet_pieces().size()));
          return from_cone(r.facet_pieces()[std::min(i, r.facet_pieces().size() - 1)]);
        }
        for (int tries = 0; tries < 1000; ++tries) {
          Vector u(d);
          for (int i = 0; i < d; ++i) u[i] = normal(rng);
          u.normalize();
          if ((r.facet_normals().transpose() * u).minCoeff() <= 0) return u;
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  };

  int failures = 0;
  while (static_cast<int>(out.size()) < count) {
    std::optional<Vector> s = draw(region);
    if (s) {
      out.push_back(std::move(*s));
    } else if (++failures > 100 * count + 1000) {
      throw ConeError(ErrorKind::TrivialRegion, "could not sample the norm-base");
    }
  }
  return out;
}

double covering_bound(const Vector& functional, double resolution_deg, int dim) {
  return functional.norm() * (dim <= 2 ? 2.0 : 3.0) * resolution_deg * kDeg;
}

SupportRange oracle_support(const SampleCloud& cloud, const Vector& functional) {
  SupportRange r{INFINITY, -INFINITY};
  for (const Vector& p : cloud.points) {
    const double v = functional.dot(p);
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

SupportRange oracle_support(const ConeRegion& region, const Vector& functional, double resolution_deg) {
  return oracle_support(sample_norm_base(region, resolution_deg), functional);
}

namespace {

Matrix as_matrix(const std::vector<Vector>& pts, int d) {
  Matrix m(d, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = pts[i];
  return m;
}

}  // namespace

OracleVerdict oracle_separation(const ConeRegion& c, const ConeRegion& k, double resolution_deg,
                                double direction_resolution_deg) {
  if (c.dim() != k.dim()) throw ConeError(ErrorKind::DimensionMismatch, "cones differ in dimension");
  const int d = c.dim();
  if (d > 3) throw ConeError(ErrorKind::DimensionTooHigh, "oracle separation needs d <= 3");
  if (direction_resolution_deg <= 0) direction_resolution_deg = resolution_deg;

  const Matrix mc = as_matrix(sample_norm_base(c, resolution_deg).points, d);
  const Matrix mk = as_matrix(sample_norm_base(k, resolution_deg).points, d);

  std::vector<Vector> dirs;
  if (d == 1) {
    dirs = {Vector::Constant(1, 1.0), Vector::Constant(1, -1.0)};
  } else if (d == 2) {
    const int n = static_cast<int>(std::llround(360.0 / direction_resolution_deg));
    for (int i = 0; i < n; ++i) {
      const double t = i * direction_resolution_deg * kDeg;
      Vector u(2);
      u << std::cos(t), std::sin(t);
      dirs.push_back(u);
    }
  } else {
    const double s = direction_resolution_deg * kDeg;
    dirs = fibonacci_sphere(static_cast<int>(std::ceil(4 * std::numbers::pi / (s * s))));
  }

  OracleVerdict best;
  best.margin = -INFINITY;
  const Matrix D = as_matrix(dirs, d);
  const Matrix vc = D.transpose() * mc;  // directions x C-samples
  const Matrix vk = D.transpose() * mk;
  for (Eigen::Index i = 0; i < D.cols(); ++i) {
    const double hi = vc.row(i).minCoeff();
    const double lo = std::max(0.0, vk.row(i).maxCoeff());
    if (hi - lo > best.margin) {
      best.margin = hi - lo;
      best.hi = hi;
      best.lo = lo;
      best.x_star = D.col(i);
    }
  }
  best.positive = best.margin > 0;
  best.bound = covering_bound(Vector::Unit(d, 0), std::max(resolution_deg, direction_resolution_deg), d);
  return best;
}

}  // namespace conesep
