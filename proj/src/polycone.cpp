#include "conesep/polycone.hpp"

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"
#include "conesep/projection.hpp"

#include <random>
#include <string>

namespace conesep {

namespace {

constexpr double kDuplicateRayCos = 1.0 - 1e-12;
constexpr double kRankRelTol = 1e-10;
constexpr double kFacetTol = 1e-10;

Matrix unit_columns(std::span<const Vector> vectors, int dim, bool allow_zero_check) {
  Matrix out(dim, 0);
  for (const Vector& v : vectors) {
    if (v.size() != dim) {
      throw ConeError(ErrorKind::DimensionMismatch,
                      "expected dimension " + std::to_string(dim) + ", got " + std::to_string(v.size()));
    }
    if (!v.allFinite()) throw ConeError(ErrorKind::InvalidArgument, "non-finite coordinate");
    const double n = v.norm();
    if (allow_zero_check && n == 0.0) throw ConeError(ErrorKind::ZeroGenerator, "zero generator");
    const Vector u = v / n;
    bool duplicate = false;
    for (Eigen::Index j = 0; j < out.cols() && !duplicate; ++j) {
      duplicate = out.col(j).dot(u) > kDuplicateRayCos;
    }
    if (duplicate) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = u;
  }
  return out;
}

// Cross-check cone(G) = {x : N^T x >= 0} on the generators and on a fixed
// pseudo-random sample of directions.
void validate_facets(const Matrix& G, const Matrix& N) {
  const Vector on_generators = (N.transpose() * G).colwise().minCoeff();
  if (on_generators.minCoeff() < -1e-9) {
    throw ConeError(ErrorKind::InvalidFacets, "a generator violates a facet inequality");
  }
  const PolyCone cone(G, std::nullopt);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  const auto d = G.rows();
  for (int s = 0; s < 512; ++s) {
    Vector x(d);
    for (Eigen::Index i = 0; i < d; ++i) x[i] = normal(rng);
    x.normalize();
    const double slack = (N.transpose() * x).minCoeff();
    if (std::abs(slack) <= 1e-6) continue;
    const bool member = cone_membership(cone, x, 1e-9);
    if (slack > 0 && !member) {
      throw ConeError(ErrorKind::InvalidFacets, "facet description is larger than cone(G)");
    }
    if (slack < 0 && member) {
      throw ConeError(ErrorKind::InvalidFacets, "facet description is smaller than cone(G)");
    }
  }
}

Matrix enumerate_facet_normals(const Matrix& G) {
  const auto d = G.rows();
  const auto m = G.cols();
  Matrix normals(d, 0);
  if (d == 1) {
    // The only supporting "hyperplane" is {0}; its facet is the origin.
    return normals;
  }
  const int k = static_cast<int>(d) - 1;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (m < k) return normals;
  while (true) {
    Matrix rows(k, d);
    for (int i = 0; i < k; ++i) rows.row(i) = G.col(idx[static_cast<std::size_t>(i)]).transpose();
    Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
    const Vector sv = svd.singularValues();
    if (sv.size() == k && sv[k - 1] > kRankRelTol * sv[0]) {
      Vector n = svd.matrixV().col(d - 1);
      const Vector values = G.transpose() * n;
      if (values.maxCoeff() <= kFacetTol) n = -n;
      const Vector oriented = G.transpose() * n;
      if (oriented.minCoeff() >= -kFacetTol && oriented.maxCoeff() > kFacetTol) {
        bool seen = false;
        for (Eigen::Index j = 0; j < normals.cols() && !seen; ++j) seen = normals.col(j).dot(n) > 1.0 - 1e-10;
        if (!seen) {
          normals.conservativeResize(Eigen::NoChange, normals.cols() + 1);
          normals.col(normals.cols() - 1) = n.normalized();
        }
      }
    }
    // Next (d-1)-combination in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(m) - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return normals;
}

}  // namespace

PolyCone make_polycone(std::span<const Vector> generators, std::optional<std::vector<Vector>> facets) {
  if (generators.empty()) throw ConeError(ErrorKind::Empty, "a cone needs at least one generator");
  const auto d = static_cast<int>(generators.front().size());
  if (d < 1) throw ConeError(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  Matrix G = unit_columns(generators, d, true);
  std::optional<Matrix> N;
  if (facets) {
    if (facets->empty()) throw ConeError(ErrorKind::InvalidFacets, "empty facet list");
    N = unit_columns(*facets, d, true);
    validate_facets(G, *N);
  }
  return PolyCone(std::move(G), std::move(N));
}

PolyCone make_polycone(std::initializer_list<Vector> generators) {
  return make_polycone(std::span<const Vector>(generators.begin(), generators.size()));
}

PolyCone PolyCone::with_facets() const {
  if (facets_) return *this;
  if (dim() > 4) {
    throw ConeError(ErrorKind::DimensionTooHigh, "facet enumeration needs d <= 4 or supplied facets");
  }
  return PolyCone(generators_, enumerate_facet_normals(generators_));
}

bool cone_membership(const PolyCone& cone, const Vector& x, double tol) {
  if (x.size() != cone.dim()) {
    throw ConeError(ErrorKind::DimensionMismatch, "point and cone dimension differ");
  }
  if (x.isZero(0.0)) return true;
  return nnls(cone.generators(), x).residual <= tol;
}

Pointedness pointedness(const PolyCone& cone, double tol_point) {
  const HullPoint hull = min_norm_hull(cone.generators());
  Pointedness out;
  out.hull_distance = hull.distance;
  out.pointed = hull.distance > tol_point;
  if (!out.pointed) {
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < hull.weights.size(); ++j) {
      if (hull.weights[j] > hull.weights[best] + 1e-12) best = j;
    }
    out.witness = cone.generator(best);
  }
  return out;
}

int cone_rank(const PolyCone& cone) {
  Eigen::JacobiSVD<Matrix> svd(cone.generators());
  const Vector sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > kRankRelTol * sv[0]) ++rank;
  }
  return rank;
}

bool solidity(const PolyCone& cone) { return cone_rank(cone) == cone.dim(); }

FacetList facets(const PolyCone& cone) {
  FacetList out;
  if (!solidity(cone)) {
    out.not_solid = true;
    out.pieces.push_back(cone);
    out.normals = Matrix(cone.dim(), 0);
    return out;
  }
  const PolyCone full = cone.with_facets();
  out.normals = *full.facet_normals();
  const Matrix& G = cone.generators();
  for (Eigen::Index j = 0; j < out.normals.cols(); ++j) {
    const Vector values = G.transpose() * out.normals.col(j);
    Matrix tight(cone.dim(), 0);
    for (Eigen::Index i = 0; i < G.cols(); ++i) {
      if (std::abs(values[i]) <= 1e-9) {
        tight.conservativeResize(Eigen::NoChange, tight.cols() + 1);
        tight.col(tight.cols() - 1) = G.col(i);
      }
    }
    if (tight.cols() == 0) {
      throw ConeError(ErrorKind::InvalidFacets, "facet normal touches no generator");
    }
    out.pieces.emplace_back(std::move(tight), std::nullopt);
  }
  return out;
}

Projection project_cone(const PolyCone& cone, const Vector& y) {
  if (y.size() != cone.dim()) {
    throw ConeError(ErrorKind::DimensionMismatch, "point and cone dimension differ");
  }
  const NnlsResult fit = nnls(cone.generators(), y);
  Projection out;
  out.proj = cone.generators() * fit.lambda;
  out.polar_part = y - out.proj;
  out.moreau_residual = std::abs(out.proj.dot(out.polar_part));
  out.polar_violation = (cone.generators().transpose() * out.polar_part).maxCoeff();
  out.certified = fit.certified;
  return out;
}

}  // namespace conesep
