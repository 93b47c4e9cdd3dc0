#include "conesep/vector.hpp"

#include "conesep/error.hpp"

#include <string>

namespace conesep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::InvalidFacets: return "InvalidFacets";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::NotSolid: return "NotSolid";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::TrivialRegion: return "TrivialRegion";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NonPositiveRay: return "NonPositiveRay";
    case ErrorKind::DimensionNot2D: return "DimensionNot2D";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::L1: return "l1";
    case NormKind::Linf: return "linf";
  }
  return "euclidean";
}

NormKind norm_kind_from_string(std::string_view name) {
  if (name == "euclidean" || name == "l2") return NormKind::Euclidean;
  if (name == "l1") return NormKind::L1;
  if (name == "linf") return NormKind::Linf;
  throw ConeError(ErrorKind::InvalidArgument, "unknown norm '" + std::string(name) + "'");
}

double norm_value(const Vector& x, NormKind kind) {
  switch (kind) {
    case NormKind::Euclidean: return x.norm();
    case NormKind::L1: return x.lpNorm<1>();
    case NormKind::Linf: return x.size() == 0 ? 0.0 : x.lpNorm<Eigen::Infinity>();
  }
  return x.norm();
}

double dual_norm(const Vector& x_star, NormKind kind) {
  // The dual of L1 is Linf and vice versa.
  switch (kind) {
    case NormKind::Euclidean: return x_star.norm();
    case NormKind::L1: return x_star.size() == 0 ? 0.0 : x_star.lpNorm<Eigen::Infinity>();
    case NormKind::Linf: return x_star.lpNorm<1>();
  }
  return x_star.norm();
}

Vector make_vector(std::span<const double> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = coords[i];
  return v;
}

Vector make_vector(std::initializer_list<double> coords) {
  return make_vector(std::span<const double>(coords.begin(), coords.size()));
}

void require_same_dim(const Vector& a, const Vector& b, std::string_view where) {
  if (a.size() != b.size()) {
    throw ConeError(ErrorKind::DimensionMismatch,
                    std::string(where) + ": " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
  }
}

}  // namespace conesep
