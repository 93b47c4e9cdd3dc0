#pragma once

#include "conesep/vector.hpp"

#include <optional>
#include <span>
#include <vector>

namespace conesep {

/// Convex polyhedral cone cone(G) in R^d. Generators are stored as unit
/// columns with duplicate rays removed; an optional outer description holds
/// unit inward facet normals n_j with cone(G) = {x : <n_j, x> >= 0}.
class PolyCone {
 public:
  /// Unchecked: columns must already be unit and pairwise distinct rays.
  PolyCone(Matrix unit_generators, std::optional<Matrix> facet_normals)
      : generators_(std::move(unit_generators)), facets_(std::move(facet_normals)) {}

  int dim() const { return static_cast<int>(generators_.rows()); }
  Eigen::Index size() const { return generators_.cols(); }
  const Matrix& generators() const { return generators_; }
  Vector generator(Eigen::Index i) const { return generators_.col(i); }

  bool has_facets() const { return facets_.has_value(); }
  /// Inward facet normals as columns; empty optional when not supplied/computed.
  const std::optional<Matrix>& facet_normals() const { return facets_; }

  /// Copy of this cone with facet normals attached (enumerated when absent).
  PolyCone with_facets() const;

 private:
  Matrix generators_;
  std::optional<Matrix> facets_;
};

/// Normalizes and deduplicates generators (cosine > 1 - 1e-12 counts as the
/// same ray) and cross-validates supplied facets on deterministic samples.
PolyCone make_polycone(std::span<const Vector> generators,
                       std::optional<std::vector<Vector>> facets = std::nullopt);
PolyCone make_polycone(std::initializer_list<Vector> generators);

/// True iff min over lambda >= 0 of ||G lambda - x|| <= tol.
bool cone_membership(const PolyCone& cone, const Vector& x, double tol = 1e-9);

struct Pointedness {
  bool pointed = true;
  std::optional<Vector> witness;  // x with x and -x in the cone, when not pointed
  double hull_distance = 0;       // dist(0, conv of unit generators)
};

/// A cone is pointed iff the origin is not in the convex hull of its unit
/// generators: sum lambda_i g_i = 0 with sum lambda_i = 1 exhibits g_j and
/// -g_j = sum_{i != j} (lambda_i / lambda_j) g_i inside the cone.
Pointedness pointedness(const PolyCone& cone, double tol_point = 1e-9);

int cone_rank(const PolyCone& cone);
bool solidity(const PolyCone& cone);

struct FacetList {
  std::vector<PolyCone> pieces;  // facet cones whose union is bd C
  Matrix normals;                // matching unit inward normals (columns)
  bool not_solid = false;        // bd C = C; pieces holds the cone itself
};

/// Facet cones of a solid cone. Uses the supplied outer description when
/// present, otherwise enumerates supporting hyperplanes spanned by d - 1
/// generators (d <= 4).
FacetList facets(const PolyCone& cone);

}  // namespace conesep
