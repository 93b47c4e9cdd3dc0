#pragma once

#include "conesep/polycone.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace conesep {

enum class RegionKind { Piece, Union, Complement, Boundary };

std::string_view to_string(RegionKind kind);

/// A cone given as an expression over polyhedral pieces: a convex piece, a
/// finite union, the complement (X \ K) u {0} of a solid cone, or the
/// boundary of a cone. Cheap to copy (shared immutable tree).
class ConeRegion {
 public:
  static ConeRegion piece(PolyCone cone);
  static ConeRegion union_of(std::vector<ConeRegion> children);
  /// Requires a solid cone other than the whole space; facets are enumerated
  /// when missing. Half-spaces are allowed.
  static ConeRegion complement(PolyCone cone);
  /// Boundary of a cone; a non-solid cone is its own boundary.
  static ConeRegion boundary(PolyCone cone);

  RegionKind kind() const;
  int dim() const;

  /// Underlying cone of a Piece, Complement or Boundary node.
  const PolyCone& cone() const;
  const std::vector<ConeRegion>& children() const;
  /// Facet cones of a Complement/Boundary node (the cone itself when not solid).
  const std::vector<PolyCone>& facet_pieces() const;
  /// Inward unit normals matching facet_pieces() (no columns when not solid).
  const Matrix& facet_normals() const;

  bool is_convex_piece() const { return kind() == RegionKind::Piece; }

  /// Mean of normalized generators; the complement uses minus the mean of K.
  Vector centroid() const;

  /// All generator rays of the leaves, in tree order.
  std::vector<Vector> rays() const;

 private:
  struct Node;
  explicit ConeRegion(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Membership of x in the region viewed as a cone.
bool region_contains(const ConeRegion& region, const Vector& x, double tol = 1e-9);

struct LmoResult {
  double value = 0;
  Vector witness;  // unit vector of B_region (or the origin for S^0 bodies)
};

/// min over B_region of <direction, x> with an attaining unit vector.
LmoResult lmo_norm_base(const ConeRegion& region, const Vector& direction);

/// max over B_region of <functional, x>; equals -lmo_norm_base(region, -functional).
LmoResult support_norm_base(const ConeRegion& region, const Vector& functional);

/// conv(B_region), or conv({0} u B_region) when the origin is adjoined. A
/// body without a region is the single point {0}.
class ConvexBody {
 public:
  ConvexBody(std::optional<ConeRegion> region, bool adjoin_origin, int dim)
      : region_(std::move(region)), adjoin_origin_(adjoin_origin), dim_(dim) {}

  const std::optional<ConeRegion>& region() const { return region_; }
  bool adjoin_origin() const { return adjoin_origin_; }
  int dim() const { return dim_; }

  LmoResult lmo(const Vector& direction) const;
  Vector centroid() const;

 private:
  std::optional<ConeRegion> region_;
  bool adjoin_origin_ = false;
  int dim_ = 0;
};

ConvexBody body(const ConeRegion& region, bool adjoin_origin);
ConvexBody origin_body(int dim);

}  // namespace conesep
