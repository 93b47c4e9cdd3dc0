#include "conesep/region.hpp"

#include "conesep/error.hpp"
#include "conesep/projection.hpp"

namespace conesep {

struct ConeRegion::Node {
  RegionKind kind;
  int dim;
  std::optional<PolyCone> cone;
  std::vector<ConeRegion> children;
  std::vector<PolyCone> facet_pieces;
  Matrix normals;  // inward facet normals (Complement/Boundary of a solid cone)
};

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Piece: return "convex";
    case RegionKind::Union: return "union";
    case RegionKind::Complement: return "complement";
    case RegionKind::Boundary: return "boundary";
  }
  return "?";
}

ConeRegion ConeRegion::piece(PolyCone cone) {
  auto node = std::make_shared<Node>();
  node->kind = RegionKind::Piece;
  node->dim = cone.dim();
  node->cone = std::move(cone);
  return ConeRegion(std::move(node));
}

ConeRegion ConeRegion::union_of(std::vector<ConeRegion> children) {
  if (children.empty()) throw ConeError(ErrorKind::TrivialRegion, "union of no cones");
  const int d = children.front().dim();
  for (const ConeRegion& c : children) {
    if (c.dim() != d) throw ConeError(ErrorKind::DimensionMismatch, "union members differ in dimension");
  }
  auto node = std::make_shared<Node>();
  node->kind = RegionKind::Union;
  node->dim = d;
  node->children = std::move(children);
  return ConeRegion(std::move(node));
}

ConeRegion ConeRegion::complement(PolyCone cone) {
  if (!solidity(cone)) throw ConeError(ErrorKind::NotSolid, "complement needs a solid cone");
  FacetList f = facets(cone);
  if (f.pieces.empty()) throw ConeError(ErrorKind::TrivialRegion, "complement of the whole space is {0}");
  auto node = std::make_shared<Node>();
  node->kind = RegionKind::Complement;
  node->dim = cone.dim();
  node->facet_pieces = std::move(f.pieces);
  node->normals = std::move(f.normals);
  node->cone = std::move(cone);
  return ConeRegion(std::move(node));
}

ConeRegion ConeRegion::boundary(PolyCone cone) {
  FacetList f = facets(cone);
  if (f.pieces.empty()) throw ConeError(ErrorKind::TrivialRegion, "the whole space has empty boundary");
  auto node = std::make_shared<Node>();
  node->kind = RegionKind::Boundary;
  node->dim = cone.dim();
  node->facet_pieces = std::move(f.pieces);
  node->normals = std::move(f.normals);
  node->cone = std::move(cone);
  return ConeRegion(std::move(node));
}

RegionKind ConeRegion::kind() const { return node_->kind; }
int ConeRegion::dim() const { return node_->dim; }

const PolyCone& ConeRegion::cone() const {
  if (!node_->cone) throw ConeError(ErrorKind::InvalidArgument, "a union has no single cone");
  return *node_->cone;
}

const std::vector<ConeRegion>& ConeRegion::children() const { return node_->children; }
const std::vector<PolyCone>& ConeRegion::facet_pieces() const { return node_->facet_pieces; }
const Matrix& ConeRegion::facet_normals() const { return node_->normals; }

std::vector<Vector> ConeRegion::rays() const {
  std::vector<Vector> out;
  if (kind() == RegionKind::Union) {
    for (const ConeRegion& c : children()) {
      for (Vector& r : c.rays()) out.push_back(std::move(r));
    }
    return out;
  }
  const Matrix& G = cone().generators();
  for (Eigen::Index j = 0; j < G.cols(); ++j) out.emplace_back(G.col(j));
  return out;
}

Vector ConeRegion::centroid() const {
  Vector sum = Vector::Zero(dim());
  const std::vector<Vector> all = rays();
  for (const Vector& r : all) sum += r;
  sum /= static_cast<double>(all.size());
  return kind() == RegionKind::Complement ? Vector(-sum) : sum;
}

namespace {

// Smallest inward-normal slack of the unit vector u; positive inside int K.
double interior_slack(const Matrix& normals, const Vector& u) {
  return (normals.transpose() * u).minCoeff();
}

LmoResult piece_lmo(const PolyCone& cone, const Vector& f) {
  const Matrix& G = cone.generators();
  const Vector values = G.transpose() * f;
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values[i] < values[best]) best = i;
  }
  LmoResult out{values[best], G.col(best)};
  if (values[best] >= 0) return out;
  // f is not in the dual cone: the minimum is -||P_C(-f)||, attained at the
  // normalized projection.
  const Projection p = project_cone(cone, -f);
  const double n = p.proj.norm();
  if (n > 0 && -n < out.value) {
    out.value = -n;
    out.witness = p.proj / n;
  }
  return out;
}

LmoResult min_over(const std::vector<PolyCone>& pieces, const Vector& f) {
  LmoResult best = piece_lmo(pieces.front(), f);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    LmoResult r = piece_lmo(pieces[i], f);
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

LmoResult lmo_impl(const ConeRegion& region, const Vector& f) {
  switch (region.kind()) {
    case RegionKind::Piece: return piece_lmo(region.cone(), f);
    case RegionKind::Boundary: return min_over(region.facet_pieces(), f);
    case RegionKind::Union: {
      LmoResult best = lmo_impl(region.children().front(), f);
      for (std::size_t i = 1; i < region.children().size(); ++i) {
        LmoResult r = lmo_impl(region.children()[i], f);
        if (r.value < best.value) best = std::move(r);
      }
      return best;
    }
    case RegionKind::Complement: {
      const double n = f.norm();
      const Vector u = -f / n;
      if (interior_slack(region.facet_normals(), u) <= 1e-12) return {-n, u};
      // The sphere minimum lies inside K, so the constrained minimum sits on bd K.
      return min_over(region.facet_pieces(), f);
    }
  }
  throw ConeError(ErrorKind::InvalidArgument, "unknown region kind");
}

}  // namespace

LmoResult lmo_norm_base(const ConeRegion& region, const Vector& direction) {
  if (direction.size() != region.dim()) {
    throw ConeError(ErrorKind::DimensionMismatch, "direction and region dimension differ");
  }
  if (direction.isZero(0.0)) throw ConeError(ErrorKind::ZeroDirection, "zero direction");
  return lmo_impl(region, direction);
}

LmoResult support_norm_base(const ConeRegion& region, const Vector& functional) {
  LmoResult r = lmo_norm_base(region, -functional);
  r.value = -r.value;
  return r;
}

bool region_contains(const ConeRegion& region, const Vector& x, double tol) {
  if (x.size() != region.dim()) throw ConeError(ErrorKind::DimensionMismatch, "point and region dimension differ");
  const double n = x.norm();
  if (n == 0.0) return true;
  switch (region.kind()) {
    case RegionKind::Piece: return cone_membership(region.cone(), x, tol);
    case RegionKind::Union:
      for (const ConeRegion& c : region.children()) {
        if (region_contains(c, x, tol)) return true;
      }
      return false;
    case RegionKind::Complement:
      return interior_slack(region.facet_normals(), x / n) <= tol;
    case RegionKind::Boundary: {
      if (!cone_membership(region.cone(), x, tol * std::max(1.0, n))) return false;
      if (region.facet_normals().cols() == 0) return true;
      return interior_slack(region.facet_normals(), x / n) <= tol;
    }
  }
  return false;
}

LmoResult ConvexBody::lmo(const Vector& direction) const {
  if (!region_) return {0.0, Vector::Zero(dim_)};
  LmoResult r = lmo_norm_base(*region_, direction);
  if (adjoin_origin_ && r.value > 0) return {0.0, Vector::Zero(dim_)};
  return r;
}

Vector ConvexBody::centroid() const {
  if (!region_) return Vector::Zero(dim_);
  return region_->centroid();
}

ConvexBody body(const ConeRegion& region, bool adjoin_origin) {
  return ConvexBody(region, adjoin_origin, region.dim());
}

ConvexBody origin_body(int dim) { return ConvexBody(std::nullopt, true, dim); }

}  // namespace conesep
