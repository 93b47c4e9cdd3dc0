#include "conesep/basis.hpp"

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"

#include <cmath>

namespace conesep {

std::string_view to_string(BaseKind k) {
  switch (k) {
    case BaseKind::WellBased: return "WellBased";
    case BaseKind::ConvexBase: return "ConvexBase";
    case BaseKind::NotWellBased: return "NotWellBased";
    case BaseKind::NoConvexBase: return "NoConvexBase";
  }
  return "?";
}

namespace {

std::vector<Vector> generator_rays(const ConeRegion& r) {
  if (r.kind() == RegionKind::Complement) return {};
  if (r.kind() == RegionKind::Boundary) {
    std::vector<Vector> out;
    for (const PolyCone& p : r.facet_pieces()) {
      for (Eigen::Index j = 0; j < p.size(); ++j) out.emplace_back(p.generator(j));
    }
    return out;
  }
  return r.rays();
}

// Zero-hull witness from the unit generators.
void attach_witness(BaseCertificate& cert, const ConeRegion& r) {
  const std::vector<Vector> rays = generator_rays(r);
  if (rays.empty()) return;
  Matrix m(r.dim(), static_cast<Eigen::Index>(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = rays[i];
  const HullPoint h = min_norm_hull(m);
  cert.witness_point = h.point;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (h.weights[static_cast<Eigen::Index>(i)] > 1e-14) {
      cert.witness_rays.push_back(rays[i]);
      cert.witness_weights.push_back(h.weights[static_cast<Eigen::Index>(i)]);
    }
  }
}

}  // namespace

std::vector<Vector> make_base(const PolyCone& cone, const Vector& x_star) {
  if (x_star.size() != cone.dim()) throw ConeError(ErrorKind::DimensionMismatch, "functional and cone differ");
  std::vector<Vector> out;
  for (Eigen::Index j = 0; j < cone.size(); ++j) {
    const double v = x_star.dot(cone.generator(j));
    if (!(v > 0)) throw ConeError(ErrorKind::NonPositiveRay, "functional is not positive on generator " + std::to_string(j));
    out.emplace_back(cone.generator(j) / v);
  }
  return out;
}

BaseCertificate is_well_based(const ConeRegion& cone, double tol) {
  const DistanceResult r = body_distance(body(cone, false), origin_body(cone.dim()), DistanceOptions{tol, 100000});
  BaseCertificate cert;
  cert.distance = r.distance;
  switch (classify(r, tol)) {
    case Verdict::Inconclusive: throw ConeError(ErrorKind::Inconclusive, "distance to the origin in the tolerance band");
    case Verdict::Zero:
      cert.kind = BaseKind::NotWellBased;
      attach_witness(cert, cone);
      if (cert.witness_point.size() == 0) cert.witness_point = r.witness_a;
      return cert;
    case Verdict::Positive: break;
  }
  cert.kind = BaseKind::WellBased;
  cert.x_star = r.functional / r.distance;
  cert.alpha = r.distance * (1.0 - 1e-6);
  if (cone.is_convex_piece()) cert.base_vertices = make_base(cone.cone(), cert.x_star);
  return cert;
}

BaseCertificate has_convex_base(const ConeRegion& cone, double tol) {
  const std::vector<Vector> rays = generator_rays(cone);
  if (rays.empty()) {
    // Complements carry no generator list; fall back to the body distance.
    BaseCertificate w = is_well_based(cone, tol);
    if (w.kind == BaseKind::WellBased) {
      w.kind = BaseKind::ConvexBase;
      w.alpha = 0;
    } else {
      w.kind = BaseKind::NoConvexBase;
    }
    return w;
  }
  Matrix m(cone.dim(), static_cast<Eigen::Index>(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = rays[i];
  const HullPoint h = min_norm_hull(m, tol);
  BaseCertificate cert;
  cert.distance = h.distance;
  if (h.distance > tol) {
    cert.kind = BaseKind::ConvexBase;
    cert.x_star = h.point / h.distance;
    if (cone.is_convex_piece()) cert.base_vertices = make_base(cone.cone(), cert.x_star);
    return cert;
  }
  cert.kind = BaseKind::NoConvexBase;
  attach_witness(cert, cone);
  return cert;
}

InterpolationCheck verify_interpolation(const ConeRegion& c, const PolyCone& k, const BishopPhelpsCone& gamma,
                                        int samples, std::uint64_t seed) {
  InterpolationCheck out;
  std::mt19937_64 rng(seed);
  for (const Vector& s : random_base_samples(c, samples, rng)) {
    ++out.inner_samples;
    if (bp_membership(gamma, s) != BpClass::Interior) ++out.violations;
  }
  const Vector& x = gamma.functional.x_star;
  const double nx = x.norm();
  const double alpha = gamma.functional.alpha;
  const int d = k.dim();
  const Matrix normals = *k.with_facets().facet_normals();
  auto inside_k = [&](const Vector& u) {
    if (normals.cols() == 0) return true;
    return (normals.transpose() * u).minCoeff() > -1e-12 && cone_membership(k, u, 1e-9);
  };
  if (d == 2) {
    // Closed form: gamma's norm-base is the arc of half-width acos(alpha/||x*||) about x*.
    const double phi = std::acos(std::clamp(alpha / nx, -1.0, 1.0));
    const double base = std::atan2(x[1], x[0]);
    for (int i = 0; i < samples; ++i) {
      const double t = base - phi + 2 * phi * i / std::max(1, samples - 1);
      Vector u(2);
      u << std::cos(t), std::sin(t);
      ++out.gamma_samples;
      if (!inside_k(u)) ++out.violations;
    }
  } else {
    std::normal_distribution<double> nd;
    int tries = 0;
    while (out.gamma_samples < samples && tries < 1000 * samples) {
      ++tries;
      Vector u(d);
      for (int i = 0; i < d; ++i) u[i] = nd(rng);
      u.normalize();
      if (x.dot(u) < alpha) continue;
      ++out.gamma_samples;
      if (!inside_k(u)) ++out.violations;
    }
  }
  out.passed = out.violations == 0 && out.gamma_samples > 0;
  return out;
}

std::optional<Interpolation> interpolate(const ConeRegion& c, const PolyCone& k, const SeparationOptions& options,
                                         int verify_samples, std::uint64_t seed) {
  if (c.dim() != k.dim()) throw ConeError(ErrorKind::DimensionMismatch, "cones differ in dimension");
  if (k.dim() > 4 && !k.has_facets()) {
    throw ConeError(ErrorKind::DimensionTooHigh, "the outer cone needs facets for d > 4");
  }
  for (const Vector& g : generator_rays(c)) {
    if (!cone_membership(k, g)) throw ConeError(ErrorKind::NotNested, "a generator of the inner cone is outside K");
  }
  const ConeRegion k_hat = ConeRegion::complement(k);
  const std::optional<SeparationCertificate> cert = separate_nonsym(c, k_hat, options);
  if (!cert) return std::nullopt;
  Interpolation out;
  out.certificate = *cert;
  out.gamma = make_bp_cone(cert->x_star, cert->alpha, c, options.tol);
  if (verify_samples > 0) out.check = verify_interpolation(c, k, out.gamma, verify_samples, seed);
  return out;
}

std::optional<SymInterpolation> interpolate_sym(const ConeRegion& c, const ConeRegion& k,
                                                const SeparationOptions& options) {
  const std::optional<SeparationCertificate> cert = separate_sym(c, k, options);
  if (!cert) return std::nullopt;
  SymInterpolation out;
  out.orientation = cert->orientation;
  out.certificate = *cert;
  out.gamma = make_bp_cone(cert->x_star, cert->alpha, cert->orientation == Orientation::CfromK ? c : k, options.tol);
  return out;
}

}  // namespace conesep
