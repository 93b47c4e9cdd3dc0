#include "conesep/separation.hpp"

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"
#include "conesep/oracle.hpp"

#include <cmath>

namespace conesep {

double eval_norm_linear(const NormLinearFunctional& f, const Vector& x) {
  require_same_dim(f.x_star, x, "eval_norm_linear");
  return f.x_star.dot(x) + f.alpha * norm_value(x, f.norm);
}

std::string_view to_string(BpClass c) {
  switch (c) {
    case BpClass::Interior: return "interior";
    case BpClass::Boundary: return "boundary";
    case BpClass::Exterior: return "exterior";
  }
  return "?";
}

std::string_view to_string(Orientation o) { return o == Orientation::CfromK ? "CfromK" : "KfromC"; }

BpClass bp_membership(const BishopPhelpsCone& bp, const Vector& x) {
  const NormLinearFunctional& f = bp.functional;
  require_same_dim(f.x_star, x, "bp_membership");
  if (f.trivial_cone() || f.whole_space()) {
    throw ConeError(ErrorKind::DegenerateCone, "alpha must lie strictly between -||x*|| and ||x*||");
  }
  const double n = norm_value(x, f.norm);
  if (n == 0.0) return BpClass::Boundary;
  const double v = f.x_star.dot(x) - f.alpha * n;
  const double band = 1e-10 * (1.0 + n);
  if (v > band) return BpClass::Interior;
  if (v < -band) return BpClass::Exterior;
  return BpClass::Boundary;
}

AugmentedDual augmented_dual_membership(const ConeRegion& cone, const Vector& x_star, double alpha, double tol) {
  AugmentedDual out;
  out.inf_base = lmo_norm_base(cone, x_star).value;
  if (alpha < 0) return out;
  out.a_plus = out.inf_base >= alpha - tol;
  // On a closed polyhedral base the infimum is attained, so strictness on the
  // base is strictness of the minimum; the open and weak-closure readings agree.
  out.a_sharp = out.inf_base > alpha + tol;
  out.aw_sharp = out.a_sharp;
  out.cor_a_plus = out.a_sharp && alpha > 0;
  return out;
}

BishopPhelpsCone make_bp_cone(const Vector& x_star, double alpha, const ConeRegion& reference, double tol) {
  BishopPhelpsCone bp;
  bp.functional = NormLinearFunctional{x_star, alpha, NormKind::Euclidean};
  bp.family.bp = alpha > 0 && alpha < dual_norm(x_star);
  bp.family.lin = alpha == 0;
  const AugmentedDual ad = augmented_dual_membership(reference, x_star, alpha, tol);
  bp.family.cor_a_plus = ad.cor_a_plus;
  bp.family.a_sharp = ad.a_sharp;
  bp.family.aw_sharp = ad.aw_sharp;
  return bp;
}

namespace {

DistanceOptions distance_options(const SeparationOptions& o) { return DistanceOptions{o.tol, o.max_iterations}; }

// Certificate enclosing `inner` and excluding `outer`, or nullopt when the
// bodies touch. Throws Inconclusive in the dead-band.
std::optional<SeparationCertificate> one_sided(const ConeRegion& inner, const ConeRegion& outer,
                                               Orientation orientation, const SeparationOptions& options) {
  if (inner.dim() != outer.dim()) throw ConeError(ErrorKind::DimensionMismatch, "cones differ in dimension");
  const DistanceResult r = body_distance(body(inner, false), body(outer, true), distance_options(options));
  switch (classify(r, options.tol)) {
    case Verdict::Zero: return std::nullopt;
    case Verdict::Inconclusive:
      throw ConeError(ErrorKind::Inconclusive, "distance " + std::to_string(r.distance) + " is inside the tolerance band");
    case Verdict::Positive: break;
  }
  SeparationCertificate cert;
  cert.orientation = orientation;
  cert.x_star = r.functional / r.distance;
  cert.lo = std::max(0.0, support_norm_base(outer, cert.x_star).value);
  cert.hi = lmo_norm_base(inner, cert.x_star).value;
  if (!(cert.hi > cert.lo)) {
    throw ConeError(ErrorKind::Inconclusive, "empty alpha interval after re-evaluation");
  }
  cert.alpha = 0.5 * (cert.lo + cert.hi);
  cert.distance = r.distance;
  cert.witness_inner = r.witness_a;
  cert.witness_outer = r.witness_b;
  cert.iterations = r.iterations;
  cert.family = make_bp_cone(cert.x_star, cert.alpha, inner, options.tol).family;
  if (!cert.family.cor_a_plus) {
    throw ConeError(ErrorKind::Inconclusive, "alpha interval too narrow to certify the core condition");
  }
  return cert;
}

}  // namespace

std::optional<SeparationCertificate> separate_nonsym(const ConeRegion& c, const ConeRegion& k,
                                                     const SeparationOptions& options) {
  return one_sided(c, k, Orientation::CfromK, options);
}

std::optional<SeparationCertificate> separate_sym(const ConeRegion& c, const ConeRegion& k,
                                                  const SeparationOptions& options) {
  struct Attempt {
    const ConeRegion* inner;
    const ConeRegion* outer;
    Orientation orientation;
  };
  std::array<Attempt, 2> order{Attempt{&c, &k, Orientation::CfromK}, Attempt{&k, &c, Orientation::KfromC}};
  if (options.kfromc_first) std::swap(order[0], order[1]);

  bool inconclusive = false;
  std::optional<SeparationCertificate> found;
  for (const Attempt& a : order) {
    try {
      found = one_sided(*a.inner, *a.outer, a.orientation, options);
    } catch (const ConeError& e) {
      if (e.kind() != ErrorKind::Inconclusive) throw;
      inconclusive = true;
    }
    if (found) break;
  }

  const DistanceResult sym = body_distance(body(c, false), body(k, false), distance_options(options));
  const Verdict v = classify(sym, options.tol);
  if (found) {
    if (v == Verdict::Zero) throw ConeError(ErrorKind::Inconclusive, "certificate found but dist(S_C, S_K) is zero");
    return found;
  }
  if (inconclusive) throw ConeError(ErrorKind::Inconclusive, "one orientation is inside the tolerance band");
  if (v != Verdict::Zero) {
    throw ConeError(ErrorKind::Inconclusive, "no certificate but dist(S_C, S_K) is not zero");
  }
  return std::nullopt;
}

BidirectionalResult separate_convex_bidirectional(const ConeRegion& c, const ConeRegion& k,
                                                  const SeparationOptions& options) {
  if (!c.is_convex_piece() || !k.is_convex_piece()) {
    throw ConeError(ErrorKind::NotConvex, "bidirectional separation needs two convex pieces");
  }
  BidirectionalResult out;
  out.cfromk = one_sided(c, k, Orientation::CfromK, options);
  out.kfromc = one_sided(k, c, Orientation::KfromC, options);
  if (out.cfromk && out.kfromc) {
    const Vector x = out.cfromk->x_star - out.kfromc->x_star;
    if (x.norm() > options.tol) {
      const double inf_c = lmo_norm_base(c, x).value;
      const double sup_k = support_norm_base(k, x).value;
      if (sup_k < -options.tol && inf_c > options.tol) out.linear = x;
    }
  }
  return out;
}

namespace {

std::vector<PolyCone> pieces_of(const ConeRegion& r) {
  switch (r.kind()) {
    case RegionKind::Piece: return {r.cone()};
    case RegionKind::Boundary: return r.facet_pieces();
    case RegionKind::Union: {
      std::vector<PolyCone> out;
      for (const ConeRegion& ch : r.children()) {
        for (PolyCone& p : pieces_of(ch)) out.push_back(std::move(p));
      }
      return out;
    }
    case RegionKind::Complement: break;
  }
  throw ConeError(ErrorKind::InvalidArgument, "intersection test does not accept complements");
}

ConeRegion boundary_of(const ConeRegion& r) {
  if (r.kind() == RegionKind::Piece) return ConeRegion::boundary(r.cone());
  if (r.kind() == RegionKind::Union) {
    for (const ConeRegion& ch : r.children()) {
      if (ch.kind() != RegionKind::Piece || solidity(ch.cone())) {
        throw ConeError(ErrorKind::NotConvex, "boundary of a union is only supported for non-solid members");
      }
    }
    return r;  // nowhere dense: its own boundary
  }
  throw ConeError(ErrorKind::NotConvex, "boundary report needs convex pieces");
}

bool positive_distance(const ConeRegion& a, const ConeRegion& b, double tol, double& distance) {
  const DistanceResult r = body_distance(body(a, false), body(b, true), DistanceOptions{tol, 100000});
  distance = r.distance;
  const Verdict v = classify(r, tol);
  if (v == Verdict::Inconclusive) throw ConeError(ErrorKind::Inconclusive, "boundary report distance in the tolerance band");
  return v == Verdict::Positive;
}

}  // namespace

bool cones_meet_only_at_origin(const ConeRegion& c, const ConeRegion& k) {
  if (c.dim() != k.dim()) throw ConeError(ErrorKind::DimensionMismatch, "cones differ in dimension");
  const int d = c.dim();
  for (const PolyCone& p : pieces_of(c)) {
    for (const PolyCone& q : pieces_of(k)) {
      // A shared point x = G lambda = H mu is nonzero iff some coordinate of x
      // can be scaled to +-1.
      const Eigen::Index m = p.size(), n = q.size();
      Matrix a = Matrix::Zero(d + 1, m + n);
      a.topLeftCorner(d, m) = p.generators();
      a.topRightCorner(d, n) = -q.generators();
      Vector b = Vector::Zero(d + 1);
      b[d] = 1.0;
      for (int i = 0; i < d; ++i) {
        for (const double sign : {1.0, -1.0}) {
          a.bottomLeftCorner(1, m) = sign * p.generators().row(i);
          if (nnls(a, b).residual <= 1e-9) return false;
        }
      }
    }
  }
  return true;
}

BoundaryReport boundary_equivalence_report(const ConeRegion& c, const ConeRegion& k, double tol) {
  if (c.dim() > 4) throw ConeError(ErrorKind::DimensionTooHigh, "boundary report needs d <= 4");
  const ConeRegion bc = boundary_of(c);
  const ConeRegion bk = boundary_of(k);
  BoundaryReport rep;
  rep.intersection_trivial = cones_meet_only_at_origin(c, k);
  rep.full = positive_distance(c, k, tol, rep.distances[0]);
  // Polyhedral pieces are closed, so the closure condition coincides with the first.
  rep.closures = rep.full;
  rep.bd_bd = positive_distance(bc, bk, tol, rep.distances[1]) && rep.intersection_trivial;
  rep.bd_cl = positive_distance(bc, k, tol, rep.distances[2]) && rep.intersection_trivial;
  rep.cl_bd = positive_distance(c, bk, tol, rep.distances[3]) && rep.intersection_trivial;
  rep.consistent = rep.full == rep.closures && rep.full == rep.bd_bd && rep.full == rep.bd_cl && rep.full == rep.cl_bd;
  return rep;
}

VerificationReport verify_certificate(const SeparationCertificate& cert, const ConeRegion& c, const ConeRegion& k,
                                      int samples, std::uint64_t seed) {
  const ConeRegion& inner = cert.orientation == Orientation::CfromK ? c : k;
  const ConeRegion& outer = cert.orientation == Orientation::CfromK ? k : c;
  // Same band as bp_membership on unit samples; a degenerate alpha simply fails.
  constexpr double band = 2e-10;

  std::mt19937_64 rng(seed);
  VerificationReport rep;
  rep.min_inner_margin = INFINITY;
  rep.min_outer_margin = INFINITY;
  for (const Vector& s : random_base_samples(inner, samples, rng)) {
    ++rep.inner_samples;
    const double m = cert.x_star.dot(s) - cert.alpha;
    rep.min_inner_margin = std::min(rep.min_inner_margin, m);
    if (m <= band) ++rep.violations;
  }
  for (const Vector& s : random_base_samples(outer, samples, rng)) {
    ++rep.outer_samples;
    const double m = cert.alpha - cert.x_star.dot(s);
    rep.min_outer_margin = std::min(rep.min_outer_margin, m);
    if (m <= band) ++rep.violations;
  }
  rep.passed = rep.violations == 0;
  return rep;
}

}  // namespace conesep
