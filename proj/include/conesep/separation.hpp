#pragma once

#include "conesep/distance.hpp"
#include "conesep/region.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace conesep {

/// phi(x) = <x_star, x> + alpha ||x||; its cone is C(x*, alpha) = {x : <x*, x> >= alpha ||x||}.
struct NormLinearFunctional {
  Vector x_star;
  double alpha = 0;
  NormKind norm = NormKind::Euclidean;

  /// C(x*, alpha) = {0} iff alpha >= ||x*||_*.
  bool trivial_cone() const { return alpha >= dual_norm(x_star, norm); }
  /// C(x*, alpha) = X iff alpha <= -||x*||_*.
  bool whole_space() const { return alpha <= -dual_norm(x_star, norm); }
};

double eval_norm_linear(const NormLinearFunctional& f, const Vector& x);

struct FamilyFlags {
  bool bp = false;   // 0 < alpha < ||x*||_*
  bool lin = false;  // alpha == 0
  // Relative to the reference cone the functional was built for.
  bool cor_a_plus = false;
  bool a_sharp = false;
  bool aw_sharp = false;
};

struct BishopPhelpsCone {
  NormLinearFunctional functional;
  FamilyFlags family;
};

enum class BpClass { Interior, Boundary, Exterior };

std::string_view to_string(BpClass c);

/// Sign of <x*, x> - alpha ||x|| with a band of 1e-10 (1 + ||x||) around zero.
/// Throws DegenerateCone unless -||x*||_* < alpha < ||x*||_*.
BpClass bp_membership(const BishopPhelpsCone& bp, const Vector& x);

struct AugmentedDual {
  bool a_plus = false;
  bool a_sharp = false;
  bool aw_sharp = false;
  bool cor_a_plus = false;
  double inf_base = 0;  // min over B_cone of <x*, .>
};

/// Membership of (x*, alpha) in the augmented dual cones of `cone`, decided
/// through the norm-base LMO. alpha < 0 yields all false.
AugmentedDual augmented_dual_membership(const ConeRegion& cone, const Vector& x_star, double alpha,
                                        double tol = 1e-9);

/// Flags of the Bishop-Phelps cone C(x*, alpha) relative to `reference`.
BishopPhelpsCone make_bp_cone(const Vector& x_star, double alpha, const ConeRegion& reference, double tol = 1e-9);

enum class Orientation { CfromK, KfromC };

std::string_view to_string(Orientation o);

struct SeparationCertificate {
  Orientation orientation = Orientation::CfromK;
  Vector x_star;  // unit functional; C(x*, alpha) encloses the inner cone
  double lo = 0;  // max(0, sup over the excluded base)
  double hi = 0;  // inf over the enclosed base
  double alpha = 0;
  double distance = 0;  // dist(S_inner, S^0_outer)
  Vector witness_inner;
  Vector witness_outer;
  FamilyFlags family;
  int iterations = 0;
};

enum class AlphaPolicy { Midpoint };

struct SeparationOptions {
  double tol = 1e-9;
  int max_iterations = 100000;
  AlphaPolicy alpha_policy = AlphaPolicy::Midpoint;
  bool kfromc_first = false;  // separate_sym: try K-from-C before C-from-K
};

/// C \ {0} inside int C(x*, alpha) and K meeting C(x*, alpha) only at 0.
/// Returns nullopt when dist(S_C, S_K^0) is zero; throws Inconclusive in the
/// tolerance dead-band.
std::optional<SeparationCertificate> separate_nonsym(const ConeRegion& c, const ConeRegion& k,
                                                     const SeparationOptions& options = {});

/// One of the two orientations; cross-checked against dist(S_C, S_K).
std::optional<SeparationCertificate> separate_sym(const ConeRegion& c, const ConeRegion& k,
                                                  const SeparationOptions& options = {});

struct BidirectionalResult {
  std::optional<SeparationCertificate> cfromk;
  std::optional<SeparationCertificate> kfromc;
  std::optional<Vector> linear;  // sup over S_K < 0 < inf over S_C
};

/// Both one-sided certificates for two convex pieces; when both exist the
/// difference of their functionals separates linearly.
BidirectionalResult separate_convex_bidirectional(const ConeRegion& c, const ConeRegion& k,
                                                  const SeparationOptions& options = {});

struct BoundaryReport {
  bool full = false;            // 0 not in cl(S_C - S_K^0)
  bool closures = false;        // same with cl C, cl K
  bool bd_bd = false;           // 0 not in cl(S_bdC - S_bdK^0) and C n K = {0}
  bool bd_cl = false;           // 0 not in cl(S_bdC - S_clK^0) and C n K = {0}
  bool cl_bd = false;           // 0 not in cl(S_clC - S_bdK^0) and C n K = {0}
  bool intersection_trivial = false;
  bool consistent = false;      // all five agree
  std::array<double, 4> distances{};  // full, bd-bd, bd-cl, cl-bd
};

/// Evaluates the five equivalent conditions for convex pieces (or unions of
/// non-solid pieces, which are their own boundary).
BoundaryReport boundary_equivalence_report(const ConeRegion& c, const ConeRegion& k, double tol = 1e-9);

/// True iff C n K = {0}, decided exactly by NNLS on the pieces.
bool cones_meet_only_at_origin(const ConeRegion& c, const ConeRegion& k);

struct VerificationReport {
  int inner_samples = 0;
  int outer_samples = 0;
  int violations = 0;
  double min_inner_margin = 0;  // min over samples of <x*, c> - alpha
  double min_outer_margin = 0;  // min over samples of alpha - <x*, k>
  bool passed = false;
};

/// Samples both norm-bases: the enclosed side must be Interior to C(x*, alpha)
/// and the excluded side Exterior.
VerificationReport verify_certificate(const SeparationCertificate& cert, const ConeRegion& c, const ConeRegion& k,
                                      int samples = 1000, std::uint64_t seed = 1);

}  // namespace conesep
