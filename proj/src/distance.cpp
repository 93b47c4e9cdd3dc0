#include "conesep/distance.hpp"

#include "conesep/error.hpp"
#include "min_norm.hpp"

namespace conesep {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "positive";
    case Verdict::Zero: return "zero";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

DistanceResult body_distance(const ConvexBody& a, const ConvexBody& b, const DistanceOptions& options) {
  if (a.dim() != b.dim()) throw ConeError(ErrorKind::DimensionMismatch, "bodies differ in dimension");
  const int d = a.dim();

  auto lmo = [&](const Vector& z) {
    detail::Atom atom;
    atom.a = a.lmo(z).witness;
    atom.b = b.lmo(-z).witness;
    atom.z = atom.a - atom.b;
    return atom;
  };

  Vector start = a.centroid() - b.centroid();
  if (start.norm() < 1e-12) start = Vector::Unit(d, 0);
  // Points of A farthest toward B and of B farthest toward A.
  detail::Atom initial;
  initial.a = a.lmo(start).witness;
  initial.b = b.lmo(-start).witness;
  initial.z = initial.a - initial.b;

  detail::MinNormOptions opt;
  opt.zero_tol = options.tol;
  opt.gap_tol = options.tol * options.tol;
  opt.max_iterations = options.max_iterations;
  const detail::MinNormOutcome out = detail::minimize_norm(lmo, std::move(initial), opt);

  DistanceResult r;
  r.witness_a = out.a;
  r.witness_b = out.b;
  r.functional = out.a - out.b;
  r.distance = r.functional.norm();
  r.iterations = out.iterations;
  r.converged = out.converged;
  r.lower_bound = out.lower;
  if (r.distance > 0) {
    const double inf_a = a.lmo(r.functional).value;
    const double sup_b = -b.lmo(-r.functional).value;
    r.gap_value = inf_a - sup_b;
    r.lower_bound = std::max(r.lower_bound, r.gap_value / r.distance);
  }
  r.certificate = (r.distance > options.tol && r.gap_value > 0) ? DistanceCertificate::Positive
                                                                 : DistanceCertificate::Zero;
  return r;
}

Verdict classify(const DistanceResult& r, double tol) {
  if (r.distance <= tol) return Verdict::Zero;
  if (r.certificate == DistanceCertificate::Positive && r.lower_bound > 10 * tol) return Verdict::Positive;
  return Verdict::Inconclusive;
}

}  // namespace conesep
