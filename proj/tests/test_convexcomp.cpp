#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conesep/distance.hpp"
#include "conesep/nnls.hpp"
#include "conesep/projection.hpp"
#include "test_support.hpp"

#include <random>

using namespace conesep;
using testsupport::polar;
using testsupport::v2;

namespace {

ConeRegion piece(std::initializer_list<Vector> g) { return ConeRegion::piece(make_polycone(g)); }

std::vector<Vector> random_gens(std::mt19937_64& rng, int d, int m) {
  std::normal_distribution<double> nd;
  std::vector<Vector> g;
  for (int i = 0; i < m; ++i) {
    Vector v(d);
    for (int k = 0; k < d; ++k) v[k] = nd(rng);
    g.push_back(v);
  }
  return g;
}

}  // namespace

TEST_CASE("project_cone examples") {
  const PolyCone q = make_polycone({v2(1, 0), v2(0, 1)});
  CHECK(project_cone(q, v2(1, -1)).proj.isApprox(v2(1, 0)));
  CHECK(project_cone(q, v2(-1, -1)).proj.norm() < 1e-15);
  CHECK(project_cone(make_polycone({v2(1, 1)}), v2(1, 0)).proj.isApprox(v2(0.5, 0.5)));
}

TEST_CASE("Moreau decomposition on random cones") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> count(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = dim(rng);
    const PolyCone c = make_polycone(random_gens(rng, d, count(rng)));
    const Vector y = random_gens(rng, d, 1).front();
    const Projection p = project_cone(c, y);
    CHECK((y - p.proj - p.polar_part).norm() == 0);
    CHECK(p.moreau_residual < 1e-10 * std::max(1.0, y.squaredNorm()));
    CHECK(p.polar_violation < 1e-10 * std::max(1.0, y.norm()));
    CHECK(nnls_kkt_residual(c.generators(), y, nnls(c.generators(), y).lambda) < 1e-10);
  }
}

TEST_CASE("distance: point to segment") {
  const ConvexBody a = body(piece({v2(0, 1)}), false);
  const ConvexBody b = body(piece({v2(1, 0)}), true);
  const DistanceResult r = body_distance(a, b);
  CHECK(r.distance == doctest::Approx(1).epsilon(1e-12));
  CHECK(r.witness_a.isApprox(v2(0, 1)));
  CHECK(r.witness_b.norm() < 1e-12);
  CHECK(r.functional.normalized().isApprox(v2(0, 1)));
  CHECK(r.certificate == DistanceCertificate::Positive);
  CHECK(classify(r, 1e-9) == Verdict::Positive);
}

TEST_CASE("distance: intersecting bodies") {
  const ConeRegion q = piece({v2(1, 0), v2(0, 1)});
  const DistanceResult r = body_distance(body(q, false), body(q, true));
  CHECK(r.distance <= 1e-9);
  CHECK(r.certificate == DistanceCertificate::Zero);
  CHECK(classify(r, 1e-9) == Verdict::Zero);
}

TEST_CASE("distance: narrow cone against the axis chord") {
  const ConeRegion c = piece({polar(80), polar(100)});
  const ConeRegion k = ConeRegion::union_of({piece({v2(1, 0)}), piece({v2(-1, 0)})});
  const DistanceResult r = body_distance(body(c, false), body(k, true));
  // Brute force: the lowest points of S_C lie on the chord between the 80 and
  // 100 degree rays; S_K^0 is the segment [-1, 1] x {0}.
  std::vector<Vector> chord_c, seg_k;
  for (int i = 0; i <= 200; ++i) {
    chord_c.push_back(testsupport::arc(80, 100, 201)[static_cast<std::size_t>(i)]);
    seg_k.push_back(v2(-1 + 2.0 * i / 200, 0));
  }
  const double brute = testsupport::cloud_distance(testsupport::densify_pairs(chord_c, 4), seg_k);
  CHECK(r.distance == doctest::Approx(brute).epsilon(1e-6));
  CHECK(r.distance == doctest::Approx(std::cos(10 * std::numbers::pi / 180)).epsilon(1e-9));
}

TEST_CASE("distance symmetry and certificate soundness") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ang(0, 360), width(0, 60);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double a0 = ang(rng), b0 = ang(rng);
    const ConeRegion c = piece({polar(a0), polar(a0 + width(rng))});
    const ConeRegion k = ConeRegion::union_of({piece({polar(b0)}), piece({polar(b0 + 150), polar(b0 + 150 + width(rng))})});
    const bool origin = trial % 2 == 0;
    const DistanceResult ab = body_distance(body(c, false), body(k, origin));
    const DistanceResult ba = body_distance(body(k, origin), body(c, false));
    CHECK(std::abs(ab.distance - ba.distance) <= 2e-9);
    if (ab.certificate == DistanceCertificate::Positive) {
      ++positives;
      const Vector& x = ab.functional;
      const double inf_c = lmo_norm_base(c, x).value;
      double sup_k = support_norm_base(k, x).value;
      if (origin) sup_k = std::max(sup_k, 0.0);
      CHECK(inf_c - sup_k >= ab.gap_value / 2);
      CHECK(ab.gap_value > 0);
    } else {
      CHECK((ab.witness_a - ab.witness_b).norm() <= 1e-9);
    }
  }
  CHECK(positives > 20);
}
