#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conesep/error.hpp"
#include "conesep/region.hpp"
#include "test_support.hpp"

#include <random>

using namespace conesep;
using testsupport::polar;
using testsupport::v2;
using testsupport::v3;

namespace {

ConeRegion piece(std::initializer_list<Vector> g) { return ConeRegion::piece(make_polycone(g)); }
ConeRegion orthant() { return piece({v2(1, 0), v2(0, 1)}); }

// min and max of <f, u> over unit vectors u of a 2-D region, by a fine sweep.
std::pair<double, double> sweep_2d(const ConeRegion& r, const Vector& f, int steps = 360 * 400) {
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < steps; ++i) {
    const Vector u = polar(360.0 * i / steps);
    if (!region_contains(r, u, 1e-12)) continue;
    lo = std::min(lo, f.dot(u));
    hi = std::max(hi, f.dot(u));
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("lmo_norm_base examples") {
  LmoResult r = lmo_norm_base(orthant(), v2(1, 1));
  CHECK(r.value == doctest::Approx(1));
  CHECK(r.witness.isApprox(v2(1, 0)));  // lowest index wins the tie
  const auto [lo, hi] = sweep_2d(orthant(), v2(1, 1));
  CHECK(lo == doctest::Approx(1).epsilon(1e-9));

  r = lmo_norm_base(orthant(), v2(-1, 0));
  CHECK(r.value == doctest::Approx(-1));
  CHECK(r.witness.isApprox(v2(1, 0)));

  const ConeRegion two = ConeRegion::union_of({piece({v2(1, 0)}), piece({v2(0, 1)})});
  r = lmo_norm_base(two, v2(1, 2));
  CHECK(r.value == doctest::Approx(1));
  CHECK(r.witness.isApprox(v2(1, 0)));

  bool threw = false;
  try {
    lmo_norm_base(orthant(), v2(0, 0));
  } catch (const ConeError& e) {
    threw = e.kind() == ErrorKind::ZeroDirection;
  }
  CHECK(threw);
}

TEST_CASE("support_norm_base examples") {
  LmoResult r = support_norm_base(orthant(), v2(1, 1));
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.witness.isApprox(v2(1, 1).normalized()));

  CHECK(support_norm_base(piece({v2(0, 1)}), v2(1, 0)).value == doctest::Approx(0).epsilon(1e-15));

  // C((1,1), 1) in the plane is the first quadrant; its boundary rays are the
  // axes and the supremum of x* over them is |alpha| = 1.
  const ConeRegion bd = ConeRegion::boundary(make_polycone({v2(1, 0), v2(0, 1)}));
  CHECK(support_norm_base(bd, v2(1, 1)).value == doctest::Approx(1));
}

TEST_CASE("body LMO with and without origin") {
  const ConeRegion up = piece({v2(0, 1)});
  LmoResult r = body(up, true).lmo(v2(0, 1));
  CHECK(r.value == 0);
  CHECK(r.witness.isZero());
  r = body(up, false).lmo(v2(0, 1));
  CHECK(r.value == doctest::Approx(1));
  CHECK(r.witness.isApprox(v2(0, 1)));
  CHECK(body(orthant(), true).lmo(v2(1, 1)).value == 0);
}

TEST_CASE("complement and boundary LMO in the plane match a sweep") {
  const PolyCone k = make_polycone({polar(30), polar(100)});
  const ConeRegion comp = ConeRegion::complement(k);
  const ConeRegion bd = ConeRegion::boundary(k);
  for (int i = 0; i < 72; ++i) {
    const Vector f = 1.7 * polar(5.0 * i + 1.3);
    const auto [lo, hi] = sweep_2d(comp, f);
    CHECK(lmo_norm_base(comp, f).value == doctest::Approx(lo).epsilon(1e-6));
    CHECK(support_norm_base(comp, f).value == doctest::Approx(hi).epsilon(1e-6));
    const double b = std::min(f.dot(polar(30)), f.dot(polar(100)));
    CHECK(lmo_norm_base(bd, f).value == doctest::Approx(b));
  }
}

TEST_CASE("complement requires a solid cone with a facet") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const ConeError& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { ConeRegion::complement(make_polycone({v2(1, 0)})); }) == ErrorKind::NotSolid);
  CHECK(kind([] { ConeRegion::complement(make_polycone({v2(1, 0), v2(-1, 1), v2(-1, -1)})); }) ==
        ErrorKind::TrivialRegion);
  // The lower open half-plane plus the origin.
  const ConeRegion lower = ConeRegion::complement(make_polycone({v2(1, 0), v2(-1, 0), v2(0, 1)}));
  CHECK(lmo_norm_base(lower, v2(0, 1)).value == doctest::Approx(-1));
  CHECK(lmo_norm_base(lower, v2(0, -1)).value == doctest::Approx(0).epsilon(1e-15));
  CHECK(support_norm_base(lower, v2(1, -1)).value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("LMO never exceeds sampled base values (d <= 3)") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vector> g;
    for (int i = 0; i < 3; ++i) g.push_back(v3(nd(rng), nd(rng), std::abs(nd(rng)) + 0.5));
    const ConeRegion c = ConeRegion::piece(make_polycone(g));
    const Vector f = v3(nd(rng), nd(rng), nd(rng));
    const double m = lmo_norm_base(c, f).value;
    // Samples of B_C: normalized nonnegative combinations of generators.
    std::uniform_real_distribution<double> u(0, 1);
    for (int s = 0; s < 1000; ++s) {
      Vector x = u(rng) * g[0] + u(rng) * g[1] + u(rng) * g[2];
      x.normalize();
      CHECK(m <= f.dot(x) + 1e-8);
    }
    CHECK(support_norm_base(c, f).value == -lmo_norm_base(c, -f).value);
  }
}

TEST_CASE("union LMO is order independent") {
  const ConeRegion a = piece({polar(10), polar(40)});
  const ConeRegion b = piece({polar(200)});
  const ConeRegion c = piece({polar(290), polar(300)});
  const ConeRegion abc = ConeRegion::union_of({a, b, c});
  const ConeRegion cab = ConeRegion::union_of({c, a, b});
  for (int i = 0; i < 36; ++i) {
    const Vector f = polar(10.0 * i);
    const double m = std::min({lmo_norm_base(a, f).value, lmo_norm_base(b, f).value, lmo_norm_base(c, f).value});
    CHECK(lmo_norm_base(abc, f).value == m);
    CHECK(lmo_norm_base(cab, f).value == m);
  }
}

TEST_CASE("piece LMO dichotomy") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vector> g;
    for (int i = 0; i < 4; ++i) g.push_back(v3(nd(rng), nd(rng), std::abs(nd(rng))));
    const PolyCone k = make_polycone(g);
    const Vector f = v3(nd(rng), nd(rng), nd(rng));
    const LmoResult r = lmo_norm_base(ConeRegion::piece(k), f);
    const Vector on_rays = k.generators().transpose() * f;
    if (on_rays.minCoeff() >= 0) {
      // f in the dual cone: an extreme ray attains the minimum
      bool is_ray = false;
      for (Eigen::Index j = 0; j < k.size(); ++j) is_ray = is_ray || r.witness.isApprox(k.generator(j));
      CHECK(is_ray);
      CHECK(r.value == doctest::Approx(on_rays.minCoeff()));
    } else {
      CHECK(r.value < 0);
      CHECK(r.witness.norm() == doctest::Approx(1));
      CHECK(r.value == doctest::Approx(f.dot(r.witness)));
    }
  }
}

TEST_CASE("centroids") {
  CHECK(orthant().centroid().isApprox(v2(0.5, 0.5)));
  const ConeRegion comp = ConeRegion::complement(make_polycone({v2(1, 0), v2(0, 1)}));
  CHECK(comp.centroid().isApprox(v2(-0.5, -0.5)));
}
