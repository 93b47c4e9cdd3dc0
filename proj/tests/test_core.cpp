#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"
#include "conesep/polycone.hpp"
#include "test_support.hpp"

#include <random>

using namespace conesep;
using testsupport::v2;
using testsupport::v3;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ConeError& e) {
    return e.kind();
  }
  FAIL("no ConeError thrown");
  return ErrorKind::InvalidArgument;
}

PolyCone orthant2() { return make_polycone({v2(1, 0), v2(0, 1)}); }

}  // namespace

TEST_CASE("make_polycone normalizes and deduplicates rays") {
  const PolyCone c = make_polycone({v2(2, 0)});
  CHECK(c.size() == 1);
  CHECK(c.generator(0).isApprox(v2(1, 0)));

  CHECK(make_polycone({v2(1, 0), v2(3, 0)}).size() == 1);

  std::vector<Vector> g{v2(1, 0), v2(0, 1)};
  std::vector<Vector> n{v2(1, 0), v2(0, 1)};
  const PolyCone with = make_polycone(g, n);
  CHECK(with.has_facets());
}

TEST_CASE("make_polycone errors") {
  CHECK(kind_of([] { make_polycone({v2(0, 0)}); }) == ErrorKind::ZeroGenerator);
  CHECK(kind_of([] { make_polycone({v2(1, 0), v3(1, 0, 0)}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { make_polycone(std::span<const Vector>{}); }) == ErrorKind::Empty);
  // The half-plane {y >= 0} does not describe the first quadrant.
  std::vector<Vector> g{v2(1, 0), v2(0, 1)};
  std::vector<Vector> wrong{v2(0, 1)};
  CHECK(kind_of([&] { make_polycone(g, wrong); }) == ErrorKind::InvalidFacets);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> g;
    for (int i = 0; i < 5; ++i) g.push_back(v3(nd(rng), nd(rng), nd(rng)) * (1 + trial));
    const PolyCone once = make_polycone(g);
    std::vector<Vector> again;
    for (Eigen::Index j = 0; j < once.size(); ++j) again.push_back(once.generator(j));
    const PolyCone twice = make_polycone(again);
    REQUIRE(twice.size() == once.size());
    CHECK((twice.generators() - once.generators()).norm() < 1e-15);
  }
}

TEST_CASE("cone_membership") {
  CHECK(cone_membership(orthant2(), v2(1, 2)));
  CHECK_FALSE(cone_membership(orthant2(), v2(-1, 0)));
  CHECK(cone_membership(make_polycone({v2(1, 1)}), v2(2, 2)));
  CHECK(cone_membership(orthant2(), v2(0, 0)));
  CHECK(kind_of([] { cone_membership(orthant2(), v3(1, 1, 1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("pointedness") {
  CHECK(pointedness(orthant2()).pointed);

  const Pointedness line = pointedness(make_polycone({v2(1, 0), v2(-1, 0)}));
  CHECK_FALSE(line.pointed);
  REQUIRE(line.witness);
  CHECK(line.witness->isApprox(v2(1, 0)));

  const PolyCone tri = make_polycone({v2(1, 0), v2(-1, 1), v2(-1, -1)});
  std::vector<Vector> rays;
  for (Eigen::Index j = 0; j < tri.size(); ++j) rays.push_back(tri.generator(j));
  REQUIRE(testsupport::origin_in_hull_2d(rays));
  const Pointedness p = pointedness(tri);
  CHECK_FALSE(p.pointed);
  REQUIRE(p.witness);
  CHECK(cone_membership(tri, *p.witness));
  CHECK(cone_membership(tri, -*p.witness));
}

TEST_CASE("pointedness agrees with brute-force hull test in 2-D") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 360);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vector> g;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) g.push_back(testsupport::polar(ang(rng)));
    const PolyCone c = make_polycone(g);
    std::vector<Vector> rays;
    for (Eigen::Index j = 0; j < c.size(); ++j) rays.push_back(c.generator(j));
    const HullPoint h = min_norm_hull(c.generators());
    if (h.distance > 1e-6 || h.distance < 1e-12) {
      CHECK(pointedness(c).pointed == !testsupport::origin_in_hull_2d(rays, 1e-9));
    }
  }
}

TEST_CASE("solidity") {
  CHECK(solidity(orthant2()));
  CHECK_FALSE(solidity(make_polycone({v2(1, 0)})));
  CHECK(solidity(make_polycone({v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 1)})));
}

TEST_CASE("facets") {
  const FacetList f2 = facets(orthant2());
  REQUIRE(f2.pieces.size() == 2);
  std::vector<Vector> ends;
  for (const PolyCone& p : f2.pieces) {
    REQUIRE(p.size() == 1);
    ends.push_back(p.generator(0));
  }
  CHECK(((ends[0].isApprox(v2(1, 0)) && ends[1].isApprox(v2(0, 1))) ||
         (ends[1].isApprox(v2(1, 0)) && ends[0].isApprox(v2(0, 1)))));

  const FacetList f3 = facets(make_polycone({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}));
  CHECK(f3.pieces.size() == 3);
  for (const PolyCone& p : f3.pieces) CHECK(p.size() == 2);

  // Pyramid: by hand, the four facets pair consecutive apex rays
  // (1,0,1)-(0,1,1)-(-1,0,1)-(0,-1,1).
  const FacetList f4 = facets(make_polycone({v3(1, 0, 1), v3(-1, 0, 1), v3(0, 1, 1), v3(0, -1, 1)}));
  CHECK(f4.pieces.size() == 4);
  for (Eigen::Index j = 0; j < f4.normals.cols(); ++j) {
    const Vector n = f4.normals.col(j);
    // inward normals of the pyramid are (+-1, +-1, 1)/sqrt(3)
    CHECK(n[2] == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(std::abs(n[0]) == doctest::Approx(n[2]));
    CHECK(std::abs(n[1]) == doctest::Approx(n[2]));
  }

  const FacetList ray = facets(make_polycone({v2(1, 0)}));
  CHECK(ray.not_solid);
  CHECK(ray.pieces.size() == 1);

  std::vector<Vector> g5(5, Vector::Zero(5));
  for (int i = 0; i < 5; ++i) g5[static_cast<std::size_t>(i)][i] = 1;
  CHECK(kind_of([&] { facets(make_polycone(g5)); }) == ErrorKind::DimensionTooHigh);
}

TEST_CASE("facets cover the sampled boundary") {
  // Points on bd C are members of C that leave C under small perturbation.
  const PolyCone c = make_polycone({v3(1, 0, 1), v3(-1, 0, 1), v3(0, 1, 1), v3(0, -1, 1), v3(0.5, 0.5, 2)});
  const FacetList f = facets(c);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  int checked = 0;
  for (int s = 0; s < 4000 && checked < 200; ++s) {
    Vector x = v3(nd(rng), nd(rng), nd(rng)).normalized();
    if (!cone_membership(c, x, 1e-12)) continue;
    // Push x toward the boundary along a random direction by bisection.
    const Vector dir = v3(nd(rng), nd(rng), nd(rng)).normalized();
    double lo = 0, hi = 4;
    if (cone_membership(c, x + hi * dir, 1e-12)) continue;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (cone_membership(c, x + mid * dir, 1e-12) ? lo : hi) = mid;
    }
    const Vector b = x + lo * dir;
    bool on_facet = false;
    for (const PolyCone& p : f.pieces) on_facet = on_facet || cone_membership(p, b, 1e-6);
    CHECK(on_facet);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("dual_norm") {
  CHECK(dual_norm(v2(3, 4), NormKind::Euclidean) == doctest::Approx(5));
  CHECK(dual_norm(v2(3, -4), NormKind::L1) == doctest::Approx(4));
  CHECK(dual_norm(v2(3, -4), NormKind::Linf) == doctest::Approx(7));
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 100; ++i) {
    const Vector x = v3(nd(rng), nd(rng), nd(rng));
    const double n = dual_norm(x);
    CHECK(std::abs(n * n - (x[0] * x[0] + x[1] * x[1] + x[2] * x[2])) <= 4e-16 * n * n);
  }
}

TEST_CASE("norm axioms spot checks") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  for (NormKind k : {NormKind::Euclidean, NormKind::L1, NormKind::Linf}) {
    CHECK(norm_value(v3(0, 0, 0), k) == 0);
    for (int i = 0; i < 200; ++i) {
      const Vector x = v3(nd(rng), nd(rng), nd(rng));
      const Vector y = v3(nd(rng), nd(rng), nd(rng));
      CHECK(norm_value(x, k) > 0);
      CHECK(norm_value(2.5 * x, k) == doctest::Approx(2.5 * norm_value(x, k)));
      CHECK(norm_value(x + y, k) <= norm_value(x, k) + norm_value(y, k) + 1e-12);
    }
  }
}

TEST_CASE("nnls examples") {
  Matrix G(2, 2);
  G << 1, 0, 0, 1;
  NnlsResult r = nnls(G, v2(1, -1));
  CHECK(r.lambda.isApprox(v2(1, 0)));
  CHECK(r.residual == doctest::Approx(1));

  Matrix ray(2, 1);
  ray << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  r = nnls(ray, v2(1, 0));
  CHECK(r.lambda[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r.residual == doctest::Approx(1 / std::sqrt(2.0)));

  r = nnls(G, v2(2, 3));
  CHECK(r.lambda.isApprox(v2(2, 3)));
  CHECK(r.residual < 1e-14);
}
