#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "crv/fgeom.hpp"

using namespace crv;

namespace {

// Oracle: enumerate every nonzero vector of F3^5 with raw modular arithmetic.
struct BruteCounts {
  int q0 = 0, q1 = 0, q2 = 0;  // counts of vectors with q = 0, 1, 2 (mod 3)
};

BruteCounts brute_counts() {
  BruteCounts b;
  for (int code = 1; code < 243; ++code) {
    int t = code, q = 0;
    bool zero = true;
    for (int i = 0; i < 5; ++i) {
      int digit = t % 3;  // plain residues 0,1,2
      t /= 3;
      if (digit != 0) zero = false;
      q += digit * digit;
    }
    if (zero) continue;
    switch (q % 3) {
      case 0: ++b.q0; break;
      case 1: ++b.q1; break;
      case 2: ++b.q2; break;
    }
  }
  return b;
}

}  // namespace

TEST_CASE("class sizes match the brute enumeration") {
  BruteCounts b = brute_counts();
  REQUIRE(b.q0 == 80);
  REQUIRE(b.q1 == 90);
  REQUIRE(b.q2 == 72);

  const Geometry& g = geometry();
  CHECK(g.count(PointClass::Cusp) == b.q0 / 2);
  CHECK(g.count(PointClass::Tritangent) == b.q1 / 2);
  CHECK(g.count(PointClass::Boundary) == b.q2 / 2);
  CHECK(g.total() == 121);
  CHECK(g.total() == (243 - 1) / 2);
}

TEST_CASE("representatives are normalized, sorted and dedicated") {
  const Geometry& g = geometry();
  std::set<F3Vec> seen;
  for (PointClass c : {PointClass::Cusp, PointClass::Tritangent, PointClass::Boundary}) {
    const auto& pts = g.points(c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const F3Vec& v = pts[i];
      CHECK(normalize(v) == v);
      CHECK(seen.insert(v).second);
      CHECK(seen.count(negate(v)) == 0);
      if (i > 0) CHECK(pts[i - 1] < v);
      // both representatives resolve to the same point
      CHECK(g.ref_of(v) == PointRef{c, static_cast<int>(i)});
      CHECK(g.ref_of(negate(v)) == PointRef{c, static_cast<int>(i)});
    }
  }
  CHECK(seen.size() == 121);
}

TEST_CASE("cusp vectors have exactly three nonzero entries") {
  for (const F3Vec& v : geometry().points(PointClass::Cusp)) {
    int nz = 0;
    for (int i = 0; i < 5; ++i) nz += v[i] != 0;
    CHECK(nz == 3);
  }
}

TEST_CASE("tritangent vectors are units or have exactly one zero") {
  int units = 0, one_zero = 0;
  for (const F3Vec& v : geometry().points(PointClass::Tritangent)) {
    int nz = 0;
    for (int i = 0; i < 5; ++i) nz += v[i] != 0;
    if (nz == 1)
      ++units;
    else if (nz == 4)
      ++one_zero;
  }
  CHECK(units == 5);
  CHECK(one_zero == 40);
}

TEST_CASE("form basics") {
  F3Vec a = f3_vec(1, -1, 1, 0, 0);
  F3Vec b = f3_vec(0, 1, 1, 1, 0);
  CHECK(bilinear(a, b) == f3_norm(-1 + 1));
  CHECK(bilinear(a, b) == bilinear(b, a));
  CHECK(quadratic(a) == 0);
  CHECK(f3_norm(5) == -1);
  CHECK(f3_norm(-5) == 1);
  CHECK(f3_norm(6) == 0);
  CHECK(show(a) == "(1,-1,1,0,0)");
  CHECK_THROWS(normalize(f3_vec(0, 0, 0, 0, 0)));
  CHECK(normalize(f3_vec(0, -1, 1, 0, 1)) == f3_vec(0, 1, -1, 0, -1));
}

TEST_CASE("perpendicularity profiles are constant per class") {
  const Geometry& g = geometry();

  const PerpProfile cusp_profile{13, 18, 9};
  const PerpProfile trit_profile{16, 12, 12};
  const PerpProfile bdry_profile{10, 15, 15};

  for (int i = 0; i < g.count(PointClass::Cusp); ++i)
    CHECK(g.perp_profile({PointClass::Cusp, i}) == cusp_profile);
  for (int i = 0; i < g.count(PointClass::Tritangent); ++i)
    CHECK(g.perp_profile({PointClass::Tritangent, i}) == trit_profile);
  for (int i = 0; i < g.count(PointClass::Boundary); ++i)
    CHECK(g.perp_profile({PointClass::Boundary, i}) == bdry_profile);

  // a cusp is isotropic, hence counts itself; the other classes do not
  F3Vec c = g.points(PointClass::Cusp)[0];
  CHECK(g.perp(c, c));
  F3Vec t = g.points(PointClass::Tritangent)[0];
  CHECK(!g.perp(t, t));
}
