#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "crv/orthgroup.hpp"
#include "crv/roots.hpp"

using namespace crv;

TEST_CASE("positive roots: count, norms, expansion oracle") {
  const auto& roots = positive_roots();
  REQUIRE(roots.size() == 36);

  std::set<E6Vec> distinct;
  for (const Root& r : roots) {
    CHECK(e6_pairing(r.v, r.v) == -2);
    CHECK(distinct.insert(r.v).second);
    CHECK(distinct.count(-1 * r.v) == 0);
  }

  // rebuild every root from its simple-basis expansion
  const auto& s = detail::simple_roots();
  for (const Root& r : roots) {
    auto c = detail::expand_in_simple(r.v);
    E6Vec acc{};
    for (int i = 0; i < 6; ++i) acc = acc + static_cast<int>(c[i]) * s[i];
    CHECK(acc == r.v);
    // positivity: all coefficients nonnegative
    for (long ci : c) CHECK(ci >= 0);
  }

  // the highest root in this simple order
  auto h = detail::expand_in_simple(root_top());
  CHECK(h == std::array<long, 6>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("labels and index lookups") {
  CHECK(positive_roots()[static_cast<std::size_t>(pair_root_index(1, 2))].label() == "H(1,2)");
  CHECK(positive_roots()[static_cast<std::size_t>(triple_root_index(3, 1, 2))].label() == "H(1,2,3)");
  CHECK(positive_roots()[static_cast<std::size_t>(root_index(root_top()))].label() == "H");
  CHECK(root_index(-1 * root_pair(2, 5)) == pair_root_index(2, 5));
  E6Vec junk{};
  junk.a[0] = 1;
  CHECK(root_index(junk) == -1);
}

TEST_CASE("projection intertwines the forms up to sign") {
  const auto& roots = positive_roots();
  for (const Root& r : roots) {
    F3Vec img = pi_map(r.v);
    CHECK(quadratic(img) == f3_norm(-e6_pairing(r.v, r.v)));
    CHECK(quadratic(img) == -1);  // boundary class
  }
  for (const Root& r : roots)
    for (const Root& t : roots)
      CHECK(bilinear(pi_map(r.v), pi_map(t.v)) == f3_norm(-e6_pairing(r.v, t.v)));
}

TEST_CASE("projection is a bijection onto boundary points") {
  std::set<int> hit;
  for (int r = 0; r < 36; ++r) hit.insert(root_boundary_point(r));
  CHECK(hit.size() == 36);
  for (int b = 0; b < 36; ++b) CHECK(root_boundary_point(boundary_point_root(b)) == b);
}

TEST_CASE("projection values on the defining simple system") {
  CHECK(pi_map(root_pair(1, 2)) == f3_vec(1, -1, 0, 0, 0));
  CHECK(pi_map(root_triple(1, 2, 3)) == f3_vec(0, 0, 0, 1, 1));
  CHECK(pi_map(root_pair(2, 3)) == f3_vec(0, 1, -1, 0, 0));
  CHECK(pi_map(root_pair(3, 4)) == f3_vec(0, 0, 1, -1, 0));
  CHECK(pi_map(root_pair(4, 5)) == f3_vec(0, 0, 0, 1, -1));
  CHECK(pi_map(root_pair(5, 6)) == f3_vec(1, 1, 1, 1, -1));
}

TEST_CASE("character monomials of the twelve positive D4 roots") {
  const auto& d4 = d4_positive_roots();
  REQUIRE(d4.size() == 12);

  std::map<std::string, MVec> by_name;
  for (const MVec& m : d4) by_name[char_monomial(m).str()] = m;

  CHECK(by_name.count("lambda"));
  CHECK(by_name.count("rho"));
  CHECK(by_name.count("nu"));
  CHECK(by_name.count("mu"));
  CHECK(by_name["lambda"] == MVec{1, -1, 0, 0});
  CHECK(by_name["mu"] == MVec{0, 0, 1, 1});
  CHECK(by_name["lambda mu nu rho^2"] == MVec{1, 1, 0, 0});
  CHECK(by_name["lambda nu rho"] == MVec{1, 0, 0, -1});
  CHECK(by_name.size() == 12);

  for (const MVec& m : d4) {
    CHECK(char_lattice_vec(char_monomial(m)) == m);
    CharMonomial c = char_monomial(m);
    for (int e : c.exp) CHECK(e >= 0);
  }
}

TEST_CASE("embedding of D4 roots into the positive roots") {
  // defining values
  CHECK(phi({1, -1, 0, 0}) == root_pair(2, 3));
  CHECK(phi({0, 1, -1, 0}) == root_pair(3, 4));
  CHECK(phi({0, 0, 1, -1}) == root_pair(4, 5));
  CHECK(phi({0, 0, 1, 1}) == root_triple(1, 2, 3));
  // a composite value
  CHECK(phi({0, 1, 0, 1}) == root_triple(1, 2, 4));

  std::set<int> images;
  for (const MVec& m : d4_positive_roots()) {
    int idx = root_index(phi(m));
    REQUIRE(idx >= 0);
    CHECK(phi(m) == positive_roots()[static_cast<std::size_t>(idx)].v);  // positive, not negated
    images.insert(idx);
  }
  CHECK(images.size() == 12);

  // isometry up to sign
  const auto& d4 = d4_positive_roots();
  for (const MVec& x : d4)
    for (const MVec& y : d4) {
      int dot = 0;
      for (int i = 0; i < 4; ++i) dot += x[i] * y[i];
      CHECK(e6_pairing(phi(x), phi(y)) == -dot);
    }
}

TEST_CASE("short and long vectors and their points") {
  const auto& S = short_rays();
  const auto& R = long_rays();
  REQUIRE(S.size() == 24);
  REQUIRE(R.size() == 24);

  // pinned values
  CHECK(boundary_vector({2, 0, 0, 0}) == f3_vec(1, 1, 0, 0, 0));
  CHECK(boundary_vector({2, 0, 0, 0}) == normalize(pi_map(root_triple(3, 4, 5))));
  CHECK(boundary_vector({1, -1, 1, -1}) == f3_vec(1, -1, 1, -1, 1));
  CHECK(boundary_vector({1, -1, 1, -1}) == normalize(pi_map(root_triple(2, 4, 6))));
  CHECK(cusp_vector({2, 2, 0, 0}) == f3_vec(1, -1, -1, 0, 0));
  CHECK(cusp_vector({2, -2, 0, 0}) == f3_vec(1, -1, 1, 0, 0));
  CHECK_THROWS(boundary_vector({2, 2, 0, 0}));
  CHECK_THROWS(cusp_vector({2, 0, 0, 0}));

  // the 24 short vectors give 24 distinct boundary points; together with the
  // images of the embedded D4 roots they exhaust all 36
  std::set<int> from_rays, from_roots;
  for (const NVec& t : S) {
    PointRef p = geometry().ref_of(boundary_vector(t));
    REQUIRE(p.cls == PointClass::Boundary);
    from_rays.insert(p.index);
  }
  CHECK(from_rays.size() == 24);
  for (const MVec& m : d4_positive_roots())
    from_roots.insert(root_boundary_point(root_index(phi(m))));
  CHECK(from_roots.size() == 12);
  for (int b : from_roots) CHECK(from_rays.count(b) == 0);

  // the 24 long vectors give 24 distinct cusps; the 16 remaining cusps are
  // exactly those whose first coordinate vanishes
  std::set<int> cusp_hits;
  for (const NVec& t : R) {
    PointRef p = geometry().ref_of(cusp_vector(t));
    REQUIRE(p.cls == PointClass::Cusp);
    cusp_hits.insert(p.index);
  }
  CHECK(cusp_hits.size() == 24);
  const auto& cusps = geometry().points(PointClass::Cusp);
  for (int i = 0; i < 40; ++i) {
    bool missing = cusp_hits.count(i) == 0;
    CHECK(missing == (cusps[static_cast<std::size_t>(i)][0] == 0));
  }
}

TEST_CASE("tritangent planes") {
  const auto& ts = tritangents();
  REQUIRE(ts.size() == 45);

  std::set<std::string> labels;
  std::set<int> points;
  const E6Vec anticanonical = [] {
    E6Vec k;
    k.a[0] = 3;
    for (int i = 1; i < 7; ++i) k.a[i] = -1;
    return k;
  }();

  for (const Tritangent& t : ts) {
    CHECK(labels.insert(t.label).second);
    CHECK(points.insert(t.point).second);
    // three pairwise meeting lines summing to the hyperplane class
    for (const E6Vec& L : t.lines) CHECK(e6_pairing(L, L) == -1);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        CHECK(e6_pairing(t.lines[static_cast<std::size_t>(a)],
                         t.lines[static_cast<std::size_t>(b)]) == 1);
    CHECK(t.lines[0] + t.lines[1] + t.lines[2] == anticanonical);
  }
  CHECK(points.size() == 45);

  // display order starts with the five unit points, descending slot
  const auto& tpts = geometry().points(PointClass::Tritangent);
  CHECK(tpts[static_cast<std::size_t>(ts[0].point)] == f3_vec(0, 0, 0, 0, 1));
  CHECK(tpts[static_cast<std::size_t>(ts[4].point)] == f3_vec(1, 0, 0, 0, 0));
  CHECK(ts[4].label == "(16)");
  CHECK(ts[0].label == "(56)");
}

TEST_CASE("cusp triads and bracket labels") {
  const auto& triads = cusp_triads();  // construction self-checks the schema
  REQUIRE(triads.size() == 40);

  int plus_type = 0;
  std::set<std::string> labels;
  for (const CuspTriad& t : triads) {
    plus_type += t.all_plus;
    CHECK(labels.insert(t.label).second);
  }
  CHECK(plus_type == 10);

  auto label_of = [](F3Vec v) {
    return cusp_triads()[static_cast<std::size_t>(geometry().ref_of(v).index)].label;
  };
  CHECK(label_of(f3_vec(0, 0, 1, 1, 1)) == "[126.345]");
  CHECK(label_of(f3_vec(1, 1, 1, 0, 0)) == "[123.456]");
  CHECK(label_of(f3_vec(1, -1, 0, -1, 0)) == "[24.35.16]");
  CHECK(label_of(f3_vec(1, -1, 1, 0, 0)) == "[13.45.26]");
  CHECK(label_of(f3_vec(1, 1, -1, 0, 0)) == "[12.45.36]");
  CHECK(label_of(f3_vec(0, 1, 1, 1, 0)) == "[156.234]");
}

TEST_CASE("divisor of the first coordinate character") {
  auto rays = divisor_of_lambda();
  REQUIRE(rays.size() == 48);

  // order along the divisor of a long vector: pinned value 2 on eps1 - eps2
  int nonzero = 0;
  std::map<PointRef, long> acc;
  for (const RayMultiplicity& r : rays) {
    if (r.tau == NVec{2, -2, 0, 0}) CHECK(r.n == 2);
    if (r.tau == NVec{2, 2, 0, 0}) CHECK(r.n == 0);
    if (r.tau == NVec{2, 0, 0, 0}) CHECK(r.n == 1);
    if (r.tau == NVec{0, 0, 2, 0}) CHECK(r.n == 0);
    if (r.tau == NVec{1, 1, 1, 1}) CHECK(r.n == 0);
    if (r.tau == NVec{1, -1, 1, 1}) CHECK(r.n == 1);
    nonzero += r.n != 0;
    if (r.n != 0) acc[r.point] += r.n;
  }
  CHECK(nonzero == 30);

  // the ray divisor equals E_v - E_w for the two distinguished cusps
  int v = geometry().ref_of(f3_vec(1, -1, 1, 0, 0)).index;
  int w = geometry().ref_of(f3_vec(1, 1, -1, 0, 0)).index;
  std::map<PointRef, long> expected = ev_class(v);
  for (const auto& [p, mult] : ev_class(w)) {
    expected[p] -= mult;
    if (expected[p] == 0) expected.erase(p);
  }
  CHECK(acc == expected);
}

TEST_CASE("symmetrized relations") {
  // E_v - E_w symmetrizes to zero outright
  int v = geometry().ref_of(f3_vec(1, -1, 1, 0, 0)).index;
  std::map<PointRef, long> d = ev_class(v);
  SymmetrizedClass sv = symmetrize(d);
  CHECK(sv.T == 0);
  CHECK(sv.B == ratio(9, 36));
  CHECK(sv.C == ratio(-13 + 3, 40));

  // E_v itself reduces to (B^ - C^)/4 in the eliminated presentation
  auto [b, c] = sv.bc_reduced();
  CHECK(b == ratio(1, 4));
  CHECK(c == ratio(-1, 4));

  // the function with divisor T + B - 6B' + 4C - 10C' symmetrizes to zero:
  // its coefficients satisfy the tritangent elimination identity exactly
  SymmetrizedClass lam1{ratio(1, 45), ratio(1 - 6, 36), ratio(4 - 10, 40)};
  auto [rb, rc] = lam1.bc_reduced();
  CHECK(rb == 0);
  CHECK(rc == 0);

  // canonical class recipe: 3 tritangents, -24 boundaries, -8 cusps
  SymmetrizedClass can{ratio(3, 45), ratio(-24, 36), ratio(-8, 40)};
  auto [kb, kc] = can.bc_reduced();
  CHECK(kb == ratio(-1, 4));
  CHECK(kc == ratio(1, 4));

  // hyperplane recipe: 1 tritangent, 4 boundaries, 24 cusps
  SymmetrizedClass hyp{ratio(1, 45), ratio(4, 36), ratio(24, 40)};
  auto [hb, hc] = hyp.bc_reduced();
  CHECK(hb == ratio(1, 4));
  CHECK(hc == ratio(3, 4));
}

TEST_CASE("projection intertwines reflections") {
  // s_a(b) = b + (a.b) a upstairs must match the mod-3 reflection at the
  // image point, applied as a matrix, with no sign adjustment at all
  const auto& roots = positive_roots();
  for (const Root& a : roots) {
    OrthMatrix s = reflection(pi_map(a.v));
    for (const Root& b : roots) {
      E6Vec moved = b.v + e6_pairing(b.v, a.v) * a.v;
      CHECK(pi_map(moved) == s.apply(pi_map(b.v)));
    }
  }
}
