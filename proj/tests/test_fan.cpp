#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "crv/exact.hpp"
#include "crv/roots.hpp"
#include "crv/toricfan.hpp"

using namespace crv;

namespace {

int ray_index_of(const NVec& doubled) {
  auto pts = weyl_ray_points();
  auto it = std::find(pts.begin(), pts.end(), doubled);
  REQUIRE(it != pts.end());
  return static_cast<int>(it - pts.begin());
}

Fan p1_fan() {
  Fan f;
  f.rank = 1;
  f.rays = {{1}, {-1}};
  f.max_cones = {{0}, {1}};
  return f;
}

Fan p1_cubed_fan() {
  Fan f;
  f.rank = 3;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      LVec r(3, 0);
      r[static_cast<std::size_t>(i)] = s;
      f.rays.push_back(r);
    }
  // octants: one of {+i, -i} per axis
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> cone;
    for (int i = 0; i < 3; ++i) cone.push_back(2 * i + ((mask >> i) & 1));
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(cone);
  }
  return f;
}

}  // namespace

TEST_CASE("toy fans calibrate the rank formulas") {
  Fan p1 = p1_fan();
  CHECK(f_vector(p1) == std::vector<long>{1, 2});
  CHECK(chow_ranks(p1) == std::vector<long>{1, 1});
  CHECK(is_smooth(p1));

  Fan p3 = p1_cubed_fan();
  CHECK(f_vector(p3) == std::vector<long>{1, 6, 12, 8});
  CHECK(chow_ranks(p3) == std::vector<long>{1, 3, 3, 1});
  CHECK(is_smooth(p3));
}

TEST_CASE("chamber fan has the expected shape") {
  const Fan& f = weyl_fan();
  CHECK(f.rank == 4);
  CHECK(f.rays.size() == 48);
  CHECK(f.max_cones.size() == 192);
  CHECK(is_smooth(f));

  std::vector<long> d = f_vector(f);

  // combinatorial cross-checks before pinning the values: the boundary is a
  // 3-sphere, and every facet separates exactly two chambers
  CHECK(d[1] - d[2] + d[3] - d[4] == 0);
  CHECK(d[3] * 2 == d[4] * 4);

  CHECK(d == std::vector<long>{1, 48, 240, 384, 192});

  std::vector<long> b = chow_ranks(f);
  CHECK(std::accumulate(b.begin(), b.end(), 0L) ==
        static_cast<long>(f.max_cones.size()));
  CHECK(b == std::vector<long>{1, 44, 102, 44, 1});
}

TEST_CASE("generic points land in exactly one chamber") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  std::vector<LVec> pts;
  while (pts.size() < 10000) {
    std::array<int, 4> x{dist(gen), dist(gen), dist(gen), dist(gen)};
    std::set<int> mags;
    bool ok = true;
    for (int v : x) ok = ok && v != 0 && mags.insert(std::abs(v)).second;
    if (!ok) continue;
    NVec doubled{2 * x[0], 2 * x[1], 2 * x[2], 2 * x[3]};
    auto c = n_basis_coords(doubled);
    pts.push_back({c[0], c[1], c[2], c[3]});
  }
  auto counts = membership_counts(weyl_fan(), pts);
  CHECK(std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; }));
}

TEST_CASE("star of a long ray is a triple product of lines") {
  Fan star = star_fan(weyl_fan(), ray_index_of(NVec{2, 0, 2, 0}));
  CHECK(star.rays.size() == 6);
  CHECK(star.max_cones.size() == 8);
  CHECK(is_smooth(star));
  CHECK(f_vector(star) == std::vector<long>{1, 6, 12, 8});
  CHECK(chow_ranks(star) == std::vector<long>{1, 3, 3, 1});

  // rays pair off antipodally
  std::set<LVec> rays(star.rays.begin(), star.rays.end());
  int pairs = 0;
  for (const LVec& r : rays) {
    LVec neg = r;
    for (long& v : neg) v = -v;
    if (rays.count(neg) && r < neg) ++pairs;
  }
  CHECK(pairs == 3);

  // every long ray looks the same
  for (const NVec& t : long_rays()) {
    Fan s = star_fan(weyl_fan(), ray_index_of(t));
    CHECK(f_vector(s) == std::vector<long>{1, 6, 12, 8});
  }
}

TEST_CASE("star of a short ray") {
  Fan star = star_fan(weyl_fan(), ray_index_of(NVec{2, 0, 0, 0}));
  CHECK(star.rays.size() == 14);
  CHECK(is_smooth(star));
  std::vector<long> b = chow_ranks(star);
  CHECK(b == std::vector<long>{1, 11, 11, 1});
  CHECK(std::accumulate(b.begin(), b.end(), 0L) ==
        static_cast<long>(star.max_cones.size()));

  // unit and half rays are interchangeable under the chamber symmetries
  for (const NVec& t : short_rays()) {
    Fan s = star_fan(weyl_fan(), ray_index_of(t));
    CHECK(s.rays.size() == 14);
    CHECK(chow_ranks(s) == std::vector<long>{1, 11, 11, 1});
  }
}

TEST_CASE("surface fans are hexagons") {
  const auto& surf = a2_surfaces();
  REQUIRE(surf.size() == 16);
  for (int i = 0; i < 16; ++i) {
    Fan sf = surface_fan(i);
    CHECK(sf.rays.size() == 6);
    CHECK(sf.max_cones.size() == 6);
    CHECK(is_smooth(sf));
    CHECK(chow_ranks(sf) == std::vector<long>{1, 4, 1});
  }
}

TEST_CASE("plane generators really span the character kernels") {
  for (const auto& s : a2_surfaces()) {
    auto [p1, p2] = plane_of_characters(s.a, s.b);
    for (const NVec& p : {p1, p2}) {
      CHECK(pairing_mn(s.a, p) == 0);
      CHECK(pairing_mn(s.b, p) == 0);
    }
  }
}

TEST_CASE("non-saturated plane is rejected") {
  // e1+e2 and e1-e2 span an index-2 sublattice of their saturation
  CHECK_THROWS_AS(
      subtorus_closure_fan(weyl_fan(), NVec{2, 2, 0, 0}, NVec{2, -2, 0, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(plane_of_characters(MVec{1, -1, 0, 0}, MVec{-1, 1, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("character divisors") {
  const MVec lambda{1, -1, 0, 0};
  const MVec mu{0, 0, 1, 1};

  auto n_lambda = character_divisor(lambda);
  auto rows = divisor_of_lambda();
  REQUIRE(n_lambda.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(n_lambda[i] == rows[i].n);

  auto zero = character_divisor(MVec{0, 0, 0, 0});
  CHECK(std::all_of(zero.begin(), zero.end(), [](int n) { return n == 0; }));

  // mu flips sign with the ray
  auto pts = weyl_ray_points();
  std::map<NVec, std::size_t> where;
  for (std::size_t i = 0; i < pts.size(); ++i) where[pts[i]] = i;
  auto n_mu = character_divisor(mu);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    NVec neg = pts[i];
    for (int& v : neg) v = -v;
    CHECK(n_mu[i] == -n_mu[where.at(neg)]);
  }
}

TEST_CASE("character divisors are principal") {
  // the divisor of any character lies in the row span of the four basis rows
  const std::vector<MVec> basis = {
      {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  std::vector<std::vector<long>> m;
  for (const MVec& ch : basis) {
    std::vector<long> row;
    for (int n : character_divisor(ch)) row.push_back(n);
    m.push_back(std::move(row));
  }
  REQUIRE(rank_int(m) == 4);

  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    MVec ch{};
    for (int i = 0; i < 4; ++i) {
      int c = coef(gen);
      for (int j = 0; j < 4; ++j) ch[j] += c * basis[static_cast<std::size_t>(i)][j];
    }
    auto with = m;
    std::vector<long> row;
    for (int n : character_divisor(ch)) row.push_back(n);
    with.push_back(std::move(row));
    CHECK(rank_int(with) == 4);
  }
}
