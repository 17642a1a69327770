#include <numeric>
#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "crv/ledger.hpp"

using namespace crv;

namespace {

long sum(const std::vector<long>& v) {
  return std::accumulate(v.begin(), v.end(), 0L);
}

// independent oracle: a blow-up adds count * P_Z(t) * (t + ... + t^(c-1))
// to the rank generating polynomial
std::vector<long> poly_oracle(const std::vector<long>& amb,
                              const std::vector<long>& z, int count,
                              int codim) {
  std::vector<long> out = amb;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (int j = 1; j <= codim - 1; ++j) {
      std::size_t k = i + static_cast<std::size_t>(j);
      if (k < out.size()) out[k] += count * z[i];
    }
  return out;
}

}  // namespace

TEST_CASE("toy blow-ups") {
  VarietyState p3{"three-space", {1, 1, 1, 1}, 4};
  VarietyState once = blow_up(p3, {CenterKind::point, 1, {1}, 1, ""});
  CHECK(once.chow_ranks == std::vector<long>{1, 2, 2, 1});
  CHECK(once.euler == 6);

  VarietyState surf{"hexagon", {1, 4, 1}, 6};
  VarietyState bumped = blow_up(surf, {CenterKind::point, 1, {1}, 1, ""});
  CHECK(bumped.chow_ranks == std::vector<long>{1, 5, 1});
  CHECK(bumped.euler == 7);
}

TEST_CASE("contraction basics") {
  VarietyState x{"synthetic", {1, 20, 50, 20, 1}, 92};
  CenterData none{CenterKind::surface, 0, {1, 5, 1}, 7, ""};
  VarietyState same = contract(x, none);
  CHECK(same.chow_ranks == x.chow_ranks);
  CHECK(same.euler == x.euler);

  CenterData one{CenterKind::surface, 1, {1, 5, 1}, 7, ""};
  VarietyState less = contract(x, one);
  CHECK(x.chow_ranks[2] - less.chow_ranks[2] == 5);
  CHECK(less.chow_ranks == std::vector<long>{1, 19, 45, 19, 1});
  CHECK(less.euler == 85);
}

TEST_CASE("blow-up then contraction restores codimension one only") {
  VarietyState x{"synthetic", {1, 3, 4, 3, 1}, 12};
  VarietyState up = blow_up(x, {CenterKind::curve, 1, {1, 1}, 2, ""});
  CHECK(up.chow_ranks == std::vector<long>{1, 4, 6, 4, 1});

  // the exceptional divisor is ruled over a plane
  VarietyState down = contract(up, {CenterKind::surface, 1, {1, 1, 1}, 3, ""});
  CHECK(down.chow_ranks[1] == x.chow_ranks[1]);
  CHECK(down.chow_ranks[2] == x.chow_ranks[2] + 1);
}

TEST_CASE("rank updates agree with the generating-polynomial oracle") {
  std::mt19937 gen(23);
  std::uniform_int_distribution<int> small(0, 9);
  std::uniform_int_distribution<int> cnt(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = 2 + small(gen) % 4;  // ambient dimension 2..5
    std::vector<long> amb;
    for (int i = 0; i <= dim; ++i) amb.push_back(1 + small(gen));
    long chi = sum(amb);
    VarietyState x{"synthetic", amb, chi};

    CenterKind kind = static_cast<CenterKind>(small(gen) % 3);
    if (center_dim(kind) >= dim) kind = CenterKind::point;
    std::vector<long> z;
    if (kind == CenterKind::point) z = {1};
    if (kind == CenterKind::curve) z = {1, 1};
    if (kind == CenterKind::surface) z = {1, static_cast<long>(small(gen)), 1};
    CenterData c{kind, cnt(gen), z, sum(z), ""};

    VarietyState up = blow_up(x, c);
    int codim = dim - center_dim(kind);
    CHECK(up.chow_ranks == poly_oracle(amb, z, c.count, codim));
    CHECK(up.euler == chi + c.count * c.euler * (codim - 1));
    CHECK(up.euler == sum(up.chow_ranks));
  }
}

TEST_CASE("malformed centers are rejected") {
  VarietyState x{"synthetic", {1, 2, 2, 2, 1}, 8};
  CHECK_THROWS_AS(blow_up(x, {CenterKind::curve, 1, {1, 1}, 3, ""}),
                  std::invalid_argument);
  CHECK_THROWS_AS(blow_up(x, {CenterKind::surface, 1, {1, 5, 1}, 9, ""}),
                  std::invalid_argument);
  CHECK_THROWS_AS(blow_up(x, {CenterKind::point, 1, {1, 1}, 1, ""}),
                  std::invalid_argument);

  VarietyState surf{"surface", {1, 4, 1}, 6};
  CHECK_THROWS_AS(blow_up(surf, {CenterKind::surface, 1, {1, 4, 1}, 6, ""}),
                  std::invalid_argument);
  CHECK_THROWS_AS(contract(x, {CenterKind::curve, 1, {1, 1}, 2, ""}),
                  std::invalid_argument);
}

TEST_CASE("compactification pipeline hits every milestone") {
  LedgerTrace t = run_naruki_pipeline();
  REQUIRE(t.stages.size() == 5);

  const std::vector<std::vector<long>> expected_ranks = {
      {1, 44, 102, 44, 1},
      {1, 45, 103, 45, 1},
      {1, 57, 127, 57, 1},
      {1, 73, 207, 73, 1},
      {1, 61, 147, 61, 1},
  };
  const std::vector<long> expected_euler = {192, 195, 243, 355, 271};

  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const VarietyState& s = t.stages[i].state;
    CHECK(s.chow_ranks == expected_ranks[i]);
    CHECK(s.euler == expected_euler[i]);
    CHECK(s.chow_ranks.front() == 1);
    CHECK(s.chow_ranks.back() == 1);
    CHECK(s.chow_ranks[1] == s.chow_ranks[3]);
    CHECK(s.euler == sum(s.chow_ranks));
  }
}

TEST_CASE("divisor replay chains") {
  VarietyState b = boundary_divisor_replay();
  CHECK(b.chow_ranks == std::vector<long>{1, 16, 16, 1});
  CHECK(b.euler == 34);
  CHECK(b.euler == 4 + 5 * 2 + 10 * 2);

  VarietyState t = tritangent_divisor_replay();
  CHECK(t.chow_ranks == std::vector<long>{1, 29, 29, 1});
  CHECK(t.euler == 60);
  CHECK(t.euler == 4 + 12 * 2 + 16 * 2);
}
