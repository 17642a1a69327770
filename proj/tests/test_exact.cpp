#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "crv/exact.hpp"

using crv::BigRational;
using crv::ExactMatrix;
using crv::ratio;

namespace {

// Oracle: straightforward rational row reduction, no fraction-free tricks.
int gauss_rank(std::vector<std::vector<BigRational>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Oracle: 3x3 determinant by cofactor expansion.
BigRational det3(const std::vector<std::vector<BigRational>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ExactMatrix from_rows(const std::vector<std::vector<BigRational>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("rational constructor and printing") {
  CHECK(crv::to_string(ratio(6, 4)) == "3/2");
  CHECK(crv::to_string(ratio(-6, 4)) == "-3/2");
  CHECK(crv::to_string(ratio(6, -4)) == "-3/2");
  CHECK(crv::to_string(ratio(0, 7)) == "0");
  CHECK(crv::to_string(ratio(5)) == "5");
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("rank of the triangle pairing block") {
  std::vector<std::vector<BigRational>> rows = {
      {ratio(0), ratio(-1), ratio(-1)},
      {ratio(-1), ratio(0), ratio(-1)},
      {ratio(-1), ratio(-1), ratio(0)}};
  REQUIRE(det3(rows) == ratio(-2));
  REQUIRE(gauss_rank(rows) == 3);
  CHECK(crv::rank(from_rows(rows)) == 3);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
  std::mt19937 rng(20240816);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> dim(1, 12);

  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    std::vector<std::vector<BigRational>> rows(
        static_cast<std::size_t>(r), std::vector<BigRational>(static_cast<std::size_t>(c)));
    for (auto& row : rows)
      for (auto& x : row) x = ratio(num(rng), den(rng));
    ExactMatrix m = from_rows(rows);
    int expected = gauss_rank(rows);
    CHECK(crv::rank(m) == expected);
    CHECK(crv::rank(m.transposed()) == expected);
  }
}

TEST_CASE("rank of a deliberate product is bounded by the inner dimension") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 9, inner = 3;
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(inner));
    std::vector<std::vector<BigRational>> b(inner, std::vector<BigRational>(n));
    for (auto& row : a)
      for (auto& x : row) x = ratio(num(rng));
    for (auto& row : b)
      for (auto& x : row) x = ratio(num(rng));
    std::vector<std::vector<BigRational>> prod(n, std::vector<BigRational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < inner; ++k)
          prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    int rk = crv::rank(from_rows(prod));
    CHECK(rk <= inner);
    CHECK(rk == gauss_rank(prod));
  }
}

TEST_CASE("integer rank helper") {
  CHECK(crv::rank_int({{1, 2}, {2, 4}}) == 1);
  CHECK(crv::rank_int({{1, 0, 0}, {0, 0, 0}, {0, 0, 5}}) == 2);
  CHECK(crv::rank_int({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("polynomial evaluation matches the power-sum oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<BigRational> coeffs;
    int deg = trial % 6;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(ratio(num(rng), den(rng)));
    BigRational x = ratio(num(rng), den(rng));
    BigRational expected = 0, p = 1;
    for (const BigRational& c : coeffs) {
      expected += c * p;
      p *= x;
    }
    CHECK(crv::polynomial_eval(coeffs, x) == expected);
  }
}
