#pragma once

// Exact integer and rational arithmetic, plus fraction-free rank computation.

#include <gmpxx.h>

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace crv {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational ratio(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
  }

  static ExactMatrix from_int_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
        throw std::invalid_argument("from_int_rows: ragged input");
      for (int j = 0; j < m.cols_; ++j)
        m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigRational& at(int i, int j) {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  }
  const BigRational& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<BigRational> data_;
};

namespace detail {

// Clear denominators row by row; row scaling preserves rank.
inline std::vector<std::vector<BigInt>> integerized(const ExactMatrix& m) {
  std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(m.rows()),
                                       std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    BigInt lcm = 1;
    for (int j = 0; j < m.cols(); ++j) {
      BigInt den = m.at(i, j).get_den();
      lcm = ::lcm(lcm, den);
    }
    for (int j = 0; j < m.cols(); ++j) {
      const BigRational& x = m.at(i, j);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x.get_num() * (lcm / x.get_den());
    }
  }
  return out;
}

// Fraction-free Bareiss elimination on integer rows; returns the rank.
// Pivots are chosen deterministically: leftmost column, topmost nonzero row.
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    const std::vector<BigInt>& prow = m[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      std::vector<BigInt>& row = m[static_cast<std::size_t>(r)];
      for (int k = c + 1; k < cols; ++k) {
        BigInt t = prow[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(k)] -
                   row[static_cast<std::size_t>(c)] * prow[static_cast<std::size_t>(k)];
        // Bareiss guarantees exact divisibility by the previous pivot.
        assert(t % prev == 0);
        row[static_cast<std::size_t>(k)] = t / prev;
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = prow[static_cast<std::size_t>(c)];
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline int rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::bareiss_rank(detail::integerized(m));
}

inline int rank_int(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<BigInt>> m(rows.size(),
                                     std::vector<BigInt>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m[i][j] = rows[i][j];
  return detail::bareiss_rank(std::move(m));
}

// Horner evaluation; coeffs[k] multiplies x^k.
inline BigRational polynomial_eval(const std::vector<BigRational>& coeffs,
                                   const BigRational& x) {
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace crv
