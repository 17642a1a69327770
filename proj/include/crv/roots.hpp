#pragma once

// E6 root system in the Picard-lattice model and its reduction to F3^5.
//
// Lattice: Z<l, e1..e6> with intersection form diag(1,-1,...,-1).
// Positive roots (36):
//   H(i,j)   = e_i - e_j             (i<j)   15
//   H(i,j,k) = l - e_i - e_j - e_k   (i<j<k) 20
//   H        = 2l - e_1 - ... - e_6           1
// The projection pi to F3^5 is fixed on the simple system
//   (H(1,2), H(1,2,3), H(2,3), H(3,4), H(4,5), H(5,6))
// and extended linearly; it sends root lines bijectively onto the 36
// boundary points and intertwines forms up to sign: b(pi x, pi y) = -(x.y).
//
// The D4 side: N = Z^4 + Z(1,1,1,1)/2 (coordinates are stored doubled), with
// the 24 short vectors S (8 units, 16 half vectors) naming boundary divisors
// and the 24 long vectors R naming cusp divisors. M = dual of N = the D4 root
// lattice, with character basis lambda = e1-e2, rho = e2-e3, nu = e3-e4,
// mu = e3+e4 and embedding Phi into E6 fixed by
//   Phi(lambda) = H(2,3), Phi(rho) = H(3,4), Phi(nu) = H(4,5),
//   Phi(mu) = H(1,2,3).
//
// Tritangents: the 45 planes (ij) = <a_i, b_j, c_ij> and (ij.kl.mn) =
// <c_ij, c_kl, c_mn>; each determines the unique tritangent point of F3^5
// perpendicular to the images of the 24 roots orthogonal to its three lines.
//
// Cusps: for each cusp point v the nine boundary roots perpendicular to v
// split into three mutually perpendicular A2 triples; the partition carries a
// bracket label ([ijk.lmn] when H occurs, [ij.kl.mn] otherwise) whose
// formatting rules are validated against the triple schema they denote.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crv/exact.hpp"
#include "crv/fgeom.hpp"

namespace crv {

// ---------------------------------------------------------------- E6 lattice

struct E6Vec {
  std::array<int, 7> a{};  // (l, e1..e6)

  friend E6Vec operator+(const E6Vec& x, const E6Vec& y) {
    E6Vec r;
    for (int i = 0; i < 7; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend E6Vec operator-(const E6Vec& x, const E6Vec& y) {
    E6Vec r;
    for (int i = 0; i < 7; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend E6Vec operator*(int c, const E6Vec& x) {
    E6Vec r;
    for (int i = 0; i < 7; ++i) r.a[i] = c * x.a[i];
    return r;
  }
  friend bool operator==(const E6Vec&, const E6Vec&) = default;
  friend auto operator<=>(const E6Vec&, const E6Vec&) = default;
};

inline int e6_pairing(const E6Vec& x, const E6Vec& y) {
  int s = x.a[0] * y.a[0];
  for (int i = 1; i < 7; ++i) s -= x.a[i] * y.a[i];
  return s;
}

enum class RootKind : uint8_t { Pair, Triple, Top };

struct Root {
  RootKind kind;
  std::array<int, 3> idx;  // 1-based; unused slots 0
  E6Vec v;

  std::string label() const {
    switch (kind) {
      case RootKind::Pair:
        return "H(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + ")";
      case RootKind::Triple:
        return "H(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
               std::to_string(idx[2]) + ")";
      case RootKind::Top:
        return "H";
    }
    return "?";
  }
};

inline E6Vec root_pair(int i, int j) {
  E6Vec v;
  v.a[i] = 1;
  v.a[j] = -1;
  return v;
}

inline E6Vec root_triple(int i, int j, int k) {
  E6Vec v;
  v.a[0] = 1;
  v.a[i] = v.a[j] = v.a[k] = -1;
  return v;
}

inline E6Vec root_top() {
  E6Vec v;
  v.a[0] = 2;
  for (int i = 1; i < 7; ++i) v.a[i] = -1;
  return v;
}

// Fixed enumeration: 15 pair roots, 20 triple roots, then H.
inline const std::vector<Root>& positive_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> r;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        r.push_back({RootKind::Pair, {i, j, 0}, root_pair(i, j)});
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k)
          r.push_back({RootKind::Triple, {i, j, k}, root_triple(i, j, k)});
    r.push_back({RootKind::Top, {0, 0, 0}, root_top()});
    return r;
  }();
  return roots;
}

// Index of r or -r among the positive roots; -1 if neither.
inline int root_index(const E6Vec& v) {
  static const std::map<E6Vec, int> table = [] {
    std::map<E6Vec, int> t;
    const auto& roots = positive_roots();
    for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
      t[roots[i].v] = i;
      t[-1 * roots[i].v] = i;
    }
    return t;
  }();
  auto it = table.find(v);
  return it == table.end() ? -1 : it->second;
}

inline int pair_root_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return root_index(root_pair(i, j));
}

inline int triple_root_index(int i, int j, int k) {
  int s[3] = {i, j, k};
  std::sort(s, s + 3);
  return root_index(root_triple(s[0], s[1], s[2]));
}

// ------------------------------------------------------------ the projection

namespace detail {

// Simple system used to define pi, in this order.
inline const std::array<E6Vec, 6>& simple_roots() {
  static const std::array<E6Vec, 6> s = {
      root_pair(1, 2), root_triple(1, 2, 3), root_pair(2, 3),
      root_pair(3, 4), root_pair(4, 5),      root_pair(5, 6)};
  return s;
}

// Coefficients of x in the simple basis, via the inverse Gram matrix.
inline std::array<long, 6> expand_in_simple(const E6Vec& x) {
  static const std::vector<std::vector<BigRational>> ginv = [] {
    const auto& s = simple_roots();
    // Gauss-Jordan inverse of the 6x6 Gram matrix.
    std::vector<std::vector<BigRational>> m(6, std::vector<BigRational>(12));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) m[i][j] = ratio(e6_pairing(s[i], s[j]));
      m[i][6 + i] = 1;
    }
    for (int c = 0; c < 6; ++c) {
      int p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      BigRational d = m[c][c];
      for (int j = 0; j < 12; ++j) m[c][j] /= d;
      for (int i = 0; i < 6; ++i) {
        if (i == c || m[i][c] == 0) continue;
        BigRational f = m[i][c];
        for (int j = 0; j < 12; ++j) m[i][j] -= f * m[c][j];
      }
    }
    std::vector<std::vector<BigRational>> inv(6, std::vector<BigRational>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) inv[i][j] = m[i][6 + j];
    return inv;
  }();

  const auto& s = simple_roots();
  std::array<long, 6> out{};
  for (int i = 0; i < 6; ++i) {
    BigRational c = 0;
    for (int j = 0; j < 6; ++j) c += ginv[i][j] * e6_pairing(s[j], x);
    if (c.get_den() != 1)
      throw std::logic_error("expand_in_simple: not in the root lattice");
    out[i] = c.get_num().get_si();
  }
  return out;
}

}  // namespace detail

// pi on the simple system; extended linearly over the root lattice.
inline F3Vec pi_map(const E6Vec& x) {
  static const std::array<F3Vec, 6> img = {
      f3_vec(1, -1, 0, 0, 0), f3_vec(0, 0, 0, 1, 1),  f3_vec(0, 1, -1, 0, 0),
      f3_vec(0, 0, 1, -1, 0), f3_vec(0, 0, 0, 1, -1), f3_vec(1, 1, 1, 1, -1)};
  auto c = detail::expand_in_simple(x);
  int acc[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 5; ++k) acc[k] += static_cast<int>(c[i]) * img[i][k];
  return f3_vec(acc[0], acc[1], acc[2], acc[3], acc[4]);
}

// Boundary point index of a root line.
inline int root_boundary_point(int root_idx) {
  static const std::vector<int> table = [] {
    std::vector<int> t;
    for (const Root& r : positive_roots()) {
      PointRef p = geometry().ref_of(pi_map(r.v));
      if (p.cls != PointClass::Boundary)
        throw std::logic_error("pi image of a root is not a boundary point");
      t.push_back(p.index);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(root_idx)];
}

// Inverse of the bijection above: boundary point index -> root index.
inline int boundary_point_root(int boundary_idx) {
  static const std::vector<int> table = [] {
    std::vector<int> t(36, -1);
    for (int r = 0; r < 36; ++r) {
      int b = root_boundary_point(r);
      if (t[static_cast<std::size_t>(b)] != -1)
        throw std::logic_error("pi not injective on root lines");
      t[static_cast<std::size_t>(b)] = r;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(boundary_idx)];
}

// ------------------------------------------------------------------- D4 side

using MVec = std::array<int, 4>;  // character lattice, coordinates in e1..e4
using NVec = std::array<int, 4>;  // one-parameter lattice, coordinates DOUBLED

inline int pairing_mn(const MVec& m, const NVec& tau_doubled) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += m[i] * tau_doubled[i];
  if (s % 2 != 0) throw std::logic_error("pairing_mn: not integral");
  return s / 2;
}

// Positive D4 roots in the order used by the boundary table:
// (i,j) = (3,4),(2,4),(2,3),(1,4),(1,3),(1,2), each e_i+e_j before e_i-e_j.
inline const std::vector<MVec>& d4_positive_roots() {
  static const std::vector<MVec> roots = [] {
    std::vector<MVec> r;
    constexpr int pairs[6][2] = {{3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}};
    for (auto [i, j] : pairs) {
      MVec plus{}, minus{};
      plus[i - 1] = 1;
      plus[j - 1] = 1;
      minus[i - 1] = 1;
      minus[j - 1] = -1;
      r.push_back(plus);
      r.push_back(minus);
    }
    return r;
  }();
  return roots;
}

// Exponents (a,b,c,d) with m = a*lambda + b*rho + c*nu + d*mu.
struct CharMonomial {
  std::array<int, 4> exp{};  // lambda, rho, nu, mu

  int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }

  std::string str() const {
    // factors printed alphabetically: lambda, mu, nu, rho
    static constexpr int order[4] = {0, 3, 2, 1};
    static const char* names[4] = {"lambda", "mu", "nu", "rho"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
      int e = exp[order[k]];
      if (e == 0) continue;
      if (!s.empty()) s += " ";
      s += names[k];
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

  friend auto operator<=>(const CharMonomial&, const CharMonomial&) = default;
};

inline CharMonomial char_monomial(const MVec& m) {
  // lambda = e1-e2, rho = e2-e3, nu = e3-e4, mu = e3+e4. Solve by hand:
  // a = m1, b = m1+m2, c = (m1+m2+m3-m4)/2, d = (m1+m2+m3+m4)/2.
  CharMonomial c;
  c.exp[0] = m[0];
  c.exp[1] = m[0] + m[1];
  int t = m[0] + m[1] + m[2];
  if ((t - m[3]) % 2 != 0)
    throw std::invalid_argument("char_monomial: not in the root lattice");
  c.exp[2] = (t - m[3]) / 2;
  c.exp[3] = (t + m[3]) / 2;
  return c;
}

inline MVec char_lattice_vec(const CharMonomial& c) {
  // inverse of char_monomial
  MVec m{};
  auto add = [&m](int coeff, std::array<int, 4> v) {
    for (int i = 0; i < 4; ++i) m[i] += coeff * v[i];
  };
  add(c.exp[0], {1, -1, 0, 0});
  add(c.exp[1], {0, 1, -1, 0});
  add(c.exp[2], {0, 0, 1, -1});
  add(c.exp[3], {0, 0, 1, 1});
  return m;
}

// D4 -> E6 on the character basis.
inline E6Vec phi(const MVec& m) {
  CharMonomial c = char_monomial(m);
  return c.exp[0] * root_pair(2, 3) + c.exp[1] * root_pair(3, 4) +
         c.exp[2] * root_pair(4, 5) + c.exp[3] * root_triple(1, 2, 3);
}

// Short vectors S: units eps4, -eps4, ..., eps1, -eps1; then the sixteen
// half vectors (s1 s2 s3 s4)/2 in binary order with "-" before "+".
inline const std::vector<NVec>& short_rays() {
  static const std::vector<NVec> rays = [] {
    std::vector<NVec> r;
    for (int i = 4; i >= 1; --i) {
      NVec p{};
      p[i - 1] = 2;
      r.push_back(p);
      p[i - 1] = -2;
      r.push_back(p);
    }
    for (int bits = 0; bits < 16; ++bits) {
      NVec p;
      for (int i = 0; i < 4; ++i) p[i] = (bits >> (3 - i)) & 1 ? 1 : -1;
      r.push_back(p);
    }
    return r;
  }();
  return rays;
}

// Long vectors R: pairs (3,4),(2,4),(2,3),(1,4),(1,3),(1,2); signs --, -+, +-, ++.
inline const std::vector<NVec>& long_rays() {
  static const std::vector<NVec> rays = [] {
    std::vector<NVec> r;
    constexpr int pairs[6][2] = {{3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}};
    for (auto [i, j] : pairs)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          NVec p{};
          p[i - 1] = si;
          p[j - 1] = sj;
          r.push_back(p);
        }
    return r;
  }();
  return rays;
}

inline bool is_short_ray(const NVec& t) {
  int n = 0;
  for (int i = 0; i < 4; ++i) n += t[i] * t[i];
  return n == 4;  // doubled norm 4 <-> actual norm 1
}

// Reduction N -> F3^4 (1/2 = 2 mod 3), placed in slots 2..5 after a leading 1.
namespace detail {
inline F3Vec with_leading_one(const NVec& t, int sign) {
  int c[5] = {1, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) c[i + 1] = f3_norm(sign * 2 * t[i]);
  return f3_vec(c[0], c[1], c[2], c[3], c[4]);
}
}  // namespace detail

// Boundary point attached to a short vector: f1 + (tau mod 3).
inline F3Vec boundary_vector(const NVec& tau) {
  if (!is_short_ray(tau)) throw std::invalid_argument("boundary_vector: not short");
  return detail::with_leading_one(tau, +1);
}

// Cusp point attached to a long vector: f1 - (tau mod 3).
inline F3Vec cusp_vector(const NVec& tau) {
  if (is_short_ray(tau)) throw std::invalid_argument("cusp_vector: not long");
  return detail::with_leading_one(tau, -1);
}

// ---------------------------------------------------------------- tritangents

struct Tritangent {
  std::string label;          // "(16)" or "(12.34.56)"
  std::array<E6Vec, 3> lines;
  int point;                  // tritangent point index
};

namespace detail {

inline E6Vec line_a(int i) {
  E6Vec v;
  v.a[i] = 1;
  return v;
}
inline E6Vec line_b(int j) {
  E6Vec v;
  v.a[0] = 2;
  for (int i = 1; i < 7; ++i) v.a[i] = -1;
  v.a[j] += 1;
  return v;
}
inline E6Vec line_c(int i, int j) {
  E6Vec v;
  v.a[0] = 1;
  v.a[i] = v.a[j] = -1;
  return v;
}

// Rank of a small F3 matrix (rows of F3Vec), optionally returning a kernel
// vector of the associated bilinear conditions sum_i row_i[k] z_k = 0.
inline int f3_rank(std::vector<F3Vec> rows) {
  int rank = 0;
  for (int c = 0; c < 5 && rank < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[rank]);
    if (rows[rank][c] == -1) rows[rank] = negate(rows[rank]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      int f = rows[i][c];
      for (int k = 0; k < 5; ++k)
        rows[i][k] = static_cast<int8_t>(f3_norm(rows[i][k] - f * rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Unique (projective) solution z of b(w, z) = 0 for all w in rows, assuming
// the rows span a 4-dimensional space.
inline F3Vec f3_perp_line(const std::vector<F3Vec>& rows) {
  for (int code = 1; code < 243; ++code) {
    F3Vec z{};
    int t = code;
    for (int i = 0; i < 5; ++i) {
      z[i] = static_cast<int8_t>(t % 3 == 2 ? -1 : t % 3);
      t /= 3;
    }
    if (is_zero(z) || normalize(z) != z) continue;
    bool ok = true;
    for (const F3Vec& w : rows)
      if (bilinear(w, z) != 0) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  throw std::logic_error("f3_perp_line: no solution");
}

}  // namespace detail

// The 45 tritangent planes in display order: first the five whose point is a
// unit vector (descending slot), then the zero-slot groups 1..5, within each
// group by descending sign pattern (+1 before -1).
inline const std::vector<Tritangent>& tritangents() {
  static const std::vector<Tritangent> all = [] {
    std::vector<Tritangent> ts;
    auto push = [&ts](std::string label, std::array<E6Vec, 3> lines) {
      std::vector<F3Vec> span;
      for (const Root& r : positive_roots()) {
        bool perp = true;
        for (const E6Vec& L : lines)
          if (e6_pairing(r.v, L) != 0) {
            perp = false;
            break;
          }
        if (perp) span.push_back(pi_map(r.v));
      }
      if (span.size() != 12)
        throw std::logic_error("tritangent: expected a D4's worth of roots");
      if (detail::f3_rank(span) != 4)
        throw std::logic_error("tritangent: span is not a hyperplane");
      F3Vec z = detail::f3_perp_line(span);
      PointRef p = geometry().ref_of(z);
      if (p.cls != PointClass::Tritangent)
        throw std::logic_error("tritangent: point has wrong class");
      ts.push_back({std::move(label), lines, p.index});
    };

    // (ij) carries b_i, a_j and c_ij
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) {
        if (i == j) continue;
        push("(" + std::to_string(i) + std::to_string(j) + ")",
             {detail::line_b(i), detail::line_a(j), detail::line_c(std::min(i, j), std::max(i, j))});
      }
    // perfect matchings of {1..6}: pairs sorted, first elements increasing
    int rest[5];
    for (int j = 2; j <= 6; ++j) {
      int w = 0;
      for (int x = 2; x <= 6; ++x)
        if (x != j) rest[w++] = x;
      // rest has 4 elements; pick partner for rest[0]
      for (int k = 1; k < 4; ++k) {
        int a = rest[0], b = rest[k];
        int cd[2], w2 = 0;
        for (int x = 1; x < 4; ++x)
          if (x != k) cd[w2++] = rest[x];
        std::string label = "(1" + std::to_string(j) + "." + std::to_string(a) +
                            std::to_string(b) + "." + std::to_string(cd[0]) +
                            std::to_string(cd[1]) + ")";
        push(label, {detail::line_c(1, j), detail::line_c(a, b),
                     detail::line_c(cd[0], cd[1])});
      }
    }

    // display order, determined by the attached point
    auto point_key = [](const Tritangent& t) {
      const F3Vec& z = geometry().points(PointClass::Tritangent)[t.point];
      int nonzero = 0;
      for (int i = 0; i < 5; ++i) nonzero += z[i] != 0;
      int group, pattern = 0;
      if (nonzero == 1) {
        int slot = 0;
        while (z[slot] == 0) ++slot;
        group = 0;
        pattern = -slot;  // f5 first
      } else {
        int zero_slot = 0;
        while (z[zero_slot] != 0) ++zero_slot;
        group = 1 + zero_slot;
        for (int i = 0; i < 5; ++i) {
          if (i == zero_slot) continue;
          pattern = pattern * 2 + (z[i] == -1 ? 1 : 0);
        }
      }
      return std::pair<int, int>(group, pattern);
    };
    std::sort(ts.begin(), ts.end(), [&](const Tritangent& x, const Tritangent& y) {
      return point_key(x) < point_key(y);
    });
    return ts;
  }();
  return all;
}

// ---------------------------------------------------------------- cusp triads

struct CuspTriad {
  std::array<std::array<int, 3>, 3> triples;  // root indices, each sorted
  std::string label;
  bool all_plus;  // true for [ijk.lmn] (the H root participates)
};

namespace detail {

struct UnionFindLocal {
  std::vector<int> parent;
  explicit UnionFindLocal(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline std::string digits(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += std::to_string(x);
  return s;
}

// Expected triple schema for a bracket label, as sets of root indices.
inline std::set<std::set<int>> schema_triples(const std::string& label,
                                              bool all_plus) {
  auto part = [&label]() {
    std::vector<std::vector<int>> out(1);
    for (char ch : label) {
      if (ch == '[' || ch == ']') continue;
      if (ch == '.') {
        out.emplace_back();
        continue;
      }
      out.back().push_back(ch - '0');
    }
    return out;
  }();
  std::set<std::set<int>> tri;
  if (all_plus) {
    auto [A, B] = std::pair(part[0], part[1]);
    tri.insert({pair_root_index(A[0], A[1]), pair_root_index(A[1], A[2]),
                pair_root_index(A[0], A[2])});
    tri.insert({pair_root_index(B[0], B[1]), pair_root_index(B[1], B[2]),
                pair_root_index(B[0], B[2])});
    tri.insert({root_index(root_top()), triple_root_index(A[0], A[1], A[2]),
                triple_root_index(B[0], B[1], B[2])});
  } else {
    auto [ij, kl, mn] = std::tuple(part[0], part[1], part[2]);
    tri.insert({pair_root_index(ij[0], ij[1]),
                triple_root_index(ij[0], kl[0], kl[1]),
                triple_root_index(ij[1], kl[0], kl[1])});
    tri.insert({pair_root_index(kl[0], kl[1]),
                triple_root_index(kl[0], mn[0], mn[1]),
                triple_root_index(kl[1], mn[0], mn[1])});
    tri.insert({pair_root_index(mn[0], mn[1]),
                triple_root_index(mn[1], ij[0], ij[1]),
                triple_root_index(mn[0], ij[0], ij[1])});
  }
  return tri;
}

}  // namespace detail

// Bracket label derived from the normalized cusp vector:
//  - all entries +1 (type [ijk.lmn]): the support slots and their complement
//    in {1..6}, printed in ascending lexicographic order;
//  - mixed signs (type [ij.kl.mn]): kl = the two zero slots, ij = the two
//    like-signed nonzero slots, mn = {lone-sign slot, 6}.
inline std::string cusp_label(const F3Vec& v) {
  std::vector<int> plus, minus, zero;
  for (int i = 0; i < 5; ++i) {
    if (v[i] == 1) plus.push_back(i + 1);
    if (v[i] == -1) minus.push_back(i + 1);
    if (v[i] == 0) zero.push_back(i + 1);
  }
  if (plus.size() + minus.size() != 3)
    throw std::invalid_argument("cusp_label: not a cusp vector");
  if (minus.empty()) {
    std::vector<int> comp;
    for (int x = 1; x <= 6; ++x)
      if (std::find(plus.begin(), plus.end(), x) == plus.end()) comp.push_back(x);
    std::string a = detail::digits(plus), b = detail::digits(comp);
    if (b < a) std::swap(a, b);
    return "[" + a + "." + b + "]";
  }
  const std::vector<int>& like = plus.size() == 2 ? plus : minus;
  int lone = plus.size() == 2 ? minus[0] : plus[0];
  std::vector<int> mn = {lone, 6};
  return "[" + detail::digits(like) + "." + detail::digits(zero) + "." +
         detail::digits(mn) + "]";
}

// Triads for all 40 cusps, indexed like the cusp points. Construction checks
// that the perpendicular roots split into three triangles and that the label
// schema reproduces exactly that partition.
inline const std::vector<CuspTriad>& cusp_triads() {
  static const std::vector<CuspTriad> triads = [] {
    const Geometry& geo = geometry();
    const auto& roots = positive_roots();
    std::vector<CuspTriad> out;
    for (const F3Vec& v : geo.points(PointClass::Cusp)) {
      std::vector<int> perp;
      for (int r = 0; r < 36; ++r)
        if (bilinear(pi_map(roots[static_cast<std::size_t>(r)].v), v) == 0)
          perp.push_back(r);
      if (perp.size() != 9) throw std::logic_error("cusp: expected 9 roots");

      // components of the non-perpendicularity graph
      detail::UnionFindLocal uf(9);
      for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b) {
          int pa = perp[static_cast<std::size_t>(a)], pb = perp[static_cast<std::size_t>(b)];
          if (bilinear(pi_map(roots[static_cast<std::size_t>(pa)].v),
                       pi_map(roots[static_cast<std::size_t>(pb)].v)) != 0)
            uf.unite(a, b);
        }
      std::map<int, std::vector<int>> comp;
      for (int a = 0; a < 9; ++a) comp[uf.find(a)].push_back(perp[static_cast<std::size_t>(a)]);
      if (comp.size() != 3) throw std::logic_error("cusp: expected 3 triples");

      CuspTriad t;
      int w = 0;
      std::vector<std::array<int, 3>> triples;
      for (auto& [root, members] : comp) {
        if (members.size() != 3) throw std::logic_error("cusp: triple size");
        std::sort(members.begin(), members.end());
        triples.push_back({members[0], members[1], members[2]});
      }
      std::sort(triples.begin(), triples.end());
      for (const auto& tr : triples) t.triples[static_cast<std::size_t>(w++)] = tr;

      int top = root_index(root_top());
      t.all_plus = std::find(perp.begin(), perp.end(), top) != perp.end();
      t.label = cusp_label(v);
      bool label_plus = t.label.find('.') == t.label.rfind('.');
      if (label_plus != t.all_plus)
        throw std::logic_error("cusp: label type disagrees with triad type");

      std::set<std::set<int>> got;
      for (const auto& tr : t.triples) got.insert({tr[0], tr[1], tr[2]});
      if (got != detail::schema_triples(t.label, t.all_plus))
        throw std::logic_error("cusp: label schema mismatch for " + t.label);
      out.push_back(std::move(t));
    }
    return out;
  }();
  return triads;
}

// ------------------------------------------------------------- A2 surfaces

// One subtorus surface: an A2 inside D4, spanned by the two positive roots
// a, b whose sum is the third. The projected plane in F3^5 carries the three
// root lines and one extra line, which is the attached cusp.
struct SurfaceA2 {
  MVec a, b, top;
  int root_a, root_b;     // positive-root indices of phi(a), phi(b), ascending
  F3Vec cusp;             // normalized
  std::string label;      // triad bracket
  std::string equations;  // "mon = mon = 1", monomials alphabetical
};

inline const std::vector<SurfaceA2>& a2_surfaces() {
  static const std::vector<SurfaceA2> surfaces = [] {
    const auto& d4 = d4_positive_roots();
    std::vector<SurfaceA2> out;
    for (std::size_t x = 0; x < d4.size(); ++x)
      for (std::size_t y = x + 1; y < d4.size(); ++y) {
        MVec sum{};
        for (int i = 0; i < 4; ++i) sum[i] = d4[x][i] + d4[y][i];
        if (std::find(d4.begin(), d4.end(), sum) == d4.end()) continue;

        SurfaceA2 s;
        s.a = d4[x];
        s.b = d4[y];
        s.top = sum;
        s.root_a = root_index(phi(s.a));
        s.root_b = root_index(phi(s.b));
        if (s.root_a < 0 || s.root_b < 0)
          throw std::logic_error("a2_surfaces: image is not a positive root");
        if (s.root_a > s.root_b) std::swap(s.root_a, s.root_b);

        F3Vec va = pi_map(phi(s.a)), vb = pi_map(phi(s.b));
        int c[5];
        for (int i = 0; i < 5; ++i) c[i] = va[i] - vb[i];
        F3Vec diff = f3_vec(c[0], c[1], c[2], c[3], c[4]);
        if (quadratic(diff) != 0)
          throw std::logic_error("a2_surfaces: fourth line is not a cusp");
        s.cusp = normalize(diff);
        s.label = cusp_triads()[static_cast<std::size_t>(
                                    geometry().ref_of(s.cusp).index)]
                      .label;

        CharMonomial ca = char_monomial(s.a), cb = char_monomial(s.b);
        std::string ma = ca.str(), mb = cb.str();
        // lower degree first, ties alphabetical
        if (std::pair(cb.degree(), mb) < std::pair(ca.degree(), ma))
          std::swap(ma, mb);
        s.equations = ma + " = " + mb + " = 1";
        out.push_back(std::move(s));
      }
    if (out.size() != 16) throw std::logic_error("a2_surfaces: expected 16");

    // rows grouped by the zero slots of the cusp vector, then by the sign
    // pattern of the trailing nonzero entries with + before -
    auto key = [](const F3Vec& v) {
      std::vector<int> zeros;
      int bits = 0;
      bool lead = true;
      for (int i = 0; i < 5; ++i) {
        if (v[i] == 0) {
          zeros.push_back(i);
          continue;
        }
        if (lead) {
          lead = false;  // normalized leading +1 carries no sign information
          continue;
        }
        bits = bits * 2 + (v[i] == -1 ? 1 : 0);
      }
      return std::pair(zeros, bits);
    };
    std::sort(out.begin(), out.end(), [&key](const SurfaceA2& p, const SurfaceA2& q) {
      return key(p.cusp) < key(q.cusp);
    });
    return out;
  }();
  return surfaces;
}

// ---------------------------------------------------------- divisor of lambda

struct RayMultiplicity {
  NVec tau;
  int n;          // order of lambda along the divisor of tau
  PointRef point; // boundary point for short tau, cusp point for long tau
};

inline std::vector<RayMultiplicity> divisor_of_lambda() {
  const MVec lambda = {1, -1, 0, 0};
  std::vector<RayMultiplicity> out;
  for (const NVec& t : short_rays())
    out.push_back({t, pairing_mn(lambda, t), geometry().ref_of(boundary_vector(t))});
  for (const NVec& t : long_rays())
    out.push_back({t, pairing_mn(lambda, t), geometry().ref_of(cusp_vector(t))});
  return out;
}

// E_v = B_v - C_{v perp} + 3 D_v as a point-weighted divisor.
inline std::map<PointRef, long> ev_class(int cusp_index) {
  const Geometry& geo = geometry();
  const F3Vec& v = geo.points(PointClass::Cusp)[static_cast<std::size_t>(cusp_index)];
  std::map<PointRef, long> d;
  for (const auto& tr : cusp_triads()[static_cast<std::size_t>(cusp_index)].triples)
    for (int r : tr) d[{PointClass::Boundary, root_boundary_point(r)}] += 1;
  for (int i = 0; i < geo.count(PointClass::Cusp); ++i)
    if (geo.perp(geo.points(PointClass::Cusp)[static_cast<std::size_t>(i)], v))
      d[{PointClass::Cusp, i}] -= 1;
  d[{PointClass::Cusp, cusp_index}] += 3;
  return d;
}

// --------------------------------------------------------------- symmetrizing

// Coefficients of (T^, B^, C^) obtained by averaging a point-weighted divisor
// over each orbit: total class multiplicity divided by the class size.
struct SymmetrizedClass {
  BigRational T, B, C;

  // Eliminate T via 4T^ = 25B^ + 27C^.
  std::pair<BigRational, BigRational> bc_reduced() const {
    return {B + T * ratio(25, 4), C + T * ratio(27, 4)};
  }

  friend bool operator==(const SymmetrizedClass&, const SymmetrizedClass&) = default;
};

inline SymmetrizedClass symmetrize(const std::map<PointRef, long>& divisor) {
  long t = 0, b = 0, c = 0;
  for (const auto& [p, mult] : divisor) {
    switch (p.cls) {
      case PointClass::Tritangent: t += mult; break;
      case PointClass::Boundary: b += mult; break;
      case PointClass::Cusp: c += mult; break;
    }
  }
  return {ratio(t, 45), ratio(b, 36), ratio(c, 40)};
}

}  // namespace crv
