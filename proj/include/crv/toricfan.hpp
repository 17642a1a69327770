#pragma once

// Fan of the 192 Weyl chambers of D4 and the generic smooth-toric calculus
// used on it: f-vectors, Chow ranks, star fans of rays, closures of
// 2-dimensional subtori, and divisors of characters.
//
// Lattice points of N = Z^4 + Z(1/2,1/2,1/2,1/2) travel in doubled
// coordinates (NVec). Internally every fan stores its rays in an honest
// Z-basis of its own lattice, so determinant and kernel computations stay
// in plain integers. The basis fixed for N is (e1, e2, e3, w) with
// w = (e1+e2+e3+e4)/2.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crv/exact.hpp"
#include "crv/roots.hpp"

namespace crv {

using LVec = std::vector<long>;

struct Fan {
  int rank = 0;
  std::vector<LVec> rays;                  // primitive, in lattice-basis coords
  std::vector<std::vector<int>> max_cones; // sorted ray indices, size == rank
};

// ----------------------------------------------------------- lattice helpers

inline std::array<long, 4> n_basis_coords(const NVec& doubled) {
  // x = a e1 + b e2 + c e3 + d w  with  d = X4, a = (X1-X4)/2, ...
  for (int i = 0; i < 3; ++i)
    if ((doubled[i] - doubled[3]) % 2 != 0)
      throw std::invalid_argument("n_basis_coords: mixed parity");
  return {(doubled[0] - doubled[3]) / 2, (doubled[1] - doubled[3]) / 2,
          (doubled[2] - doubled[3]) / 2, static_cast<long>(doubled[3])};
}

inline NVec n_from_basis(const std::array<long, 4>& c) {
  NVec x{};
  x[0] = static_cast<int>(2 * c[0] + c[3]);
  x[1] = static_cast<int>(2 * c[1] + c[3]);
  x[2] = static_cast<int>(2 * c[2] + c[3]);
  x[3] = static_cast<int>(c[3]);
  return x;
}

namespace detail {

inline long ivec_gcd(const LVec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::abs(x));
  return g;
}

inline LVec primitive(LVec v) {
  long g = ivec_gcd(v);
  if (g > 1)
    for (long& x : v) x /= g;
  return v;
}

inline long idet(std::vector<LVec> m) {
  // fraction-free elimination, small dimensions only
  const std::size_t n = m.size();
  long det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    for (std::size_t r = col + 1; r < n; ++r)
      while (m[r][col] != 0) {  // integer-preserving row gcd steps
        long q = m[col][col] / m[r][col];
        for (std::size_t c = col; c < n; ++c) m[col][c] -= q * m[r][c];
        std::swap(m[col], m[r]);
        det = -det;
      }
    det *= m[col][col];
  }
  return det;
}

inline std::vector<LVec> ray_matrix(const Fan& f, const std::vector<int>& cone) {
  // rows = rays of the cone
  std::vector<LVec> m;
  for (int r : cone) m.push_back(f.rays[static_cast<std::size_t>(r)]);
  return m;
}

// Adjugate of a small square integer matrix: adj * m = det(m) * I.
inline std::vector<LVec> adjugate(const std::vector<LVec>& m) {
  const std::size_t n = m.size();
  auto minor_det = [&m, n](std::size_t di, std::size_t dj) {
    std::vector<LVec> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == di) continue;
      LVec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != dj) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    return idet(sub);
  };
  std::vector<LVec> adj(n, LVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[j][i] = ((i + j) % 2 == 0 ? 1 : -1) * minor_det(i, j);
  return adj;
}

// Unimodular U with U*v = (1,0,...,0); v must be primitive.
inline std::vector<LVec> clear_to_first(const LVec& v) {
  const std::size_t n = v.size();
  std::vector<LVec> u(n, LVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  LVec w = v;
  // chase the gcd into slot 0 by row operations mirrored on u
  for (std::size_t i = 1; i < n; ++i)
    while (w[i] != 0) {
      long q = w[0] / w[i];
      w[0] -= q * w[i];
      for (std::size_t c = 0; c < n; ++c) u[0][c] -= q * u[i][c];
      std::swap(w[0], w[i]);
      std::swap(u[0], u[i]);
    }
  if (w[0] < 0) {
    w[0] = -w[0];
    for (std::size_t c = 0; c < n; ++c) u[0][c] = -u[0][c];
  }
  if (w[0] != 1) throw std::invalid_argument("clear_to_first: vector not primitive");
  return u;
}

}  // namespace detail

// --------------------------------------------------------------- weyl fan

// The 192 signed-even coordinate permutations acting on doubled vectors.
inline const std::vector<std::array<int, 8>>& signed_even_permutations() {
  // entry layout: p[0..3] = source slot, p[4..7] = sign
  static const std::vector<std::array<int, 8>> group = [] {
    std::vector<std::array<int, 8>> g;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16; ++mask) {
        int par = 0;
        for (int i = 0; i < 4; ++i) par ^= (mask >> i) & 1;
        if (par != 0) continue;
        std::array<int, 8> e{};
        for (int i = 0; i < 4; ++i) {
          e[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
          e[static_cast<std::size_t>(i + 4)] = (mask >> i) & 1 ? -1 : 1;
        }
        g.push_back(e);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (g.size() != 192) throw std::logic_error("signed_even_permutations: size");
    return g;
  }();
  return group;
}

inline NVec apply_signed_perm(const std::array<int, 8>& g, const NVec& x) {
  NVec y{};
  for (int i = 0; i < 4; ++i)
    y[i] = g[static_cast<std::size_t>(i + 4)] * x[g[static_cast<std::size_t>(i)]];
  return y;
}

inline const Fan& weyl_fan() {
  static const Fan fan = [] {
    Fan f;
    f.rank = 4;

    // golden ray order: the short vectors, then the long vectors
    std::vector<NVec> ray_points;
    for (const NVec& t : short_rays()) ray_points.push_back(t);
    for (const NVec& t : long_rays()) ray_points.push_back(t);
    std::map<NVec, int> ray_index;
    for (std::size_t i = 0; i < ray_points.size(); ++i)
      ray_index[ray_points[i]] = static_cast<int>(i);
    for (const NVec& t : ray_points) {
      auto c = n_basis_coords(t);
      f.rays.push_back({c[0], c[1], c[2], c[3]});
    }

    const std::array<NVec, 4> fundamental = {
        NVec{2, 0, 0, 0}, NVec{2, 2, 0, 0}, NVec{1, 1, 1, -1}, NVec{1, 1, 1, 1}};

    std::set<std::vector<int>> chambers;
    std::set<NVec> seen_rays;
    for (const auto& g : signed_even_permutations()) {
      std::vector<int> cone;
      for (const NVec& r : fundamental) {
        NVec img = apply_signed_perm(g, r);
        seen_rays.insert(img);
        auto it = ray_index.find(img);
        if (it == ray_index.end())
          throw std::logic_error("weyl_fan: orbit left the expected ray set");
        cone.push_back(it->second);
      }
      std::sort(cone.begin(), cone.end());
      chambers.insert(cone);
    }
    if (seen_rays.size() != 48)
      throw std::logic_error("weyl_fan: ray orbit is not the 48 vectors");
    if (chambers.size() != 192)
      throw std::logic_error("weyl_fan: expected 192 chambers");
    f.max_cones.assign(chambers.begin(), chambers.end());

    for (const auto& cone : f.max_cones)
      if (std::abs(detail::idet(detail::ray_matrix(f, cone))) != 1)
        throw std::logic_error("weyl_fan: non-unimodular chamber");
    return f;
  }();
  return fan;
}

// Doubled vectors of the Weyl fan rays, aligned with weyl_fan().rays.
inline std::vector<NVec> weyl_ray_points() {
  std::vector<NVec> out;
  for (const LVec& r : weyl_fan().rays)
    out.push_back(n_from_basis({r[0], r[1], r[2], r[3]}));
  return out;
}

// ----------------------------------------------------------------- queries

inline std::vector<long> f_vector(const Fan& f) {
  std::vector<long> d(static_cast<std::size_t>(f.rank) + 1, 0);
  d[0] = 1;
  for (int k = 1; k <= f.rank; ++k) {
    std::set<std::vector<int>> faces;
    for (const auto& cone : f.max_cones) {
      // all k-subsets of a simplicial cone are faces
      std::vector<int> pick(static_cast<std::size_t>(k));
      std::vector<int> idx(static_cast<std::size_t>(k));
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        for (int i = 0; i < k; ++i)
          pick[static_cast<std::size_t>(i)] =
              cone[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        faces.insert(pick);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             static_cast<int>(cone.size()) - k + i)
          --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    d[static_cast<std::size_t>(k)] = static_cast<long>(faces.size());
  }
  return d;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Chow ranks of the smooth complete toric variety of the fan:
// rk A^k given by b_{2k} = sum_{i>=k} (-1)^(i-k) C(i,k) d_{n-i}.
inline std::vector<long> chow_ranks(const Fan& f) {
  const int n = f.rank;
  std::vector<long> d = f_vector(f);
  std::vector<long> b(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int i = k; i <= n; ++i)
      b[static_cast<std::size_t>(k)] += (((i - k) % 2 == 0) ? 1 : -1) *
                                        binomial(i, k) *
                                        d[static_cast<std::size_t>(n - i)];
  long edges_formula = d[1] - n;
  if (n >= 1 && b[1] != edges_formula)
    throw std::logic_error("chow_ranks: rank A^1 disagrees with edges minus rank");
  return b;
}

inline bool is_smooth(const Fan& f) {
  for (const auto& cone : f.max_cones)
    if (std::abs(detail::idet(detail::ray_matrix(f, cone))) != 1) return false;
  return true;
}

// Number of maximal cones whose closed span contains each point
// (lattice-basis coords). Cone solves are precomputed once.
inline std::vector<int> membership_counts(const Fan& f,
                                          const std::vector<LVec>& points) {
  struct Solved {
    std::vector<LVec> adj;
    long det;
  };
  std::vector<Solved> solved;
  for (const auto& cone : f.max_cones) {
    auto m = detail::ray_matrix(f, cone);
    // columns must be the rays: transpose, then solve via adjugate
    std::vector<LVec> mt(m.size(), LVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) mt[i][j] = m[j][i];
    long det = detail::idet(mt);
    if (det == 0) throw std::logic_error("membership_counts: degenerate cone");
    solved.push_back({detail::adjugate(mt), det});
  }
  std::vector<int> counts;
  for (const LVec& x : points) {
    int hit = 0;
    for (const Solved& s : solved) {
      bool inside = true;
      for (std::size_t i = 0; i < s.adj.size() && inside; ++i) {
        long num = 0;
        for (std::size_t j = 0; j < s.adj.size(); ++j) num += s.adj[i][j] * x[j];
        if (s.det < 0) num = -num;
        inside = num >= 0;
      }
      hit += inside;
    }
    counts.push_back(hit);
  }
  return counts;
}

inline int cones_containing(const Fan& f, const LVec& x) {
  return membership_counts(f, {x}).front();
}

// --------------------------------------------------------------- star fans

// Fan of the divisor V(tau) in the quotient lattice N / <tau>.
inline Fan star_fan(const Fan& f, int ray) {
  if (ray < 0 || ray >= static_cast<int>(f.rays.size()))
    throw std::invalid_argument("star_fan: no such ray");
  auto u = detail::clear_to_first(f.rays[static_cast<std::size_t>(ray)]);

  auto project = [&u, &f](int r) {
    LVec img(static_cast<std::size_t>(f.rank) - 1);
    for (std::size_t i = 1; i < u.size(); ++i) {
      long s = 0;
      for (std::size_t j = 0; j < u.size(); ++j)
        s += u[i][j] * f.rays[static_cast<std::size_t>(r)][j];
      img[i - 1] = s;
    }
    return img;
  };

  Fan star;
  star.rank = f.rank - 1;
  std::map<LVec, int> index;
  std::set<std::vector<int>> cones;
  for (const auto& cone : f.max_cones) {
    if (std::find(cone.begin(), cone.end(), ray) == cone.end()) continue;
    std::vector<int> img_cone;
    for (int r : cone) {
      if (r == ray) continue;
      LVec img = detail::primitive(project(r));
      auto [it, fresh] = index.try_emplace(img, static_cast<int>(star.rays.size()));
      if (fresh) star.rays.push_back(img);
      img_cone.push_back(it->second);
    }
    std::sort(img_cone.begin(), img_cone.end());
    cones.insert(img_cone);
  }
  star.max_cones.assign(cones.begin(), cones.end());
  if (!is_smooth(star)) throw std::logic_error("star_fan: non-unimodular image cone");
  return star;
}

// ------------------------------------------------- subtorus closure fans

// Saturated rank-2 sublattice of N cut out by two characters; basis returned
// in doubled coordinates.
inline std::pair<NVec, NVec> plane_of_characters(const MVec& m1, const MVec& m2) {
  auto pairing_row = [](const MVec& m) {
    if ((m[0] + m[1] + m[2] + m[3]) % 2 != 0)
      throw std::invalid_argument("plane_of_characters: character outside the lattice");
    return LVec{m[0], m[1], m[2], (m[0] + m[1] + m[2] + m[3]) / 2};
  };
  LVec a = pairing_row(m1), b = pairing_row(m2);
  if (detail::ivec_gcd(a) == 0 || detail::ivec_gcd(b) == 0)
    throw std::invalid_argument("plane_of_characters: zero character");

  // U * a = e1 with U unimodular, so rows 2..4 of U span ker(a) saturately
  auto ua = detail::clear_to_first(detail::primitive(a));
  std::vector<LVec> ker(ua.begin() + 1, ua.end());
  LVec br(3);
  for (std::size_t i = 0; i < 3; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += b[j] * ker[i][j];
    br[i] = s;
  }
  if (detail::ivec_gcd(br) == 0)
    throw std::invalid_argument("plane_of_characters: characters not independent");
  auto ub = detail::clear_to_first(detail::primitive(br));
  std::array<LVec, 2> plane;
  for (std::size_t r = 1; r < 3; ++r) {
    LVec v(4, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) v[j] += ub[r][i] * ker[i][j];
    plane[r - 1] = v;
  }
  // check: both characters vanish on both generators
  for (const LVec& v : plane)
    for (const LVec* row : {&a, &b}) {
      long s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += (*row)[j] * v[j];
      if (s != 0) throw std::logic_error("plane_of_characters: kernel check failed");
    }
  auto to_doubled = [](const LVec& v) {
    return n_from_basis({v[0], v[1], v[2], v[3]});
  };
  return {to_doubled(plane[0]), to_doubled(plane[1])};
}

namespace detail {

// angular comparator for nonzero integer plane vectors
inline bool angle_less(const std::array<long, 2>& p, const std::array<long, 2>& q) {
  auto half = [](const std::array<long, 2>& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  if (half(p) != half(q)) return half(p) < half(q);
  return p[0] * q[1] - p[1] * q[0] > 0;
}

}  // namespace detail

// Fan of the closure of the subtorus whose cocharacter plane is spanned by
// p1, p2 (doubled coordinates). The plane must be saturated in N.
inline Fan subtorus_closure_fan(const Fan& f, const NVec& p1, const NVec& p2) {
  auto c1 = n_basis_coords(p1), c2 = n_basis_coords(p2);
  LVec b1{c1[0], c1[1], c1[2], c1[3]}, b2{c2[0], c2[1], c2[2], c2[3]};

  // saturation: gcd of the 2x2 minors of the basis matrix must be 1
  long g = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      g = std::gcd(g, std::abs(b1[i] * b2[j] - b1[j] * b2[i]));
  if (g != 1) throw std::invalid_argument("subtorus_closure_fan: plane not saturated");

  std::map<std::array<long, 2>, int> ray_index;
  Fan out;
  out.rank = 2;
  std::set<std::vector<int>> cones;

  for (const auto& cone : f.max_cones) {
    auto m = detail::ray_matrix(f, cone);
    std::vector<LVec> mt(m.size(), LVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) mt[i][j] = m[j][i];
    long det = detail::idet(mt);
    auto adj = detail::adjugate(mt);
    // alpha*p1 + beta*p2 lies in the cone iff alpha*u + beta*v >= 0
    LVec u(4), v(4);
    for (std::size_t i = 0; i < 4; ++i) {
      long su = 0, sv = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        su += adj[i][j] * b1[j];
        sv += adj[i][j] * b2[j];
      }
      u[i] = det < 0 ? -su : su;
      v[i] = det < 0 ? -sv : sv;
    }

    std::vector<std::array<long, 2>> feasible;
    auto ok = [&u, &v](const std::array<long, 2>& d) {
      for (std::size_t i = 0; i < 4; ++i)
        if (u[i] * d[0] + v[i] * d[1] < 0) return false;
      return true;
    };
    for (std::size_t i = 0; i < 4; ++i) {
      if (u[i] == 0 && v[i] == 0) continue;
      long dg = std::gcd(std::abs(u[i]), std::abs(v[i]));
      std::array<long, 2> d = {-v[i] / dg, u[i] / dg};
      for (const auto& cand : {d, std::array<long, 2>{-d[0], -d[1]}})
        if (ok(cand) &&
            std::find(feasible.begin(), feasible.end(), cand) == feasible.end())
          feasible.push_back(cand);
    }
    if (feasible.empty()) continue;

    // extreme directions: the sector is pointed, so they are the two
    // candidates weakly clockwise / counterclockwise of all others
    auto cross = [](const std::array<long, 2>& p, const std::array<long, 2>& q) {
      return p[0] * q[1] - p[1] * q[0];
    };
    std::array<long, 2> lo = feasible[0], hi = feasible[0];
    for (const auto& d : feasible) {
      bool lo_ok = true, hi_ok = true;
      for (const auto& e : feasible) {
        if (cross(d, e) < 0) lo_ok = false;
        if (cross(e, d) < 0) hi_ok = false;
      }
      if (lo_ok) lo = d;
      if (hi_ok) hi = d;
    }
    if (lo == hi) continue;  // one-dimensional touch, a face of a neighbour

    std::vector<int> c2d;
    for (const auto& d : {lo, hi}) {
      auto [it, fresh] = ray_index.try_emplace(d, static_cast<int>(out.rays.size()));
      if (fresh) out.rays.push_back({d[0], d[1]});
      c2d.push_back(it->second);
    }
    std::sort(c2d.begin(), c2d.end());
    if (c2d[0] == c2d[1])
      throw std::logic_error("subtorus_closure_fan: degenerate sector");
    cones.insert(c2d);
  }
  out.max_cones.assign(cones.begin(), cones.end());

  // fan check: the sectors must tile the plane once around
  std::vector<int> order(out.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&out](int a, int b) {
    const LVec& p = out.rays[static_cast<std::size_t>(a)];
    const LVec& q = out.rays[static_cast<std::size_t>(b)];
    return detail::angle_less({p[0], p[1]}, {q[0], q[1]});
  });
  std::set<std::vector<int>> expected;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<int> c = {order[i], order[(i + 1) % order.size()]};
    std::sort(c.begin(), c.end());
    expected.insert(c);
  }
  if (expected != cones)
    throw std::logic_error("subtorus_closure_fan: sectors do not tile the plane");
  return out;
}

// Subtorus fan of one of the sixteen A2 surfaces.
inline Fan surface_fan(int index) {
  const auto& surf = a2_surfaces();
  if (index < 0 || index >= static_cast<int>(surf.size()))
    throw std::invalid_argument("surface_fan: index out of range");
  auto [p1, p2] = plane_of_characters(surf[static_cast<std::size_t>(index)].a,
                                      surf[static_cast<std::size_t>(index)].b);
  return subtorus_closure_fan(weyl_fan(), p1, p2);
}

// ----------------------------------------------------------- characters

// Order of the character along each ray of the Weyl fan, in ray order.
inline std::vector<int> character_divisor(const MVec& m) {
  std::vector<int> out;
  for (const NVec& tau : weyl_ray_points()) out.push_back(pairing_mn(m, tau));
  return out;
}

}  // namespace crv
