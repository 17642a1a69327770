#pragma once

// The orthogonal group of (F3^5, b) acting on the 121 points.
//
// Boundary reflections s_v(x) = x + q(v) b(x,v) v generate a group of order
// 51840; adjoining -Id doubles it to the full orthogonal group, order 103680.
// Elements are 5x5 matrices over {-1,0,1}; closure is computed by plain BFS.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "crv/exact.hpp"
#include "crv/fgeom.hpp"

namespace crv {

struct OrthMatrix {
  std::array<int8_t, 25> m{};  // row major

  static OrthMatrix identity() {
    OrthMatrix r;
    for (int i = 0; i < 5; ++i) r.m[static_cast<std::size_t>(i * 5 + i)] = 1;
    return r;
  }

  static OrthMatrix negated_identity() {
    OrthMatrix r;
    for (int i = 0; i < 5; ++i) r.m[static_cast<std::size_t>(i * 5 + i)] = -1;
    return r;
  }

  int at(int i, int j) const { return m[static_cast<std::size_t>(i * 5 + j)]; }
  void set(int i, int j, int v) {
    m[static_cast<std::size_t>(i * 5 + j)] = static_cast<int8_t>(f3_norm(v));
  }

  F3Vec apply(const F3Vec& x) const {
    F3Vec y{};
    for (int i = 0; i < 5; ++i) {
      int s = 0;
      for (int j = 0; j < 5; ++j) s += at(i, j) * x[j];
      y[static_cast<std::size_t>(i)] = static_cast<int8_t>(f3_norm(s));
    }
    return y;
  }

  friend OrthMatrix operator*(const OrthMatrix& a, const OrthMatrix& b) {
    OrthMatrix c;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        int s = 0;
        for (int k = 0; k < 5; ++k) s += a.at(i, k) * b.at(k, j);
        c.set(i, j, s);
      }
    return c;
  }

  OrthMatrix negated() const {
    OrthMatrix r;
    for (std::size_t i = 0; i < 25; ++i) r.m[i] = static_cast<int8_t>(-m[i]);
    return r;
  }

  bool is_orthogonal() const {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        int s = 0;
        for (int k = 0; k < 5; ++k) s += at(k, i) * at(k, j);
        if (f3_norm(s) != (i == j ? 1 : 0)) return false;
      }
    return true;
  }

  // Base-3 packing of the 25 entries; injective, used as sort key.
  uint64_t key() const {
    uint64_t k = 0;
    for (std::size_t i = 0; i < 25; ++i) k = k * 3 + static_cast<uint64_t>(m[i] + 1);
    return k;
  }

  friend bool operator==(const OrthMatrix&, const OrthMatrix&) = default;
};

// s_v(x) = x + q(v) b(x,v) v; requires q(v) != 0.
inline OrthMatrix reflection(const F3Vec& v) {
  int q = quadratic(v);
  if (q == 0) throw std::invalid_argument("reflection: isotropic vector");
  OrthMatrix s = OrthMatrix::identity();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) s.set(i, j, s.at(i, j) + q * v[j] * v[i]);
  return s;
}

class GroupSet {
 public:
  GroupSet(std::vector<OrthMatrix> generators, std::vector<OrthMatrix> elements)
      : gens_(std::move(generators)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(),
              [](const OrthMatrix& a, const OrthMatrix& b) { return a.key() < b.key(); });
    keys_.reserve(elems_.size());
    for (const OrthMatrix& e : elems_) keys_.push_back(e.key());
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<OrthMatrix>& elements() const { return elems_; }
  const std::vector<OrthMatrix>& generators() const { return gens_; }

  bool contains(const OrthMatrix& g) const {
    return std::binary_search(keys_.begin(), keys_.end(), g.key());
  }

 private:
  std::vector<OrthMatrix> gens_;
  std::vector<OrthMatrix> elems_;
  std::vector<uint64_t> keys_;
};

// BFS closure of the generated group.
inline GroupSet generate(const std::vector<OrthMatrix>& gens) {
  std::map<uint64_t, OrthMatrix> seen;
  std::queue<OrthMatrix> work;
  OrthMatrix id = OrthMatrix::identity();
  seen.emplace(id.key(), id);
  work.push(id);
  while (!work.empty()) {
    OrthMatrix g = work.front();
    work.pop();
    for (const OrthMatrix& s : gens) {
      OrthMatrix h = g * s;
      if (seen.emplace(h.key(), h).second) work.push(h);
    }
  }
  std::vector<OrthMatrix> elems;
  elems.reserve(seen.size());
  for (auto& [k, g] : seen) elems.push_back(g);
  return GroupSet(gens, std::move(elems));
}

// One reflection per boundary point, in point order.
inline std::vector<OrthMatrix> boundary_reflections() {
  std::vector<OrthMatrix> out;
  for (const F3Vec& v : geometry().points(PointClass::Boundary))
    out.push_back(reflection(v));
  return out;
}

inline const GroupSet& reflection_group() {
  static const GroupSet g = generate(boundary_reflections());
  return g;
}

inline const GroupSet& full_group() {
  static const GroupSet g = [] {
    std::vector<OrthMatrix> gens = boundary_reflections();
    gens.push_back(OrthMatrix::negated_identity());
    return generate(gens);
  }();
  return g;
}

// Permutation induced on the points of one class; throws if not preserved.
inline std::vector<int> permutation_on(const OrthMatrix& g, PointClass c) {
  const Geometry& geo = geometry();
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(geo.count(c)));
  for (const F3Vec& v : geo.points(c)) {
    PointRef image = geo.ref_of(g.apply(v));
    if (image.cls != c) throw std::logic_error("permutation_on: class not preserved");
    perm.push_back(image.index);
  }
  return perm;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
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

}  // namespace detail

// Orbit sizes of the generated group on one class, descending.
inline std::vector<int> orbit_sizes(const std::vector<OrthMatrix>& gens, PointClass c) {
  const int n = geometry().count(c);
  detail::UnionFind uf(n);
  for (const OrthMatrix& g : gens) {
    std::vector<int> p = permutation_on(g, c);
    for (int i = 0; i < n; ++i) uf.unite(i, p[static_cast<std::size_t>(i)]);
  }
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) ++sizes[uf.find(i)];
  std::vector<int> out;
  for (auto& [root, s] : sizes) out.push_back(s);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Orbit sizes on ordered pairs (one point from each class), descending.
inline std::vector<int> pair_orbit_sizes(const std::vector<OrthMatrix>& gens,
                                         PointClass a, PointClass b) {
  const int na = geometry().count(a), nb = geometry().count(b);
  detail::UnionFind uf(na * nb);
  for (const OrthMatrix& g : gens) {
    std::vector<int> pa = permutation_on(g, a);
    std::vector<int> pb = permutation_on(g, b);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        uf.unite(i * nb + j,
                 pa[static_cast<std::size_t>(i)] * nb + pb[static_cast<std::size_t>(j)]);
  }
  std::map<int, int> sizes;
  for (int x = 0; x < na * nb; ++x) ++sizes[uf.find(x)];
  std::vector<int> out;
  for (auto& [root, s] : sizes) out.push_back(s);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline int pair_orbit_count(const std::vector<OrthMatrix>& gens, PointClass a,
                            PointClass b) {
  return static_cast<int>(pair_orbit_sizes(gens, a, b).size());
}

// Rank over Q of the perpendicularity incidence matrix between two classes.
inline int incidence_rank(PointClass a, PointClass b) {
  const Geometry& geo = geometry();
  std::vector<std::vector<long>> m;
  for (const F3Vec& x : geo.points(a)) {
    std::vector<long> row;
    for (const F3Vec& y : geo.points(b)) row.push_back(geo.perp(x, y) ? 1 : 0);
    m.push_back(std::move(row));
  }
  return rank_int(m);
}

// For each point of the class, a group element mapping the base point to it
// (std::nullopt where unreachable). BFS over generator moves.
inline std::vector<std::optional<OrthMatrix>> transporters(
    const std::vector<OrthMatrix>& gens, PointClass c, int base) {
  const int n = geometry().count(c);
  std::vector<std::optional<OrthMatrix>> witness(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> perms;
  for (const OrthMatrix& g : gens) perms.push_back(permutation_on(g, c));
  std::queue<int> work;
  witness[static_cast<std::size_t>(base)] = OrthMatrix::identity();
  work.push(base);
  while (!work.empty()) {
    int i = work.front();
    work.pop();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int j = perms[k][static_cast<std::size_t>(i)];
      if (!witness[static_cast<std::size_t>(j)]) {
        witness[static_cast<std::size_t>(j)] = gens[k] * *witness[static_cast<std::size_t>(i)];
        work.push(j);
      }
    }
  }
  return witness;
}

}  // namespace crv
