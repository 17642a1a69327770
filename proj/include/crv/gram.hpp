#pragma once

// Quadruple intersection numbers of boundary and cusp divisors, and the exact
// rank computations behind the codimension-two class counts.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crv/exact.hpp"
#include "crv/fgeom.hpp"
#include "crv/orthgroup.hpp"
#include "crv/roots.hpp"

namespace crv {

// --------------------------------------------------------------- divisor ids

enum class DivisorKind : uint8_t { Boundary, Cusp, Tritangent };

struct DivisorId {
  DivisorKind kind;
  int index;

  friend bool operator==(const DivisorId&, const DivisorId&) = default;
  friend auto operator<=>(const DivisorId&, const DivisorId&) = default;
};

inline DivisorId boundary_id(int i) {
  if (i < 0 || i >= 36) throw std::out_of_range("boundary_id: index");
  return {DivisorKind::Boundary, i};
}

inline DivisorId cusp_id(int i) {
  if (i < 0 || i >= 40) throw std::out_of_range("cusp_id: index");
  return {DivisorKind::Cusp, i};
}

inline DivisorId tritangent_id(int i) {
  if (i < 0 || i >= 45) throw std::out_of_range("tritangent_id: index");
  return {DivisorKind::Tritangent, i};
}

inline std::string show(DivisorId d) {
  switch (d.kind) {
    case DivisorKind::Boundary: return "B" + std::to_string(d.index);
    case DivisorKind::Cusp: return "C" + std::to_string(d.index);
    case DivisorKind::Tritangent: return "T" + std::to_string(d.index);
  }
  return "?";
}

// Multiset of at most four divisor ids, kept sorted.
class DivisorMonomial {
 public:
  DivisorMonomial() = default;

  explicit DivisorMonomial(std::vector<DivisorId> ids) : ids_(std::move(ids)) {
    if (ids_.size() > 4)
      throw std::invalid_argument("divisor monomial degree exceeds four");
    std::sort(ids_.begin(), ids_.end());
  }

  const std::vector<DivisorId>& factors() const { return ids_; }
  int degree() const { return static_cast<int>(ids_.size()); }

  friend DivisorMonomial operator*(const DivisorMonomial& a, const DivisorMonomial& b) {
    std::vector<DivisorId> ids = a.ids_;
    ids.insert(ids.end(), b.ids_.begin(), b.ids_.end());
    return DivisorMonomial(std::move(ids));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < ids_.size();) {
      std::size_t j = i;
      while (j < ids_.size() && ids_[j] == ids_[i]) ++j;
      if (!s.empty()) s += ".";
      s += show(ids_[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const DivisorMonomial&, const DivisorMonomial&) = default;
  friend auto operator<=>(const DivisorMonomial&, const DivisorMonomial&) = default;

 private:
  std::vector<DivisorId> ids_;
};

// ------------------------------------------------------- incidence from F3^5

namespace detail {

// Slots 0..35 are boundary points, 36..75 cusp points.
inline int divisor_slot(DivisorId d) {
  switch (d.kind) {
    case DivisorKind::Boundary: return d.index;
    case DivisorKind::Cusp: return 36 + d.index;
    case DivisorKind::Tritangent: break;
  }
  throw std::invalid_argument("tritangent divisors carry no quadruple data");
}

inline const std::vector<std::bitset<76>>& perp_table() {
  static const std::vector<std::bitset<76>> table = [] {
    const Geometry& geo = geometry();
    std::vector<F3Vec> pts;
    for (const F3Vec& v : geo.points(PointClass::Boundary)) pts.push_back(v);
    for (const F3Vec& v : geo.points(PointClass::Cusp)) pts.push_back(v);
    std::vector<std::bitset<76>> t(76);
    for (int i = 0; i < 76; ++i)
      for (int j = 0; j < 76; ++j)
        if (geo.perp(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]))
          t[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    return t;
  }();
  return table;
}

// Quadruple product on slots. Zero unless all distinct slots are mutually
// perpendicular and at most one distinct cusp appears; the remaining cases
// depend only on the multiplicity pattern.
inline long quad_slots(int a, int b, int c, int d) {
  int s[4] = {a, b, c, d};
  std::sort(s, s + 4);

  const auto& perp = perp_table();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (s[i] == s[j]) continue;
      if (s[i] >= 36 && s[j] >= 36) return 0;  // two distinct cusps
      if (!perp[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]) return 0;
    }

  int cusp_mult = 0;
  for (int x : s) cusp_mult += (x >= 36);

  // Number of distinct boundary factors; the slots are sorted, boundary first.
  int distinct = 0;
  for (int i = 0; i < 4 - cusp_mult;) {
    int j = i;
    while (j < 4 - cusp_mult && s[j] == s[i]) ++j;
    ++distinct;
    i = j;
  }

  switch (cusp_mult) {
    case 0:
      if (distinct == 4) return 1;   // B0 B1 B2 B3
      if (distinct == 3) return -1;  // B0^2 B1 B2
      if (distinct == 2) return 1;   // B0^2 B1^2 and B0^3 B1 alike
      return -3;                     // B0^4
    case 1:
      return distinct == 3 ? 1 : 0;  // C B0 B1 B2; repeated boundary kills it
    case 2:
      return distinct == 2 ? -1 : 0;  // C^2 B0 B1; C^2 B0^2 vanishes
    case 3:
      return 2;  // C^3 B0
    default:
      return -6;  // C^4
  }
}

}  // namespace detail

inline long quad_product(const DivisorMonomial& m) {
  if (m.degree() != 4)
    throw std::invalid_argument("quad_product: degree must be four");
  const auto& f = m.factors();
  int s[4];
  for (int i = 0; i < 4; ++i)
    s[i] = detail::divisor_slot(f[static_cast<std::size_t>(i)]);
  return detail::quad_slots(s[0], s[1], s[2], s[3]);
}

// ---------------------------------------------------------- square-class rank

// 36x36 matrix (Bi^2 Bj^2): -3 on the diagonal, 1 at perpendicular pairs.
inline std::vector<std::vector<long>> boundary_square_gram() {
  std::vector<std::vector<long>> g(36, std::vector<long>(36));
  for (int i = 0; i < 36; ++i)
    for (int j = 0; j < 36; ++j)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          detail::quad_slots(i, i, j, j);
  return g;
}

inline int rank_b2_matrix() { return rank_int(boundary_square_gram()); }

// ------------------------------------------------- all codimension-two spans

// The 270 perpendicular pairs Bi Bj (i < j) followed by the 36 squares Bi^2.
inline std::vector<DivisorMonomial> codim2_boundary_classes() {
  std::vector<DivisorMonomial> out;
  const auto& perp = detail::perp_table();
  for (int i = 0; i < 36; ++i)
    for (int j = i + 1; j < 36; ++j)
      if (perp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        out.push_back(DivisorMonomial({boundary_id(i), boundary_id(j)}));
  if (out.size() != 270)
    throw std::logic_error("expected 270 perpendicular boundary pairs");
  for (int i = 0; i < 36; ++i)
    out.push_back(DivisorMonomial({boundary_id(i), boundary_id(i)}));
  return out;
}

namespace detail {

inline std::vector<std::vector<long>> monomial_gram(const std::vector<DivisorMonomial>& ms) {
  const std::size_t n = ms.size();
  std::vector<std::array<int, 2>> slots(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ms[i].degree() != 2)
      throw std::invalid_argument("monomial_gram: degree-two classes only");
    slots[i] = {divisor_slot(ms[i].factors()[0]), divisor_slot(ms[i].factors()[1])};
  }
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      g[i][j] = g[j][i] = quad_slots(slots[i][0], slots[i][1], slots[j][0], slots[j][1]);
  return g;
}

}  // namespace detail

inline std::vector<std::vector<long>> codim2_boundary_gram() {
  return detail::monomial_gram(codim2_boundary_classes());
}

// Rank of the full 306x306 Gram and of the 270-pair block alone.
inline std::pair<int, int> rank_306() {
  std::vector<std::vector<long>> g = codim2_boundary_gram();
  std::vector<std::vector<long>> pairs_only;
  for (int i = 0; i < 270; ++i) {
    const auto& row = g[static_cast<std::size_t>(i)];
    pairs_only.emplace_back(row.begin(), row.begin() + 270);
  }
  return {rank_int(g), rank_int(pairs_only)};
}

// ------------------------------------------------------- cusp-supported block

// Three classes Bi C per cusp, one boundary divisor from each of the three
// triples meeting that cusp. The spanned class is independent of which member
// is picked; rank_cusp_classes recomputes with the other end to check that.
inline std::vector<DivisorMonomial> cusp_support_classes(bool lex_last = false) {
  std::vector<DivisorMonomial> out;
  const auto& triads = cusp_triads();
  for (int ci = 0; ci < 40; ++ci)
    for (const auto& tr : triads[static_cast<std::size_t>(ci)].triples) {
      int root = lex_last ? tr[2] : tr[0];
      out.push_back(DivisorMonomial({boundary_id(root_boundary_point(root)), cusp_id(ci)}));
    }
  if (out.size() != 120) throw std::logic_error("expected 120 cusp-supported classes");
  return out;
}

inline std::vector<std::vector<long>> cusp_class_gram(bool lex_last = false) {
  return detail::monomial_gram(cusp_support_classes(lex_last));
}

inline int rank_cusp_classes() {
  int first = rank_int(cusp_class_gram(false));
  int last = rank_int(cusp_class_gram(true));
  if (first != last)
    throw std::logic_error("cusp class rank depends on the triple representative");
  return first;
}

// ------------------------------------------------------------- relation orbit

// A point-weighted divisor as a vector over the 76 slots.
inline std::vector<long> divisor_vector(const std::map<PointRef, long>& d) {
  std::vector<long> v(76, 0);
  for (const auto& [p, mult] : d) {
    if (p.cls == PointClass::Tritangent)
      throw std::invalid_argument("divisor_vector: tritangent entry");
    int slot = p.cls == PointClass::Boundary ? p.index : 36 + p.index;
    v[static_cast<std::size_t>(slot)] += mult;
  }
  return v;
}

// E_v - E_w for the two cusps carrying the extreme multiplicities of the
// lambda character; a principal divisor, hence a relation between classes.
inline std::vector<long> lambda_relation_seed() {
  int v = -1, w = -1;
  for (const RayMultiplicity& rm : divisor_of_lambda()) {
    if (rm.point.cls != PointClass::Cusp) continue;
    if (rm.n == 2) v = rm.point.index;
    if (rm.n == -2) w = rm.point.index;
  }
  if (v < 0 || w < 0 || v == w)
    throw std::logic_error("lambda divisor lacks the extreme cusp pair");
  std::vector<long> sv = divisor_vector(ev_class(v));
  std::vector<long> sw = divisor_vector(ev_class(w));
  for (int i = 0; i < 76; ++i)
    sv[static_cast<std::size_t>(i)] -= sw[static_cast<std::size_t>(i)];
  return sv;
}

namespace detail {

// Permutations of the 76 slots induced by the reflection generators.
inline const std::vector<std::array<int, 76>>& slot_permutations() {
  static const std::vector<std::array<int, 76>> perms = [] {
    std::vector<std::array<int, 76>> out;
    for (const OrthMatrix& g : boundary_reflections()) {
      std::vector<int> pb = permutation_on(g, PointClass::Boundary);
      std::vector<int> pc = permutation_on(g, PointClass::Cusp);
      std::array<int, 76> p{};
      for (int i = 0; i < 36; ++i) p[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)];
      for (int i = 0; i < 40; ++i) p[static_cast<std::size_t>(36 + i)] = 36 + pc[static_cast<std::size_t>(i)];
      out.push_back(p);
    }
    return out;
  }();
  return perms;
}

}  // namespace detail

// Rank of the span of the full group orbit of a 76-slot vector.
inline int orbit_span_rank(const std::vector<long>& seed) {
  if (seed.size() != 76) throw std::invalid_argument("orbit_span_rank: need 76 slots");
  const auto& perms = detail::slot_permutations();
  std::set<std::vector<long>> seen{seed};
  std::vector<std::vector<long>> work{seed};
  while (!work.empty()) {
    std::vector<long> cur = std::move(work.back());
    work.pop_back();
    for (const auto& p : perms) {
      std::vector<long> img(76);
      for (int i = 0; i < 76; ++i)
        img[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = cur[static_cast<std::size_t>(i)];
      if (seen.insert(img).second) work.push_back(std::move(img));
    }
    if (seen.size() > 100000) throw std::logic_error("orbit_span_rank: orbit too large");
  }
  std::vector<std::vector<long>> rows(seen.begin(), seen.end());
  return rank_int(rows);
}

inline int relation_space_rank() { return orbit_span_rank(lambda_relation_seed()); }

// --------------------------------------------------- the extra invariant span

// Integer combination of degree-two monomials.
using ClassVector = std::map<DivisorMonomial, long>;

// For the distinguished root: sum of B_pair * B_triple over the sixty
// pair-inside-triple index choices, minus the sixty disjoint ones.
inline ClassVector top_pair_triple_class() {
  ClassVector cls;
  auto mono = [](int ra, int rb) {
    return DivisorMonomial(
        {boundary_id(root_boundary_point(ra)), boundary_id(root_boundary_point(rb))});
  };
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      int pair = pair_root_index(i, j);
      for (int k = 1; k <= 6; ++k) {
        if (k == i || k == j) continue;
        cls[mono(pair, triple_root_index(i, j, k))] += 1;
      }
      for (int k = 1; k <= 6; ++k)
        for (int l = k + 1; l <= 6; ++l)
          for (int m = l + 1; m <= 6; ++m) {
            if (k == i || k == j || l == i || l == j || m == i || m == j) continue;
            cls[mono(pair, triple_root_index(k, l, m))] -= 1;
          }
    }
  return cls;
}

// One class per boundary divisor: the distinguished root's class moved by a
// fixed transporter witness. Breadth-first witnesses make this deterministic.
inline const std::vector<ClassVector>& pair_triple_classes() {
  static const std::vector<ClassVector> classes = [] {
    const int top_root = static_cast<int>(positive_roots().size()) - 1;
    const int base = root_boundary_point(top_root);
    const ClassVector base_class = top_pair_triple_class();
    auto witnesses = transporters(boundary_reflections(), PointClass::Boundary, base);
    std::vector<ClassVector> out;
    for (int b = 0; b < 36; ++b) {
      if (!witnesses[static_cast<std::size_t>(b)])
        throw std::logic_error("boundary point unreachable from the base root");
      std::vector<int> perm =
          permutation_on(*witnesses[static_cast<std::size_t>(b)], PointClass::Boundary);
      ClassVector moved;
      for (const auto& [m, coeff] : base_class) {
        const auto& f = m.factors();
        moved[DivisorMonomial({boundary_id(perm[static_cast<std::size_t>(f[0].index)]),
                               boundary_id(perm[static_cast<std::size_t>(f[1].index)])})] += coeff;
      }
      out.push_back(std::move(moved));
    }
    return out;
  }();
  return classes;
}

// ------------------------------------------------------ decomposition of A^2

struct A2DecompositionReport {
  int cusp_rank;       // the 120 cusp-supported classes
  int squares_rank;    // after adding the 36 squares
  int full_rank;       // after adding the 36 pair-triple classes

  int square_increment() const { return squares_rank - cusp_rank; }
  int invariant_increment() const { return full_rank - squares_rank; }
};

namespace detail {

// Gram of sparse degree-two class vectors under the quadruple product.
inline std::vector<std::vector<long>> class_vector_gram(const std::vector<ClassVector>& cs) {
  const std::size_t n = cs.size();
  using Flat = std::vector<std::pair<std::array<int, 2>, long>>;
  std::vector<Flat> flat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, coeff] : cs[i]) {
      if (m.degree() != 2)
        throw std::invalid_argument("class_vector_gram: degree-two classes only");
      flat[i].push_back(
          {{divisor_slot(m.factors()[0]), divisor_slot(m.factors()[1])}, coeff});
    }
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long acc = 0;
      for (const auto& [ma, ca] : flat[i])
        for (const auto& [mb, cb] : flat[j])
          acc += ca * cb * quad_slots(ma[0], ma[1], mb[0], mb[1]);
      g[i][j] = g[j][i] = acc;
    }
  return g;
}

}  // namespace detail

// Gram of the 120 cusp-supported classes, the 36 squares and the 36
// pair-triple classes, in that order.
inline std::vector<std::vector<long>> decomposition_gram() {
  std::vector<ClassVector> cs;
  for (const DivisorMonomial& m : cusp_support_classes()) cs.push_back({{m, 1}});
  for (int i = 0; i < 36; ++i)
    cs.push_back({{DivisorMonomial({boundary_id(i), boundary_id(i)}), 1}});
  for (const ClassVector& c : pair_triple_classes()) cs.push_back(c);
  return detail::class_vector_gram(cs);
}

inline A2DecompositionReport a2_decomposition_report() {
  std::vector<std::vector<long>> g = decomposition_gram();
  auto leading = [&](int n) {
    std::vector<std::vector<long>> sub;
    for (int i = 0; i < n; ++i) {
      const auto& row = g[static_cast<std::size_t>(i)];
      sub.emplace_back(row.begin(), row.begin() + n);
    }
    return sub;
  };
  A2DecompositionReport r{rank_int(leading(120)), rank_int(leading(156)),
                          rank_int(g)};
  if (r.cusp_rank != 120 || r.square_increment() != 21 || r.invariant_increment() != 6)
    throw std::logic_error("codimension-two decomposition ranks disagree");
  return r;
}

// ------------------------------------------------------------- pairing survey

// Degree-three monomials that can pair nontrivially: distinct factors mutually
// perpendicular, at most one distinct cusp, no tritangents.
inline std::vector<DivisorMonomial> admissible_triple_monomials() {
  const auto& perp = detail::perp_table();
  std::vector<DivisorMonomial> out;
  for (int a = 0; a < 76; ++a)
    for (int b = a; b < 76; ++b)
      for (int c = b; c < 76; ++c) {
        int slots[3] = {a, b, c};
        bool ok = true;
        int distinct_cusps = 0;
        for (int i = 0; i < 3 && ok; ++i) {
          if (slots[i] >= 36 && (i == 0 || slots[i] != slots[i - 1])) ++distinct_cusps;
          for (int j = i + 1; j < 3 && ok; ++j) {
            if (slots[i] == slots[j]) continue;
            if (!perp[static_cast<std::size_t>(slots[i])][static_cast<std::size_t>(slots[j])])
              ok = false;
          }
        }
        if (!ok || distinct_cusps > 1) continue;
        auto id = [](int s) { return s < 36 ? boundary_id(s) : cusp_id(s - 36); };
        out.push_back(DivisorMonomial({id(a), id(b), id(c)}));
      }
  return out;
}

// Rank of the pairing between the 76 divisors and the admissible degree-three
// monomials. Reported, not asserted: nondegeneracy on this span is open.
inline std::pair<int, int> pairing_rank_survey() {
  std::vector<DivisorMonomial> cols = admissible_triple_monomials();
  std::vector<std::vector<long>> rows(76, std::vector<long>(cols.size()));
  for (int d = 0; d < 76; ++d) {
    auto id = d < 36 ? boundary_id(d) : cusp_id(d - 36);
    for (std::size_t c = 0; c < cols.size(); ++c)
      rows[static_cast<std::size_t>(d)][c] = quad_product(cols[c] * DivisorMonomial({id}));
  }
  return {rank_int(rows), static_cast<int>(cols.size())};
}

}  // namespace crv
