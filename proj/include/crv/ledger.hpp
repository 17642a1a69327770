#pragma once

// Exact bookkeeping of Chow ranks and Euler characteristics through a chain
// of blow-ups and contractions. A blow-up along a center Z of codimension c
// adds A^{k-1}(Z) + ... + A^{k-c+1}(Z) to A^k and euler(Z)*(c-1) to the
// Euler characteristic; contracting a divisor ruled as P^1 x V down to V
// removes A^{k-1}(V) from A^k and euler(V) from the Euler characteristic.
//
// All varieties tracked here are smooth projective with algebraic
// cohomology, so euler = sum of the Chow ranks throughout.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crv/toricfan.hpp"

namespace crv {

struct VarietyState {
  std::string name;
  std::vector<long> chow_ranks;  // a_0 .. a_dim
  long euler = 0;

  int dim() const { return static_cast<int>(chow_ranks.size()) - 1; }
};

enum class CenterKind { point, curve, surface };

struct CenterData {
  CenterKind kind;
  int count = 1;
  std::vector<long> chow_ranks;  // of one center
  long euler = 0;
  std::string note;  // where the center data comes from, echoed in traces
};

inline int center_dim(CenterKind k) {
  switch (k) {
    case CenterKind::point: return 0;
    case CenterKind::curve: return 1;
    case CenterKind::surface: return 2;
  }
  throw std::logic_error("center_dim: bad kind");
}

inline std::string show_ranks(const std::vector<long>& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << ")";
  return os.str();
}

namespace detail {

inline void validate_center(const CenterData& c) {
  if (c.count < 0) throw std::invalid_argument("center count negative");
  if (c.chow_ranks.size() != static_cast<std::size_t>(center_dim(c.kind)) + 1)
    throw std::invalid_argument("center ranks do not match its dimension");
  if (c.kind == CenterKind::curve && c.euler != 2)
    throw std::invalid_argument("curve centers must be rational");
  if (c.kind == CenterKind::surface) {
    long sum = 0;
    for (long a : c.chow_ranks) sum += a;
    if (c.euler != sum)
      throw std::invalid_argument("surface center euler must equal its rank sum");
  }
}

}  // namespace detail

inline VarietyState blow_up(const VarietyState& s, const CenterData& c) {
  detail::validate_center(c);
  const int codim = s.dim() - center_dim(c.kind);
  if (codim < 1) throw std::invalid_argument("blow_up: center too large");

  VarietyState out = s;
  auto z = [&c](int i) {
    return (i >= 0 && i < static_cast<int>(c.chow_ranks.size()))
               ? c.chow_ranks[static_cast<std::size_t>(i)]
               : 0L;
  };
  for (int k = 0; k <= s.dim(); ++k)
    for (int j = 1; j <= codim - 1; ++j)
      out.chow_ranks[static_cast<std::size_t>(k)] += c.count * z(k - j);
  out.euler += c.count * c.euler * (codim - 1);
  return out;
}

// Contract `count` disjoint divisors ruled as P^1 x V down to copies of V;
// `v` describes V itself.
inline VarietyState contract(const VarietyState& s, const CenterData& v) {
  detail::validate_center(v);
  if (center_dim(v.kind) != s.dim() - 2)
    throw std::invalid_argument("contract: base is not a divisor ruling");

  VarietyState out = s;
  auto vr = [&v](int i) {
    return (i >= 0 && i < static_cast<int>(v.chow_ranks.size()))
               ? v.chow_ranks[static_cast<std::size_t>(i)]
               : 0L;
  };
  for (int k = 0; k <= s.dim(); ++k)
    out.chow_ranks[static_cast<std::size_t>(k)] -= v.count * vr(k - 1);
  out.euler -= v.count * v.euler;
  return out;
}

// ------------------------------------------------------------- the pipeline

struct LedgerStage {
  std::string action;
  std::string note;
  VarietyState state;
};

struct LedgerTrace {
  std::vector<LedgerStage> stages;
  const VarietyState& final_state() const { return stages.back().state; }
};

namespace detail {

inline void expect_milestone(const VarietyState& got,
                             const std::vector<long>& ranks, long euler) {
  if (got.chow_ranks == ranks && got.euler == euler) return;
  std::ostringstream os;
  os << "pipeline milestone mismatch at '" << got.name << "': expected "
     << show_ranks(ranks) << " euler " << euler << ", got "
     << show_ranks(got.chow_ranks) << " euler " << got.euler;
  throw std::logic_error(os.str());
}

}  // namespace detail

// Replays the compactification chain: the chamber toric fourfold, a point
// blow-up, 12 curve blow-ups, 16 surface blow-ups, then contraction of the
// 12 ruled divisors. Aborts with a diff if any stage leaves the rails.
inline LedgerTrace run_naruki_pipeline() {
  LedgerTrace trace;
  auto record = [&trace](std::string action, std::string note, VarietyState s,
                         const std::vector<long>& ranks, long euler) {
    detail::expect_milestone(s, ranks, euler);
    trace.stages.push_back({std::move(action), std::move(note), std::move(s)});
  };

  VarietyState x{"chamber toric fourfold", chow_ranks(weyl_fan()),
                 static_cast<long>(weyl_fan().max_cones.size())};
  record("start", "ranks and euler computed from the chamber fan", x,
         {1, 44, 102, 44, 1}, 192);

  CenterData pt{CenterKind::point, 1, {1}, 1, "identity point of the torus"};
  x = blow_up(x, pt);
  x.name = "point blow-up";
  record("blow up 1 point", pt.note, x, {1, 45, 103, 45, 1}, 195);

  CenterData curves{CenterKind::curve, 12, {1, 1}, 2,
                    "disjoint smooth rational curves"};
  x = blow_up(x, curves);
  x.name = "curve blow-ups";
  record("blow up 12 curves", curves.note, x, {1, 57, 127, 57, 1}, 243);

  // the surface centers: hexagonal toric surfaces, each blown up in the
  // point created by the first stage
  VarietyState hexagon{"hexagonal surface", chow_ranks(surface_fan(0)),
                       static_cast<long>(surface_fan(0).max_cones.size())};
  for (int i = 1; i < 16; ++i)
    if (chow_ranks(surface_fan(i)) != hexagon.chow_ranks)
      throw std::logic_error("pipeline: subtorus surfaces disagree");
  detail::expect_milestone(hexagon, {1, 4, 1}, 6);
  VarietyState surface_center = blow_up(hexagon, pt);
  detail::expect_milestone(surface_center, {1, 5, 1}, 7);

  CenterData surfaces{CenterKind::surface, 16, surface_center.chow_ranks,
                      surface_center.euler,
                      "subtorus closures blown up in the point"};
  x = blow_up(x, surfaces);
  x.name = "surface blow-ups";
  record("blow up 16 surfaces", surfaces.note, x, {1, 73, 207, 73, 1}, 355);

  // V: the plane blown up in four points
  VarietyState v{"plane", {1, 1, 1}, 3};
  CenterData four_points{CenterKind::point, 4, {1}, 1, "four general points"};
  v = blow_up(v, four_points);
  detail::expect_milestone(v, {1, 5, 1}, 7);

  CenterData ruled{CenterKind::surface, 12, v.chow_ranks, v.euler,
                   "ruled divisors collapsing to the blown-up plane"};
  x = contract(x, ruled);
  x.name = "cross-ratio compactification";
  record("contract 12 ruled divisors", ruled.note, x, {1, 61, 147, 61, 1}, 271);

  const VarietyState& f = trace.final_state();
  long sum = 0;
  for (long a : f.chow_ranks) sum += a;
  if (f.chow_ranks.front() != 1 || f.chow_ranks.back() != 1 ||
      f.chow_ranks[1] != f.chow_ranks[3] || f.euler != sum)
    throw std::logic_error("pipeline: final state violates its invariants");
  return trace;
}

// ---------------------------------------------------- divisor replay chains

// The boundary divisors of the compactification: a three-space blown up in
// five points and then in ten rational curves.
inline VarietyState boundary_divisor_replay() {
  VarietyState x{"three-space", {1, 1, 1, 1}, 4};
  x = blow_up(x, {CenterKind::point, 5, {1}, 1, ""});
  x = blow_up(x, {CenterKind::curve, 10, {1, 1}, 2, ""});
  x.name = "boundary divisor";
  return x;
}

// The tritangent divisors: a three-space blown up in twelve rational curves
// and sixteen points.
inline VarietyState tritangent_divisor_replay() {
  VarietyState x{"three-space", {1, 1, 1, 1}, 4};
  x = blow_up(x, {CenterKind::curve, 12, {1, 1}, 2, ""});
  x = blow_up(x, {CenterKind::point, 16, {1}, 1, ""});
  x.name = "tritangent divisor";
  return x;
}

}  // namespace crv
