#pragma once

// Verification harness: every reproducible number in the library as a named
// check with an expected value, a provenance tag and a computed result.
// Provenance vocabulary: "literature" for values quoted from the source
// material, "derived" for values this library recomputes from definitions,
// "definition" for immediate consequences of the constructions.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crv/chowrings.hpp"
#include "crv/exact.hpp"
#include "crv/fgeom.hpp"
#include "crv/gram.hpp"
#include "crv/ledger.hpp"
#include "crv/orthgroup.hpp"
#include "crv/roots.hpp"
#include "crv/tables.hpp"
#include "crv/toricfan.hpp"

namespace crv {

// Raised for missing or unreadable reference files; callers map it to a
// usage/I-O exit status distinct from verification failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationReport {
  std::string id;
  std::string description;
  std::string provenance;
  std::string expected;
  std::string computed;
  std::string status;  // pass | fail | flagged-discrepancy
  long ms = 0;
};

namespace detail {

struct VerificationCheck {
  std::string id;
  std::string description;
  std::string provenance;
  std::string expected;
  std::string source;  // one-line origin note shown in explain mode
  std::vector<std::string> deps;
  std::function<std::string()> compute;
  bool flagged = false;  // documented inconsistency: reported, never a failure
};

inline std::string int_list(const std::vector<long>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

inline std::string int_list(const std::vector<int>& xs) {
  std::vector<long> l(xs.begin(), xs.end());
  return int_list(l);
}

inline std::string profile_str(const PerpProfile& p) {
  return int_list(std::vector<long>{p.cusps, p.tritangents, p.boundaries});
}

// Uniform perpendicularity profile of a class; throws if not uniform.
inline PerpProfile class_profile(PointClass c) {
  const Geometry& geo = geometry();
  PerpProfile first = geo.perp_profile({c, 0});
  for (int i = 1; i < geo.count(c); ++i)
    if (geo.perp_profile({c, i}) != first)
      throw std::logic_error("perpendicularity profile is not class-uniform");
  return first;
}

inline std::string golden_dir() {
  if (const char* env = std::getenv("CRV_GOLDEN_DIR")) return env;
#ifdef CRV_GOLDEN_DIR_DEFAULT
  return CRV_GOLDEN_DIR_DEFAULT;
#else
  return "tests/golden";
#endif
}

inline std::string slurp_reference(const std::string& name) {
  std::string path = golden_dir() + "/" + name;
  std::ifstream f(path);
  if (!f.good()) throw IoError("cannot read reference table " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string table_check(const std::string& which, const std::string& file) {
  std::string regenerated = render_text(catalog(which));
  std::string reference = slurp_reference(file);
  if (regenerated == reference) return "byte-identical";
  std::size_t at = 0;
  while (at < regenerated.size() && at < reference.size() &&
         regenerated[at] == reference[at])
    ++at;
  return "differs at byte " + std::to_string(at);
}

// First quadruple of mutually perpendicular boundary indices, scan order.
inline std::array<int, 4> perp_quadruple() {
  const Geometry& geo = geometry();
  const auto& pts = geo.points(PointClass::Boundary);
  auto perp = [&](int a, int b) {
    return geo.perp(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
  };
  for (int a = 0; a < 36; ++a)
    for (int b = a + 1; b < 36; ++b) {
      if (!perp(a, b)) continue;
      for (int c = b + 1; c < 36; ++c) {
        if (!perp(a, c) || !perp(b, c)) continue;
        for (int d = c + 1; d < 36; ++d)
          if (perp(a, d) && perp(b, d) && perp(c, d)) return {a, b, c, d};
      }
    }
  throw std::logic_error("no perpendicular quadruple found");
}

inline Fan star_of_doubled(const NVec& doubled) {
  std::vector<NVec> pts = weyl_ray_points();
  auto it = std::find(pts.begin(), pts.end(), doubled);
  if (it == pts.end()) throw std::logic_error("ray is not in the chamber fan");
  return star_fan(weyl_fan(), static_cast<int>(it - pts.begin()));
}

inline std::vector<VerificationCheck> make_checks() {
  std::vector<VerificationCheck> cs;
  auto add = [&](VerificationCheck c) { cs.push_back(std::move(c)); };

  // ------------------------------------------------------------- geometry
  add({"geometry.point_counts",
       "projective point counts by class (cusps, tritangents, boundaries)",
       "literature", "(40, 45, 36)",
       "counts of the quadratic-form value classes on the 121 lines",
       {},
       [] {
         const Geometry& g = geometry();
         return int_list(std::vector<long>{g.count(PointClass::Cusp),
                                           g.count(PointClass::Tritangent),
                                           g.count(PointClass::Boundary)});
       }});
  add({"geometry.total_points", "lines of the five-dimensional space over F3",
       "definition", "121", "(3^5 - 1) / 2 lines in total",
       {"geometry.point_counts"},
       [] {
         const Geometry& g = geometry();
         return std::to_string(g.count(PointClass::Cusp) +
                               g.count(PointClass::Tritangent) +
                               g.count(PointClass::Boundary));
       }});
  add({"geometry.boundary_profile",
       "perpendicular partners of a boundary point (cusps, tritangents, boundaries)",
       "literature", "(10, 15, 15)",
       "incidence counts behind the boundary divisor intersections",
       {"geometry.point_counts"},
       [] { return profile_str(class_profile(PointClass::Boundary)); }});
  add({"geometry.tritangent_profile",
       "perpendicular partners of a tritangent point (cusps, tritangents, boundaries)",
       "literature", "(16, 12, 12)",
       "incidence counts behind the tritangent divisor intersections",
       {"geometry.point_counts"},
       [] { return profile_str(class_profile(PointClass::Tritangent)); }});
  add({"geometry.cusp_profile",
       "perpendicular partners of a cusp point (cusps, tritangents, boundaries)",
       "literature", "(13, 18, 9)",
       "incidence counts behind the cusp divisor intersections; the cusp "
       "count includes the point itself",
       {"geometry.point_counts"},
       [] { return profile_str(class_profile(PointClass::Cusp)); }});

  // ---------------------------------------------------------------- group
  add({"group.reflection_order",
       "order of the group generated by the 36 boundary reflections",
       "literature", "51840", "the Weyl group of type E6",
       {"geometry.point_counts"},
       [] { return std::to_string(reflection_group().size()); }});
  add({"group.full_order", "order after adjoining the negated identity",
       "literature", "103680", "the full isometry group of the form",
       {"group.reflection_order"},
       [] { return std::to_string(full_group().size()); }});
  add({"group.transitivity", "orbit sizes on the three point classes",
       "literature", "(40), (45), (36)",
       "the reflection group acts transitively on each class",
       {"group.reflection_order"},
       [] {
         auto gens = boundary_reflections();
         return int_list(orbit_sizes(gens, PointClass::Cusp)) + ", " +
                int_list(orbit_sizes(gens, PointClass::Tritangent)) + ", " +
                int_list(orbit_sizes(gens, PointClass::Boundary));
       }});
  add({"group.tritangent_negation",
       "negated tritangent reflections lie in the reflection subgroup with order two",
       "literature", "45 of 45",
       "the tritangent points give involutions already inside the Weyl group",
       {"group.reflection_order"},
       [] {
         const Geometry& geo = geometry();
         const GroupSet& w = reflection_group();
         int good = 0;
         for (const F3Vec& v : geo.points(PointClass::Tritangent)) {
           OrthMatrix g = OrthMatrix::negated_identity() * reflection(v);
           if (w.contains(g) && !(g == OrthMatrix::identity()) &&
               g * g == OrthMatrix::identity())
             ++good;
         }
         return std::to_string(good) + " of 45";
       }});
  add({"group.pair_orbit_counts",
       "orbit counts on ordered point pairs (BB, CC, TT, BC, BT, CT)",
       "literature", "(3, 3, 3, 2, 2, 2)",
       "diagonal, perpendicular and generic pairs for equal classes; "
       "perpendicular and generic otherwise",
       {"group.transitivity"},
       [] {
         auto gens = boundary_reflections();
         using PC = PointClass;
         std::vector<long> counts = {
             pair_orbit_count(gens, PC::Boundary, PC::Boundary),
             pair_orbit_count(gens, PC::Cusp, PC::Cusp),
             pair_orbit_count(gens, PC::Tritangent, PC::Tritangent),
             pair_orbit_count(gens, PC::Boundary, PC::Cusp),
             pair_orbit_count(gens, PC::Boundary, PC::Tritangent),
             pair_orbit_count(gens, PC::Cusp, PC::Tritangent)};
         return int_list(counts);
       }});
  add({"group.tritangent_pair_sizes",
       "orbit sizes on ordered tritangent pairs",
       "literature", "(1440, 540, 45)",
       "45 choices with 12 perpendicular and 32 generic partners each",
       {"group.transitivity"},
       [] {
         return int_list(pair_orbit_sizes(boundary_reflections(),
                                          PointClass::Tritangent,
                                          PointClass::Tritangent));
       }});
  add({"group.incidence_ranks",
       "ranks of the perpendicularity incidence matrices (BC, BT, CT)",
       "derived", "(16, 21, 25)",
       "computed over the rationals; recorded here as the reference values",
       {"geometry.point_counts"},
       [] {
         using PC = PointClass;
         return int_list(std::vector<long>{
             incidence_rank(PC::Boundary, PC::Cusp),
             incidence_rank(PC::Boundary, PC::Tritangent),
             incidence_rank(PC::Cusp, PC::Tritangent)});
       }});

  // ------------------------------------------------------------------ fan
  add({"fan.rays", "rays of the chamber fan", "literature", "48",
       "24 short and 24 long vectors of the reflection arrangement",
       {},
       [] { return std::to_string(static_cast<int>(weyl_fan().rays.size())); }});
  add({"fan.chambers", "maximal cones of the chamber fan, all unimodular",
       "literature", "192 unimodular",
       "the Weyl chambers of the rank-four subsystem",
       {"fan.rays"},
       [] {
         const Fan& f = weyl_fan();
         std::string s = std::to_string(static_cast<int>(f.max_cones.size()));
         return s + (is_smooth(f) ? " unimodular" : " (not unimodular)");
       }});
  add({"fan.f_vector", "cones per dimension in the chamber fan", "derived",
       "(1, 48, 240, 384, 192)",
       "satisfies the Euler relation and facet pairing of a 3-sphere",
       {"fan.chambers"},
       [] { return int_list(f_vector(weyl_fan())); }});
  add({"fan.chow_ranks", "Chow group ranks of the chamber fourfold",
       "literature", "(1, 44, 102, 44, 1)",
       "alternating binomial sums over the f-vector",
       {"fan.f_vector"},
       [] { return int_list(chow_ranks(weyl_fan())); }});
  add({"fan.long_root_star",
       "star fan of a long root: rays, maximal cones, antipodal ray pairs",
       "literature", "(6, 8, 3)",
       "a product of three projective lines",
       {"fan.chambers"},
       [] {
         Fan s = star_of_doubled(NVec{2, 2, 0, 0});
         int pairs = 0;
         for (std::size_t i = 0; i < s.rays.size(); ++i)
           for (std::size_t j = i + 1; j < s.rays.size(); ++j) {
             bool anti = true;
             for (std::size_t k = 0; k < s.rays[i].size(); ++k)
               if (s.rays[i][k] != -s.rays[j][k]) anti = false;
             pairs += anti;
           }
         return int_list(std::vector<long>{static_cast<long>(s.rays.size()),
                                           static_cast<long>(s.max_cones.size()),
                                           pairs});
       }});
  add({"fan.short_root_star",
       "star fan of the first coordinate ray: rays and middle Chow rank",
       "literature", "(14, 11)",
       "the threefold carrying a boundary divisor before the blow-ups",
       {"fan.chambers"},
       [] {
         Fan s = star_of_doubled(NVec{2, 0, 0, 0});
         std::vector<long> r = chow_ranks(s);
         return int_list(std::vector<long>{static_cast<long>(s.rays.size()), r[1]});
       }});
  add({"fan.surface_shapes",
       "all sixteen surface fans: middle Chow rank and Euler number",
       "literature", "16 x (4, 6)",
       "smooth hexagonal fans, degree-six del Pezzo surfaces",
       {},
       [] {
         for (int i = 0; i < 16; ++i) {
           Fan f = surface_fan(i);
           std::vector<long> r = chow_ranks(f);
           long euler = static_cast<long>(f.max_cones.size());
           if (r.size() != 3 || r[1] != 4 || euler != 6)
             return "surface " + std::to_string(i) + ": " + int_list(r) + ", " +
                    std::to_string(euler);
         }
         return std::string("16 x (4, 6)");
       }});

  // --------------------------------------------------------------- ledger
  add({"ledger.start", "chamber fourfold Chow ranks and Euler number",
       "literature", "(1, 44, 102, 44, 1), 192",
       "starting state of the construction ledger",
       {"fan.chow_ranks"},
       [] {
         VarietyState s = run_naruki_pipeline().stages.front().state;
         return show_ranks(s.chow_ranks) + ", " + std::to_string(s.euler);
       }});
  add({"ledger.milestones",
       "Chow ranks after each blow-up and contraction stage", "literature",
       "(1, 45, 103, 45, 1) -> (1, 57, 127, 57, 1) -> (1, 73, 207, 73, 1) -> "
       "(1, 61, 147, 61, 1)",
       "every quoted intermediate of the construction",
       {"ledger.start", "fan.surface_shapes"},
       [] {
         LedgerTrace t = run_naruki_pipeline();
         std::string s;
         for (std::size_t i = 1; i < t.stages.size(); ++i) {
           if (!s.empty()) s += " -> ";
           s += show_ranks(t.stages[i].state.chow_ranks);
         }
         return s;
       }});
  add({"ledger.final", "final Chow ranks and Euler characteristic",
       "literature", "(1, 61, 147, 61, 1), 271",
       "the cross-ratio compactification",
       {"ledger.milestones"},
       [] {
         VarietyState s = run_naruki_pipeline().final_state();
         return show_ranks(s.chow_ranks) + ", " + std::to_string(s.euler);
       }});
  add({"ledger.euler_consistency",
       "Euler number equals the rank sum and the fourth Chern number",
       "derived", "271 = 271 = 271",
       "three independent routes to the same number",
       {"ledger.final"},
       [] {
         VarietyState s = run_naruki_pipeline().final_state();
         long sum = 0;
         for (long r : s.chow_ranks) sum += r;
         return std::to_string(s.euler) + " = " + std::to_string(sum) + " = " +
                std::to_string(chern4_value());
       }});
  add({"ledger.boundary_replay", "boundary divisor Betti ledger", "literature",
       "(1, 16, 16, 1), 34",
       "projective threefold blown up in five points and ten lines",
       {},
       [] {
         VarietyState s = boundary_divisor_replay();
         return show_ranks(s.chow_ranks) + ", " + std::to_string(s.euler);
       }});
  add({"ledger.tritangent_replay", "tritangent divisor Betti ledger",
       "literature", "(1, 29, 29, 1), 60",
       "projective threefold blown up in twelve curves and sixteen points",
       {},
       [] {
         VarietyState s = tritangent_divisor_replay();
         return show_ranks(s.chow_ranks) + ", " + std::to_string(s.euler);
       }});

  // ----------------------------------------------------------------- chow
  add({"chow.invariant_table",
       "quadruple numbers of the symmetrized classes (B4, B3C, B2C2, BC3, C4)",
       "literature", "(-12528, 6480, -2160, 720, -240)",
       "the symmetrized intersection table",
       {},
       [] {
         const SmallRing& r = inv_ring();
         RingElem b = r.gen("Bhat"), c = r.gen("Chat");
         std::string s = "(";
         for (int k = 4; k >= 0; --k) {
           if (k < 4) s += ", ";
           s += to_string(inv_eval4(b.pow(k) * c.pow(4 - k)));
         }
         return s + ")";
       }});
  add({"chow.mixed_forced",
       "mixed quadruples forced by BC = -3C2 and the pure cusp number",
       "derived", "(6480, -2160, 720)",
       "each mixed value is -3 times the next one down the chain",
       {"chow.invariant_table"},
       [] {
         const SmallRing& r = inv_ring();
         BigRational c4 = inv_eval4(r.gen("Chat").pow(4));
         BigRational bc3 = -3 * c4;
         BigRational b2c2 = -3 * bc3;
         BigRational b3c = -3 * b2c2;
         return "(" + to_string(b3c) + ", " + to_string(b2c2) + ", " +
                to_string(bc3) + ")";
       }});
  add({"chow.hyperplane_numbers",
       "hyperplane class: H4, H3c1, H2(c1^2+c2), Hc1c2", "literature",
       "(27, 27, 81, 54)",
       "degree 27 of the embedded moduli space and its curvature corrections",
       {"chow.invariant_table"},
       [] {
         RingElem h = hyperplane_class(), c1 = chern1(), c2 = chern2();
         return "(" + to_string(inv_eval4(h.pow(4))) + ", " +
                to_string(inv_eval4(h.pow(3) * c1)) + ", " +
                to_string(inv_eval4(h.pow(2) * (c1 * c1 + c2))) + ", " +
                to_string(inv_eval4(h * c1 * c2)) + ")";
       }});
  add({"chow.chern_numbers",
       "Chern numbers of the fourfold: c1^4, c1^2c2, c2^2, c1c3, c4",
       "literature", "(-213, 54, 108, 238, 271)",
       "the full characteristic-number list",
       {"chow.invariant_table"},
       [] {
         RingElem c1 = chern1(), c2 = chern2(), c3 = chern3();
         return "(" + to_string(inv_eval4(c1.pow(4))) + ", " +
                to_string(inv_eval4(c1.pow(2) * c2)) + ", " +
                to_string(inv_eval4(c2 * c2)) + ", " +
                to_string(inv_eval4(c1 * c3)) + ", " +
                std::to_string(chern4_value()) + ")";
       }});
  add({"chow.todd", "degree-four Todd number", "literature", "1",
       "forced for any smooth projective fourfold with trivial higher "
       "cohomology of the structure sheaf",
       {"chow.chern_numbers"},
       [] { return to_string(todd4_check()); }});
  add({"chow.riemann_roch",
       "Euler characteristic polynomial of multiples of the hyperplane class",
       "literature", "(9/8, 9/4, 27/8, 9/4, 1); chi(H) = 10",
       "ten sections cut out the embedding into nine-dimensional projective "
       "space",
       {"chow.hyperplane_numbers"},
       [] {
         std::string s = "(";
         bool first = true;
         for (const BigRational& c : riemann_roch_coefficients()) {
           if (!first) s += ", ";
           first = false;
           s += to_string(c);
         }
         return s + "); chi(H) = " + to_string(riemann_roch(1));
       }});
  add({"chow.symmetrization",
       "symmetrized classes reduced to the (B, C) basis: T, K, H, E",
       "literature", "T (25/4, 27/4); K (-1/4, 1/4); H (1/4, 3/4); E (1/4, -1/4)",
       "tritangent elimination, canonical and hyperplane recipes, and the "
       "cusp class from its point-weighted divisor",
       {},
       [] {
         auto fmt = [](std::pair<BigRational, BigRational> bc) {
           return "(" + to_string(bc.first) + ", " + to_string(bc.second) + ")";
         };
         SymmetrizedClass t{ratio(1), ratio(0), ratio(0)};
         SymmetrizedClass k{ratio(3, 45), ratio(-24, 36), ratio(-8, 40)};
         SymmetrizedClass h{ratio(1, 45), ratio(4, 36), ratio(24, 40)};
         SymmetrizedClass e = symmetrize(ev_class(0));
         return "T " + fmt(t.bc_reduced()) + "; K " + fmt(k.bc_reduced()) +
                "; H " + fmt(h.bc_reduced()) + "; E " + fmt(e.bc_reduced());
       }});
  add({"chow.b0_table",
       "boundary divisor triples (Bb3, Bb2Cb, BbCb2, Cb3), both routes",
       "literature", "(-165, 180, -60, 20)",
       "normal-form rewriting against the del Pezzo and cusp-slice spreads",
       {},
       [] {
         const SmallRing& b = b0_ring();
         RingElem bb = b.gen("Bb"), cb = b.gen("Cb");
         return "(" + to_string(b0_triple(bb.pow(3))) + ", " +
                to_string(b0_triple(bb.pow(2) * cb)) + ", " +
                to_string(b0_triple(bb * cb.pow(2))) + ", " +
                to_string(b0_triple(cb.pow(3))) + ")";
       }});
  add({"chow.b0_adjunction",
       "canonical class of a boundary divisor agrees with the adjunction route",
       "literature", "-(2Bb + Cb)/5 both ways",
       "restriction of the ambient canonical class plus self-intersection",
       {"chow.b0_table", "chow.symmetrization"},
       [] {
         RingElem direct = b0_canonical();
         RingElem adjunct = restrict_to_b0(canonical_class()) + b0_self_intersection();
         return direct == adjunct ? "-(2Bb + Cb)/5 both ways"
                                  : "routes disagree: " + direct.str() + " vs " +
                                        adjunct.str();
       }});
  add({"chow.b0_chern",
       "boundary divisor Chern data: c2 ansatz, c1c2, and c3 = Euler number",
       "literature", "(4/25, -36/25); c1c2 = 24; c3 = 34 = 34",
       "two-by-two linear system plus the blow-up Euler count",
       {"chow.b0_table"},
       [] {
         B0ChernReport r = b0_chern_check();
         std::string s = "(" + to_string(r.n) + ", " + to_string(r.m) + ")";
         s += "; c1c2 = " + to_string(r.c1c2);
         s += "; c3 = " + std::to_string(r.euler_replay) + " = " +
              std::to_string(r.euler_direct);
         if (!r.q_adjunction || !r.b0_adjunction) s += "; adjunction failed";
         if (r.c3 != r.euler_replay) s += "; stated c3 differs";
         return s;
       }});
  add({"chow.cusp_table",
       "cusp divisor quadruples (CB1B2B3, CB2B, CB3, C2BB, C2B2, C3B, C4)",
       "literature", "(1, 0, 0, -1, 0, 2, -6)",
       "the cusp intersection table",
       {},
       [] {
         CuspReport r = cusp_numbers();
         return "(" + to_string(r.c0_b1b2b3) + ", " + to_string(r.c0_bi2_bj) +
                ", " + to_string(r.c0_bi3) + ", " + to_string(r.c0sq_bibj) +
                ", " + to_string(r.c0sq_bi2) + ", " + to_string(r.c0cube_bi) +
                ", " + to_string(r.c0_fourth) + ")";
       }});
  add({"chow.cusp_symmetrized",
       "symmetrized cusp numbers C4 and BC3 with their forced relation",
       "literature", "(-240, 720) consistent",
       "forty disjoint cusp divisors and the nine boundary partners each",
       {"chow.cusp_table", "chow.invariant_table"},
       [] {
         CuspReport r = cusp_numbers();
         return "(" + to_string(r.chat_fourth) + ", " + to_string(r.bhat_chat3) +
                (r.relation_consistent ? ") consistent" : ") inconsistent");
       }});
  add({"chow.invariant_consistency",
       "restriction recomputation of the symmetrized quadruple table",
       "derived", "5 of 5",
       "each table entry re-derived through divisor restrictions",
       {"chow.invariant_table", "chow.b0_table", "chow.cusp_table"},
       [] {
         int ok = 0;
         auto entries = invariant_consistency();
         for (const ConsistencyEntry& e : entries) ok += e.match;
         return std::to_string(ok) + " of " + std::to_string(entries.size());
       }});
  add({"chow.tritangent_relations",
       "tritangent divisor: canonical and hyperplane identities, first Chow rank",
       "literature", "(true, true, 29)",
       "linear identities in the tritangent class space",
       {},
       [] {
         TritangentReport r = tritangent_relations();
         return std::string("(") + (r.canonical_match ? "true" : "false") +
                ", " + (r.hyperplane_match ? "true" : "false") + ", " +
                std::to_string(r.rank_a1) + ")";
       }});
  add({"chow.flag_boundary_sign",
       "documented inconsistency: printed signs of two boundary triples",
       "literature", "165, 60 as printed",
       "running text and proposition disagree; the del Pezzo restriction "
       "oracle sides with the proposition",
       {"chow.b0_table"},
       [] {
         const SmallRing& b = b0_ring();
         return to_string(b0_triple(b.gen("Bb").pow(3))) + ", " +
                to_string(b0_triple(b.gen("Bb") * b.gen("Cb").pow(2))) +
                " by the oracle";
       },
       true});
  add({"chow.flag_tritangent_chern",
       "documented inconsistency: stated third Chern number of a tritangent "
       "divisor",
       "literature", "92 as stated",
       "Betti sum and blow-up count both give the Euler number instead",
       {"ledger.tritangent_replay"},
       [] {
         auto [stated, replay] = t0_chern3_candidates();
         (void)stated;
         return std::to_string(replay) + " by Euler count";
       },
       true});

  // ----------------------------------------------------------------- gram
  add({"gram.quad_samples",
       "quadruple oracle spot values (B0B1B2B3, B2BB, B2B2, B3B, B4, CBBB, "
       "C2BB, C3B, C4, C2B2)",
       "literature", "(1, -1, 1, 1, -3, 1, -1, 2, -6, 0)",
       "the two quadruple tables evaluated on incidence-checked ids",
       {"geometry.boundary_profile", "geometry.cusp_profile"},
       [] {
         auto [a, b, c, d] = perp_quadruple();
         DivisorId A = boundary_id(a), B = boundary_id(b), C = boundary_id(c),
                   D = boundary_id(d);
         const CuspTriad& tr = cusp_triads()[0];
         DivisorId C0 = cusp_id(0);
         DivisorId p0 = boundary_id(root_boundary_point(tr.triples[0][0]));
         DivisorId p1 = boundary_id(root_boundary_point(tr.triples[1][0]));
         DivisorId p2 = boundary_id(root_boundary_point(tr.triples[2][0]));
         auto q = [](DivisorId w, DivisorId x, DivisorId y, DivisorId z) {
           return quad_product(DivisorMonomial({w, x, y, z}));
         };
         std::vector<long> vals = {
             q(A, B, C, D),    q(A, A, B, C),    q(A, A, B, B),
             q(A, A, A, B),    q(A, A, A, A),    q(C0, p0, p1, p2),
             q(C0, C0, p0, p1), q(C0, C0, C0, p0), q(C0, C0, C0, C0),
             q(C0, C0, p0, p0)};
         return int_list(vals);
       }});
  add({"gram.rank_b2", "rank of the 36 x 36 square-class matrix", "literature",
       "21", "minus three on the diagonal, one at perpendicular pairs",
       {"gram.quad_samples"},
       [] { return std::to_string(rank_b2_matrix()); }});
  add({"gram.rank_306",
       "rank of the 306 codimension-two boundary classes and the 270 pairs alone",
       "literature", "(147, 146)",
       "the pair classes span a subspace of codimension one",
       {"gram.quad_samples"},
       [] {
         auto [full, pairs] = rank_306();
         return int_list(std::vector<long>{full, pairs});
       }});
  add({"gram.rank_cusp", "rank of the 120 cusp-supported classes",
       "literature", "120",
       "forty disjoint rank-three blocks, one per cusp",
       {"gram.quad_samples"},
       [] { return std::to_string(rank_cusp_classes()); }});
  add({"gram.relation_rank",
       "rank of the group orbit of the cross-ratio relation vector",
       "literature", "15",
       "independent relations between boundary and cusp divisor classes",
       {"group.reflection_order"},
       [] { return std::to_string(relation_space_rank()); }});
  add({"gram.decomposition",
       "decomposition of the middle Chow rank into invariant blocks",
       "literature", "120 + 21 + 6 = 147",
       "cusp-supported block, square block and the pair-triple classes",
       {"gram.rank_cusp", "gram.rank_b2"},
       [] {
         A2DecompositionReport r = a2_decomposition_report();
         return std::to_string(r.cusp_rank) + " + " +
                std::to_string(r.square_increment()) + " + " +
                std::to_string(r.invariant_increment()) + " = " +
                std::to_string(r.full_rank);
       }});
  add({"gram.invariant_sum",
       "sum of all boundary quadruples equals the symmetrized fourth power",
       "derived", "-12528 = -12528",
       "consistency between the incidence oracle and the invariant ring",
       {"gram.quad_samples", "chow.invariant_table"},
       [] {
         long total = 0;
         for (int i = 0; i < 36; ++i)
           for (int j = 0; j < 36; ++j)
             for (int k = 0; k < 36; ++k)
               for (int l = 0; l < 36; ++l)
                 total += quad_slots(i, j, k, l);
         BigRational b4 = inv_eval4(inv_ring().gen("Bhat").pow(4));
         return std::to_string(total) + " = " + to_string(b4);
       }});

  // --------------------------------------------------------------- tables
  add({"tables.boundary", "boundary divisor catalog regenerates byte-identically",
       "literature", "byte-identical",
       "walls and rays against the committed reference",
       {"geometry.point_counts"},
       [] { return table_check("bd", "bd.txt"); }});
  add({"tables.tritangent",
       "tritangent divisor catalog regenerates byte-identically", "literature",
       "byte-identical", "Schlaefli plane labels against the committed reference",
       {"geometry.point_counts"},
       [] { return table_check("td", "td.txt"); }});
  add({"tables.cusp", "cusp divisor catalog regenerates byte-identically",
       "literature", "byte-identical",
       "surface equations and triad labels against the committed reference",
       {"geometry.point_counts"},
       [] { return table_check("cd", "cd.txt"); }});
  add({"tables.lambda",
       "cross-ratio divisor table regenerates byte-identically", "derived",
       "byte-identical", "ray multiplicities against the committed reference",
       {"geometry.point_counts"},
       [] { return table_check("lambda", "lambda.txt"); }});

  return cs;
}

}  // namespace detail

inline const std::vector<detail::VerificationCheck>& verification_checks() {
  static const std::vector<detail::VerificationCheck> checks = detail::make_checks();
  return checks;
}

inline VerificationReport run_check(const detail::VerificationCheck& c) {
  VerificationReport r{c.id, c.description, c.provenance, c.expected, "", "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    r.computed = c.compute();
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (r.computed == r.expected)
    r.status = "pass";
  else
    r.status = c.flagged ? "flagged-discrepancy" : "fail";
  return r;
}

// Runs all checks, or one check and its transitive dependencies, in registry
// order. Throws std::invalid_argument for an unknown id.
inline std::vector<VerificationReport> run_verification(
    const std::string& only = "",
    const std::function<void(const VerificationReport&)>& on_report = nullptr) {
  const auto& checks = verification_checks();
  std::set<std::string> wanted;
  if (!only.empty()) {
    std::map<std::string, const detail::VerificationCheck*> by_id;
    for (const auto& c : checks) by_id[c.id] = &c;
    if (!by_id.count(only)) throw std::invalid_argument("unknown check id " + only);
    std::vector<std::string> todo{only};
    while (!todo.empty()) {
      std::string id = todo.back();
      todo.pop_back();
      if (!wanted.insert(id).second) continue;
      for (const std::string& d : by_id.at(id)->deps) todo.push_back(d);
    }
  }
  std::vector<VerificationReport> out;
  for (const auto& c : checks) {
    if (!only.empty() && !wanted.count(c.id)) continue;
    out.push_back(run_check(c));
    if (on_report) on_report(out.back());
  }
  return out;
}

inline bool verification_failed(const std::vector<VerificationReport>& rs) {
  for (const auto& r : rs)
    if (r.status == "fail") return true;
  return false;
}

}  // namespace crv
