// crv: command line front end for the cross-ratio variety library.
//
// One subcommand per module plus `verify`, which runs the whole check
// registry and reports pass/fail/flagged-discrepancy per check. Exit codes:
// 0 success (flagged discrepancies included), 1 verification failure,
// 2 usage or I/O error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crv/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt_longs(const std::vector<long>& xs) { return crv::detail::int_list(xs); }
std::string fmt_ints(const std::vector<int>& xs) { return crv::detail::int_list(xs); }

// ------------------------------------------------------------------ geometry

int run_geometry(bool as_json) {
  using crv::PointClass;
  const crv::Geometry& geo = crv::geometry();
  struct Row {
    const char* name;
    PointClass cls;
  };
  const Row rows[] = {{"cusp", PointClass::Cusp},
                      {"tritangent", PointClass::Tritangent},
                      {"boundary", PointClass::Boundary}};

  if (as_json) {
    json out;
    for (const Row& r : rows) out["counts"][r.name] = geo.count(r.cls);
    for (const Row& r : rows) {
      crv::PerpProfile p = crv::detail::class_profile(r.cls);
      out["perp_profiles"][r.name] = {{"cusps", p.cusps},
                                      {"tritangents", p.tritangents},
                                      {"boundaries", p.boundaries}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "point classes of the projective space over F3\n";
  for (const Row& r : rows)
    std::cout << "  " << r.name << std::string(12 - std::string(r.name).size(), ' ')
              << geo.count(r.cls) << "\n";
  std::cout << "  total       "
            << geo.count(PointClass::Cusp) + geo.count(PointClass::Tritangent) +
                   geo.count(PointClass::Boundary)
            << "\n\n";
  std::cout << "perpendicularity profiles (cusps, tritangents, boundaries)\n";
  for (const Row& r : rows) {
    crv::PerpProfile p = crv::detail::class_profile(r.cls);
    std::cout << "  " << r.name << std::string(12 - std::string(r.name).size(), ' ')
              << "(" << p.cusps << ", " << p.tritangents << ", " << p.boundaries
              << ")\n";
  }
  return 0;
}

// --------------------------------------------------------------------- group

int run_group(bool order, bool orbits, bool pair_orbits, bool ranks, bool as_json) {
  using crv::PointClass;
  bool all = !order && !orbits && !pair_orbits && !ranks;
  auto gens = crv::boundary_reflections();

  json out;
  std::string text;

  if (all || order) {
    int w = crv::reflection_group().size();
    int full = crv::full_group().size();
    text += "group orders\n";
    text += "  generators             " + std::to_string(gens.size()) + "\n";
    text += "  reflection group       " + std::to_string(w) + "\n";
    text += "  with negated identity  " + std::to_string(full) + "\n";
    out["generators"] = gens.size();
    out["order"] = w;
    out["full_order"] = full;
  }
  if (all || orbits) {
    if (!text.empty()) text += "\n";
    text += "orbit sizes\n";
    const std::pair<const char*, PointClass> classes[] = {
        {"cusp", PointClass::Cusp},
        {"tritangent", PointClass::Tritangent},
        {"boundary", PointClass::Boundary}};
    for (auto [name, cls] : classes) {
      std::vector<int> sizes = crv::orbit_sizes(gens, cls);
      text += "  " + std::string(name) + std::string(12 - std::string(name).size(), ' ') +
              fmt_ints(sizes) + "\n";
      out["orbits"][name] = sizes;
    }
  }
  if (all || pair_orbits) {
    if (!text.empty()) text += "\n";
    text += "orbits on ordered point pairs\n";
    const std::tuple<const char*, PointClass, PointClass> pairs[] = {
        {"boundary x boundary", PointClass::Boundary, PointClass::Boundary},
        {"cusp x cusp", PointClass::Cusp, PointClass::Cusp},
        {"tritangent x tritangent", PointClass::Tritangent, PointClass::Tritangent},
        {"boundary x cusp", PointClass::Boundary, PointClass::Cusp},
        {"boundary x tritangent", PointClass::Boundary, PointClass::Tritangent},
        {"cusp x tritangent", PointClass::Cusp, PointClass::Tritangent}};
    for (auto [name, a, b] : pairs) {
      int n = crv::pair_orbit_count(gens, a, b);
      text += "  " + std::string(name) + std::string(25 - std::string(name).size(), ' ') +
              std::to_string(n) + "\n";
      out["pair_orbit_counts"][name] = n;
    }
    std::vector<int> tt =
        crv::pair_orbit_sizes(gens, PointClass::Tritangent, PointClass::Tritangent);
    text += "  tritangent pair sizes    " + fmt_ints(tt) + "\n";
    out["tritangent_pair_sizes"] = tt;
  }
  if (all || ranks) {
    if (!text.empty()) text += "\n";
    text += "incidence matrix ranks\n";
    const std::tuple<const char*, PointClass, PointClass> pairs[] = {
        {"boundary x cusp", PointClass::Boundary, PointClass::Cusp},
        {"boundary x tritangent", PointClass::Boundary, PointClass::Tritangent},
        {"cusp x tritangent", PointClass::Cusp, PointClass::Tritangent}};
    for (auto [name, a, b] : pairs) {
      int r = crv::incidence_rank(a, b);
      text += "  " + std::string(name) + std::string(23 - std::string(name).size(), ' ') +
              std::to_string(r) + "\n";
      out["incidence_ranks"][name] = r;
    }
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

// -------------------------------------------------------------------- tables

int run_tables(const std::string& which, bool as_json, bool as_markdown) {
  std::vector<crv::Table> ts = crv::catalog(which);
  if (as_json) {
    json out = json::array();
    for (const crv::Table& t : ts)
      out.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    std::cout << out.dump(2) << "\n";
  } else if (as_markdown) {
    std::cout << crv::render_markdown(ts);
  } else {
    std::cout << crv::render_text(ts);
  }
  return 0;
}

// ----------------------------------------------------------------------- fan

void fan_summary(const std::string& label, const crv::Fan& f, bool as_json,
                 json& out, std::string& text) {
  std::vector<long> fv = crv::f_vector(f);
  std::vector<long> cr = crv::chow_ranks(f);
  bool smooth = crv::is_smooth(f);
  if (as_json) {
    out[label] = {{"rays", f.rays.size()},
                  {"maximal_cones", f.max_cones.size()},
                  {"smooth", smooth},
                  {"f_vector", fv},
                  {"chow_ranks", cr}};
  } else {
    text += label + "\n";
    text += "  rays           " + std::to_string(f.rays.size()) + "\n";
    text += "  maximal cones  " + std::to_string(f.max_cones.size()) +
            (smooth ? " (all unimodular)" : " (NOT all unimodular)") + "\n";
    text += "  f-vector       " + fmt_longs(fv) + "\n";
    text += "  chow ranks     " + fmt_longs(cr) + "\n";
  }
}

int run_fan(bool want_f, bool want_chow, const std::string& star_ray,
            int surface_index, const std::string& character, bool as_json) {
  const crv::Fan& fan = crv::weyl_fan();
  json out;
  std::string text;
  bool any = false;

  if (want_f) {
    any = true;
    if (as_json)
      out["f_vector"] = crv::f_vector(fan);
    else
      text += "f-vector    " + fmt_longs(crv::f_vector(fan)) + "\n";
  }
  if (want_chow) {
    any = true;
    if (as_json)
      out["chow_ranks"] = crv::chow_ranks(fan);
    else
      text += "chow ranks  " + fmt_longs(crv::chow_ranks(fan)) + "\n";
  }
  if (!star_ray.empty()) {
    any = true;
    std::vector<crv::NVec> pts = crv::weyl_ray_points();
    int idx = -1;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (crv::detail::ray_name(pts[i]) == star_ray) idx = static_cast<int>(i);
    if (idx < 0) throw std::invalid_argument("unknown ray " + star_ray);
    crv::Fan star = crv::star_fan(fan, idx);
    fan_summary("star of " + star_ray, star, as_json, out, text);
  }
  if (surface_index >= 0) {
    any = true;
    if (surface_index > 15)
      throw std::invalid_argument("surface index must be 0..15");
    crv::Fan s = crv::surface_fan(surface_index);
    fan_summary("surface fan " + std::to_string(surface_index), s, as_json, out, text);
  }
  if (!character.empty()) {
    any = true;
    static const std::map<std::string, crv::MVec> chars = {
        {"lambda", {1, -1, 0, 0}},
        {"rho", {0, 1, -1, 0}},
        {"nu", {0, 0, 1, -1}},
        {"mu", {0, 0, 1, 1}}};
    auto it = chars.find(character);
    if (it == chars.end())
      throw std::invalid_argument("unknown character " + character +
                                  " (expected lambda, rho, nu or mu)");
    std::vector<int> div = crv::character_divisor(it->second);
    std::vector<crv::NVec> pts = crv::weyl_ray_points();
    if (as_json) {
      json rays = json::array();
      for (std::size_t i = 0; i < pts.size(); ++i)
        rays.push_back({{"ray", crv::detail::ray_name(pts[i])}, {"order", div[i]}});
      out["character"] = character;
      out["divisor"] = rays;
    } else {
      text += "divisor of the character " + character + "\n";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string name = crv::detail::ray_name(pts[i]);
        text += "  " + name + std::string(10 - std::min<std::size_t>(10, name.size()), ' ') +
                (div[i] >= 0 ? " " : "") + std::to_string(div[i]) + "\n";
      }
    }
  }
  if (!any) fan_summary("chamber fan", fan, as_json, out, text);

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

// -------------------------------------------------------------------- ledger

int run_ledger(bool trace, bool as_json, bool as_markdown) {
  crv::LedgerTrace t = crv::run_naruki_pipeline();
  if (!trace) {
    const crv::VarietyState& s = t.final_state();
    if (as_json) {
      json out = {{"name", s.name},
                  {"chow_ranks", s.chow_ranks},
                  {"euler", s.euler}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "final state  " << crv::show_ranks(s.chow_ranks) << ", euler "
                << s.euler << "\n";
    }
    return 0;
  }

  if (as_json) {
    json out = json::array();
    for (const crv::LedgerStage& st : t.stages)
      out.push_back({{"action", st.action},
                     {"note", st.note},
                     {"chow_ranks", st.state.chow_ranks},
                     {"euler", st.state.euler}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  crv::Table table{"construction ledger",
                   {"action", "chow ranks", "euler", "note"},
                   {}};
  for (const crv::LedgerStage& st : t.stages)
    table.rows.push_back({st.action, crv::show_ranks(st.state.chow_ranks),
                          std::to_string(st.state.euler), st.note});
  std::vector<crv::Table> ts{table};
  std::cout << (as_markdown ? crv::render_markdown(ts) : crv::render_text(ts));
  return 0;
}

// ---------------------------------------------------------------------- chow

const crv::SmallRing& ring_by_name(const std::string& name) {
  if (name == "inv") return crv::inv_ring();
  if (name == "b0") return crv::b0_ring();
  if (name == "v") return crv::v_ring();
  if (name == "cusp") return crv::cusp_ring();
  if (name == "q") return crv::q_ring();
  if (name == "t0") return crv::t0_space();
  throw std::invalid_argument("unknown ring " + name +
                              " (expected inv, b0, v, cusp, q or t0)");
}

// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor (factor | '*' factor)*        juxtaposition multiplies
//          factor := atom ['^' INT]
//          atom := INT ['/' INT] | IDENT | '(' expr ')'
class ExprParser {
 public:
  ExprParser(const crv::SmallRing& ring, std::string src)
      : ring_(ring), src_(std::move(src)) {}

  crv::RingElem parse() {
    crv::RingElem e = expr();
    if (peek() != '\0')
      throw std::invalid_argument(std::string("unexpected character '") + peek() +
                                  "' in expression");
    return e;
  }

 private:
  char peek() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw std::invalid_argument("expected a number in expression");
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      v = v * 10 + (src_[pos_++] - '0');
    return v;
  }

  crv::RingElem expr() {
    bool neg = eat('-');
    crv::RingElem e = term();
    if (neg) e = crv::ratio(-1) * e;
    while (true) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }
  crv::RingElem term() {
    crv::RingElem e = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        e = e * factor();
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        e = e * factor();
      } else {
        return e;
      }
    }
  }
  crv::RingElem factor() {
    crv::RingElem a = atom();
    if (eat('^')) {
      long n = integer();
      a = a.pow(static_cast<int>(n));
    }
    return a;
  }
  crv::RingElem atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      crv::RingElem e = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')' in expression");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (eat('/')) return ring_.scalar(crv::ratio(num, integer()));
      return ring_.scalar(crv::ratio(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      return ring_.gen(name);  // throws with the ring name if unknown
    }
    throw std::invalid_argument("expected a number, generator or '(' in expression");
  }

  const crv::SmallRing& ring_;
  std::string src_;
  std::size_t pos_ = 0;
};

int run_chow(const std::string& ring_name, const std::string& expr, bool as_json) {
  const crv::SmallRing& ring = ring_by_name(ring_name);

  if (expr.empty()) {
    std::string gens;
    for (const std::string& g : ring.gens()) gens += (gens.empty() ? "" : ", ") + g;
    if (as_json) {
      json out = {{"ring", ring_name},
                  {"name", ring.name()},
                  {"generators", ring.gens()},
                  {"top_degree", ring.top_degree()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "ring        " << ring.name() << "\n"
                << "generators  " << gens << "\n"
                << "top degree  " << ring.top_degree() << "\n";
    }
    return 0;
  }

  crv::RingElem e = ExprParser(ring, expr).parse();
  std::string normal = e.normal_form().str();
  std::string evaluation;
  bool has_value = true;
  try {
    evaluation = crv::to_string(e.degree());
  } catch (const std::invalid_argument&) {
    has_value = false;
  }

  if (as_json) {
    json out = {{"ring", ring_name}, {"input", expr}, {"normal_form", normal}};
    out["evaluation"] = has_value ? json(evaluation) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ring         " << ring.name() << "\n"
              << "input        " << expr << "\n"
              << "normal form  " << normal << "\n"
              << "evaluation   "
              << (has_value ? evaluation : "not defined for this element") << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- riemann-roch

int run_riemann_roch(const std::string& range, bool as_json) {
  long lo = 0, hi = 5;
  if (!range.empty()) {
    std::size_t dots = range.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("range must look like A..B");
    try {
      lo = std::stol(range.substr(0, dots));
      hi = std::stol(range.substr(dots + 2));
    } catch (const std::exception&) {
      throw std::invalid_argument("range must look like A..B with integers");
    }
    if (lo > hi) throw std::invalid_argument("range is empty");
  }

  std::vector<crv::BigRational> coeff = crv::riemann_roch_coefficients();
  std::string poly;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    int k = static_cast<int>(coeff.size() - 1 - i);
    std::string c = crv::to_string(coeff[i]);
    if (!poly.empty()) poly += c[0] == '-' ? " - " : " + ";
    if (!poly.empty() && c[0] == '-') c = c.substr(1);
    poly += c;
    if (k >= 1) poly += " n";
    if (k >= 2) poly += "^" + std::to_string(k);
  }

  if (as_json) {
    json out;
    json cj = json::array();
    for (const crv::BigRational& c : coeff) cj.push_back(crv::to_string(c));
    out["coefficients"] = cj;
    json vals = json::array();
    for (long n = lo; n <= hi; ++n)
      vals.push_back({{"n", n}, {"chi", crv::to_string(crv::riemann_roch(n))}});
    out["values"] = vals;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "chi(n H) = " << poly << "\n\n";
  std::cout << "  n    chi\n";
  for (long n = lo; n <= hi; ++n) {
    std::string ns = std::to_string(n);
    std::cout << "  " << ns << std::string(std::max<std::size_t>(5, ns.size() + 1) - ns.size(), ' ')
              << crv::to_string(crv::riemann_roch(n)) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------- chern

int run_chern(bool verify, bool as_json) {
  crv::RingElem c1 = crv::chern1(), c2 = crv::chern2(), c3 = crv::chern3();
  const std::pair<const char*, crv::BigRational> numbers[] = {
      {"c1^4", crv::inv_eval4(c1.pow(4))},
      {"c1^2 c2", crv::inv_eval4(c1.pow(2) * c2)},
      {"c2^2", crv::inv_eval4(c2 * c2)},
      {"c1 c3", crv::inv_eval4(c1 * c3)},
      {"c4", crv::BigRational(crv::chern4_value())}};

  json out;
  std::string text = "chern numbers\n";
  for (const auto& [name, value] : numbers) {
    text += "  " + std::string(name) + std::string(8 - std::string(name).size(), ' ') +
            crv::to_string(value) + "\n";
    out["chern_numbers"][name] = crv::to_string(value);
  }

  int failures = 0;
  if (verify) {
    std::vector<std::pair<std::string, bool>> checks;
    checks.emplace_back("degree-four Todd number equals 1", crv::todd4_check() == 1);
    crv::VarietyState final_state = crv::run_naruki_pipeline().final_state();
    long ranks_sum = 0;
    for (long r : final_state.chow_ranks) ranks_sum += r;
    checks.emplace_back("euler number 271 equals the rank sum and c4",
                        ranks_sum == 271 && crv::chern4_value() == 271);
    checks.emplace_back("boundary divisor chern data consistent",
                        crv::b0_chern_check().ok);
    auto entries = crv::invariant_consistency();
    bool inv_ok = true;
    for (const crv::ConsistencyEntry& e : entries) inv_ok = inv_ok && e.match;
    checks.emplace_back("invariant table consistent under restriction", inv_ok);
    checks.emplace_back("cusp table relation holds",
                        crv::cusp_numbers().relation_consistent);
    crv::TritangentReport tri = crv::tritangent_relations();
    checks.emplace_back("tritangent identities and rank", tri.ok);

    text += "\nverification\n";
    for (const auto& [name, ok] : checks) {
      failures += !ok;
      text += std::string("  [") + (ok ? "ok" : "FAIL") + "] " + name + "\n";
      out["verification"][name] = ok;
    }
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return failures ? 1 : 0;
}

// ---------------------------------------------------------------------- gram

void dump_csv(const std::string& path, const std::vector<std::vector<long>>& m) {
  std::ofstream f(path);
  if (!f.good()) throw crv::IoError("cannot open " + path + " for writing");
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) f << ",";
      f << row[j];
    }
    f << "\n";
  }
  if (!f.good()) throw crv::IoError("write to " + path + " failed");
}

// Full orbit of the relation seed, for external audit of the rank-15 span.
std::vector<std::vector<long>> relation_orbit_matrix() {
  std::vector<long> seed = crv::lambda_relation_seed();
  const auto& perms = crv::detail::slot_permutations();
  std::set<std::vector<long>> seen{seed};
  std::vector<std::vector<long>> work{seed};
  while (!work.empty()) {
    std::vector<long> cur = std::move(work.back());
    work.pop_back();
    for (const auto& p : perms) {
      std::vector<long> img(76);
      for (int i = 0; i < 76; ++i)
        img[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] =
            cur[static_cast<std::size_t>(i)];
      if (seen.insert(img).second) work.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

int run_gram(const std::string& which, const std::string& dump_path,
             bool pairing, bool as_json) {
  json out;
  std::string text;
  std::vector<std::vector<long>> matrix;

  if (which == "b2") {
    int r = crv::rank_b2_matrix();
    text = "36 x 36 matrix of squared boundary classes: rank " + std::to_string(r) + "\n";
    out = {{"which", which}, {"rank", r}};
    if (!dump_path.empty()) matrix = crv::boundary_square_gram();
  } else if (which == "full") {
    auto [full, pairs] = crv::rank_306();
    text = "306 codimension-two boundary classes: rank " + std::to_string(full) +
           " (the 270 pairs alone: " + std::to_string(pairs) + ")\n";
    out = {{"which", which}, {"rank", full}, {"pairs_rank", pairs}};
    if (!dump_path.empty()) matrix = crv::codim2_boundary_gram();
  } else if (which == "cusp") {
    int r = crv::rank_cusp_classes();
    text = "120 cusp-supported classes: rank " + std::to_string(r) + "\n";
    out = {{"which", which}, {"rank", r}};
    if (!dump_path.empty()) matrix = crv::cusp_class_gram();
  } else if (which == "relations") {
    int r = crv::relation_space_rank();
    text = "orbit of the cross-ratio relation: rank " + std::to_string(r) + "\n";
    out = {{"which", which}, {"rank", r}};
    if (!dump_path.empty()) matrix = relation_orbit_matrix();
  } else if (which == "decomposition") {
    crv::A2DecompositionReport r = crv::a2_decomposition_report();
    text = "middle chow group decomposition: " + std::to_string(r.cusp_rank) + " + " +
           std::to_string(r.square_increment()) + " + " +
           std::to_string(r.invariant_increment()) + " = " +
           std::to_string(r.full_rank) + "\n";
    out = {{"which", which},
           {"cusp_rank", r.cusp_rank},
           {"square_increment", r.square_increment()},
           {"invariant_increment", r.invariant_increment()},
           {"full_rank", r.full_rank}};
    if (!dump_path.empty()) matrix = crv::decomposition_gram();
  } else if (!which.empty()) {
    throw std::invalid_argument(
        "unknown selection " + which +
        " (expected b2, full, cusp, relations or decomposition)");
  } else if (!pairing) {
    throw std::invalid_argument("gram needs --which or --pairing-rank");
  }

  if (pairing) {
    auto [rank, columns] = crv::pairing_rank_survey();
    text += "pairing of divisors against " + std::to_string(columns) +
            " admissible degree-three monomials: rank " + std::to_string(rank) +
            " (reported, not asserted)\n";
    out["pairing_rank"] = rank;
    out["pairing_columns"] = columns;
  }

  if (!dump_path.empty() && !matrix.empty()) {
    dump_csv(dump_path, matrix);
    text += "matrix written to " + dump_path + " (" + std::to_string(matrix.size()) +
            " x " + std::to_string(matrix.empty() ? 0 : matrix[0].size()) + ")\n";
    out["dumped"] = dump_path;
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

// -------------------------------------------------------------------- verify

json report_json(const crv::VerificationReport& r) {
  return {{"id", r.id},           {"description", r.description},
          {"expected", r.expected}, {"computed", r.computed},
          {"provenance", r.provenance}, {"status", r.status},
          {"ms", r.ms}};
}

int run_verify(const std::string& only, bool explain, std::string format) {
  const auto& registry = crv::verification_checks();
  std::map<std::string, const crv::detail::VerificationCheck*> by_id;
  for (const auto& c : registry) by_id[c.id] = &c;

  std::vector<crv::VerificationReport> reports;
  auto stream = [&](const crv::VerificationReport& r) {
    if (format == "json") {
      std::cout << report_json(r).dump() << "\n";
    } else if (format == "markdown") {
      std::cout << "| " << r.id << " | " << r.status << " | " << r.expected
                << " | " << r.computed << " | " << r.ms << " |\n";
    } else {
      std::cout << "[" << r.status << "] " << r.id << ": " << r.description
                << " | expected " << r.expected << " | got " << r.computed
                << " | " << r.ms << " ms\n";
      if (explain)
        std::cout << "    origin: " << by_id.at(r.id)->source << " ["
                  << r.provenance << "]\n";
    }
  };

  if (format == "markdown") {
    std::cout << "| check | status | expected | computed | ms |\n";
    std::cout << "| --- | --- | --- | --- | --- |\n";
  }
  reports = crv::run_verification(only, stream);

  int passed = 0, failed = 0, flagged = 0;
  for (const auto& r : reports) {
    passed += r.status == "pass";
    failed += r.status == "fail";
    flagged += r.status == "flagged-discrepancy";
  }

  if (format == "json") {
    json summary = {{"summary",
                     {{"checks", reports.size()},
                      {"passed", passed},
                      {"failed", failed},
                      {"flagged", flagged}}}};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "\nsummary: " << reports.size() << " checks, " << passed
              << " passed, " << failed << " failed, " << flagged
              << " flagged discrepancies\n";
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    std::size_t width = 0;
    for (const auto& r : reports) width = std::max(width, r.id.size());
    std::cout << "\n";
    for (const auto& r : reports)
      std::cout << "  " << r.id << std::string(width - r.id.size() + 2, ' ')
                << r.status << "\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection theory of the cross-ratio variety"};
  app.require_subcommand(1);

  auto* geo = app.add_subcommand("geometry", "point classes and perpendicularity profiles");
  bool geo_json = false;
  geo->add_flag("--json", geo_json, "emit JSON");

  auto* grp = app.add_subcommand("group", "reflection group orders, orbits and ranks");
  bool grp_order = false, grp_orbits = false, grp_pairs = false, grp_ranks = false,
       grp_json = false;
  grp->add_flag("--order", grp_order, "group orders");
  grp->add_flag("--orbits", grp_orbits, "orbit sizes per point class");
  grp->add_flag("--pair-orbits", grp_pairs, "orbit counts on ordered pairs");
  grp->add_flag("--incidence-ranks", grp_ranks, "incidence matrix ranks");
  grp->add_flag("--json", grp_json, "emit JSON");

  auto* tab = app.add_subcommand("tables", "regenerate the catalog tables");
  std::string tab_which;
  bool tab_json = false, tab_md = false;
  tab->add_option("--which", tab_which, "bd, td, cd or lambda")->required();
  tab->add_flag("--json", tab_json, "emit JSON");
  tab->add_flag("--markdown", tab_md, "emit markdown");

  auto* fan = app.add_subcommand("fan", "chamber fan and derived fans");
  bool fan_f = false, fan_chow = false, fan_json = false;
  std::string fan_star, fan_char;
  int fan_surface = -1;
  fan->add_flag("--f-vector", fan_f, "f-vector of the chamber fan");
  fan->add_flag("--chow-ranks", fan_chow, "chow ranks of the chamber fan");
  fan->add_option("--star", fan_star, "star fan of the named ray");
  fan->add_option("--surface", fan_surface, "one of the sixteen surface fans");
  fan->add_option("--character", fan_char, "divisor of lambda, rho, nu or mu");
  fan->add_flag("--json", fan_json, "emit JSON");

  auto* led = app.add_subcommand("ledger", "blow-up and contraction bookkeeping");
  bool led_trace = false, led_json = false, led_md = false;
  led->add_flag("--trace", led_trace, "print every stage");
  led->add_flag("--json", led_json, "emit JSON");
  led->add_flag("--markdown", led_md, "emit markdown");

  auto* cho = app.add_subcommand("chow", "evaluate expressions in the intersection rings");
  std::string cho_ring = "inv", cho_eval;
  bool cho_json = false;
  cho->add_option("--ring", cho_ring, "inv, b0, v, cusp, q or t0");
  cho->add_option("--eval", cho_eval, "expression over the ring generators");
  cho->add_flag("--json", cho_json, "emit JSON");

  auto* rr = app.add_subcommand("riemann-roch", "Euler characteristic of n times the hyperplane class");
  std::string rr_range;
  bool rr_json = false;
  rr->add_option("--n-range", rr_range, "inclusive range A..B (default 0..5)");
  rr->add_flag("--json", rr_json, "emit JSON");

  auto* che = app.add_subcommand("chern", "chern numbers of the fourfold");
  bool che_verify = false, che_json = false;
  che->add_flag("--verify", che_verify, "run the consistency checks");
  che->add_flag("--json", che_json, "emit JSON");

  auto* gra = app.add_subcommand("gram", "intersection Gram matrices and ranks");
  std::string gra_which, gra_dump;
  bool gra_pairing = false, gra_json = false;
  gra->add_option("--which", gra_which, "b2, full, cusp, relations or decomposition");
  gra->add_option("--dump-matrix", gra_dump, "write the matrix as CSV");
  gra->add_flag("--pairing-rank", gra_pairing, "survey the degree-three pairing rank");
  gra->add_flag("--json", gra_json, "emit JSON");

  auto* ver = app.add_subcommand("verify", "run the full verification registry");
  std::string ver_only, ver_format = "text";
  bool ver_explain = false, ver_json = false;
  ver->add_option("--only", ver_only, "one check id plus its dependencies");
  ver->add_flag("--explain", ver_explain, "print the origin of every check");
  ver->add_flag("--json", ver_json, "shorthand for --format json");
  ver->add_option("--format", ver_format, "text, json or markdown")
      ->check(CLI::IsMember({"text", "json", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (geo->parsed()) return run_geometry(geo_json);
    if (grp->parsed())
      return run_group(grp_order, grp_orbits, grp_pairs, grp_ranks, grp_json);
    if (tab->parsed()) return run_tables(tab_which, tab_json, tab_md);
    if (fan->parsed())
      return run_fan(fan_f, fan_chow, fan_star, fan_surface, fan_char, fan_json);
    if (led->parsed()) return run_ledger(led_trace, led_json, led_md);
    if (cho->parsed()) return run_chow(cho_ring, cho_eval, cho_json);
    if (rr->parsed()) return run_riemann_roch(rr_range, rr_json);
    if (che->parsed()) return run_chern(che_verify, che_json);
    if (gra->parsed()) return run_gram(gra_which, gra_dump, gra_pairing, gra_json);
    if (ver->parsed())
      return run_verify(ver_only, ver_explain, ver_json ? "json" : ver_format);
  } catch (const crv::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
