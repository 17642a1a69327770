#pragma once

// Catalog tables for the three divisor families and for the divisor of the
// first cross-ratio coordinate. Every cell is regenerated from the projection
// map, the plane construction and the triad partition; nothing is copied in.

#include <cstdlib>
#include <string>
#include <vector>

#include "crv/roots.hpp"

namespace crv {

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

// Names for vectors of the doubled lattice: "e3", "-e3+e4", "(+-+-)".
inline std::string ray_name(const NVec& t) {
  bool half = true;
  for (int i = 0; i < 4; ++i)
    if (std::abs(t[i]) != 1) half = false;
  if (half) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += t[i] > 0 ? '+' : '-';
    return s + ")";
  }
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (t[i] == 0) continue;
    if (t[i] < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += "e" + std::to_string(i + 1);
  }
  return s;
}

inline std::string wall_name(const MVec& m) {
  NVec doubled{};
  for (int i = 0; i < 4; ++i) doubled[i] = 2 * m[i];
  return ray_name(doubled);
}

}  // namespace detail

// Twelve walls of the torus picture with their characters.
inline Table boundary_wall_table() {
  Table t{"boundary divisors from the twelve walls",
          {"wall", "character", "root", "point"},
          {}};
  for (const MVec& m : d4_positive_roots()) {
    const Root& r = positive_roots()[static_cast<std::size_t>(root_index(phi(m)))];
    t.rows.push_back({detail::wall_name(m), char_monomial(m).str(), r.label(),
                      show(pi_map(r.v))});
  }
  return t;
}

// Twenty-four rays carrying boundary divisors.
inline Table boundary_ray_table() {
  Table t{"boundary divisors from the twenty-four rays",
          {"ray", "root", "point"},
          {}};
  for (const NVec& tau : short_rays()) {
    F3Vec u = boundary_vector(tau);
    const Root& r = positive_roots()[static_cast<std::size_t>(
        boundary_point_root(geometry().ref_of(u).index))];
    t.rows.push_back({detail::ray_name(tau), r.label(), show(u)});
  }
  return t;
}

// Forty-five tritangent planes.
inline Table tritangent_table() {
  Table t{"tritangent divisors", {"plane", "point"}, {}};
  for (const Tritangent& tr : tritangents())
    t.rows.push_back({tr.label,
                      show(geometry().points(PointClass::Tritangent)
                               [static_cast<std::size_t>(tr.point)])});
  return t;
}

// Sixteen subtorus surfaces and their cusps.
inline Table surface_cusp_table() {
  Table t{"cusp divisors from the sixteen surfaces",
          {"equations", "roots", "triad", "point"},
          {}};
  for (const SurfaceA2& s : a2_surfaces()) {
    const auto& roots = positive_roots();
    std::string pair = roots[static_cast<std::size_t>(s.root_a)].label() + ", " +
                       roots[static_cast<std::size_t>(s.root_b)].label();
    t.rows.push_back({s.equations, pair, s.label, show(s.cusp)});
  }
  return t;
}

// Twenty-four rays carrying cusp divisors.
inline Table ray_cusp_table() {
  Table t{"cusp divisors from the twenty-four rays",
          {"ray", "triad", "point"},
          {}};
  for (const NVec& tau : long_rays()) {
    F3Vec v = cusp_vector(tau);
    const CuspTriad& triad =
        cusp_triads()[static_cast<std::size_t>(geometry().ref_of(v).index)];
    t.rows.push_back({detail::ray_name(tau), triad.label, show(v)});
  }
  return t;
}

// Order of the first cross-ratio coordinate along all forty-eight rays.
inline Table lambda_table() {
  Table t{"divisor of the first cross-ratio coordinate",
          {"ray", "order", "class", "point"},
          {}};
  for (const RayMultiplicity& r : divisor_of_lambda())
    t.rows.push_back({detail::ray_name(r.tau), std::to_string(r.n),
                      class_name(r.point.cls),
                      show(geometry().rep(r.point))});
  return t;
}

// The catalog selected by name: bd, td, cd or lambda.
inline std::vector<Table> catalog(const std::string& which) {
  if (which == "bd" || which == "boundary")
    return {boundary_wall_table(), boundary_ray_table()};
  if (which == "td" || which == "tritangent") return {tritangent_table()};
  if (which == "cd" || which == "cusp")
    return {surface_cusp_table(), ray_cusp_table()};
  if (which == "lambda") return {lambda_table()};
  throw std::invalid_argument("catalog: unknown table " + which);
}

inline std::string render_text(const std::vector<Table>& tables) {
  std::string out;
  bool first = true;
  for (const Table& t : tables) {
    if (!first) out += "\n";
    first = false;
    out += t.title + "\n";
    out += std::string(t.title.size(), '-') + "\n";

    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());

    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size())
          s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      return s + "\n";
    };
    out += line(t.columns);
    for (const auto& row : t.rows) out += line(row);
  }
  return out;
}

inline std::string render_markdown(const std::vector<Table>& tables) {
  std::string out;
  bool first = true;
  for (const Table& t : tables) {
    if (!first) out += "\n";
    first = false;
    out += "### " + t.title + "\n\n";
    auto line = [](const std::vector<std::string>& cells) {
      std::string s = "|";
      for (const auto& c : cells) s += " " + c + " |";
      return s + "\n";
    };
    out += line(t.columns);
    std::vector<std::string> dashes(t.columns.size(), "---");
    out += line(dashes);
    for (const auto& row : t.rows) out += line(row);
  }
  return out;
}

}  // namespace crv
