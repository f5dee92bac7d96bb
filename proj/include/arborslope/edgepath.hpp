#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arborslope/diagram.hpp"
#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"

namespace arborslope {

/// An edgepath in the diagram for the rational tangle `start`.
///
/// A Constant edgepath is a single point on the horizontal edge at height
/// start, stored as integer weights. A Path walks from the vertex <start>
/// through `vertices` (vertices.front() == start); only `final_fraction` of
/// its last edge is traversed. `sheets` multiplies the weights.
struct Edgepath {
  enum class Kind { Constant, Path };

  Kind kind = Kind::Path;
  Fraction start;
  WeightState point;               // Constant only
  std::vector<Fraction> vertices;  // Path only
  Fraction final_fraction{1};      // Path only, in (0, 1]
  std::int64_t sheets = 1;

  static Edgepath constant(Fraction start, WeightState point) {
    Edgepath e;
    e.kind = Kind::Constant;
    e.start = start;
    e.point = point;
    return e;
  }

  static Edgepath path(std::vector<Fraction> vertices, Fraction final_fraction = 1, std::int64_t sheets = 1) {
    Edgepath e;
    e.kind = Kind::Path;
    e.start = vertices.empty() ? Fraction{} : vertices.front();
    e.vertices = std::move(vertices);
    e.final_fraction = final_fraction;
    e.sheets = sheets;
    return e;
  }

  bool is_constant() const noexcept { return kind == Kind::Constant; }
  int edge_count() const noexcept { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }

  /// Negate every slope: the edgepath of the mirrored tangle.
  Edgepath mirrored() const {
    Edgepath e = *this;
    e.start = -start;
    e.point.c = -point.c;
    for (auto& v : e.vertices) v = -v;
    return e;
  }

  std::string str() const {
    if (is_constant()) return "const " + start.str() + " @ " + point.str();
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i) s += " -> ";
      s += "<" + vertices[i].str() + ">";
    }
    if (final_fraction != Fraction(1)) s += " (last edge x" + final_fraction.str() + ")";
    if (sheets != 1) s += " [" + std::to_string(sheets) + " sheets]";
    return s;
  }

  friend bool operator==(const Edgepath&, const Edgepath&) = default;
};

enum class Property { E1, E2, E4, Adjacency, FinalFraction, Sheets };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::E1: return "E1";
    case Property::E2: return "E2";
    case Property::E4: return "E4";
    case Property::Adjacency: return "adjacency";
    case Property::FinalFraction: return "final-fraction";
    case Property::Sheets: return "sheets";
  }
  return "?";
}

struct Violation {
  Property property;
  int index;  // offending vertex index; -1 for whole-path properties
  std::string detail;
};

/// True iff `w` is a point of the horizontal edge at height p/q:
/// c/(a+b) = p/q and u = b/(a+b) >= (q-1)/q.
inline bool on_horizontal_edge(Fraction pq, const WeightState& w) {
  const std::int64_t total = w.a + w.b;
  if (w.a < 0 || w.b < 0 || total <= 0) return false;
  const detail::wide lhs = static_cast<detail::wide>(w.c) * pq.den();
  const detail::wide rhs = static_cast<detail::wide>(pq.num()) * total;
  if (lhs != rhs) return false;
  return static_cast<detail::wide>(w.b) * pq.den() >= static_cast<detail::wide>(pq.den() - 1) * total;
}

/// Checks E1, E2 (minimality), E4 (leftward monotonicity) and adjacency.
/// An empty result means the edgepath is valid.
inline std::vector<Violation> validate(const Edgepath& path) {
  std::vector<Violation> out;
  if (path.sheets < 1) out.push_back({Property::Sheets, -1, "sheet count must be positive"});
  if (path.is_constant()) {
    if (!on_horizontal_edge(path.start, path.point))
      out.push_back({Property::E1, 0, "constant point " + path.point.str() + " is not on the edge <" +
                                          path.start.str() + ", " + path.start.str() + ">"});
    return out;
  }
  const auto& v = path.vertices;
  if (v.empty()) {
    out.push_back({Property::E1, 0, "path has no vertices"});
    return out;
  }
  if (v.front() != path.start) out.push_back({Property::E1, 0, "path does not start at <" + path.start.str() + ">"});
  if (path.final_fraction <= Fraction(0) || path.final_fraction > Fraction(1))
    out.push_back({Property::FinalFraction, -1, "final fraction " + path.final_fraction.str() + " outside (0, 1]"});
  if (v.size() == 1 && path.final_fraction != Fraction(1))
    out.push_back({Property::FinalFraction, -1, "fractional final edge on a path without edges"});
  for (std::size_t i = 1; i < v.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!is_edge(v[i - 1], v[i]))
      out.push_back({Property::Adjacency, idx, "<" + v[i - 1].str() + "> and <" + v[i].str() + "> are not adjacent"});
    const std::int64_t d0 = v[i - 1].den(), d1 = v[i].den();
    if (d1 > d0 || (d1 == d0 && d0 != 1))
      out.push_back({Property::E4, idx, "u increases from <" + v[i - 1].str() + "> to <" + v[i].str() + ">"});
    if (i >= 2) {
      if (v[i] == v[i - 2])
        out.push_back({Property::E2, idx, "edgepath retraces <" + v[i - 1].str() + ">-<" + v[i].str() + ">"});
      else if (is_edge(v[i - 2], v[i]) && is_edge(v[i - 2], v[i - 1]) && is_edge(v[i - 1], v[i]))
        out.push_back({Property::E2, idx, "two sides of the triangle <" + v[i - 2].str() + ">,<" + v[i - 1].str() +
                                              ">,<" + v[i].str() + "> in succession"});
    }
  }
  return out;
}

inline bool is_valid(const Edgepath& path) { return validate(path).empty(); }

/// Integer endpoint weights. Requires a full final edge (or a constant).
inline WeightState endpoint_state(const Edgepath& path) {
  if (path.is_constant()) return path.point.scaled(path.sheets);
  if (path.final_fraction != Fraction(1))
    throw Error(ErrorCode::FractionalEndpoint, "edgepath ends partway along an edge; use endpoint_weights");
  return vertex_triple(path.vertices.back()).scaled(path.sheets);
}

/// Integer weights of the endpoint, including a fractional final edge: the
/// point at fraction k/m of the edge <x> -> <y> carries m sheets, m-k of type
/// x and k of type y.
inline WeightState endpoint_weights(const Edgepath& path) {
  if (path.is_constant() || path.final_fraction == Fraction(1)) return endpoint_state(path);
  const Fraction f = path.final_fraction;
  const WeightState from = vertex_triple(path.vertices[path.vertices.size() - 2]);
  const WeightState to = vertex_triple(path.vertices.back());
  const std::int64_t stay = f.den() - f.num(), move = f.num();
  WeightState w{from.a * stay + to.a * move, from.b * stay + to.b * move, from.c * stay + to.c * move, 0, false};
  return w.scaled(path.sheets);
}

inline DiagramPoint endpoint_point(const Edgepath& path) { return uv_coords(endpoint_weights(path)); }

/// 2(e_- - e_+): e_+ counts edges that increase slope, e_- those that
/// decrease it; the last edge counts `final_fraction` of an edge. Constant
/// edgepaths twist zero times.
inline Fraction tau(const Edgepath& path) {
  if (path.is_constant()) return Fraction(0);
  Fraction total(0);
  const auto& v = path.vertices;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Fraction weight = (i + 1 == v.size()) ? path.final_fraction : Fraction(1);
    if (v[i] > v[i - 1]) total -= weight * 2;
    else total += weight * 2;
  }
  return total;
}

/// Leftward moves from `current` (smaller denominator), ordered by ascending
/// denominator then ascending slope, omitting the move E2 forbids after
/// arriving from `previous`.
inline std::vector<Fraction> leftward_moves(std::optional<Fraction> previous, Fraction current) {
  std::vector<Fraction> out;
  if (current.den() < 2) return out;
  const auto parents = farey_parents(current);
  out.assign(parents.begin(), parents.end());
  std::sort(out.begin(), out.end(), [](Fraction x, Fraction y) {
    if (x.den() != y.den()) return x.den() < y.den();
    return x < y;
  });
  if (previous) {
    std::erase_if(out, [&](Fraction w) { return w == *previous || is_edge(w, *previous); });
  }
  return out;
}

/// Every minimal leftward vertex sequence from <start>, including the
/// zero-length one. Depth-first in move order, so output is deterministic.
inline std::vector<std::vector<Fraction>> minimal_prefixes(Fraction start) {
  std::vector<std::vector<Fraction>> out;
  std::vector<Fraction> current{start};
  auto walk = [&](auto&& self) -> void {
    out.push_back(current);
    const std::optional<Fraction> prev =
        current.size() >= 2 ? std::optional<Fraction>(current[current.size() - 2]) : std::nullopt;
    for (Fraction next : leftward_moves(prev, current.back())) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  walk(walk);
  return out;
}

/// A path reaching u = 0 at <m0>, followed by a vertical run along the
/// integer vertices whose length is left open. E2 may forbid one direction.
struct PathFamily {
  Edgepath prefix;
  bool can_ascend = true;
  bool can_descend = true;

  std::int64_t arrival() const { return prefix.vertices.back().num(); }

  /// The concrete path whose run ends at <m>; nullopt if E2 forbids it.
  std::optional<Edgepath> extended_to(std::int64_t m) const {
    const std::int64_t m0 = arrival();
    if ((m > m0 && !can_ascend) || (m < m0 && !can_descend)) return std::nullopt;
    Edgepath e = prefix;
    const std::int64_t step = m > m0 ? 1 : -1;
    for (std::int64_t k = m0; k != m;) {
      k += step;
      e.vertices.push_back(Fraction(k));
    }
    return e;
  }
};

/// Vertical-run freedom after arriving at an integer vertex along `prefix`.
inline PathFamily make_family(std::vector<Fraction> prefix) {
  PathFamily f{Edgepath::path(std::move(prefix))};
  const auto& v = f.prefix.vertices;
  if (v.size() >= 2 && v[v.size() - 2].den() == 2) {
    // <r/2> -> <m> spans a triangle with the other integer neighbour of r/2.
    const std::int64_t other = v[v.size() - 2].num() - v.back().num();
    if (other > v.back().num()) f.can_ascend = false;
    else f.can_descend = false;
  }
  return f;
}

/// Constant edgepaths of the tangle p/q: primitive weights (a, qj - a, pj)
/// with 1 <= a <= j (so u >= (q-1)/q), |pj| <= c_bound and a <= max_sheets.
/// For integer tangles the vertex itself (a = j) is excluded; it is the
/// zero-length path.
inline std::vector<Edgepath> enumerate_constants(Fraction start, std::int64_t c_bound, std::int64_t max_sheets) {
  std::vector<Edgepath> out;
  const std::int64_t p = start.num(), q = start.den();
  const std::int64_t step = std::max<std::int64_t>(1, p < 0 ? -p : p);
  for (std::int64_t j = 1; j * step <= c_bound; ++j) {
    for (std::int64_t a = 1; a <= std::min(j, max_sheets); ++a) {
      if (std::gcd(a, j) != 1) continue;
      if (q == 1 && a == j) continue;
      out.push_back(Edgepath::constant(start, WeightState{a, q * j - a, p * j, 0, false}));
    }
  }
  return out;
}

struct EdgepathFamilies {
  std::vector<PathFamily> paths;
  std::vector<Edgepath> constants;
};

/// Edgepaths from <start>. With `target_u_zero`, the paths that reach an
/// integer vertex <m0> with |m0| <= c_bound, their vertical runs left
/// symbolic; otherwise every minimal prefix ending at any vertex. Constants
/// are bounded by c_bound and `max_sheets`.
inline EdgepathFamilies enumerate_paths(Fraction start, bool target_u_zero, std::int64_t c_bound,
                                        std::int64_t max_sheets = 1) {
  EdgepathFamilies out;
  for (auto& prefix : minimal_prefixes(start)) {
    const bool at_zero = prefix.back().is_integer();
    if (target_u_zero) {
      if (!at_zero) continue;
      const std::int64_t m0 = prefix.back().num();
      if (m0 > c_bound || -m0 > c_bound) continue;
      out.paths.push_back(make_family(std::move(prefix)));
    } else {
      if (at_zero) out.paths.push_back(make_family(std::move(prefix)));
      else out.paths.push_back(PathFamily{Edgepath::path(std::move(prefix)), false, false});
    }
  }
  out.constants = enumerate_constants(start, c_bound, max_sheets);
  return out;
}

}  // namespace arborslope
