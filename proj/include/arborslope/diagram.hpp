#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"

namespace arborslope {

/// Train-track weights (a, b, c) on a tangle sphere, plus the counts of
/// slope-infinity boundary edges (`n_inf`) and whether slope-0 boundary
/// edges are present. Triples are homogeneous: k*(a,b,c) is the same point of
/// the diagram carried by k sheets.
struct WeightState {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t n_inf = 0;
  bool has_zero = false;

  WeightState scaled(std::int64_t k) const {
    return {detail::checked_mul(a, k), detail::checked_mul(b, k), detail::checked_mul(c, k),
            detail::checked_mul(n_inf, k), has_zero};
  }

  std::string str() const {
    std::string s = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    if (n_inf != 0) s += "+inf" + std::to_string(n_inf);
    if (has_zero) s += "+zero";
    return s;
  }

  friend bool operator==(const WeightState&, const WeightState&) = default;
  friend auto operator<=>(const WeightState&, const WeightState&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const WeightState& w) { return os << w.str(); }

struct DiagramPoint {
  Fraction u;
  Fraction v;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const DiagramPoint& p) { return os << "(" << p.u << ", " << p.v << ")"; }

/// The vertex <p/q> is the triple (1, q-1, p).
inline WeightState vertex_triple(Fraction pq) { return {1, pq.den() - 1, pq.num(), 0, false}; }

/// u = b/(a+b), v = c/(a+b).
inline DiagramPoint uv_coords(const WeightState& w) {
  const std::int64_t total = detail::checked_add(w.a, w.b);
  if (total <= 0) throw Error(ErrorCode::DegeneratePoint, "weights " + w.str() + " have a + b <= 0");
  return {Fraction(w.b, total), Fraction(w.c, total)};
}

inline DiagramPoint vertex_uv(Fraction pq) { return {Fraction(pq.den() - 1, pq.den()), pq}; }

/// Farey adjacency |p*s - q*r| = 1. Consecutive integers are adjacent (the
/// vertical edges on u = 0).
inline bool is_edge(Fraction x, Fraction y) {
  const detail::wide d = static_cast<detail::wide>(x.num()) * y.den() - static_cast<detail::wide>(x.den()) * y.num();
  return d == 1 || d == -1;
}

/// The two neighbours of p/q (q >= 2) with smaller denominator, lower one
/// first. Their mediant is p/q, so the three span a triangle of the diagram.
inline std::array<Fraction, 2> farey_parents(Fraction x) {
  const std::int64_t p = x.num(), q = x.den();
  if (q < 2) throw Error(ErrorCode::DegeneratePoint, "integer vertex " + x.str() + " has no parents");
  // b = p^{-1} mod q gives the lower parent a/b with p*b - q*a = 1.
  std::int64_t r0 = q, r1 = ((p % q) + q) % q, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::int64_t tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  std::int64_t b = ((t0 % q) + q) % q;
  const std::int64_t a = (static_cast<detail::wide>(p) * b - 1) / q;
  const Fraction lower(a, b);
  const Fraction upper(p - a, q - b);
  return {lower, upper};
}

/// Which pair of tangle endpoints arcs of slope p/q join: slope-0 arcs join
/// NW-NE and SW-SE, slope-infinity arcs NW-SW and NE-SE, odd/odd slopes the
/// diagonals NW-SE and NE-SW.
enum class ParityClass { Zero, One, Infinity };

inline ParityClass parity_class(Fraction x) {
  if (x.den() % 2 == 0) return ParityClass::Infinity;
  if (x.num() % 2 == 0) return ParityClass::Zero;
  return ParityClass::One;
}

}  // namespace arborslope
