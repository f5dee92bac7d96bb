#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "arborslope/diagram.hpp"
#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"

namespace arborslope {

/// Gluing two surfaces across a shared hemisphere adds their c weights.
/// Requires equal (a, b); see glue_scaled() for rescaling.
inline WeightState glue_sum(const WeightState& w1, const WeightState& w2) {
  if (w1.a != w2.a || w1.b != w2.b)
    throw Error(ErrorCode::MismatchedWeights, "cannot glue " + w1.str() + " to " + w2.str());
  return {w1.a, w1.b, detail::checked_add(w1.c, w2.c), detail::checked_add(w1.n_inf, w2.n_inf),
          w1.has_zero || w2.has_zero};
}

/// Least multipliers (k1, k2) with k1*(a1,b1) = k2*(a2,b2); nullopt when the
/// two states sit on different vertical lines of the diagram.
inline std::optional<std::pair<std::int64_t, std::int64_t>> common_scale(const WeightState& w1,
                                                                         const WeightState& w2) {
  if (static_cast<detail::wide>(w1.a) * w2.b != static_cast<detail::wide>(w2.a) * w1.b) return std::nullopt;
  const std::int64_t x1 = w1.a != 0 ? w1.a : w1.b;
  const std::int64_t x2 = w2.a != 0 ? w2.a : w2.b;
  if (x1 <= 0 || x2 <= 0) return std::nullopt;
  const std::int64_t g = std::gcd(x1, x2);
  return std::pair{x2 / g, x1 / g};
}

/// glue_sum after scaling both sides to a common (a, b) with the least
/// multipliers.
inline WeightState glue_scaled(const WeightState& w1, const WeightState& w2) {
  const auto k = common_scale(w1, w2);
  if (!k) throw Error(ErrorCode::MismatchedWeights, "no common rescaling of " + w1.str() + " and " + w2.str());
  return glue_sum(w1.scaled(k->first), w2.scaled(k->second));
}

/// Result of turning a tangle a quarter and reflecting it.
struct TransformOutcome {
  WeightState state;
  int case_id = 1;          // 1..4
  std::int64_t m = 0;       // sheets that rotate around the knot during the isotopy
  Fraction tau_prime;       // -2m/a if c > 0, +2m/a if c < 0
  bool feasible = true;     // false if some output weight would be negative

  friend bool operator==(const TransformOutcome&, const TransformOutcome&) = default;
};

/// Weight transform of a tangle under quarter-turn plus reflection.
///
/// The case is chosen from the input's special boundary edges:
///   1. no slope-0, no slope-inf edges:    (a, |c|-a, +-(a+b)),            m = a
///   2. slope-0 edges, none at inf:        (|c|, 0, +-(b+|c|)),  a-|c| inf edges, m = |c|
///   3. no slope-0, t inf edges, 0<t<a:    (a, |c|-a+t, +-(a-t)),          m = a-t
///   4. both, t < a-|c|:                   (|c|+t, 0, c) / (|c|+t, 0, -c), a-t-|c| inf edges, m = |c|
/// with the upper sign for c > 0. Case 4 keeps the literal c < 0
/// variant, z = -c.
///
/// Throws UndefinedCase for c == 0 and CasePreconditionViolated when t lies
/// outside the selected case's range. Negative outputs are returned with
/// feasible == false. Output states never carry slope-0 edges.
inline TransformOutcome rotate_reflect(const WeightState& w) {
  if (w.c == 0) throw Error(ErrorCode::UndefinedCase, "rotate_reflect needs c != 0, got " + w.str());
  if (w.a <= 0) throw Error(ErrorCode::CasePreconditionViolated, "rotate_reflect needs a > 0, got " + w.str());
  const bool pos = w.c > 0;
  const std::int64_t c = w.c, ac = pos ? c : -c, a = w.a, b = w.b, t = w.n_inf;
  TransformOutcome out;
  if (!w.has_zero && t == 0) {
    out.case_id = 1;
    out.state = {a, ac - a, pos ? a + b : -(a + b), 0, false};
    out.m = a;
  } else if (w.has_zero && t == 0) {
    out.case_id = 2;
    out.state = {ac, 0, pos ? b + c : -(b + ac), a - ac, false};
    out.m = ac;
  } else if (!w.has_zero) {
    if (!(t > 0 && t < a))
      throw Error(ErrorCode::CasePreconditionViolated, "case 3 needs 0 < t < a, got " + w.str());
    out.case_id = 3;
    out.state = {a, ac - a + t, pos ? a - t : t - a, 0, false};
    out.m = a - t;
  } else {
    if (!(t > 0 && t < a - ac))
      throw Error(ErrorCode::CasePreconditionViolated, "case 4 needs 0 < t < a - |c|, got " + w.str());
    out.case_id = 4;
    out.state = {ac + t, 0, pos ? c : -c, a - t - ac, false};
    out.m = ac;
  }
  out.tau_prime = Fraction(pos ? -2 * out.m : 2 * out.m, a);
  out.feasible = out.state.a >= 0 && out.state.b >= 0 && out.state.n_inf >= 0;
  return out;
}

}  // namespace arborslope
