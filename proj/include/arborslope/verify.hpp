#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arborslope/solver.hpp"

namespace arborslope {

struct VerifyRow {
  std::int64_t n = 0;
  SolveBounds bounds;
  Fraction slope_lo, slope_hi;
  bool found_lo = false, found_hi = false;
  std::optional<Fraction> diameter, ratio;
  Fraction diameter_bound, ratio_bound;
  std::int64_t crossings = 0;
  bool trace_ok = false;
  std::vector<std::string> failures;  // invariant names, in check order
  bool pass() const { return failures.empty(); }
};

struct VerifyOutcome {
  std::vector<VerifyRow> rows;
  bool pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass(); });
  }
  std::string first_failure() const {
    for (const auto& r : rows)
      if (!r.pass()) return "n=" + std::to_string(r.n) + ": " + r.failures.front();
    return {};
  }
};

/// Check one member of the K_n family against the closed forms: both slopes
/// +-(2(n+1)^2-4) found, diameter >= 4(n+1)^2-8, crossings 4n, ratio >=
/// ((n+1)^2-2)/n, and the distinguished system's intermediate values.
/// Bounds left unset take their per-n defaults.
inline VerifyRow verify_kn(std::int64_t n, std::optional<std::int64_t> c_bound = std::nullopt,
                           std::optional<std::int64_t> scale_bound = std::nullopt) {
  VerifyRow row;
  row.n = n;
  const TangleExpr e = kn(n);
  row.bounds = default_bounds(e);
  if (c_bound) row.bounds.c_bound = *c_bound;
  if (scale_bound) row.bounds.scale_bound = *scale_bound;
  const SlopeReport r = solve_sn(e, row.bounds);
  std::tie(row.slope_lo, row.slope_hi) = kn_slopes(n);
  row.found_lo = std::binary_search(r.slopes.begin(), r.slopes.end(), row.slope_lo);
  row.found_hi = std::binary_search(r.slopes.begin(), r.slopes.end(), row.slope_hi);
  row.diameter = r.diameter;
  row.ratio = r.ratio;
  row.crossings = r.crossings;
  row.diameter_bound = Fraction(4 * (n + 1) * (n + 1) - 8);
  row.ratio_bound = Fraction((n + 1) * (n + 1) - 2, n);
  if (!row.found_lo) row.failures.push_back("slope " + row.slope_lo.str() + " not found");
  if (!row.found_hi) row.failures.push_back("slope " + row.slope_hi.str() + " not found");
  if (!row.diameter || *row.diameter < row.diameter_bound)
    row.failures.push_back("diameter below " + row.diameter_bound.str());
  if (row.crossings != 4 * n) row.failures.push_back("crossings differ from " + std::to_string(4 * n));
  if (!row.ratio || *row.ratio < row.ratio_bound) row.failures.push_back("ratio below " + row.ratio_bound.str());
  row.trace_ok = true;
  for (const auto& c : kn_trace(n)) {
    if (c.ok) continue;
    row.trace_ok = false;
    row.failures.push_back("trace " + c.name + ": expected " + c.expected + ", got " + c.actual);
  }
  return row;
}

inline VerifyOutcome verify_family(std::int64_t n_max, std::optional<std::int64_t> c_bound = std::nullopt,
                                   std::optional<std::int64_t> scale_bound = std::nullopt) {
  if (n_max < 2) throw Error(ErrorCode::FamilyRange, "n-max must be at least 2, got " + std::to_string(n_max));
  VerifyOutcome out;
  for (std::int64_t n = 2; n <= n_max; ++n) out.rows.push_back(verify_kn(n, c_bound, scale_bound));
  return out;
}

/// Fixed-width pass/fail table; contains nothing run-dependent.
inline std::string render_verify(const VerifyOutcome& v) {
  auto opt = [](const std::optional<Fraction>& f) { return f ? f->str() : std::string("null"); };
  std::vector<std::vector<std::string>> rows{
      {"n", "c_bound", "slopes", "diameter", ">=", "crossings", "ratio", ">=", "trace", "result"}};
  for (const auto& r : v.rows) {
    rows.push_back({std::to_string(r.n), std::to_string(r.bounds.c_bound),
                    (r.found_lo ? r.slope_lo.str() : "-") + "," + (r.found_hi ? r.slope_hi.str() : "-"),
                    opt(r.diameter), r.diameter_bound.str(), std::to_string(r.crossings), opt(r.ratio),
                    r.ratio_bound.str(), r.trace_ok ? "ok" : "mismatch", r.pass() ? "PASS" : "FAIL"});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << '\n';
  }
  if (v.pass()) os << "all " << v.rows.size() << " family members verified\n";
  else os << "FAILED: " << v.first_failure() << '\n';
  return os.str();
}

}  // namespace arborslope
