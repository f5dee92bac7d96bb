#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arborslope/diagram.hpp"
#include "arborslope/edgepath.hpp"
#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"
#include "arborslope/slopecalc.hpp"
#include "arborslope/tangle.hpp"
#include "arborslope/transform.hpp"

namespace arborslope {

struct SolveBounds {
  std::int64_t c_bound = 32;
  std::int64_t scale_bound = 4;
};

inline constexpr std::size_t kPerSlopeCap = 16;
inline constexpr std::size_t kPartialLimit = 4'000'000;

inline SolveBounds default_bounds(const TangleExpr& e) {
  SolveBounds b;
  if (auto n = match_kn_family(e)) b.c_bound = std::max<std::int64_t>(8, *n * *n + *n + 2);
  return b;
}

enum class CrossingSource { FamilyExact, DiagramCount };

inline const char* to_string(CrossingSource s) {
  return s == CrossingSource::FamilyExact ? "family-exact" : "diagram-count";
}

struct SlopeReport {
  TangleExpr expr = TangleExpr::leaf(1);
  std::string solver;  // "sn" or "montesinos"
  std::vector<CandidateSystem> systems;
  std::vector<Fraction> slopes;
  std::optional<Fraction> diameter;
  std::int64_t crossings = 0;
  CrossingSource crossing_source = CrossingSource::DiagramCount;
  std::optional<Fraction> ratio;
  std::vector<Fraction> certified;  // values proven to be boundary slopes of essential surfaces
  SolveBounds bounds;
  std::vector<std::string> diagnostics;
};

/// The K_n slopes -(2(n+1)^2-4) and 2(n+1)^2-4.
inline std::pair<Fraction, Fraction> kn_slopes(std::int64_t n) {
  const std::int64_t s = 2 * (n + 1) * (n + 1) - 4;
  return {Fraction(-s), Fraction(s)};
}

/// Aggregate systems into a report: sorted distinct slopes (at most
/// kPerSlopeCap systems kept per slope), diameter, crossings and ratio.
inline SlopeReport report(const TangleExpr& expr, std::vector<CandidateSystem> systems, SolveBounds bounds,
                          std::vector<std::string> diagnostics = {}) {
  SlopeReport r;
  r.expr = expr;
  r.bounds = bounds;
  r.diagnostics = std::move(diagnostics);
  std::stable_sort(systems.begin(), systems.end(), [](const CandidateSystem& x, const CandidateSystem& y) {
    if (x.slope.has_value() != y.slope.has_value()) return x.slope.has_value();
    return x.slope && *x.slope < *y.slope;
  });
  std::optional<Fraction> last;
  bool first = true;
  std::size_t run = 0;
  for (auto& s : systems) {
    if (first || s.slope != last) {
      run = 0;
      last = s.slope;
      first = false;
      if (s.slope) r.slopes.push_back(*s.slope);
    }
    if (run++ < kPerSlopeCap) r.systems.push_back(std::move(s));
  }
  if (const auto n = match_kn_family(expr)) {
    r.crossings = family_crossing_count(*n);
    r.crossing_source = CrossingSource::FamilyExact;
    const auto [lo, hi] = kn_slopes(*n);
    for (Fraction s : {lo, hi})
      if (std::binary_search(r.slopes.begin(), r.slopes.end(), s)) r.certified.push_back(s);
  } else {
    r.crossings = crossing_count(expr);
  }
  if (!r.slopes.empty()) {
    r.diameter = r.slopes.back() - r.slopes.front();
    r.ratio = *r.diameter / Fraction(r.crossings);
  }
  if (const int k = component_count(expr); k > 1)
    r.diagnostics.push_back("N(expr) is a " + std::to_string(k) +
                            "-component link; slopes use the lowest-puncture orientation of each component");
  if (r.slopes.empty() && r.diagnostics.empty()) r.diagnostics.push_back("no candidate system closes within the bounds");
  return r;
}

namespace detail {

struct Partial {
  WeightState state;
  Fraction tau;
  bool symbolic = false;
  bool can_up = false;
  bool can_down = false;
  int left = -1;    // partial index in the left child's list
  int right = -1;   // partial index in the right child's list
  int option = -1;  // leaf option index
};

struct LeafOption {
  Edgepath path;
  std::optional<PathFamily> family;  // set for a vertical run of open length
};

using PartialKey = std::tuple<WeightState, Fraction, bool, bool, bool>;

inline PartialKey key_of(const Partial& p) { return {p.state, p.tau, p.symbolic, p.can_up, p.can_down}; }

// Primitive direction of (a, b): states glue only along the same ray.
inline std::pair<std::int64_t, std::int64_t> ray(const WeightState& w) {
  const std::int64_t g = std::gcd(w.a, w.b);
  if (g == 0) return {0, 0};
  return {w.a / g, w.b / g};
}

class SnSearch {
 public:
  SnSearch(const TangleExpr& expr, SolveBounds bounds) : e_(expr), bounds_(bounds) {}

  std::vector<CandidateSystem> run() {
    options_.resize(static_cast<std::size_t>(e_.leaf_count()));
    parts_.resize(static_cast<std::size_t>(e_.size()));
    for (int id = 0; id < e_.size(); ++id) {
      const TangleNode& n = e_.node(id);
      if (n.kind == NodeKind::Leaf) build_leaf(id);
      else build_internal(id);
      if (truncated_) break;
    }
    std::vector<CandidateSystem> out;
    if (truncated_) return out;
    std::optional<Fraction> s0;
    try {
      s0 = seifert_tau(e_);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SeifertUndefined) throw;
      diagnostics.push_back(std::string("slope normalization unavailable: ") + err.what());
    }
    const auto& roots = parts_[static_cast<std::size_t>(e_.root())];
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Partial& p = roots[i];
      if (p.state.b != 0 || p.state.a <= 0) continue;
      std::int64_t shift = 0;
      if (p.symbolic) {
        if (p.state.c % p.state.a != 0) continue;
        shift = -p.state.c / p.state.a;
        if ((shift > 0 && !p.can_up) || (shift < 0 && !p.can_down)) continue;
      } else if (p.state.c != 0) {
        continue;
      }
      std::vector<Edgepath> assignment(static_cast<std::size_t>(e_.leaf_count()));
      std::vector<std::pair<int, int>> runs;
      collect(e_.root(), static_cast<int>(i), assignment, runs);
      pin(assignment, runs, shift);
      CandidateSystem sys = evaluate(e_, std::move(assignment));
      if (!closes_at_zero(sys)) throw std::logic_error("pinned system does not close: " + sys.final_state().str());
      sys.seifert_tau = s0;
      if (s0) sys.slope = sys.tau() - *s0;
      out.push_back(std::move(sys));
    }
    return out;
  }

  std::vector<std::string> diagnostics;

 private:
  void build_leaf(int id) {
    const TangleNode& n = e_.node(id);
    auto& opts = options_[static_cast<std::size_t>(n.leaf_index)];
    auto& list = parts_[static_cast<std::size_t>(id)];
    const EdgepathFamilies fam = enumerate_paths(n.slope, true, bounds_.c_bound, bounds_.scale_bound);
    if (n.rotations == 0) {
      // Unrotated leaves must end on u = 0; the run length is pinned at the root.
      for (const auto& f : fam.paths) {
        opts.push_back({f.prefix, f});
        list.push_back({endpoint_state(f.prefix), tau(f.prefix), true, f.can_ascend, f.can_descend, -1, -1,
                        static_cast<int>(opts.size()) - 1});
      }
      return;
    }
    for (const auto& f : fam.paths) {
      for (std::int64_t m = -bounds_.c_bound; m <= bounds_.c_bound; ++m) {
        auto path = f.extended_to(m);
        if (!path) continue;
        opts.push_back({*path, std::nullopt});
        list.push_back({endpoint_state(*path), tau(*path), false, false, false, -1, -1,
                        static_cast<int>(opts.size()) - 1});
      }
    }
    for (const auto& c : fam.constants) {
      opts.push_back({c, std::nullopt});
      list.push_back({endpoint_state(c), Fraction(0), false, false, false, -1, -1, static_cast<int>(opts.size()) - 1});
    }
  }

  void build_internal(int id) {
    const TangleNode& n = e_.node(id);
    const auto& lefts = parts_[static_cast<std::size_t>(n.left)];
    const auto& rights = parts_[static_cast<std::size_t>(n.right)];
    const bool on_axis = n.rotations == 0;  // must stay on u = 0 to close

    struct Side {
      WeightState state;
      Fraction tau;
      int index;
    };
    std::vector<Side> left_side;
    left_side.reserve(lefts.size());
    std::size_t undefined = 0, infeasible = 0;
    for (std::size_t i = 0; i < lefts.size(); ++i) {
      const Partial& p = lefts[i];
      if (n.kind == NodeKind::Sum) {
        left_side.push_back({p.state, p.tau, static_cast<int>(i)});
        continue;
      }
      if (p.state.c == 0) {
        ++undefined;
        continue;
      }
      const TransformOutcome t = rotate_reflect(p.state);
      if (!t.feasible) {
        ++infeasible;
        continue;
      }
      if (on_axis && t.state.b != 0) continue;
      left_side.push_back({t.state, -p.tau + t.tau_prime, static_cast<int>(i)});
    }
    if (undefined + infeasible > 0)
      diagnostics.push_back("node '" + render(e_, id) + "': pruned " + std::to_string(undefined) +
                            " states with c = 0 and " + std::to_string(infeasible) + " infeasible transforms");

    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> by_ray;
    for (std::size_t j = 0; j < rights.size(); ++j) by_ray[ray(rights[j].state)].push_back(static_cast<int>(j));

    auto& out = parts_[static_cast<std::size_t>(id)];
    std::set<PartialKey> seen;
    for (const Side& l : left_side) {
      const auto it = by_ray.find(ray(l.state));
      if (it == by_ray.end()) continue;
      const Partial& lp = lefts[static_cast<std::size_t>(l.index)];
      for (int j : it->second) {
        const Partial& r = rights[static_cast<std::size_t>(j)];
        const auto k = common_scale(l.state, r.state);
        if (!k || k->first > bounds_.scale_bound || k->second > bounds_.scale_bound) continue;
        Partial p;
        p.state = glue_sum(l.state.scaled(k->first), r.state.scaled(k->second));
        if (on_axis && p.state.b != 0) continue;
        p.tau = l.tau + r.tau;
        // Only unrotated leaves carry open runs, and a Product's left side is rotated.
        const bool lsym = n.kind == NodeKind::Sum && lp.symbolic;
        p.symbolic = lsym || r.symbolic;
        p.can_up = (lsym && lp.can_up) || (r.symbolic && r.can_up);
        p.can_down = (lsym && lp.can_down) || (r.symbolic && r.can_down);
        p.left = l.index;
        p.right = j;
        if (!seen.insert(key_of(p)).second) continue;
        out.push_back(p);
        if (out.size() > kPartialLimit) {
          truncated_ = true;
          diagnostics.push_back("search truncated at node '" + render(e_, id) + "': more than " +
                                std::to_string(kPartialLimit) + " partial states");
          return;
        }
      }
    }
  }

  void collect(int id, int index, std::vector<Edgepath>& assignment, std::vector<std::pair<int, int>>& runs) const {
    const TangleNode& n = e_.node(id);
    const Partial& p = parts_[static_cast<std::size_t>(id)][static_cast<std::size_t>(index)];
    if (n.kind == NodeKind::Leaf) {
      const LeafOption& o = options_[static_cast<std::size_t>(n.leaf_index)][static_cast<std::size_t>(p.option)];
      assignment[static_cast<std::size_t>(n.leaf_index)] = o.path;
      if (o.family) runs.emplace_back(n.leaf_index, p.option);
      return;
    }
    collect(n.left, p.left, assignment, runs);
    collect(n.right, p.right, assignment, runs);
  }

  // The whole shift goes to the last run that may move in its direction.
  void pin(std::vector<Edgepath>& assignment, const std::vector<std::pair<int, int>>& runs, std::int64_t shift) const {
    if (shift == 0) return;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
      const auto [leaf, option] = *it;
      const PathFamily& f = *options_[static_cast<std::size_t>(leaf)][static_cast<std::size_t>(option)].family;
      if (auto path = f.extended_to(f.arrival() + shift)) {
        assignment[static_cast<std::size_t>(leaf)] = *path;
        return;
      }
    }
    throw std::logic_error("no vertical run can absorb the closing shift");
  }

  const TangleExpr& e_;
  SolveBounds bounds_;
  std::vector<std::vector<LeafOption>> options_;
  std::vector<std::vector<Partial>> parts_;
  bool truncated_ = false;
};

}  // namespace detail

/// The same system on the mirror expression: every edgepath mirrored, all
/// twists and the slope negated.
inline CandidateSystem mirror_system(const CandidateSystem& s) {
  std::vector<Edgepath> assignment;
  for (const auto& e : s.assignment) assignment.push_back(e.mirrored());
  CandidateSystem m = evaluate(mirror(s.expr), std::move(assignment));
  m.u = s.u;
  if (s.seifert_tau) m.seifert_tau = -*s.seifert_tau;
  if (s.slope) m.slope = -*s.slope;
  m.via_achirality = s.via_achirality;
  return m;
}

/// Candidate systems of N(expr) for expressions with a product, closed on
/// u = 0: leaves under no product's left factor end on an integer vertex
/// with an open vertical run; the rest are concrete paths to <m>, |m| <=
/// c_bound, or constants. Sum nodes rescale by at most scale_bound.
inline SlopeReport solve_sn(const TangleExpr& expr, SolveBounds bounds) {
  if (bounds.c_bound < 1 || bounds.scale_bound < 1)
    throw Error(ErrorCode::UnsupportedShape, "c_bound and scale_bound must be positive");
  if (!expr.has_product()) throw Error(ErrorCode::UnsupportedShape, "solve_sn needs an expression with a product");
  detail::SnSearch search(expr, bounds);
  std::vector<CandidateSystem> systems = search.run();
  std::vector<std::string> diagnostics = std::move(search.diagnostics);
  if (match_kn_family(expr)) {
    // K_n is achiral: the mirror knot's systems bound surfaces in K_n too.
    const std::size_t own = systems.size();
    for (std::size_t i = 0; i < own; ++i) {
      systems.push_back(mirror_system(systems[i]));
      systems.back().via_achirality = true;
    }
  }
  SlopeReport r = report(expr, std::move(systems), bounds, std::move(diagnostics));
  r.solver = "sn";
  return r;
}

inline SlopeReport solve_sn(const TangleExpr& expr) { return solve_sn(expr, default_bounds(expr)); }

namespace detail {

// One way a leaf's edgepath can end at abscissa u in (0, 1): on its
// horizontal edge, or partway along the last edge of a leftward path. On the
// piece, v(u) = alpha + beta (1 - u).
struct MontesinosPiece {
  bool constant = false;
  std::vector<Fraction> vertices;
  Fraction lo, hi;  // u in [lo, hi), lo excluded when 0
  Fraction alpha, beta;
};

inline std::vector<MontesinosPiece> montesinos_pieces(Fraction start) {
  std::vector<MontesinosPiece> out;
  MontesinosPiece c;
  c.constant = true;
  c.vertices = {start};
  c.lo = Fraction(start.den() - 1, start.den());
  c.hi = 1;
  c.alpha = start;
  c.beta = 0;
  out.push_back(c);
  for (auto& prefix : minimal_prefixes(start)) {
    if (prefix.size() < 2) continue;
    const Fraction from = prefix[prefix.size() - 2], to = prefix.back();
    MontesinosPiece p;
    p.vertices = prefix;
    p.lo = Fraction(to.den() - 1, to.den());
    p.hi = Fraction(from.den() - 1, from.den());
    // a + b = Q moves linearly from q_from to q_to, c = P with it.
    p.alpha = Fraction(to.num() - from.num(), to.den() - from.den());
    p.beta = Fraction(from.num()) - p.alpha * Fraction(from.den());
    out.push_back(std::move(p));
  }
  return out;
}

inline bool in_piece(const MontesinosPiece& p, Fraction u) {
  if (u <= Fraction(0) || u >= p.hi) return false;
  return u >= p.lo;
}

// The leaf's edgepath when its piece is cut at abscissa u.
inline Edgepath cut(const MontesinosPiece& p, Fraction u) {
  if (p.constant) {
    // Smallest integer weights with b/(a+b) = u and c/(a+b) = start.
    const Fraction x = p.vertices.front();
    const std::int64_t s = u.den(), r = u.num();
    const std::int64_t k = x.den() / std::gcd(x.den(), s);
    return Edgepath::constant(x, WeightState{(s - r) * k, r * k, x.num() * (s * k / x.den()), 0, false});
  }
  const Fraction from = p.vertices[p.vertices.size() - 2], to = p.vertices.back();
  const Fraction q = Fraction(1) / (Fraction(1) - u);
  const Fraction f = (q - Fraction(from.den())) / Fraction(to.den() - from.den());
  return Edgepath::path(p.vertices, f);
}

}  // namespace detail

/// Candidate systems of N(T1 + ... + Tk), k >= 3. Interior solutions put
/// every edgepath's end on one vertical line u in (0, 1) with vertical
/// coordinates summing to zero, final edges traversed fractionally. Systems
/// on u = 0 end on integer vertices, |m| <= c_bound on arrival, with open
/// vertical runs pinned by the same condition.
inline SlopeReport solve_montesinos(const TangleExpr& expr, std::int64_t c_bound) {
  if (expr.has_product()) throw Error(ErrorCode::UnsupportedShape, "solve_montesinos needs a sum of rational tangles");
  if (expr.leaf_count() < 3)
    throw Error(ErrorCode::UnsupportedShape, "solve_montesinos needs at least 3 rational tangles, got " +
                                                 std::to_string(expr.leaf_count()));
  if (c_bound < 1) throw Error(ErrorCode::UnsupportedShape, "c_bound must be positive");
  const auto leaves = static_cast<std::size_t>(expr.leaf_count());
  std::vector<std::string> diagnostics;
  std::optional<Fraction> s0;
  try {
    s0 = seifert_tau(expr);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::SeifertUndefined) throw;
    diagnostics.push_back(std::string("slope normalization unavailable: ") + err.what());
  }
  std::vector<CandidateSystem> systems;
  auto emit = [&](std::vector<Edgepath> assignment, std::optional<Fraction> u) {
    CandidateSystem sys = evaluate(expr, std::move(assignment));
    if (!closes(sys)) throw std::logic_error("solved system does not close: " + sys.final_state().str());
    sys.u = u;
    sys.seifert_tau = s0;
    if (s0) sys.slope = sys.tau() - *s0;
    systems.push_back(std::move(sys));
  };

  std::vector<std::vector<detail::MontesinosPiece>> pieces(leaves);
  for (std::size_t i = 0; i < leaves; ++i) pieces[i] = detail::montesinos_pieces(expr.leaf_node(static_cast<int>(i)).slope);
  std::vector<std::size_t> pick(leaves, 0);
  std::size_t degenerate = 0;
  while (true) {
    Fraction sa(0), sb(0);
    for (std::size_t i = 0; i < leaves; ++i) {
      const auto& p = pieces[i][pick[i]];
      sa += p.alpha + p.beta;
      sb -= p.beta;
    }
    if (sb.is_zero()) {
      if (sa.is_zero()) ++degenerate;
    } else {
      const Fraction u = -sa / sb;
      bool ok = true;
      for (std::size_t i = 0; i < leaves && ok; ++i) ok = detail::in_piece(pieces[i][pick[i]], u);
      if (ok) {
        std::vector<Edgepath> assignment;
        for (std::size_t i = 0; i < leaves; ++i) assignment.push_back(detail::cut(pieces[i][pick[i]], u));
        emit(std::move(assignment), u);
      }
    }
    std::size_t i = leaves;
    while (i > 0 && ++pick[i - 1] == pieces[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  if (degenerate > 0)
    diagnostics.push_back("skipped " + std::to_string(degenerate) +
                          " edgepath combinations whose vertical coordinates cancel on a whole interval");

  std::vector<std::vector<PathFamily>> runs(leaves);
  for (std::size_t i = 0; i < leaves; ++i)
    runs[i] = enumerate_paths(expr.leaf_node(static_cast<int>(i)).slope, true, c_bound).paths;
  if (std::all_of(runs.begin(), runs.end(), [](const auto& r) { return !r.empty(); })) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < leaves; ++i) total += runs[i][pick[i]].arrival();
      const std::int64_t shift = -total;
      std::vector<Edgepath> assignment;
      for (std::size_t i = 0; i < leaves; ++i) assignment.push_back(runs[i][pick[i]].prefix);
      bool placed = shift == 0;
      for (std::size_t i = leaves; i > 0 && !placed; --i) {
        const PathFamily& f = runs[i - 1][pick[i - 1]];
        if (auto path = f.extended_to(f.arrival() + shift)) {
          assignment[i - 1] = *path;
          placed = true;
        }
      }
      if (placed) emit(std::move(assignment), Fraction(0));
      std::size_t i = leaves;
      while (i > 0 && ++pick[i - 1] == runs[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }

  SlopeReport r = report(expr, std::move(systems), SolveBounds{c_bound, 1}, std::move(diagnostics));
  r.solver = "montesinos";
  return r;
}

/// Dispatch on shape: expressions with a product go to solve_sn, sums of
/// three or more rational tangles to solve_montesinos.
inline SlopeReport solve(const TangleExpr& expr, SolveBounds bounds) {
  if (expr.has_product()) return solve_sn(expr, bounds);
  return solve_montesinos(expr, bounds.c_bound);
}

/// The distinguished K_n system: constants (1, n^2+n-1, -n-1) and
/// (1, n^2+n-1, n) in the left factor; <-1/n> -> <0> and
/// <1/(n+1)> -> <1/n> -> ... -> <1> -> ... -> <n^2+n> in the right.
inline CandidateSystem kn_system(std::int64_t n) {
  const TangleExpr e = kn(n);
  const std::int64_t top = n * n + n;
  std::vector<Edgepath> a;
  a.push_back(Edgepath::constant(Fraction(-1, n), WeightState{1, top - 1, -n - 1, 0, false}));
  a.push_back(Edgepath::constant(Fraction(1, n + 1), WeightState{1, top - 1, n, 0, false}));
  a.push_back(Edgepath::path({Fraction(-1, n), Fraction(0)}));
  std::vector<Fraction> v;
  for (std::int64_t k = n + 1; k >= 2; --k) v.emplace_back(1, k);
  for (std::int64_t m = 1; m <= top; ++m) v.emplace_back(m);
  a.push_back(Edgepath::path(std::move(v)));
  CandidateSystem sys = evaluate(e, std::move(a));
  sys.u = Fraction(0);
  sys.seifert_tau = seifert_tau(e);
  sys.slope = sys.tau() - *sys.seifert_tau;
  return sys;
}

struct TraceCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Intermediate values of kn_system(n) against their closed forms.
inline std::vector<TraceCheck> kn_trace(std::int64_t n) {
  const CandidateSystem s = kn_system(n);
  const std::int64_t top = n * n + n;
  const TangleExpr& e = s.expr;
  const int t1 = e.node(e.root()).left, t2 = e.node(e.root()).right;
  std::vector<TraceCheck> out;
  auto check = [&](std::string name, const auto& expected, const auto& actual) {
    std::ostringstream x, y;
    x << expected;
    y << actual;
    out.push_back({std::move(name), x.str(), y.str(), expected == actual});
  };
  check("T1 leaf -1/" + std::to_string(n), WeightState{1, top - 1, -n - 1, 0, false}, s.states[static_cast<std::size_t>(e.leaves()[0])]);
  check("T1 leaf 1/" + std::to_string(n + 1), WeightState{1, top - 1, n, 0, false}, s.states[static_cast<std::size_t>(e.leaves()[1])]);
  check("T1 glued", WeightState{1, top - 1, -1, 0, false}, s.states[static_cast<std::size_t>(t1)]);
  const auto& t = s.transforms[static_cast<std::size_t>(e.root())];
  check("T1 transformed", WeightState{1, 0, -top, 0, false}, t ? t->state : WeightState{});
  check("tau'(S1)", Fraction(2), t ? t->tau_prime : Fraction(0));
  check("tau(S1)", Fraction(0), s.taus[static_cast<std::size_t>(t1)]);
  check("tau(S2)", Fraction(-2 * (n * n + 2 * n)), s.taus[static_cast<std::size_t>(t2)]);
  check("tau(S)", Fraction(-2 * (n + 1) * (n + 1) + 4), s.tau());
  check("tau(S0)", Fraction(0), *s.seifert_tau);
  check("slope", kn_slopes(n).first, *s.slope);
  check("closure", WeightState{1 + 0, 0, 0, 0, false}, s.final_state());
  return out;
}

}  // namespace arborslope
