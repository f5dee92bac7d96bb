#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborslope/diagram.hpp"
#include "arborslope/edgepath.hpp"
#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"
#include "arborslope/tangle.hpp"
#include "arborslope/transform.hpp"

namespace arborslope {

/// Twist of a surface glued across a tangle sum.
inline Fraction tau_sum(Fraction t1, Fraction t2) { return t1 + t2; }

/// Twist of a surface in R o T: the reflected left surface twists the other
/// way, the quarter-turn isotopy adds tau', the right surface is unchanged.
inline Fraction tau_product(Fraction t1, Fraction tau_prime1, Fraction t2) { return -t1 + tau_prime1 + t2; }

/// A full edgepath assignment on an expression with every node's weights
/// and twist, evaluated bottom-up.
struct CandidateSystem {
  TangleExpr expr = TangleExpr::leaf(1);
  std::vector<Edgepath> assignment;             // per leaf index
  std::vector<WeightState> states;              // per node id
  std::vector<Fraction> taus;                   // per node id
  std::vector<std::optional<TransformOutcome>> transforms;  // per Product node id: outcome of its left child
  std::vector<std::int64_t> scale;              // per node id: multiplier applied when glued into the parent
  std::optional<Fraction> u;                    // common endpoint abscissa, when solved for one
  std::optional<Fraction> seifert_tau;
  std::optional<Fraction> slope;
  bool via_achirality = false;  // a mirrored system of an achiral knot's mirror expression

  const WeightState& final_state() const { return states.back(); }
  Fraction tau() const { return taus.back(); }

  /// Sheets carried by a leaf's edgepath in the glued surface.
  std::int64_t effective_sheets(int leaf_index) const {
    int id = expr.leaves().at(static_cast<std::size_t>(leaf_index));
    std::int64_t k = assignment.at(static_cast<std::size_t>(leaf_index)).sheets;
    while (id != expr.root()) {
      k *= scale[static_cast<std::size_t>(id)];
      id = expr.node(id).parent;
    }
    return k;
  }
};

/// Evaluate weights and twists bottom-up from a leaf assignment. Sum nodes
/// glue with the least common rescaling; Product nodes transform the left
/// child first. Throws MismatchedWeights, UndefinedCase or
/// CasePreconditionViolated when the assignment does not glue.
inline CandidateSystem evaluate(const TangleExpr& expr, std::vector<Edgepath> assignment) {
  if (static_cast<int>(assignment.size()) != expr.leaf_count())
    throw Error(ErrorCode::MismatchedWeights, "assignment size does not match leaf count");
  CandidateSystem sys;
  sys.expr = expr;
  sys.assignment = std::move(assignment);
  const auto n = static_cast<std::size_t>(expr.size());
  sys.states.resize(n);
  sys.taus.resize(n);
  sys.transforms.resize(n);
  sys.scale.assign(n, 1);
  for (int id = 0; id < expr.size(); ++id) {
    const TangleNode& node = expr.node(id);
    const auto i = static_cast<std::size_t>(id);
    if (node.kind == NodeKind::Leaf) {
      const Edgepath& e = sys.assignment[static_cast<std::size_t>(node.leaf_index)];
      if (e.start != node.slope)
        throw Error(ErrorCode::MismatchedWeights, "edgepath for leaf " + std::to_string(node.leaf_index) +
                                                      " starts at " + e.start.str() + ", tangle is " + node.slope.str());
      sys.states[i] = endpoint_weights(e);
      sys.taus[i] = tau(e);
      continue;
    }
    const auto l = static_cast<std::size_t>(node.left), r = static_cast<std::size_t>(node.right);
    WeightState left = sys.states[l];
    if (node.kind == NodeKind::Product) {
      const TransformOutcome t = rotate_reflect(left);
      if (!t.feasible) throw Error(ErrorCode::MismatchedWeights, "negative weights after transforming " + left.str());
      sys.transforms[i] = t;
      left = t.state;
      sys.taus[i] = tau_product(sys.taus[l], t.tau_prime, sys.taus[r]);
    } else {
      sys.taus[i] = tau_sum(sys.taus[l], sys.taus[r]);
    }
    const auto k = common_scale(left, sys.states[r]);
    if (!k) throw Error(ErrorCode::MismatchedWeights, "cannot glue " + left.str() + " to " + sys.states[r].str());
    sys.scale[l] = k->first;
    sys.scale[r] = k->second;
    sys.states[i] = glue_sum(left.scaled(k->first), sys.states[r].scaled(k->second));
  }
  return sys;
}

/// Closure at u = 0 for expressions with products: b = 0 and c = 0.
inline bool closes_at_zero(const CandidateSystem& s) { return s.final_state().b == 0 && s.final_state().c == 0; }

/// Closure for Montesinos sums: vertical coordinates add to zero.
inline bool closes(const CandidateSystem& s) { return s.final_state().c == 0; }

/// Every invariant a closed system must satisfy, as human-readable problems:
/// edgepath validity, gluing at every node, the twist recursion and closure.
/// Empty means sound.
inline std::vector<std::string> check_system(const CandidateSystem& s) {
  std::vector<std::string> out;
  const TangleExpr& e = s.expr;
  for (int i = 0; i < e.leaf_count(); ++i) {
    const Edgepath& p = s.assignment.at(static_cast<std::size_t>(i));
    for (const auto& v : validate(p))
      out.push_back("leaf " + std::to_string(i) + " " + p.str() + ": " + to_string(v.property) + " " + v.detail);
    if (p.start != e.leaf_node(i).slope) out.push_back("leaf " + std::to_string(i) + " starts at the wrong vertex");
  }
  try {
    const CandidateSystem again = evaluate(e, s.assignment);
    for (int id = 0; id < e.size(); ++id) {
      const auto i = static_cast<std::size_t>(id);
      if (again.states[i] != s.states[i])
        out.push_back("node " + std::to_string(id) + " state " + s.states[i].str() + ", recomputed " + again.states[i].str());
      if (again.taus[i] != s.taus[i])
        out.push_back("node " + std::to_string(id) + " tau " + s.taus[i].str() + ", recomputed " + again.taus[i].str());
    }
  } catch (const Error& err) {
    out.push_back(std::string("does not glue: ") + err.what());
    return out;
  }
  for (int id = 0; id < e.size(); ++id) {
    const TangleNode& n = e.node(id);
    if (n.kind == NodeKind::Leaf) continue;
    const auto i = static_cast<std::size_t>(id), l = static_cast<std::size_t>(n.left), r = static_cast<std::size_t>(n.right);
    WeightState left = s.states[l];
    Fraction t = s.taus[l];
    if (n.kind == NodeKind::Product) {
      if (!s.transforms[i]) {
        out.push_back("product node " + std::to_string(id) + " has no transform");
        continue;
      }
      left = s.transforms[i]->state;
      t = tau_product(s.taus[l], s.transforms[i]->tau_prime, s.taus[r]);
    } else {
      t = tau_sum(s.taus[l], s.taus[r]);
    }
    if (left.scaled(s.scale[l]).a != s.states[r].scaled(s.scale[r]).a ||
        left.scaled(s.scale[l]).b != s.states[r].scaled(s.scale[r]).b)
      out.push_back("node " + std::to_string(id) + " glues unequal (a, b)");
    if (t != s.taus[i]) out.push_back("node " + std::to_string(id) + " breaks the twist recursion");
  }
  const bool on_axis = !s.u || s.u->is_zero();
  if (on_axis ? !closes_at_zero(s) : !closes(s)) out.push_back("not closed: " + s.final_state().str());
  if (s.slope && s.seifert_tau && *s.slope != s.tau() - *s.seifert_tau) out.push_back("slope is not tau(S) - tau(S0)");
  return out;
}

// ---------------------------------------------------------------------------
// Seifert normalization

enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

namespace detail {

// Quarter turn: own NW lands on NE, NE on SE, SE on SW, SW on NW.
inline Corner unrotate(Corner global) {
  switch (global) {
    case NE: return NW;
    case SE: return NE;
    case SW: return SE;
    case NW: return SW;
  }
  return NW;
}

// Puncture id (leaf_index * 4 + corner) seen at `corner` of node `id`.
inline int outer_puncture(const TangleExpr& e, int id, Corner corner) {
  const TangleNode& n = e.node(id);
  if (n.kind == NodeKind::Leaf) return n.leaf_index * 4 + corner;
  if (corner == NE || corner == SE) return outer_puncture(e, n.right, corner);
  if (n.kind == NodeKind::Sum) return outer_puncture(e, n.left, corner);
  return outer_puncture(e, n.left, unrotate(corner));
}

inline int left_view(const TangleExpr& e, int id, Corner corner) {
  const TangleNode& n = e.node(id);
  return outer_puncture(e, n.left, n.kind == NodeKind::Product ? unrotate(corner) : corner);
}

}  // namespace detail

namespace detail {

// Strands of N(expr): `inner` pairs the corners joined inside a leaf, `outer`
// the corners joined between leaves or by the closure.
struct Strands {
  std::vector<int> inner, outer;
};

inline Strands strands(const TangleExpr& e) {
  const auto count = static_cast<std::size_t>(e.leaf_count() * 4);
  Strands st{std::vector<int>(count), std::vector<int>(count, -1)};
  for (int leaf = 0; leaf < e.leaf_count(); ++leaf) {
    const int base = leaf * 4;
    auto link = [&](int x, int y) {
      st.inner[static_cast<std::size_t>(base + x)] = base + y;
      st.inner[static_cast<std::size_t>(base + y)] = base + x;
    };
    switch (parity_class(e.leaf_node(leaf).slope)) {
      case ParityClass::Zero: link(NW, NE); link(SW, SE); break;
      case ParityClass::Infinity: link(NW, SW); link(NE, SE); break;
      case ParityClass::One: link(NW, SE); link(NE, SW); break;
    }
  }
  auto join = [&](int x, int y) {
    st.outer[static_cast<std::size_t>(x)] = y;
    st.outer[static_cast<std::size_t>(y)] = x;
  };
  for (int id = 0; id < e.size(); ++id) {
    if (e.node(id).kind == NodeKind::Leaf) continue;
    join(left_view(e, id, NE), outer_puncture(e, e.node(id).right, NW));
    join(left_view(e, id, SE), outer_puncture(e, e.node(id).right, SW));
  }
  join(outer_puncture(e, e.root(), NW), outer_puncture(e, e.root(), NE));
  join(outer_puncture(e, e.root(), SW), outer_puncture(e, e.root(), SE));
  return st;
}

}  // namespace detail

/// Orientation signs at every leaf corner of the numerator closure N(expr):
/// +1 where the knot enters the leaf's ball, -1 where it leaves. Components
/// are oriented starting from their lowest-numbered puncture (leaf order,
/// then NW, NE, SW, SE), entering there.
inline std::vector<std::array<int, 4>> orientation_signs(const TangleExpr& e) {
  const detail::Strands st = detail::strands(e);
  const int count = e.leaf_count() * 4;
  std::vector<int> sign(static_cast<std::size_t>(count), 0);
  for (int start = 0; start < count; ++start) {
    if (sign[static_cast<std::size_t>(start)] != 0) continue;
    int cur = start;
    do {
      const int exit = st.inner[static_cast<std::size_t>(cur)];
      sign[static_cast<std::size_t>(cur)] = 1;
      sign[static_cast<std::size_t>(exit)] = -1;
      cur = st.outer[static_cast<std::size_t>(exit)];
    } while (cur != start);
  }
  std::vector<std::array<int, 4>> out(static_cast<std::size_t>(e.leaf_count()));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i / 4)][static_cast<std::size_t>(i % 4)] = sign[static_cast<std::size_t>(i)];
  return out;
}

/// Number of components of N(expr); 1 for a knot.
inline int component_count(const TangleExpr& e) {
  const detail::Strands st = detail::strands(e);
  std::vector<bool> seen(st.inner.size(), false);
  int components = 0;
  for (std::size_t start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    int cur = static_cast<int>(start);
    do {
      const int exit = st.inner[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(cur)] = seen[static_cast<std::size_t>(exit)] = true;
      cur = st.outer[static_cast<std::size_t>(exit)];
    } while (cur != static_cast<int>(start));
  }
  return components;
}

/// The class of arcs that would join two like-signed corners; an oriented
/// surface can never carry them.
inline ParityClass forbidden_class(const std::array<int, 4>& s) {
  if (s[NW] == s[NE]) return ParityClass::Zero;
  if (s[NW] == s[SE]) return ParityClass::One;
  return ParityClass::Infinity;
}

/// Vertex path of an oriented surface piece in the tangle `slope`: walk left,
/// always to the parent outside the forbidden class, until u = 0. The piece
/// then closes off along the edge to <1/0>, which carries no twist.
inline std::vector<Fraction> seifert_vertices(Fraction slope, ParityClass forbidden) {
  if (forbidden == ParityClass::Infinity || parity_class(slope) == forbidden)
    throw Error(ErrorCode::SeifertUndefined, "no oriented surface piece reaching <1/0> for tangle " + slope.str());
  std::vector<Fraction> out{slope};
  while (out.back().den() > 1) {
    const auto parents = farey_parents(out.back());
    out.push_back(parity_class(parents[0]) != forbidden ? parents[0] : parents[1]);
  }
  return out;
}

struct SeifertSystem {
  std::vector<std::vector<Fraction>> vertices;  // per leaf, each continuing to <1/0>
  std::vector<int> factors;                     // maximal Montesinos subtrees
  std::vector<Fraction> factor_taus;            // signed by reflection parity
  Fraction tau;
};

/// The Seifert surface assembled from one oriented piece per maximal
/// Montesinos factor, its twist summed with sign (-1)^(reflections).
/// Throws SeifertUndefined unless every factor has a leaf with even
/// denominator.
inline SeifertSystem seifert_system(const TangleExpr& e) {
  SeifertSystem s;
  s.factors = e.montesinos_factors();
  for (int f : s.factors) {
    const auto [lo, hi] = e.leaf_range(f);
    bool even = false;
    for (int i = lo; i < hi; ++i) even = even || e.leaf_node(i).slope.den() % 2 == 0;
    if (!even)
      throw Error(ErrorCode::SeifertUndefined, "Montesinos factor '" + render(e, f) +
                                                   "' has no rational tangle with even denominator");
  }
  const auto signs = orientation_signs(e);
  s.vertices.resize(static_cast<std::size_t>(e.leaf_count()));
  Fraction total(0);
  for (int f : s.factors) {
    const auto [lo, hi] = e.leaf_range(f);
    Fraction t(0);
    for (int i = lo; i < hi; ++i) {
      auto path = seifert_vertices(e.leaf_node(i).slope, forbidden_class(signs[static_cast<std::size_t>(i)]));
      t += tau(Edgepath::path(path));
      s.vertices[static_cast<std::size_t>(i)] = std::move(path);
    }
    if (e.node(f).parity % 2 == 1) t = -t;
    s.factor_taus.push_back(t);
    total += t;
  }
  s.tau = total;
  return s;
}

inline Fraction seifert_tau(const TangleExpr& e) { return seifert_system(e).tau; }

/// tau(S) - tau(S0).
inline Fraction boundary_slope(const CandidateSystem& sys) {
  const Fraction s0 = sys.seifert_tau ? *sys.seifert_tau : seifert_tau(sys.expr);
  return sys.tau() - s0;
}

}  // namespace arborslope
