#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"

namespace arborslope {

enum class NodeKind { Leaf, Sum, Product };

struct TangleNode {
  NodeKind kind = NodeKind::Leaf;
  Fraction slope;   // leaves only
  int left = -1;    // child node ids (Sum, Product)
  int right = -1;
  // Derived annotations, recomputed whenever a tree is assembled.
  int parent = -1;
  int parity = 0;   // reflections applied to this subtree, mod 2
  int rotations = 0;  // number of Product-left ancestors (not reduced)
  int leaf_index = -1;

  friend bool operator==(const TangleNode&, const TangleNode&) = default;
};

/// An algebraic tangle: rational leaves combined by tangle sum and tangle
/// product. Stored as a flat post-order node array, so every child id is
/// smaller than its parent's and the root is the last node.
///
/// A product R o T is the sum R' + T, where R' is R reflected and turned a
/// quarter; the left operand of every Product therefore carries one more
/// reflection than its parent.
class TangleExpr {
 public:
  static TangleExpr leaf(Fraction slope) {
    if (slope.is_zero()) throw Error(ErrorCode::InvalidLeaf, "rational tangle slope must be nonzero");
    TangleExpr e;
    e.nodes_.push_back(TangleNode{NodeKind::Leaf, slope});
    e.finalize();
    return e;
  }

  static TangleExpr sum(const TangleExpr& l, const TangleExpr& r) { return join(NodeKind::Sum, l, r); }
  static TangleExpr product(const TangleExpr& l, const TangleExpr& r) { return join(NodeKind::Product, l, r); }

  int root() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const TangleNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<TangleNode>& nodes() const noexcept { return nodes_; }

  /// Leaf node ids, left to right.
  const std::vector<int>& leaves() const noexcept { return leaves_; }
  int leaf_count() const noexcept { return static_cast<int>(leaves_.size()); }
  const TangleNode& leaf_node(int leaf_index) const { return node(leaves_.at(static_cast<std::size_t>(leaf_index))); }

  /// Half-open range [first, last) of leaf indices under `id`.
  std::pair<int, int> leaf_range(int id) const {
    const TangleNode& n = node(id);
    if (n.kind == NodeKind::Leaf) return {n.leaf_index, n.leaf_index + 1};
    return {leaf_range(n.left).first, leaf_range(n.right).second};
  }

  bool has_product() const {
    for (const auto& n : nodes_)
      if (n.kind == NodeKind::Product) return true;
    return false;
  }

  /// True iff the subtree at `id` contains no Product.
  bool is_montesinos(int id) const {
    const TangleNode& n = node(id);
    if (n.kind == NodeKind::Leaf) return true;
    if (n.kind == NodeKind::Product) return false;
    return is_montesinos(n.left) && is_montesinos(n.right);
  }

  /// Maximal Product-free subtrees, in left-to-right order.
  std::vector<int> montesinos_factors() const {
    std::vector<int> out;
    collect_factors(root(), out);
    return out;
  }

  friend bool operator==(const TangleExpr& a, const TangleExpr& b) { return a.nodes_ == b.nodes_; }

 private:
  TangleExpr() = default;

  static TangleExpr join(NodeKind kind, const TangleExpr& l, const TangleExpr& r) {
    TangleExpr e;
    e.nodes_.reserve(l.nodes_.size() + r.nodes_.size() + 1);
    e.nodes_ = l.nodes_;
    const int shift = l.size();
    for (TangleNode n : r.nodes_) {
      if (n.left >= 0) n.left += shift;
      if (n.right >= 0) n.right += shift;
      e.nodes_.push_back(n);
    }
    TangleNode top;
    top.kind = kind;
    top.left = l.root();
    top.right = r.root() + shift;
    e.nodes_.push_back(top);
    e.finalize();
    return e;
  }

  void finalize() {
    leaves_.clear();
    for (auto& n : nodes_) n.parent = -1;
    for (int i = 0; i < size(); ++i) {
      const TangleNode& n = nodes_[static_cast<std::size_t>(i)];
      if (n.left >= 0) nodes_[static_cast<std::size_t>(n.left)].parent = i;
      if (n.right >= 0) nodes_[static_cast<std::size_t>(n.right)].parent = i;
    }
    annotate(root(), 0, 0);
  }

  void annotate(int id, int parity, int rotations) {
    TangleNode& n = nodes_[static_cast<std::size_t>(id)];
    n.parity = parity % 2;
    n.rotations = rotations;
    if (n.kind == NodeKind::Leaf) {
      n.leaf_index = static_cast<int>(leaves_.size());
      leaves_.push_back(id);
      return;
    }
    const int l = n.left, r = n.right;
    const bool prod = n.kind == NodeKind::Product;
    annotate(l, parity + (prod ? 1 : 0), rotations + (prod ? 1 : 0));
    annotate(r, parity, rotations);
  }

  void collect_factors(int id, std::vector<int>& out) const {
    if (is_montesinos(id)) {
      out.push_back(id);
      return;
    }
    collect_factors(node(id).left, out);
    collect_factors(node(id).right, out);
  }

  std::vector<TangleNode> nodes_;
  std::vector<int> leaves_;
};

/// Canonical text: single spaces around `+` and `o`. Right operands that are
/// not leaves are parenthesized, as are the factors of a product that are
/// sums; a product on the left of a sum is parenthesized as well.
inline std::string render(const TangleExpr& e, int id) {
  const TangleNode& n = e.node(id);
  if (n.kind == NodeKind::Leaf) return n.slope.str();
  const TangleNode& l = e.node(n.left);
  const TangleNode& r = e.node(n.right);
  std::string ls = render(e, n.left);
  std::string rs = render(e, n.right);
  if (n.kind == NodeKind::Sum) {
    if (l.kind == NodeKind::Product) ls = "(" + ls + ")";
    if (r.kind != NodeKind::Leaf) rs = "(" + rs + ")";
    return ls + " + " + rs;
  }
  if (l.kind == NodeKind::Sum) ls = "(" + ls + ")";
  if (r.kind != NodeKind::Leaf) rs = "(" + rs + ")";
  return ls + " o " + rs;
}

inline std::string render(const TangleExpr& e) { return render(e, e.root()); }

/// Crossing-swapped tangle: every leaf slope negated, shape unchanged.
inline TangleExpr mirror(const TangleExpr& e, int id) {
  const TangleNode& n = e.node(id);
  if (n.kind == NodeKind::Leaf) return TangleExpr::leaf(-n.slope);
  if (n.kind == NodeKind::Sum) return TangleExpr::sum(mirror(e, n.left), mirror(e, n.right));
  return TangleExpr::product(mirror(e, n.left), mirror(e, n.right));
}

inline TangleExpr mirror(const TangleExpr& e) { return mirror(e, e.root()); }

/// N((-1/n + 1/(n+1)) o (-1/n + 1/(n+1))), alternating with 4n crossings.
inline TangleExpr kn(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::FamilyRange, "K_n is defined for n >= 2, got " + std::to_string(n));
  const TangleExpr factor =
      TangleExpr::sum(TangleExpr::leaf(Fraction(-1, n)), TangleExpr::leaf(Fraction(1, n + 1)));
  return TangleExpr::product(factor, factor);
}

/// n if `e` is exactly kn(n).
inline std::optional<std::int64_t> match_kn(const TangleExpr& e) {
  if (e.leaf_count() != 4) return std::nullopt;
  const Fraction first = e.leaf_node(0).slope;
  if (first.num() != -1 || first.den() < 2) return std::nullopt;
  const std::int64_t n = first.den();
  if (kn(n) == e) return n;
  return std::nullopt;
}

/// n if `e` is kn(n) or its mirror; both are the same (achiral) knot.
inline std::optional<std::int64_t> match_kn_family(const TangleExpr& e) {
  if (auto n = match_kn(e)) return n;
  return match_kn(mirror(e));
}

/// Regular continued-fraction entries of |x|, with the last entry >= 2
/// unless the expansion has a single term.
inline std::vector<std::int64_t> continued_fraction(Fraction x) {
  x = x.abs();
  std::vector<std::int64_t> out;
  std::int64_t p = x.num(), q = x.den();
  while (q != 0) {
    out.push_back(p / q);
    const std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return out;
}

/// Diagram crossings: each leaf contributes the sum of its continued-fraction
/// entries. This is an upper bound on crossing number, not the invariant.
inline std::int64_t crossing_count(const TangleExpr& e) {
  std::int64_t total = 0;
  for (int id : e.leaves())
    for (std::int64_t a : continued_fraction(e.node(id).slope)) total += a;
  return total;
}

/// Crossing number of K_n (its reduced alternating diagram).
inline std::int64_t family_crossing_count(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::FamilyRange, "K_n is defined for n >= 2, got " + std::to_string(n));
  return 4 * n;
}

}  // namespace arborslope
