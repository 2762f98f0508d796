#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttt/card.hpp"
#include "ttt/ordinal.hpp"

namespace ttt {

class TreeExpr;
using TreePtr = std::shared_ptr<const TreeExpr>;

// A rooted, possibly infinite, rayless tree in canonical symbolic form.
//
// A tree is either the single-vertex leaf, or a node whose root has
//   - explicit children: for each (shape, mult) slot, `mult` disjoint
//     copies of `shape` hanging off the root (mult in {1,..} ∪ {w}); and
//   - optionally a segment with limit bound l: one extra child copy of
//     family(a) for every a < l.
//
// Canonical form: child shapes pairwise distinct, sorted by canonical
// code, equal shapes merged by (saturating) multiplicity addition. The
// canonical code doubles as the printed syntax and as the memoization
// key; equal codes denote isomorphic rooted trees.
//
// Expressions are immutable and freely shared between threads.
class TreeExpr {
public:
    struct ChildSlot {
        TreePtr shape;
        Card mult;
    };

    static const TreePtr& leaf();

    bool is_leaf() const { return children_.empty() && !segment_; }
    const std::vector<ChildSlot>& children() const { return children_; }
    const std::optional<Ordinal>& segment() const { return segment_; }
    const std::string& code() const { return code_; }

    // Height of the denoted tree as an ordinal; height(family(a)) = a.
    const Ordinal& height() const { return height_; }
    // Vertex count of the denoted tree, w when infinite.
    Card size() const { return size_; }
    // Number of shapes in the expression itself (census size metric).
    uint64_t expr_size() const { return expr_size_; }
    // Set iff this expression is literally family(a).
    const std::optional<Ordinal>& family_index() const { return fam_; }

private:
    friend TreePtr make_node(std::vector<ChildSlot>, std::optional<Ordinal>);
    TreeExpr() = default;

    std::vector<ChildSlot> children_;
    std::optional<Ordinal> segment_;
    std::string code_;
    Ordinal height_;
    Card size_ = 1;
    uint64_t expr_size_ = 1;
    std::optional<Ordinal> fam_;
};

using ChildSlot = TreeExpr::ChildSlot;

// Canonicalizing node constructor. Merges and sorts child slots and
// validates the invariants. Throws std::invalid_argument for an empty
// node (no children, no segment), a zero multiplicity, or a non-limit
// segment bound.
TreePtr make_node(std::vector<ChildSlot> children, std::optional<Ordinal> segment = std::nullopt);

// Convenience: node with a single (shape, mult) slot.
TreePtr star(const TreePtr& shape, Card mult);

// The reference chain indexed by ordinals:
//   family(0)   = leaf
//   family(a+1) = node(family(a)^w)
//   family(l)   = node(segment = l)        for limit l.
TreePtr family(const Ordinal& a);

// Structural recognition: returns a iff t is literally family(a).
std::optional<Ordinal> as_family(const TreePtr& t);

// An explicit finite rooted tree: vertex 0 is the root, every other
// vertex stores its parent, and parents precede children (so the
// vertex order is a valid traversal order).
class FiniteTree {
public:
    // parent[0] must be -1; parent[i] in [0, i) for i >= 1.
    explicit FiniteTree(std::vector<int> parent);

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return 0; }
    int parent(int v) const { return parent_[v]; }
    int depth(int v) const { return depth_[v]; }
    const std::vector<int>& children(int v) const { return kids_[v]; }
    const std::vector<int>& parents() const { return parent_; }

    // Deepest common ancestor of u and v.
    int meet(int u, int v) const;
    // True iff u lies on the root path of v (u == v counts).
    bool is_ancestor(int u, int v) const;

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> kids_;
    std::vector<int> depth_;
};

// Finite approximation: every w multiplicity becomes n, and a segment
// with bound l becomes the n children family(l[i]) for i < n, all
// recursively truncated at the same n.
FiniteTree truncate(const TreePtr& t, int n);

// Re-reads a finite tree as a (canonical) tree expression.
TreePtr lift(const FiniteTree& t);

// The distinct upward-closure shapes of t: all sub-expressions of t
// (including t itself), plus the family cone {family(a) : a < bound}
// contributed symbolically by segments. bound is 0 when no segment
// occurs anywhere in t; expressions are sorted by code.
struct Suffixes {
    std::vector<TreePtr> exprs;
    Ordinal family_bound;
};
Suffixes suffixes(const TreePtr& t);

}  // namespace ttt
