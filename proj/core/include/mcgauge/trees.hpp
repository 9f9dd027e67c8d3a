#pragma once

#include "mcgauge/graded.hpp"
#include "mcgauge/structure.hpp"

#include <string>
#include <vector>

namespace mcgauge {

/// Unordered rooted tree for the L-infinity gauge formula. Every vertex
/// carries exactly one x-leaf, `xi_leaves` xi-leaves and its children, so
/// its arity is children + xi_leaves + 1. Children are kept sorted by
/// encoding, which makes isomorphic trees compare equal.
struct RootedTree {
    int xi_leaves = 0;
    std::vector<RootedTree> children;

    int arity() const { return static_cast<int>(children.size()) + xi_leaves + 1; }
    int vertex_count() const;
    /// Canonical text, e.g. "((x),xi,x)": children, then xi-leaves, then the x-leaf.
    std::string encoding() const;
    /// j-vector in preorder.
    std::vector<int> xi_counts() const;
    int max_arity() const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Sorts children recursively into canonical order.
RootedTree canonical_form(RootedTree tree);

/// All isomorphism classes with 1..n_max vertices and arity <= arity_cap;
/// element k of the result holds the trees with k + 1 vertices.
std::vector<std::vector<RootedTree>> enumerate_trees(int n_max, int arity_cap);

/// Number of vertex orderings in which every vertex follows its parent
/// (hook-length formula n! / prod |subtree(v)|).
Integer monotone_count(const RootedTree& tree);

/// (-1)^n r / (n! j_1! ... j_n!).
Rational tree_coefficient(const RootedTree& tree);

/// Bracket word of the tree: each vertex applies l_i(children..., xi..., x).
/// Throws KindError for dga/ainf specs and UnsupportedArity when a vertex
/// exceeds the spec's arity cap.
GradedElement tree_word_L(const AlgebraSpec& spec, const RootedTree& tree, const GradedElement& x,
                          const GradedElement& xi);

/// Planar tree for the A-infinity formula. slots[k] < 0 is a leaf, otherwise
/// an index into children. Slot order is significant.
struct PlanarTree {
    std::vector<int> slots;
    std::vector<PlanarTree> children;

    int arity() const { return static_cast<int>(slots.size()); }
    int vertex_count() const;
    int leaf_count() const;
    int max_arity() const;
    /// e.g. "(*,(*))"; leaves print as '*' or, with a labelling, "x"/"xi".
    std::string encoding() const;

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

/// is_x[k] says whether the k-th leaf (preorder, slot order) is an x-leaf.
struct Labelling {
    std::vector<bool> is_x;

    friend bool operator==(const Labelling&, const Labelling&) = default;
};

std::string encoding(const PlanarTree& tree, const Labelling& labelling);

/// All planar trees with 1..n_max vertices and arity <= arity_cap, grouped by
/// vertex count like enumerate_trees.
std::vector<std::vector<PlanarTree>> enumerate_planar(int n_max, int arity_cap);

/// Labellings with exactly n x-leaves such that the parent of every vertex
/// carrying an x-leaf also carries one.
std::vector<Labelling> labellings(const PlanarTree& tree, int n);

/// Checks the two labelling constraints (count and parent rule).
bool is_admissible(const PlanarTree& tree, const Labelling& labelling, int n);

/// Word of a labelled planar tree: each vertex applies the suspended m_i to
/// its slots in order. Throws KindError for dgla/linf specs.
GradedElement tree_word_A(const AlgebraSpec& spec, const PlanarTree& tree, const Labelling& labelling,
                          const GradedElement& x, const GradedElement& xi);

} // namespace mcgauge
