#include "mcgauge/trees.hpp"

#include "mcgauge/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>

namespace mcgauge {

int RootedTree::vertex_count() const
{
    int n = 1;
    for (const auto& c : children)
        n += c.vertex_count();
    return n;
}

std::string RootedTree::encoding() const
{
    std::string s = "(";
    for (const auto& c : children)
        s += c.encoding() + ",";
    for (int k = 0; k < xi_leaves; ++k)
        s += "xi,";
    return s + "x)";
}

std::vector<int> RootedTree::xi_counts() const
{
    std::vector<int> out{xi_leaves};
    for (const auto& c : children) {
        auto sub = c.xi_counts();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

int RootedTree::max_arity() const
{
    int a = arity();
    for (const auto& c : children)
        a = std::max(a, c.max_arity());
    return a;
}

RootedTree canonical_form(RootedTree tree)
{
    for (auto& c : tree.children)
        c = canonical_form(std::move(c));
    std::sort(tree.children.begin(), tree.children.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.encoding() < b.encoding(); });
    return tree;
}

std::vector<std::vector<RootedTree>> enumerate_trees(int n_max, int arity_cap)
{
    std::vector<std::vector<RootedTree>> by_size(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
    for (int n = 1; n <= n_max; ++n) {
        // Pool of all smaller trees; children are multisets drawn from it in
        // nondecreasing pool order, so each multiset is produced once.
        std::vector<const RootedTree*> pool;
        for (int s = 1; s < n; ++s)
            for (const auto& t : by_size[static_cast<std::size_t>(s)])
                pool.push_back(&t);

        std::vector<RootedTree> found;
        std::vector<RootedTree> chosen;
        for (int j = 0; j <= arity_cap - 1; ++j) {
            const int max_children = arity_cap - 1 - j;
            std::function<void(std::size_t, int)> choose = [&](std::size_t start, int remaining) {
                if (remaining == 0) {
                    found.push_back(canonical_form(RootedTree{j, chosen}));
                    return;
                }
                if (static_cast<int>(chosen.size()) == max_children)
                    return;
                for (std::size_t p = start; p < pool.size(); ++p) {
                    const int size = pool[p]->vertex_count();
                    if (size > remaining)
                        continue;
                    chosen.push_back(*pool[p]);
                    choose(p, remaining - size);
                    chosen.pop_back();
                }
            };
            choose(0, n - 1);
        }
        std::sort(found.begin(), found.end(),
                  [](const RootedTree& a, const RootedTree& b) { return a.encoding() < b.encoding(); });
        by_size[static_cast<std::size_t>(n)] = std::move(found);
    }
    by_size.erase(by_size.begin());
    return by_size;
}

namespace {

int hook_product(const RootedTree& t, Integer& product)
{
    int size = 1;
    for (const auto& c : t.children)
        size += hook_product(c, product);
    product *= size;
    return size;
}

Integer factorial_product_of_xi(const RootedTree& t)
{
    Integer p = factorial(static_cast<unsigned>(t.xi_leaves));
    for (const auto& c : t.children)
        p *= factorial_product_of_xi(c);
    return p;
}

} // namespace

Integer monotone_count(const RootedTree& tree)
{
    Integer product = 1;
    const int n = hook_product(tree, product);
    return factorial(static_cast<unsigned>(n)) / product;
}

Rational tree_coefficient(const RootedTree& tree)
{
    const int n = tree.vertex_count();
    Rational c(monotone_count(tree), factorial(static_cast<unsigned>(n)) * factorial_product_of_xi(tree));
    c.canonicalize();
    return n % 2 == 0 ? c : Rational(-c);
}

namespace {

GradedElement evaluate_rooted(const AlgebraSpec& spec, const RootedTree& t, const GradedElement& x,
                              const GradedElement& xi)
{
    if (t.arity() > spec.arity_cap())
        throw UnsupportedArity(
            fmt::format("tree vertex of arity {} exceeds the arity cap {}", t.arity(), spec.arity_cap()));
    std::vector<GradedElement> args;
    args.reserve(static_cast<std::size_t>(t.arity()));
    for (const auto& c : t.children) {
        args.push_back(evaluate_rooted(spec, c, x, xi));
        if (args.back().is_zero())
            return {};
    }
    for (int k = 0; k < t.xi_leaves; ++k)
        args.push_back(xi);
    args.push_back(x);
    return suspended_op(spec, t.arity(), args);
}

} // namespace

GradedElement tree_word_L(const AlgebraSpec& spec, const RootedTree& tree, const GradedElement& x,
                          const GradedElement& xi)
{
    if (!is_symmetric(spec.kind()))
        throw KindError("rooted-tree words need a dgla or linf spec");
    return evaluate_rooted(spec, tree, x, xi);
}

int PlanarTree::vertex_count() const
{
    int n = 1;
    for (const auto& c : children)
        n += c.vertex_count();
    return n;
}

int PlanarTree::leaf_count() const
{
    int n = 0;
    for (int s : slots)
        n += s < 0 ? 1 : children[static_cast<std::size_t>(s)].leaf_count();
    return n;
}

int PlanarTree::max_arity() const
{
    int a = arity();
    for (const auto& c : children)
        a = std::max(a, c.max_arity());
    return a;
}

namespace {

std::string planar_text(const PlanarTree& t, const Labelling* lab, std::size_t& leaf)
{
    std::string s = "(";
    for (std::size_t k = 0; k < t.slots.size(); ++k) {
        if (k)
            s += ",";
        if (t.slots[k] < 0) {
            s += lab ? (lab->is_x.at(leaf) ? "x" : "xi") : "*";
            ++leaf;
        } else {
            s += planar_text(t.children[static_cast<std::size_t>(t.slots[k])], lab, leaf);
        }
    }
    return s + ")";
}

} // namespace

std::string PlanarTree::encoding() const
{
    std::size_t leaf = 0;
    return planar_text(*this, nullptr, leaf);
}

std::string encoding(const PlanarTree& tree, const Labelling& labelling)
{
    std::size_t leaf = 0;
    return planar_text(tree, &labelling, leaf);
}

std::vector<std::vector<PlanarTree>> enumerate_planar(int n_max, int arity_cap)
{
    std::vector<std::vector<PlanarTree>> by_size(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<PlanarTree> found;
        for (int arity = 1; arity <= arity_cap; ++arity) {
            PlanarTree current;
            std::function<void(int, int)> fill = [&](int slot, int remaining) {
                if (slot == arity) {
                    if (remaining == 0)
                        found.push_back(current);
                    return;
                }
                current.slots.push_back(-1);
                fill(slot + 1, remaining);
                current.slots.pop_back();
                for (int s = 1; s <= remaining; ++s) {
                    for (const auto& child : by_size[static_cast<std::size_t>(s)]) {
                        current.slots.push_back(static_cast<int>(current.children.size()));
                        current.children.push_back(child);
                        fill(slot + 1, remaining - s);
                        current.children.pop_back();
                        current.slots.pop_back();
                    }
                }
            };
            fill(0, n - 1);
        }
        by_size[static_cast<std::size_t>(n)] = std::move(found);
    }
    by_size.erase(by_size.begin());
    return by_size;
}

namespace {

/// Preorder flattening: parent of each vertex and owning vertex of each leaf.
struct FlatPlanar {
    std::vector<int> parent;
    std::vector<int> leaf_owner;
};

void flatten(const PlanarTree& t, int parent, FlatPlanar& out)
{
    const int id = static_cast<int>(out.parent.size());
    out.parent.push_back(parent);
    for (int s : t.slots) {
        if (s < 0)
            out.leaf_owner.push_back(id);
        else
            flatten(t.children[static_cast<std::size_t>(s)], id, out);
    }
}

} // namespace

bool is_admissible(const PlanarTree& tree, const Labelling& labelling, int n)
{
    FlatPlanar flat;
    flatten(tree, -1, flat);
    if (labelling.is_x.size() != flat.leaf_owner.size())
        return false;
    std::vector<int> x_count(flat.parent.size(), 0);
    int total = 0;
    for (std::size_t k = 0; k < labelling.is_x.size(); ++k)
        if (labelling.is_x[k]) {
            ++x_count[static_cast<std::size_t>(flat.leaf_owner[k])];
            ++total;
        }
    if (total != n)
        return false;
    for (std::size_t v = 0; v < flat.parent.size(); ++v)
        if (x_count[v] > 0 && flat.parent[v] >= 0 && x_count[static_cast<std::size_t>(flat.parent[v])] == 0)
            return false;
    return true;
}

std::vector<Labelling> labellings(const PlanarTree& tree, int n)
{
    const int leaves = tree.leaf_count();
    std::vector<Labelling> out;
    if (n < 0 || n > leaves)
        return out;
    std::vector<bool> mask(static_cast<std::size_t>(leaves), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    // Lexicographically decreasing masks, starting with x on the first n leaves.
    do {
        Labelling lab{mask};
        if (is_admissible(tree, lab, n))
            out.push_back(std::move(lab));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

namespace {

GradedElement evaluate_planar(const AlgebraSpec& spec, const PlanarTree& t, const Labelling& lab, std::size_t& leaf,
                              const GradedElement& x, const GradedElement& xi)
{
    if (t.arity() > spec.arity_cap())
        throw UnsupportedArity(
            fmt::format("tree vertex of arity {} exceeds the arity cap {}", t.arity(), spec.arity_cap()));
    std::vector<GradedElement> args;
    args.reserve(t.slots.size());
    for (int s : t.slots) {
        if (s < 0)
            args.push_back(lab.is_x.at(leaf++) ? x : xi);
        else
            args.push_back(evaluate_planar(spec, t.children[static_cast<std::size_t>(s)], lab, leaf, x, xi));
    }
    return suspended_op(spec, t.arity(), args);
}

} // namespace

GradedElement tree_word_A(const AlgebraSpec& spec, const PlanarTree& tree, const Labelling& labelling,
                          const GradedElement& x, const GradedElement& xi)
{
    if (is_symmetric(spec.kind()))
        throw KindError("planar-tree words need a dga or ainf spec");
    if (labelling.is_x.size() != static_cast<std::size_t>(tree.leaf_count()))
        throw InvalidInput("labelling does not match the number of leaves");
    std::size_t leaf = 0;
    return evaluate_planar(spec, tree, labelling, leaf, x, xi);
}

} // namespace mcgauge
