#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace mcgauge::testing {

namespace {

void flatten(const RootedTree& t, int parent, std::vector<int>& parents)
{
    const int self = static_cast<int>(parents.size());
    parents.push_back(parent);
    for (const auto& c : t.children)
        flatten(c, self, parents);
}

// Builds the tree with vertex k hanging below parents[k] (parents[0] = -1).
RootedTree from_parents(const std::vector<int>& parents, const std::vector<int>& xi, int v = 0)
{
    RootedTree t;
    t.xi_leaves = xi[static_cast<std::size_t>(v)];
    for (std::size_t k = 0; k < parents.size(); ++k)
        if (parents[k] == v)
            t.children.push_back(from_parents(parents, xi, static_cast<int>(k)));
    return t;
}

} // namespace

// Counts vertex orderings with every parent before its children.
long brute_monotone(const RootedTree& t)
{
    std::vector<int> parents;
    flatten(t, -1, parents);
    std::vector<int> order(parents.size());
    std::iota(order.begin(), order.end(), 0);
    long count = 0;
    do {
        std::vector<int> position(order.size());
        for (std::size_t k = 0; k < order.size(); ++k)
            position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
        bool ok = true;
        for (std::size_t v = 0; v < parents.size() && ok; ++v)
            if (parents[v] >= 0 && position[static_cast<std::size_t>(parents[v])] > position[v])
                ok = false;
        count += ok;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

// Every labelled tree on n vertices with parent(k) < k, every xi assignment,
// keeping those whose vertices respect the arity cap; returns encodings.
std::set<std::string> generate_and_filter(int n, int arity_cap)
{
    std::set<std::string> out;
    std::vector<int> parents(static_cast<std::size_t>(n), 0);
    parents[0] = -1;
    while (true) {
        std::vector<int> xi(static_cast<std::size_t>(n), 0);
        while (true) {
            const RootedTree t = canonical_form(from_parents(parents, xi));
            if (t.max_arity() <= arity_cap)
                out.insert(t.encoding());
            int pos = 0;
            while (pos < n && ++xi[static_cast<std::size_t>(pos)] == arity_cap)
                xi[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n)
                break;
        }
        int pos = n - 1;
        while (pos >= 1 && ++parents[static_cast<std::size_t>(pos)] == pos)
            parents[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 1)
            break;
    }
    return out;
}

} // namespace mcgauge::testing
