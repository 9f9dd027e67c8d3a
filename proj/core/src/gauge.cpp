#include "mcgauge/gauge.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/lie.hpp"
#include "mcgauge/trees.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace mcgauge {

namespace {

GradedElement bracket(const AlgebraSpec& spec, const GradedElement& a, const GradedElement& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const std::vector<GradedElement> args{a, b};
    return eval_bracket(spec, 2, args);
}

GradedElement differential(const AlgebraSpec& spec, const GradedElement& a)
{
    if (a.is_zero())
        return {};
    const std::vector<GradedElement> args{a};
    return eval_bracket(spec, 1, args);
}

} // namespace

GradedElement gauge_closed(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    if (spec.kind() != Kind::dgla)
        throw KindError(fmt::format("the closed gauge formula needs a dgla, got {}", to_string(spec.kind())));
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");

    GradedElement result = xi;
    GradedElement term = bracket(spec, x, xi) - differential(spec, x);
    for (int n = 1; !term.is_zero(); ++n) {
        if (n > spec.weight_cap() + 1)
            throw DivergenceError("closed gauge series did not terminate within the weight cap");
        result += term;
        term = Rational(1, n + 1) * bracket(spec, x, term);
    }
    return result;
}

FreeElement exp_assoc(const FreeAlgebra& algebra, const FreeElement& x)
{
    if (x.constant_term() != 0)
        throw PreconditionError("exp needs an element without constant term");
    FreeElement sum = algebra.one();
    FreeElement term = algebra.one();
    for (int k = 1;; ++k) {
        term = algebra.multiply(term, x);
        if (term.is_zero())
            break;
        term *= Rational(1, k);
        sum += term;
    }
    return sum;
}

FreeElement log_assoc(const FreeAlgebra& algebra, const FreeElement& a)
{
    if (a.constant_term() != 1)
        throw PreconditionError("log needs an element with constant term 1");
    const FreeElement y = a - algebra.one();
    FreeElement sum;
    FreeElement power = algebra.one();
    for (int k = 1;; ++k) {
        power = algebra.multiply(power, y);
        if (power.is_zero())
            break;
        sum += Rational(k % 2 == 1 ? 1 : -1, k) * power;
    }
    return sum;
}

FreeElement invert_unital(const FreeAlgebra& algebra, const FreeElement& a)
{
    const Rational c = a.constant_term();
    if (c == 0)
        throw InvertibilityError("element with zero constant term is not invertible");
    const Rational inv_c = 1 / c;
    // a = c (1 + y) with y nilpotent.
    FreeElement y = inv_c * a;
    y -= algebra.one();
    FreeElement sum = algebra.one();
    FreeElement power = algebra.one();
    const FreeElement minus_y = -y;
    while (true) {
        power = algebra.multiply(power, minus_y);
        if (power.is_zero())
            break;
        sum += power;
    }
    return inv_c * sum;
}

FreeElement bch(const FreeAlgebra& algebra, const FreeElement& x, const FreeElement& y)
{
    return log_assoc(algebra, algebra.multiply(exp_assoc(algebra, x), exp_assoc(algebra, y)));
}

FreeAlgebra word_algebra(const AlgebraSpec& spec)
{
    return FreeAlgebra(Flavor::tensor, spec.basis().generators(), spec.weight_cap());
}

FreeAlgebra bch_symbols(int weight_cap)
{
    return FreeAlgebra(Flavor::tensor, {{"x", 0, 1}, {"y", 0, 1}}, weight_cap);
}

GradedElement bch_in(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& y)
{
    require_degree_zero(spec, x, "x");
    require_degree_zero(spec, y, "y");
    if (spec.kind() == Kind::dga)
        return bch_in(commutator_dgla(spec), x, y);
    if (spec.kind() != Kind::dgla)
        throw KindError(fmt::format("bch needs a dgla or dga, got {}", to_string(spec.kind())));
    const FreeAlgebra symbols = bch_symbols(spec.weight_cap());
    const LieRewrite rewrite = lie_rewrite(symbols, bch(symbols, symbols.generator(0), symbols.generator(1)));
    if (!rewrite.is_lie())
        throw SpecError("symbolic bch series is not a Lie element");
    return evaluate_lie(spec, rewrite, {x, y});
}

namespace {

GradedElement dga_product(const AlgebraSpec& spec, const GradedElement& a, const GradedElement& b)
{
    if (spec.arity_cap() < 2)
        return {};
    return bracket(spec, a, b);
}

UnitalElement multiply(const AlgebraSpec& spec, const UnitalElement& p, const UnitalElement& q)
{
    UnitalElement r{p.scalar * q.scalar, p.scalar * q.vector};
    r.vector += q.scalar * p.vector;
    r.vector += dga_product(spec, p.vector, q.vector);
    return r;
}

UnitalElement inverse(const AlgebraSpec& spec, const UnitalElement& a)
{
    if (a.scalar == 0)
        throw InvertibilityError("gauge element has zero constant term");
    const Rational inv_c = 1 / a.scalar;
    const UnitalElement step{0, -inv_c * a.vector};
    UnitalElement sum{1, {}};
    UnitalElement power{1, {}};
    for (int k = 0;; ++k) {
        power = multiply(spec, power, step);
        if (power.vector.is_zero())
            break;
        if (k > spec.weight_cap())
            throw DivergenceError("inverse series did not terminate within the weight cap");
        sum.vector += power.vector;
    }
    return {inv_c, inv_c * sum.vector};
}

} // namespace

UnitalElement evaluate_words(const AlgebraSpec& spec, const FreeElement& a)
{
    UnitalElement out{0, {}};
    for (const auto& [word, c] : a.terms()) {
        if (word.empty()) {
            out.scalar += c;
            continue;
        }
        GradedElement value = GradedElement::generator(word.front());
        for (std::size_t k = 1; k < word.size() && !value.is_zero(); ++k)
            value = dga_product(spec, value, GradedElement::generator(word[k]));
        out.vector += c * value;
    }
    return out;
}

GradedElement gauge_dga(const AlgebraSpec& spec, const UnitalElement& a, const GradedElement& xi)
{
    if (spec.kind() != Kind::dga)
        throw KindError(fmt::format("the dga gauge formula needs a dga, got {}", to_string(spec.kind())));
    require_degree_zero(spec, a.vector, "gauge element");
    require_maurer_cartan(spec, xi, "xi");
    const UnitalElement inv = inverse(spec, a);
    const UnitalElement conj = multiply(spec, multiply(spec, a, {0, xi}), inv);
    const UnitalElement da_inv = multiply(spec, {0, differential(spec, a.vector)}, inv);
    return conj.vector - da_inv.vector;
}

GradedElement gauge_dga(const AlgebraSpec& spec, const FreeElement& a, const GradedElement& xi)
{
    return gauge_dga(spec, evaluate_words(spec, a), xi);
}

GradedElement gauge_trees_L(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    if (!is_symmetric(spec.kind()))
        throw KindError(fmt::format("the rooted-tree formula needs a dgla or linf, got {}", to_string(spec.kind())));
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");
    const int cap = spec.weight_cap();
    GradedElement result = xi;
    for (const auto& group : enumerate_trees(cap, spec.arity_cap())) {
        for (const RootedTree& tree : group) {
            const auto js = tree.xi_counts();
            int leaves = tree.vertex_count();
            for (int j : js)
                leaves += j;
            if (leaves > cap)
                continue;
            result += tree_coefficient(tree) * tree_word_L(spec, tree, x, xi);
        }
    }
    return result;
}

GradedElement gauge_trees_A(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    if (is_symmetric(spec.kind()))
        throw KindError(fmt::format("the planar-tree formula needs a dga or ainf, got {}", to_string(spec.kind())));
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");
    const int cap = spec.weight_cap();
    GradedElement result = xi;
    const auto groups = enumerate_planar(cap, spec.arity_cap());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const int n = static_cast<int>(g) + 1;
        GradedElement level;
        for (const PlanarTree& tree : groups[g]) {
            if (tree.leaf_count() > cap)
                continue;
            for (const Labelling& lab : labellings(tree, n))
                level += tree_word_A(spec, tree, lab, x, xi);
        }
        Rational c = inverse_factorial(static_cast<unsigned>(n));
        result += (n % 2 == 0 ? c : Rational(-c)) * level;
    }
    return result;
}

Rational bernoulli(unsigned n)
{
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k)
            s += Rational(binomial(m + 1, k)) * b[k];
        b.push_back(-s / Rational(static_cast<long>(m) + 1));
    }
    return b[n];
}

bool GaugeMethod::supports(Kind kind) const
{
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

void MethodRegistry::add(GaugeMethod method)
{
    for (auto& m : methods_) {
        if (m.name == method.name) {
            m = std::move(method);
            return;
        }
    }
    methods_.push_back(std::move(method));
}

const GaugeMethod* MethodRegistry::find(const std::string& name) const
{
    for (const auto& m : methods_)
        if (m.name == name)
            return &m;
    return nullptr;
}

std::vector<const GaugeMethod*> MethodRegistry::applicable(Kind kind) const
{
    std::vector<const GaugeMethod*> out;
    for (const auto& m : methods_)
        if (m.supports(kind))
            out.push_back(&m);
    return out;
}

MethodRegistry default_registry()
{
    MethodRegistry r;
    r.add({"closed",
           {Kind::dgla, Kind::dga},
           [](const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi) {
               if (spec.kind() == Kind::dga) {
                   require_maurer_cartan(spec, xi, "xi");
                   return gauge_closed(commutator_dgla(spec), x, xi);
               }
               return gauge_closed(spec, x, xi);
           }});
    r.add({"dga",
           {Kind::dga},
           [](const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi) {
               require_degree_zero(spec, x, "gauge parameter");
               const FreeAlgebra words = word_algebra(spec);
               FreeElement lx;
               for (const auto& [g, c] : x.terms())
                   lx += words.generator(g, c);
               return gauge_dga(spec, exp_assoc(words, lx), xi);
           }});
    r.add({"trees",
           {Kind::dgla, Kind::linf, Kind::dga, Kind::ainf},
           [](const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi) {
               return is_symmetric(spec.kind()) ? gauge_trees_L(spec, x, xi) : gauge_trees_A(spec, x, xi);
           }});
    r.add({"exp", {Kind::dgla, Kind::linf, Kind::dga, Kind::ainf}, gauge_via_exp});
    r.add({"cylinder", {Kind::dgla, Kind::linf, Kind::dga, Kind::ainf}, cylinder_gauge});
    return r;
}

RouteComparison compare_routes(const MethodRegistry& registry, const AlgebraSpec& spec, const GradedElement& x,
                               const GradedElement& xi)
{
    RouteComparison out;
    for (const GaugeMethod* m : registry.applicable(spec.kind())) {
        out.results.push_back({m->name, m->apply(spec, x, xi)});
        if (out.results.back().value != out.results.front().value)
            out.agree = false;
    }
    return out;
}

} // namespace mcgauge
