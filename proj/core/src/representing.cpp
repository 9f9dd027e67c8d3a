#include "mcgauge/errors.hpp"
#include "mcgauge/freealg.hpp"

namespace mcgauge {

RepresentingAlgebra build_representing(const AlgebraSpec& spec)
{
    const Basis& basis = spec.basis();
    const Flavor flavor = is_symmetric(spec.kind()) ? Flavor::commutative : Flavor::tensor;

    std::vector<Generator> duals;
    duals.reserve(basis.size());
    for (const auto& g : basis.generators())
        duals.push_back({g.name + "*", 1 - g.degree, g.weight});
    FreeAlgebra algebra(flavor, std::move(duals), spec.weight_cap());

    DerivationTable m{flavor, 1, std::vector<FreeElement>(basis.size())};
    for (const auto& [key, value] : spec.ops()) {
        std::vector<int> degrees;
        for (int g : key)
            degrees.push_back(basis.degree(g));
        Rational factor = suspension_sign(degrees);
        if (flavor == Flavor::commutative) {
            // The sorted monomial stands for i!/prod(mult!) orderings of the key.
            std::size_t run = 1;
            for (std::size_t k = 1; k <= key.size(); ++k) {
                if (k < key.size() && key[k] == key[k - 1]) {
                    ++run;
                } else {
                    factor *= inverse_factorial(static_cast<unsigned>(run));
                    run = 1;
                }
            }
        }
        FreeElement monomial = algebra.word(key, factor);
        for (const auto& [b, c] : value.terms()) {
            FreeElement term = monomial;
            term *= c;
            m.values[static_cast<std::size_t>(b)] += term;
        }
    }
    return RepresentingAlgebra{std::move(algebra), std::move(m)};
}

DerivationTable constant_derivation(const RepresentingAlgebra& rep, const AlgebraSpec& spec, const GradedElement& x)
{
    require_degree_zero(spec, x, "gauge parameter");
    DerivationTable xt{rep.algebra.flavor(), -1, std::vector<FreeElement>(rep.algebra.size())};
    for (const auto& [a, c] : x.terms()) {
        FreeElement constant = rep.algebra.one();
        constant *= -c;
        xt.values[static_cast<std::size_t>(a)] = constant;
    }
    return xt;
}

namespace {

std::vector<Rational> representing_values(const AlgebraSpec& spec, const GradedElement& xi)
{
    std::vector<Rational> values(spec.basis().size());
    for (const auto& [g, c] : xi.terms())
        values[static_cast<std::size_t>(g)] = c;
    return values;
}

FreeElement exp_bracket_on(const RepresentingAlgebra& rep, const DerivationTable& xt, int generator, int bound)
{
    auto delta = [&](const FreeElement& e) {
        return apply_derivation(rep.algebra, xt, apply_derivation(rep.algebra, rep.differential, e)) +
               apply_derivation(rep.algebra, rep.differential, apply_derivation(rep.algebra, xt, e));
    };
    return exp_series(delta, rep.algebra.generator(generator), bound);
}

} // namespace

std::vector<FreeElement> exp_bracket_derivation(const AlgebraSpec& spec, const GradedElement& x)
{
    const RepresentingAlgebra rep = build_representing(spec);
    const DerivationTable xt = constant_derivation(rep, spec, x);
    std::vector<FreeElement> out;
    out.reserve(rep.algebra.size());
    for (int g = 0; g < static_cast<int>(rep.algebra.size()); ++g)
        out.push_back(exp_bracket_on(rep, xt, g, spec.weight_cap()));
    return out;
}

GradedElement gauge_via_exp(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");
    const RepresentingAlgebra rep = build_representing(spec);
    const DerivationTable xt = constant_derivation(rep, spec, x);
    const std::vector<Rational> values = representing_values(spec, xi);

    GradedElement eta;
    const Basis& basis = spec.basis();
    for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
        if (basis.degree(b) != 1)
            continue;
        eta.add_term(b, evaluate(exp_bracket_on(rep, xt, b, spec.weight_cap()), values));
    }
    return eta;
}

Cylinder build_cylinder(const RepresentingAlgebra& rep)
{
    const int n = static_cast<int>(rep.algebra.size());
    std::vector<Generator> gens = rep.algebra.generators();
    for (int i = 0; i < n; ++i) {
        const Generator& g = rep.algebra.generators()[static_cast<std::size_t>(i)];
        gens.push_back({"bar(" + g.name + ")", g.degree - 1, g.weight});
    }
    for (int i = 0; i < n; ++i) {
        const Generator& g = rep.algebra.generators()[static_cast<std::size_t>(i)];
        gens.push_back({"hat(" + g.name + ")", g.degree, g.weight});
    }
    const Flavor flavor = rep.algebra.flavor();
    Cylinder cyl{FreeAlgebra(flavor, std::move(gens), rep.algebra.weight_cap()), n, {}, {}, {}};

    const auto total = static_cast<std::size_t>(3 * n);
    cyl.D = DerivationTable{flavor, 1, std::vector<FreeElement>(total)};
    cyl.s = DerivationTable{flavor, -1, std::vector<FreeElement>(total)};
    for (int i = 0; i < n; ++i) {
        cyl.D.values[static_cast<std::size_t>(cyl.plain(i))] = rep.differential.values[static_cast<std::size_t>(i)];
        cyl.D.values[static_cast<std::size_t>(cyl.bar(i))] = cyl.algebra.generator(cyl.hat(i));
        cyl.s.values[static_cast<std::size_t>(cyl.plain(i))] = cyl.algebra.generator(cyl.bar(i));
    }
    cyl.theta = DerivationTable{flavor, 0, std::vector<FreeElement>(total)};
    for (int g = 0; g < 3 * n; ++g) {
        FreeElement gen = cyl.algebra.generator(g);
        cyl.theta.values[static_cast<std::size_t>(g)] =
            apply_derivation(cyl.algebra, cyl.s, apply_derivation(cyl.algebra, cyl.D, gen)) +
            apply_derivation(cyl.algebra, cyl.D, apply_derivation(cyl.algebra, cyl.s, gen));
    }
    return cyl;
}

std::vector<FreeElement> exp_theta(const Cylinder& cyl)
{
    auto theta = [&](const FreeElement& e) { return apply_derivation(cyl.algebra, cyl.theta, e); };
    std::vector<FreeElement> out;
    for (int i = 0; i < cyl.base_size; ++i)
        out.push_back(exp_series(theta, cyl.algebra.generator(cyl.plain(i)), cyl.algebra.weight_cap()));
    return out;
}

GradedElement cylinder_gauge(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");
    const Cylinder cyl = build_cylinder(build_representing(spec));
    const int n = cyl.base_size;

    // H_{xi,x}: v* -> xi(v*), bar(v*) -> x(bar(v*)) = ev_x(v*), hat(v*) -> 0.
    std::vector<Rational> values(static_cast<std::size_t>(3 * n));
    for (const auto& [g, c] : xi.terms())
        values[static_cast<std::size_t>(cyl.plain(g))] = c;
    for (const auto& [g, c] : x.terms())
        values[static_cast<std::size_t>(cyl.bar(g))] = -c;

    auto theta = [&](const FreeElement& e) { return apply_derivation(cyl.algebra, cyl.theta, e); };
    GradedElement eta;
    const Basis& basis = spec.basis();
    for (int b = 0; b < n; ++b) {
        if (basis.degree(b) != 1)
            continue;
        FreeElement image = exp_series(theta, cyl.algebra.generator(cyl.plain(b)), spec.weight_cap());
        eta.add_term(b, evaluate(image, values));
    }
    return eta;
}

} // namespace mcgauge
