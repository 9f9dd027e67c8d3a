#include "support.hpp"

#include <map>
#include <memory>

namespace mcgauge::testing {

std::string fixture_path(const std::string& file)
{
    return std::string(MCGAUGE_FIXTURE_DIR) + "/" + file;
}

SpecDocument load_fixture(const std::string& file)
{
    return load_spec(fixture_path(file));
}

const AlgebraSpec& fixture(const std::string& file)
{
    static std::map<std::string, std::unique_ptr<SpecDocument>> cache;
    auto& slot = cache[file];
    if (!slot)
        slot = std::make_unique<SpecDocument>(load_fixture(file));
    return slot->algebra;
}

GradedElement el(const AlgebraSpec& spec, const std::string& text)
{
    return parse_element(spec.basis(), text);
}

Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

GradedElement random_of_degree(const AlgebraSpec& spec, int degree, Rng& rng)
{
    GradedElement e;
    const Basis& basis = spec.basis();
    for (int g = 0; g < static_cast<int>(basis.size()); ++g)
        if (basis.degree(g) == degree)
            e.add_term(g, random_rational(rng));
    return e;
}

FreeElement random_polynomial(const FreeAlgebra& algebra, Rng& rng, int max_terms)
{
    std::uniform_int_distribution<int> terms(1, max_terms), length(1, algebra.weight_cap());
    std::uniform_int_distribution<int> letter(0, static_cast<int>(algebra.size()) - 1);
    FreeElement out;
    const int n = terms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m(static_cast<std::size_t>(length(rng)));
        for (auto& g : m)
            g = letter(rng);
        out += algebra.word(m, random_rational(rng));
    }
    return out;
}

namespace {

McSampler any_degree_one(const std::string& file)
{
    return [file](Rng& rng) { return random_of_degree(fixture(file), 1, rng); };
}

/// alpha u + c alpha^2 w for the fixtures whose MC locus is a parabola.
McSampler parabola(const std::string& file, const Rational& c)
{
    return [file, c](Rng& rng) {
        const AlgebraSpec& spec = fixture(file);
        const Rational alpha = random_rational(rng);
        GradedElement xi = GradedElement::generator(spec.basis().index("u"), alpha);
        xi.add_term(spec.basis().index("w"), c * alpha * alpha);
        return xi;
    };
}

} // namespace

std::vector<FixtureCase> dgla_cases()
{
    return {
        {"f1.alg", any_degree_one("f1.alg")},
        {"f3.alg", any_degree_one("f3.alg")},
        {"f4.alg", parabola("f4.alg", Rational(-1, 2))},
        {"f5.alg", any_degree_one("f5.alg")},
        {"heisenberg_ext.alg", any_degree_one("heisenberg_ext.alg")},
    };
}

std::vector<FixtureCase> dga_cases()
{
    return {
        {"d1.alg", any_degree_one("d1.alg")},
        {"d2.alg", any_degree_one("d2.alg")},
        {"d3.alg", parabola("d3.alg", Rational(-1))},
        {"d4.alg", any_degree_one("d4.alg")},
    };
}

std::vector<std::string> valid_fixture_files()
{
    return {"f1.alg", "f2.alg", "f3.alg", "f4.alg", "f5.alg", "f6.alg", "heisenberg_ext.alg",
            "linf3.alg", "d1.alg", "d2.alg", "d3.alg", "d4.alg", "ainf3.alg"};
}

} // namespace mcgauge::testing

namespace mcgauge {

void PrintTo(const GradedElement& e, std::ostream* os)
{
    if (e.is_zero())
        *os << "0";
    for (const auto& [g, c] : e.terms())
        *os << " + " << to_string(c) << " g" << g;
}

void PrintTo(const FreeElement& e, std::ostream* os)
{
    if (e.is_zero())
        *os << "0";
    for (const auto& [m, c] : e.terms()) {
        *os << " + " << to_string(c) << " [";
        for (int g : m)
            *os << ' ' << g;
        *os << " ]";
    }
}

} // namespace mcgauge
