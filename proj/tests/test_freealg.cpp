#include "mcgauge/errors.hpp"
#include "mcgauge/freealg.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace mcgauge;
using mcgauge::testing::el;
using mcgauge::testing::fixture;
using mcgauge::testing::Rng;

namespace {

// a (degree 1) and b (degree 0), both weight 1.
FreeAlgebra two_letters(Flavor flavor)
{
    return FreeAlgebra(flavor, {{"a", 1, 1}, {"b", 0, 1}}, 4);
}

// Algebra map determined by generator images, applied monomial by monomial.
FreeElement substitute(const FreeAlgebra& algebra, const FreeElement& e, const std::vector<FreeElement>& images)
{
    FreeElement out;
    for (const auto& [m, c] : e.terms()) {
        FreeElement term = algebra.one();
        for (int g : m)
            term = algebra.multiply(term, images[static_cast<std::size_t>(g)]);
        out += c * term;
    }
    return out;
}

FreeElement random_word(const FreeAlgebra& algebra, Rng& rng)
{
    std::uniform_int_distribution<int> len(1, 3), letter(0, static_cast<int>(algebra.size()) - 1);
    Monomial m(static_cast<std::size_t>(len(rng)));
    for (auto& g : m)
        g = letter(rng);
    return algebra.word(m);
}

} // namespace

TEST(FreeAlgebra, CommutativeSigns)
{
    const FreeAlgebra A = two_letters(Flavor::commutative);
    const FreeElement a = A.generator(0), b = A.generator(1);
    EXPECT_TRUE(A.multiply(a, a).is_zero());
    EXPECT_FALSE(A.multiply(b, b).is_zero());
    EXPECT_EQ(A.multiply(b, a), A.multiply(a, b));
    EXPECT_EQ(A.power(b, 5), FreeElement{});
    EXPECT_EQ(A.power(b, 4).coefficient({1, 1, 1, 1}), 1);

    const FreeAlgebra odd(Flavor::commutative, {{"p", 1, 1}, {"q", 1, 1}}, 3);
    EXPECT_EQ(odd.word({1, 0}), -odd.word({0, 1}));
}

TEST(FreeAlgebra, TensorWordsStayOrdered)
{
    const FreeAlgebra T = two_letters(Flavor::tensor);
    const FreeElement ab = T.multiply(T.generator(0), T.generator(1));
    EXPECT_EQ(ab.coefficient({0, 1}), 1);
    EXPECT_EQ(ab.coefficient({1, 0}), 0);
    EXPECT_FALSE(T.multiply(T.generator(0), T.generator(0)).is_zero());
    EXPECT_EQ(T.degree(ab), 1);
    EXPECT_THROW(T.degree(ab + T.generator(1)), DegreeError);
}

TEST(ApplyDerivation, HandExpansion)
{
    const FreeAlgebra C = two_letters(Flavor::commutative);
    DerivationTable D{Flavor::commutative, 1, {C.generator(1), FreeElement{}}};
    // D(ab) = D(a) b - a D(b) = b^2
    EXPECT_EQ(apply_derivation(C, D, C.word({0, 1})), C.word({1, 1}));
    EXPECT_TRUE(apply_derivation(C, D, C.one()).is_zero());

    const FreeAlgebra T = two_letters(Flavor::tensor);
    DerivationTable DT{Flavor::tensor, 1, {T.generator(1), FreeElement{}}};
    EXPECT_EQ(apply_derivation(T, DT, T.word({0, 0})), T.word({1, 0}) - T.word({0, 1}));
    EXPECT_THROW(apply_derivation(T, D, T.word({0})), InvalidInput);
}

TEST(ApplyDerivation, LeibnizOnRandomWords)
{
    Rng rng(31);
    for (const char* file : {"f5.alg", "d4.alg", "linf3.alg", "ainf3.alg"}) {
        const RepresentingAlgebra rep = build_representing(fixture(file));
        const FreeAlgebra& A = rep.algebra;
        for (int trial = 0; trial < 30; ++trial) {
            const FreeElement p = random_word(A, rng), q = random_word(A, rng);
            // d never raises weight, so the rule only holds below the cap.
            if (p.is_zero() || q.is_zero() ||
                A.weight(p.terms().begin()->first) + A.weight(q.terms().begin()->first) > A.weight_cap())
                continue;
            const int sign = (*A.degree(p) % 2 == 0) ? 1 : -1;
            const FreeElement lhs = apply_derivation(A, rep.differential, A.multiply(p, q));
            const FreeElement rhs = A.multiply(apply_derivation(A, rep.differential, p), q) +
                                    Rational(sign) * A.multiply(p, apply_derivation(A, rep.differential, q));
            EXPECT_EQ(lhs, rhs) << file << " p=" << A.format(p) << " q=" << A.format(q);
        }
    }
}

TEST(Representing, DualDegreesAndFlavor)
{
    const AlgebraSpec& f1 = fixture("f1.alg");
    const RepresentingAlgebra rep = build_representing(f1);
    EXPECT_EQ(rep.algebra.flavor(), Flavor::commutative);
    for (int g = 0; g < static_cast<int>(f1.basis().size()); ++g) {
        EXPECT_EQ(rep.algebra.degree(g), 1 - f1.basis().degree(g));
        EXPECT_EQ(rep.algebra.weight(g), f1.basis().weight(g));
    }
    EXPECT_EQ(build_representing(fixture("d2.alg")).algebra.flavor(), Flavor::tensor);
}

TEST(Representing, SquareCoefficientOfBinaryBracket)
{
    // [u,u] = 2c: the commutative component (1/2) l_2^* puts u* u* into d(c*)
    // with coefficient 2 * 1/2 = 1.
    const AlgebraSpec& f2 = fixture("f2.alg");
    const RepresentingAlgebra rep = build_representing(f2);
    const int u = f2.basis().index("u"), c = f2.basis().index("c");
    const FreeElement dc = rep.differential.values[static_cast<std::size_t>(c)];
    EXPECT_EQ(dc.coefficient({u, u}), 1);
    EXPECT_EQ(dc.terms().size(), 1u);
}

TEST(Representing, DifferentialSquaresToZeroOnPolynomials)
{
    Rng rng(32);
    for (const auto& file : mcgauge::testing::valid_fixture_files()) {
        const RepresentingAlgebra rep = build_representing(fixture(file));
        for (int trial = 0; trial < 10; ++trial) {
            const FreeElement p = mcgauge::testing::random_polynomial(rep.algebra, rng);
            const FreeElement dp = apply_derivation(rep.algebra, rep.differential, p);
            EXPECT_TRUE(apply_derivation(rep.algebra, rep.differential, dp).is_zero()) << file;
        }
    }
}

TEST(ExpSeries, TerminatesOrThrows)
{
    const FreeAlgebra C = two_letters(Flavor::commutative);
    auto zero = [](const FreeElement&) { return FreeElement{}; };
    EXPECT_EQ(exp_series(zero, C.generator(1), 0), C.generator(1));
    auto id = [](const FreeElement& e) { return e; };
    EXPECT_THROW(exp_series(id, C.generator(1), 3), DivergenceError);
    // b -> a twice is zero: e^op(b) = b + a.
    auto shift = [&](const FreeElement& e) { return Rational(e.coefficient({1})) * C.generator(0); };
    EXPECT_EQ(exp_series(shift, C.generator(1), 2), C.generator(1) + C.generator(0));
}

TEST(Evaluate, SubstitutesScalars)
{
    const FreeAlgebra C = two_letters(Flavor::commutative);
    const FreeElement p = C.one() + Rational(3) * C.word({1, 1}) - C.generator(1);
    EXPECT_EQ(evaluate(p, {0, 2}), Rational(1 + 12 - 2));
}

TEST(ExpBracket, IdentityAtZero)
{
    for (const auto& file : mcgauge::testing::valid_fixture_files()) {
        const AlgebraSpec& spec = fixture(file);
        const RepresentingAlgebra rep = build_representing(spec);
        const auto images = exp_bracket_derivation(spec, GradedElement{});
        ASSERT_EQ(images.size(), spec.basis().size());
        for (int g = 0; g < static_cast<int>(images.size()); ++g)
            EXPECT_EQ(images[static_cast<std::size_t>(g)], rep.algebra.generator(g)) << file;
    }
}

TEST(ExpBracket, CommutesWithDifferential)
{
    Rng rng(33);
    for (const char* file : {"f1.alg", "f5.alg", "linf3.alg", "d4.alg", "ainf3.alg", "heisenberg_ext.alg"}) {
        const AlgebraSpec& spec = fixture(file);
        const RepresentingAlgebra rep = build_representing(spec);
        for (int trial = 0; trial < 5; ++trial) {
            const GradedElement x = mcgauge::testing::random_of_degree(spec, 0, rng);
            const auto phi = exp_bracket_derivation(spec, x);
            for (int g = 0; g < static_cast<int>(phi.size()); ++g) {
                const FreeElement lhs = apply_derivation(rep.algebra, rep.differential, phi[static_cast<std::size_t>(g)]);
                const FreeElement rhs =
                    substitute(rep.algebra, rep.differential.values[static_cast<std::size_t>(g)], phi);
                EXPECT_EQ(lhs, rhs) << file << " generator " << g;
            }
        }
    }
}

TEST(ExpBracket, RejectsWrongDegree)
{
    const AlgebraSpec& f1 = fixture("f1.alg");
    EXPECT_THROW(exp_bracket_derivation(f1, el(f1, "u")), DegreeError);
}

TEST(GaugeViaExp, Examples)
{
    const AlgebraSpec& f1 = fixture("f1.alg");
    EXPECT_EQ(gauge_via_exp(f1, el(f1, "x"), el(f1, "u")), el(f1, "u + v"));
    EXPECT_EQ(gauge_via_exp(f1, GradedElement{}, el(f1, "u")), el(f1, "u"));
    const AlgebraSpec& f2 = fixture("f2.alg");
    EXPECT_THROW(gauge_via_exp(f2, GradedElement{}, el(f2, "u")), PreconditionError);
}

TEST(Cylinder, ThetaOnGenerators)
{
    const RepresentingAlgebra rep = build_representing(fixture("f3.alg"));
    const Cylinder cyl = build_cylinder(rep);
    const FreeAlgebra& C = cyl.algebra;
    const int n = cyl.base_size;
    ASSERT_EQ(C.size(), 3u * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        EXPECT_EQ(C.degree(cyl.bar(i)), C.degree(cyl.plain(i)) - 1);
        EXPECT_EQ(C.degree(cyl.hat(i)), C.degree(cyl.plain(i)));
        const FreeElement v = C.generator(cyl.plain(i));
        const FreeElement expected =
            apply_derivation(C, cyl.s, apply_derivation(C, cyl.D, v)) + C.generator(cyl.hat(i));
        EXPECT_EQ(apply_derivation(C, cyl.theta, v), expected);
        EXPECT_TRUE(apply_derivation(C, cyl.theta, C.generator(cyl.bar(i))).is_zero());
        EXPECT_TRUE(apply_derivation(C, cyl.theta, C.generator(cyl.hat(i))).is_zero());
    }
}

TEST(Cylinder, ThetaCommutesWithDifferential)
{
    Rng rng(34);
    for (const char* file : {"f4.alg", "d3.alg", "linf3.alg"}) {
        const Cylinder cyl = build_cylinder(build_representing(fixture(file)));
        for (int trial = 0; trial < 15; ++trial) {
            const FreeElement p = mcgauge::testing::random_polynomial(cyl.algebra, rng, 3);
            const FreeElement Dp = apply_derivation(cyl.algebra, cyl.D, p);
            EXPECT_TRUE(apply_derivation(cyl.algebra, cyl.D, Dp).is_zero()) << file;
            EXPECT_EQ(apply_derivation(cyl.algebra, cyl.D, apply_derivation(cyl.algebra, cyl.theta, p)),
                      apply_derivation(cyl.algebra, cyl.theta, Dp))
                << file;
        }
    }
}

TEST(Cylinder, ExpThetaLinearPart)
{
    const Cylinder cyl = build_cylinder(build_representing(fixture("f1.alg")));
    const auto images = exp_theta(cyl);
    ASSERT_EQ(images.size(), static_cast<std::size_t>(cyl.base_size));
    for (int i = 0; i < cyl.base_size; ++i) {
        // e^theta(v) = v + theta(v) + ... starts with v itself.
        const FreeElement& image = images[static_cast<std::size_t>(i)];
        EXPECT_EQ(image.coefficient({cyl.plain(i)}), 1);
        EXPECT_EQ(image.coefficient({cyl.hat(i)}), 1);
    }
}

TEST(Cylinder, AgreesWithExpRoute)
{
    Rng rng(35);
    auto cases = mcgauge::testing::dgla_cases();
    for (auto& c : mcgauge::testing::dga_cases())
        cases.push_back(c);
    for (const auto& fc : cases) {
        const AlgebraSpec& spec = fixture(fc.file);
        for (int trial = 0; trial < 5; ++trial) {
            const GradedElement xi = fc.sample_mc(rng);
            const GradedElement x = mcgauge::testing::random_of_degree(spec, 0, rng);
            const GradedElement a = gauge_via_exp(spec, x, xi);
            EXPECT_EQ(cylinder_gauge(spec, x, xi), a) << fc.file;
            EXPECT_TRUE(is_maurer_cartan(spec, a)) << fc.file;
        }
    }
}

TEST(Projection, IsMultiplicative)
{
    Rng rng(36);
    const std::vector<Generator> gens{{"a", 1, 1}, {"b", 0, 1}, {"c", 1, 2}};
    const FreeAlgebra T(Flavor::tensor, gens, 4), C(Flavor::commutative, gens, 4);
    EXPECT_EQ(project_to_commutative(C, T.word({2, 0})), C.word({2, 0}));
    EXPECT_EQ(project_to_commutative(C, T.word({2, 0})), -C.word({0, 2}));
    EXPECT_TRUE(project_to_commutative(C, T.word({0, 0})).is_zero());
    for (int trial = 0; trial < 40; ++trial) {
        const FreeElement p = mcgauge::testing::random_polynomial(T, rng, 3);
        const FreeElement q = mcgauge::testing::random_polynomial(T, rng, 3);
        EXPECT_EQ(project_to_commutative(C, T.multiply(p, q)),
                  C.multiply(project_to_commutative(C, p), project_to_commutative(C, q)));
    }
}
