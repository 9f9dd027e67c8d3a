#include "mcgauge/errors.hpp"
#include "mcgauge/graded.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace mcgauge;
using mcgauge::testing::Rng;

namespace {

Basis small_basis()
{
    return Basis({{"u", 1, 1}, {"v", 1, 2}, {"x", 0, 1}, {"c", 2, 2}});
}

// Sorts the arrangement back with adjacent swaps, multiplying (-1)^{d d'}.
int bubble_koszul(std::vector<int> perm, const std::vector<int>& degrees)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j + 1 < perm.size() - i; ++j)
            if (perm[j] > perm[j + 1]) {
                if ((degrees[static_cast<std::size_t>(perm[j])] * degrees[static_cast<std::size_t>(perm[j + 1])]) % 2)
                    sign = -sign;
                std::swap(perm[j], perm[j + 1]);
            }
    return sign;
}

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST(Rational, ParsesAndPrintsLowestTerms)
{
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("abc"), InvalidInput);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(inverse_factorial(3), Rational(1, 6));
}

TEST(Koszul, SmallExamples)
{
    const std::vector<int> id{0, 1, 2}, degs{1, 1, 2};
    EXPECT_EQ(koszul_sign(id, degs), 1);
    const std::vector<int> swap{1, 0};
    EXPECT_EQ(koszul_sign(swap, std::vector<int>{1, 1}), -1);
    EXPECT_EQ(koszul_sign(swap, std::vector<int>{1, 2}), 1);
}

TEST(Koszul, RejectsBadInput)
{
    EXPECT_THROW(koszul_sign(std::vector<int>{0, 1}, std::vector<int>{1}), InvalidInput);
    EXPECT_THROW(koszul_sign(std::vector<int>{0, 0}, std::vector<int>{1, 1}), InvalidInput);
}

TEST(Koszul, MatchesAdjacentSwapOracle)
{
    Rng rng(11);
    std::uniform_int_distribution<int> deg(-2, 3);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : all_permutations(n)) {
            std::vector<int> degrees(static_cast<std::size_t>(n));
            for (auto& d : degrees)
                d = deg(rng);
            EXPECT_EQ(koszul_sign(p, degrees), bubble_koszul(p, degrees));
        }
    }
}

TEST(Koszul, IsMultiplicativeUnderComposition)
{
    Rng rng(12);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> degrees(static_cast<std::size_t>(n));
            for (auto& d : degrees)
                d = deg(rng);
            for (const auto& tau : perms) {
                std::vector<int> moved(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k)
                    moved[static_cast<std::size_t>(k)] = degrees[static_cast<std::size_t>(tau[static_cast<std::size_t>(k)])];
                for (const auto& sigma : perms) {
                    std::vector<int> composite(static_cast<std::size_t>(n));
                    for (int k = 0; k < n; ++k)
                        composite[static_cast<std::size_t>(k)] = tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
                    ASSERT_EQ(koszul_sign(composite, degrees), koszul_sign(tau, degrees) * koszul_sign(sigma, moved));
                }
            }
        }
    }
}

TEST(Koszul, AntisymmetricSignIncludesPermutationSign)
{
    const std::vector<int> swap{1, 0};
    EXPECT_EQ(antisymmetric_sign(swap, std::vector<int>{0, 0}), -1);
    EXPECT_EQ(antisymmetric_sign(swap, std::vector<int>{1, 1}), 1);
    EXPECT_EQ(antisymmetric_sign(swap, std::vector<int>{0, 1}), -1);
}

TEST(Basis, CanonicalOrderAndLookups)
{
    const Basis b = small_basis();
    std::vector<std::string> names;
    for (const auto& g : b.generators())
        names.push_back(g.name);
    EXPECT_EQ(names, (std::vector<std::string>{"x", "u", "v", "c"}));
    EXPECT_EQ(b.index("v"), 2);
    EXPECT_FALSE(b.find("nope"));
    EXPECT_THROW(b.index("nope"), InvalidInput);
    EXPECT_THROW(Basis({{"u", 1, 1}, {"u", 0, 1}}), InvalidInput);
    EXPECT_THROW(Basis({{"u", 1, 0}}), InvalidInput);
}

TEST(GradedElement, CanonicalizeDropsZerosAndReduces)
{
    GradedElement::Terms t{{0, Rational(1, 2)}, {1, 0}};
    EXPECT_EQ(canonicalize(t).terms().size(), 1u);
    EXPECT_TRUE(canonicalize({}).is_zero());
    mpq_class unreduced;
    mpz_set_si(unreduced.get_num_mpz_t(), 2);
    mpz_set_si(unreduced.get_den_mpz_t(), 4);
    const GradedElement e = canonicalize({{0, unreduced}});
    EXPECT_EQ(e.coefficient(0), Rational(1, 2));
    EXPECT_EQ(to_string(e.coefficient(0)), "1/2");
}

TEST(GradedElement, FormatAndDegree)
{
    const Basis b = small_basis();
    GradedElement e = GradedElement::generator(1) - Rational(1, 2) * GradedElement::generator(2);
    EXPECT_EQ(format(b, e), "u - 1/2 v");
    EXPECT_EQ(format(b, GradedElement{}), "0");
    EXPECT_EQ(format(b, -GradedElement::generator(0)), "-x");
    EXPECT_EQ(homogeneous_degree(b, e), 1);
    EXPECT_FALSE(homogeneous_degree(b, GradedElement{}));
    EXPECT_THROW(homogeneous_degree(b, e + GradedElement::generator(0)), DegreeError);
    EXPECT_EQ(min_weight(b, e), 1);
    EXPECT_EQ(truncate_weight(b, e, 1), GradedElement::generator(1));
}

TEST(GradedElement, VectorSpaceAxioms)
{
    Rng rng(13);
    const AlgebraSpec& spec = mcgauge::testing::fixture("f5.alg");
    for (int trial = 0; trial < 50; ++trial) {
        const GradedElement a = mcgauge::testing::random_of_degree(spec, 1, rng);
        const GradedElement b = mcgauge::testing::random_of_degree(spec, 1, rng);
        const GradedElement c = mcgauge::testing::random_of_degree(spec, 0, rng);
        const Rational s = mcgauge::testing::random_rational(rng), t = mcgauge::testing::random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(s * (a + b), s * a + s * b);
        EXPECT_EQ((s + t) * a, s * a + t * a);
        EXPECT_EQ((s * t) * a, s * (t * a));
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Suspension, ShiftsDegrees)
{
    const Basis b = small_basis();
    const auto su = suspend(b, GradedElement::generator(1), 1);
    EXPECT_EQ(shifted_degree(b, su), 0);
    const auto sx = suspend(b, GradedElement::generator(0), -1);
    EXPECT_EQ(shifted_degree(b, sx), 1);
    EXPECT_FALSE(shifted_degree(b, suspend(b, GradedElement{}, 3)));
    EXPECT_THROW(suspend(b, GradedElement::generator(0) + GradedElement::generator(1), 1), DegreeError);
}

TEST(Suspension, RoundTripIsIdentity)
{
    Rng rng(14);
    const AlgebraSpec& spec = mcgauge::testing::fixture("f4.alg");
    for (int degree : {0, 1, 2}) {
        for (int trial = 0; trial < 10; ++trial) {
            const GradedElement e = mcgauge::testing::random_of_degree(spec, degree, rng);
            const ShiftedElement back = suspend(spec.basis(), suspend(spec.basis(), e, 1), -1);
            EXPECT_EQ(back.element, e);
            EXPECT_EQ(back.shift, 0);
        }
    }
}
