#pragma once

#include "mcgauge/freealg.hpp"
#include "mcgauge/structure.hpp"
#include "mcgauge/text_format.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace mcgauge::testing {

std::string fixture_path(const std::string& file);
SpecDocument load_fixture(const std::string& file);
const AlgebraSpec& fixture(const std::string& file);

/// Element from its canonical text, e.g. el(spec, "u - 1/2 w").
GradedElement el(const AlgebraSpec& spec, const std::string& text);

using Rng = std::mt19937_64;

/// Small rationals p/q with |p| <= 3, 1 <= q <= 3.
Rational random_rational(Rng& rng);
/// Random combination of the generators of one degree; may be zero.
GradedElement random_of_degree(const AlgebraSpec& spec, int degree, Rng& rng);
/// Random tensor-algebra polynomial with zero constant term.
FreeElement random_polynomial(const FreeAlgebra& algebra, Rng& rng, int max_terms = 4);

/// Samples Maurer-Cartan elements of a shipped fixture.
using McSampler = std::function<GradedElement(Rng&)>;

struct FixtureCase {
    std::string file;
    McSampler sample_mc;
};

/// Shipped dgla fixtures with at most 6 generators and W <= 5.
std::vector<FixtureCase> dgla_cases();
/// Shipped dga fixtures.
std::vector<FixtureCase> dga_cases();
/// Every shipped fixture that should pass validate_structure.
std::vector<std::string> valid_fixture_files();

} // namespace mcgauge::testing

namespace mcgauge {

// Readable gtest failure output.
void PrintTo(const GradedElement& e, std::ostream* os);
void PrintTo(const FreeElement& e, std::ostream* os);

} // namespace mcgauge
