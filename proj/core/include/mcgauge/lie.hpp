#pragma once

#include "mcgauge/freealg.hpp"
#include "mcgauge/structure.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcgauge {

// Lie elements inside a tensor-flavor FreeAlgebra. Letters are the
// algebra's generator indices, ordered by index.

/// ab - (-1)^{|a||b|} ba, termwise on monomial degrees.
FreeElement commutator(const FreeAlgebra& algebra, const FreeElement& a, const FreeElement& b);

bool is_lyndon(const Monomial& word);

/// w = uv with v the lexicographically smallest proper suffix. For a Lyndon
/// word of length >= 2 both factors are Lyndon.
std::pair<Monomial, Monomial> standard_factorization(const Monomial& word);

/// Standard bracketing P_w of a Lyndon word, expanded in the tensor algebra.
FreeElement standard_bracketing(const FreeAlgebra& algebra, const Monomial& lyndon);

/// Text form of P_w, e.g. "[x,[x,y]]".
std::string format_bracket(const FreeAlgebra& algebra, const Monomial& lyndon);

/// Coordinates of an element in the Lyndon basis. A nonzero remainder means
/// the input is not a Lie element. Intended for even letters.
struct LieRewrite {
    std::map<Monomial, Rational> coefficients;
    FreeElement remainder;

    bool is_lie() const { return remainder.is_zero(); }
};

LieRewrite lie_rewrite(const FreeAlgebra& algebra, const FreeElement& e);

/// "1/2 [x,y] + y"; remainder terms are not printed.
std::string format_lie(const FreeAlgebra& algebra, const LieRewrite& rewrite);

/// Dynkin-Specht-Wever test: a homogeneous length-n component p is Lie iff
/// its left-normed bracketing equals n p.
bool dynkin_is_lie(const FreeAlgebra& algebra, const FreeElement& e);

/// Evaluates sum c_w P_w in a dgla by sending letter k to values[k].
GradedElement evaluate_lie(const AlgebraSpec& spec, const LieRewrite& rewrite,
                           const std::vector<GradedElement>& values);

} // namespace mcgauge
