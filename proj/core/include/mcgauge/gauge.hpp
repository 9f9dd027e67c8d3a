#pragma once

#include "mcgauge/freealg.hpp"
#include "mcgauge/graded.hpp"
#include "mcgauge/structure.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mcgauge {

/// xi + sum_{n>=1} ad_x^{n-1}(ad_x xi - dx) / n!. Throws KindError unless
/// the spec is a dgla, PreconditionError unless xi is Maurer-Cartan.
GradedElement gauge_closed(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

// Truncated power series in a tensor-flavor FreeAlgebra (non-commutative
// polynomials). All three throw PreconditionError / InvertibilityError on a
// wrong constant term.

/// Requires a zero constant term.
FreeElement exp_assoc(const FreeAlgebra& algebra, const FreeElement& x);
/// Requires constant term 1.
FreeElement log_assoc(const FreeAlgebra& algebra, const FreeElement& a);
/// Any nonzero constant term is accepted.
FreeElement invert_unital(const FreeAlgebra& algebra, const FreeElement& a);
/// log(exp(x) exp(y)).
FreeElement bch(const FreeAlgebra& algebra, const FreeElement& x, const FreeElement& y);

/// Tensor algebra on the generators of a spec (same indices, degrees and
/// weights, same cap), used for elements written as words.
FreeAlgebra word_algebra(const AlgebraSpec& spec);

/// Symbolic algebra on two degree-0 letters "x" and "y" of weight 1.
FreeAlgebra bch_symbols(int weight_cap);

/// bch of two degree-0 elements of a dgla (or of the commutator dgla of a
/// dga), evaluated through the Lyndon-basis rewrite of the symbolic series.
GradedElement bch_in(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& y);

/// Element c 1 + v of the unitalization k + V of a dga.
struct UnitalElement {
    Rational scalar;
    GradedElement vector;

    friend bool operator==(const UnitalElement&, const UnitalElement&) = default;
};

/// Evaluates every word with the dga product (left to right); the empty word
/// becomes the unit.
UnitalElement evaluate_words(const AlgebraSpec& spec, const FreeElement& a);

/// a xi a^{-1} - da a^{-1}. Throws KindError unless the spec is a dga,
/// InvertibilityError when the scalar part of a vanishes, DegreeError unless
/// the vector part has degree 0.
GradedElement gauge_dga(const AlgebraSpec& spec, const UnitalElement& a, const GradedElement& xi);
/// `a` is a polynomial in word_algebra(spec).
GradedElement gauge_dga(const AlgebraSpec& spec, const FreeElement& a, const GradedElement& xi);

/// Rooted-tree sum for dgla/linf specs.
GradedElement gauge_trees_L(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

/// Planar-tree sum with labellings for dga/ainf specs.
GradedElement gauge_trees_A(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

using GaugeFunction =
    std::function<GradedElement(const AlgebraSpec&, const GradedElement& x, const GradedElement& xi)>;

struct GaugeMethod {
    std::string name;
    std::vector<Kind> kinds;
    GaugeFunction apply;

    bool supports(Kind kind) const;
};

/// Named gauge routes. Registration order is the reporting order.
class MethodRegistry {
public:
    /// Replaces an existing method of the same name in place.
    void add(GaugeMethod method);
    const GaugeMethod* find(const std::string& name) const;
    std::vector<const GaugeMethod*> applicable(Kind kind) const;
    const std::vector<GaugeMethod>& methods() const noexcept { return methods_; }

private:
    std::vector<GaugeMethod> methods_;
};

/// closed, dga, trees, exp, cylinder. For a dga, "closed" runs on the
/// commutator dgla and "dga" uses a = exp(x).
MethodRegistry default_registry();

struct RouteResult {
    std::string method;
    GradedElement value;
};

struct RouteComparison {
    std::vector<RouteResult> results;
    bool agree = true;
};

RouteComparison compare_routes(const MethodRegistry& registry, const AlgebraSpec& spec, const GradedElement& x,
                               const GradedElement& xi);

} // namespace mcgauge
