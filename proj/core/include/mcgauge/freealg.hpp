#pragma once

#include "mcgauge/graded.hpp"
#include "mcgauge/structure.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mcgauge {

enum class Flavor { commutative, tensor };

/// Generator indices. Sorted (with repetition) for the commutative flavor,
/// an ordered word for the tensor flavor. The empty monomial is the unit.
using Monomial = std::vector<int>;

/// Sparse rational combination of monomials of a FreeAlgebra.
class FreeElement {
public:
    using Terms = std::map<Monomial, Rational>;

    FreeElement() = default;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({}); }

    void add_term(const Monomial& m, const Rational& c);

    FreeElement& operator+=(const FreeElement& other);
    FreeElement& operator-=(const FreeElement& other);
    FreeElement& operator*=(const Rational& s);

    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator-(FreeElement a) { return a *= Rational(-1); }
    friend FreeElement operator*(const Rational& s, FreeElement a) { return a *= s; }
    friend bool operator==(const FreeElement&, const FreeElement&) = default;

private:
    Terms terms_;
};

/// Free graded-commutative or free tensor algebra on finitely many graded,
/// weighted generators, truncated above a weight cap. Generator order is the
/// index order given at construction and is also the sort order of
/// commutative monomials.
class FreeAlgebra {
public:
    FreeAlgebra(Flavor flavor, std::vector<Generator> generators, int weight_cap);

    Flavor flavor() const noexcept { return flavor_; }
    int weight_cap() const noexcept { return weight_cap_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    int degree(int g) const { return generators_.at(static_cast<std::size_t>(g)).degree; }
    int weight(int g) const { return generators_.at(static_cast<std::size_t>(g)).weight; }
    const std::string& name(int g) const { return generators_.at(static_cast<std::size_t>(g)).name; }

    int degree(const Monomial& m) const;
    int weight(const Monomial& m) const;

    FreeElement one() const;
    FreeElement generator(int g, const Rational& c = 1) const;
    /// Monomial with the given letters in the given order (re-sorted with
    /// its Koszul sign for the commutative flavor).
    FreeElement word(const Monomial& letters, const Rational& c = 1) const;

    FreeElement multiply(const FreeElement& a, const FreeElement& b) const;
    FreeElement power(const FreeElement& a, int n) const;

    /// Degree of a homogeneous element; nullopt for zero. Throws DegreeError.
    std::optional<int> degree(const FreeElement& e) const;

    /// e.g. "2 u*v - w" (tensor) or "u v" (commutative). Unit prints as "1".
    std::string format(const FreeElement& e) const;

private:
    void multiply_into(FreeElement& out, const Monomial& a, const Monomial& b, const Rational& c) const;

    Flavor flavor_;
    std::vector<Generator> generators_;
    int weight_cap_;
};

/// Values of a derivation on the generators, extended by the graded
/// Leibniz rule D(ab) = D(a) b + (-1)^{parity |a|} a D(b).
struct DerivationTable {
    Flavor flavor = Flavor::commutative;
    int parity = 0;
    std::vector<FreeElement> values;
};

/// Throws InvalidInput if the flavors of D and the algebra differ.
FreeElement apply_derivation(const FreeAlgebra& algebra, const DerivationTable& D, const FreeElement& e);

/// Representing algebra of an AlgebraSpec: one dual generator v* per basis
/// generator v (same index, degree 1 - |v|, same weight) and the square-zero
/// differential encoding the operations.
struct RepresentingAlgebra {
    FreeAlgebra algebra;
    DerivationTable differential;
};

/// Commutative flavor for dgla/linf with components (1/i!) l_i^*; tensor
/// flavor for dga/ainf with unscaled components.
RepresentingAlgebra build_representing(const AlgebraSpec& spec);

/// Constant degree -1 derivation induced by a degree-0 element x:
/// v* -> ev_x(v*) = -(coefficient of v in x).
DerivationTable constant_derivation(const RepresentingAlgebra& rep, const AlgebraSpec& spec, const GradedElement& x);

/// Sum_{n>=0} op^n(e)/n!. Throws DivergenceError if op^(bound+1)(e) != 0.
FreeElement exp_series(const std::function<FreeElement(const FreeElement&)>& op, const FreeElement& e, int bound);

/// e^{[x~, d]} on every dual generator (indexed like the spec basis).
/// Throws DegreeError unless x has degree 0, DivergenceError on a
/// non-terminating series.
std::vector<FreeElement> exp_bracket_derivation(const AlgebraSpec& spec, const GradedElement& x);

/// Value of the algebra map determined by generator values on an element.
Rational evaluate(const FreeElement& e, const std::vector<Rational>& generator_values);

/// Gauge action as xi o e^{[x~, d]}. Throws PreconditionError if xi is not
/// Maurer-Cartan.
GradedElement gauge_via_exp(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

/// The cylinder C(SV) (or C(TV)) of a representing algebra: generators
/// v (index i), v-bar (n + i, degree |v| - 1) and v-hat (2n + i, degree |v|),
/// with differential D, the degree -1 derivation s and theta = sD + Ds.
struct Cylinder {
    FreeAlgebra algebra;
    int base_size = 0;
    DerivationTable D;
    DerivationTable s;
    DerivationTable theta;

    int plain(int i) const { return i; }
    int bar(int i) const { return base_size + i; }
    int hat(int i) const { return 2 * base_size + i; }
};

Cylinder build_cylinder(const RepresentingAlgebra& rep);

/// e^theta on every original generator of the cylinder.
std::vector<FreeElement> exp_theta(const Cylinder& cyl);

/// Gauge action as H_{xi,x} o e^theta o i.
GradedElement cylinder_gauge(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

/// Canonical projection of a tensor-flavor element onto the commutative
/// algebra on the same generators.
FreeElement project_to_commutative(const FreeAlgebra& commutative, const FreeElement& tensor_element);

} // namespace mcgauge
