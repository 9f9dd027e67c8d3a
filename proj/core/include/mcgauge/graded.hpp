#pragma once

#include "mcgauge/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcgauge {

/// A named basis vector of a graded space. Weight models the completeness
/// filtration: everything of weight above the algebra's cap is zero.
struct Generator {
    std::string name;
    int degree = 0;
    int weight = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators in canonical order (weight, degree, name). Indices into a
/// Basis are stable and define the canonical term order of elements.
class Basis {
public:
    Basis() = default;
    /// Sorts canonically. Throws InvalidInput on duplicate names or weight < 1.
    explicit Basis(std::vector<Generator> generators);

    std::size_t size() const noexcept { return generators_.size(); }
    const Generator& operator[](int index) const { return generators_.at(static_cast<std::size_t>(index)); }
    const std::vector<Generator>& generators() const noexcept { return generators_; }

    int degree(int index) const { return (*this)[index].degree; }
    int weight(int index) const { return (*this)[index].weight; }
    const std::string& name(int index) const { return (*this)[index].name; }

    std::optional<int> find(const std::string& name) const;
    /// Throws InvalidInput when the name is unknown.
    int index(const std::string& name) const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.generators_ == b.generators_; }

private:
    std::vector<Generator> generators_;
    std::unordered_map<std::string, int> by_name_;
};

/// Finite rational combination of basis generators. Zero coefficients are
/// never stored, so equality of objects is equality of elements.
class GradedElement {
public:
    using Terms = std::map<int, Rational>;

    GradedElement() = default;

    static GradedElement generator(int index, const Rational& coefficient = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int index) const;

    void add_term(int index, const Rational& coefficient);

    GradedElement& operator+=(const GradedElement& other);
    GradedElement& operator-=(const GradedElement& other);
    GradedElement& operator*=(const Rational& scalar);

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator-(GradedElement a) { return a *= Rational(-1); }
    friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
    friend GradedElement operator*(GradedElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const GradedElement&, const GradedElement&) = default;

private:
    friend GradedElement canonicalize(Terms terms);
    Terms terms_;
};

/// Drops zero coefficients and reduces every coefficient to lowest terms.
GradedElement canonicalize(GradedElement::Terms terms);

/// Degree of a homogeneous element; nullopt for zero. Throws DegreeError
/// when the support mixes degrees.
std::optional<int> homogeneous_degree(const Basis& basis, const GradedElement& e);

/// Minimum weight over the support; nullopt for zero.
std::optional<int> min_weight(const Basis& basis, const GradedElement& e);

/// Drops every term of weight above cap.
GradedElement truncate_weight(const Basis& basis, const GradedElement& e, int cap);

/// Canonical text form, e.g. "u - 1/2 w" or "0".
std::string format(const Basis& basis, const GradedElement& e);

/// Koszul sign of a permutation. perm[k] is the (0-based) original index of
/// the item placed at position k; each inverted pair (i < j, j placed before
/// i) contributes (-1)^(degrees[i] * degrees[j]). Throws InvalidInput on a
/// length mismatch or a non-permutation.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

/// Sign of a permutation for graded-antisymmetric operations: the ordinary
/// permutation sign times the Koszul sign.
int antisymmetric_sign(std::span<const int> perm, std::span<const int> degrees);

/// An element viewed in a degree-shifted copy of its basis. A shift of s
/// lowers every degree by s, so shift 1 is the suspension (sV)^i = V^(i+1).
struct ShiftedElement {
    GradedElement element;
    int shift = 0;

    friend bool operator==(const ShiftedElement&, const ShiftedElement&) = default;
};

/// Throws DegreeError on non-homogeneous input.
ShiftedElement suspend(const Basis& basis, const ShiftedElement& e, int shift);
ShiftedElement suspend(const Basis& basis, const GradedElement& e, int shift);
std::optional<int> shifted_degree(const Basis& basis, const ShiftedElement& e);

} // namespace mcgauge
