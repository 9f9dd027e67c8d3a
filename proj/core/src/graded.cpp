#include "mcgauge/graded.hpp"

#include "mcgauge/errors.hpp"

#include <algorithm>
#include <tuple>

namespace mcgauge {

Basis::Basis(std::vector<Generator> generators) : generators_(std::move(generators))
{
    std::sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.weight, a.degree, a.name) < std::tie(b.weight, b.degree, b.name);
    });
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.weight < 1)
            throw InvalidInput("generator '" + g.name + "' has weight " + std::to_string(g.weight) + " < 1");
        if (!by_name_.emplace(g.name, static_cast<int>(i)).second)
            throw InvalidInput("duplicate generator name '" + g.name + "'");
    }
}

std::optional<int> Basis::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

int Basis::index(const std::string& name) const
{
    auto i = find(name);
    if (!i)
        throw InvalidInput("unknown generator '" + name + "'");
    return *i;
}

GradedElement GradedElement::generator(int index, const Rational& coefficient)
{
    GradedElement e;
    e.add_term(index, coefficient);
    return e;
}

Rational GradedElement::coefficient(int index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedElement::add_term(int index, const Rational& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(index, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedElement& GradedElement::operator+=(const GradedElement& other)
{
    for (const auto& [i, c] : other.terms_)
        add_term(i, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other)
{
    for (const auto& [i, c] : other.terms_)
        add_term(i, -c);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, c] : terms_)
        c *= scalar;
    return *this;
}

GradedElement canonicalize(GradedElement::Terms terms)
{
    GradedElement e;
    for (auto& [i, c] : terms) {
        c.canonicalize();
        if (c != 0)
            e.terms_.emplace(i, std::move(c));
    }
    return e;
}

std::optional<int> homogeneous_degree(const Basis& basis, const GradedElement& e)
{
    std::optional<int> deg;
    for (const auto& [i, c] : e.terms()) {
        int d = basis.degree(i);
        if (deg && *deg != d)
            throw DegreeError("element is not homogeneous: mixes degrees " + std::to_string(*deg) + " and " +
                              std::to_string(d));
        deg = d;
    }
    return deg;
}

std::optional<int> min_weight(const Basis& basis, const GradedElement& e)
{
    std::optional<int> w;
    for (const auto& [i, c] : e.terms())
        if (!w || basis.weight(i) < *w)
            w = basis.weight(i);
    return w;
}

GradedElement truncate_weight(const Basis& basis, const GradedElement& e, int cap)
{
    GradedElement out;
    for (const auto& [i, c] : e.terms())
        if (basis.weight(i) <= cap)
            out.add_term(i, c);
    return out;
}

std::string format(const Basis& basis, const GradedElement& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : e.terms()) {
        Rational mag = abs(c);
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + " ";
        out += basis.name(i);
        first = false;
    }
    return out;
}

namespace {

void check_permutation(std::span<const int> perm, std::span<const int> degrees)
{
    if (perm.size() != degrees.size())
        throw InvalidInput("permutation and degree list differ in length");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)])
            throw InvalidInput("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

} // namespace

int koszul_sign(std::span<const int> perm, std::span<const int> degrees)
{
    check_permutation(perm, degrees);
    long exponent = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                exponent += static_cast<long>(degrees[static_cast<std::size_t>(perm[a])]) *
                            degrees[static_cast<std::size_t>(perm[b])];
    return sign_power(exponent);
}

int antisymmetric_sign(std::span<const int> perm, std::span<const int> degrees)
{
    check_permutation(perm, degrees);
    long exponent = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                exponent += 1 + static_cast<long>(degrees[static_cast<std::size_t>(perm[a])]) *
                                    degrees[static_cast<std::size_t>(perm[b])];
    return sign_power(exponent);
}

ShiftedElement suspend(const Basis& basis, const ShiftedElement& e, int shift)
{
    homogeneous_degree(basis, e.element);
    return ShiftedElement{e.element, e.shift + shift};
}

ShiftedElement suspend(const Basis& basis, const GradedElement& e, int shift)
{
    return suspend(basis, ShiftedElement{e, 0}, shift);
}

std::optional<int> shifted_degree(const Basis& basis, const ShiftedElement& e)
{
    auto d = homogeneous_degree(basis, e.element);
    if (!d)
        return std::nullopt;
    return *d - e.shift;
}

} // namespace mcgauge
