#include "mcgauge/freealg.hpp"

#include "mcgauge/errors.hpp"

#include <fmt/format.h>

namespace mcgauge {

Rational FreeElement::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreeElement::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

FreeAlgebra::FreeAlgebra(Flavor flavor, std::vector<Generator> generators, int weight_cap)
    : flavor_(flavor), generators_(std::move(generators)), weight_cap_(weight_cap)
{
}

int FreeAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (int g : m)
        d += degree(g);
    return d;
}

int FreeAlgebra::weight(const Monomial& m) const
{
    int w = 0;
    for (int g : m)
        w += weight(g);
    return w;
}

FreeElement FreeAlgebra::one() const
{
    FreeElement e;
    e.add_term({}, 1);
    return e;
}

FreeElement FreeAlgebra::generator(int g, const Rational& c) const
{
    FreeElement e;
    if (weight(g) <= weight_cap_)
        e.add_term({g}, c);
    return e;
}

FreeElement FreeAlgebra::word(const Monomial& letters, const Rational& c) const
{
    FreeElement cur = one();
    cur *= c;
    for (int g : letters)
        cur = multiply(cur, generator(g));
    return cur;
}

void FreeAlgebra::multiply_into(FreeElement& out, const Monomial& a, const Monomial& b, const Rational& c) const
{
    if (weight(a) + weight(b) > weight_cap_)
        return;
    if (flavor_ == Flavor::tensor) {
        Monomial m;
        m.reserve(a.size() + b.size());
        m.insert(m.end(), a.begin(), a.end());
        m.insert(m.end(), b.begin(), b.end());
        out.add_term(m, c);
        return;
    }
    // Merge two sorted monomials. A letter of b that jumps over the
    // remaining letters of a picks up (-1)^{|letter| * sum of their degrees}.
    Monomial m;
    m.reserve(a.size() + b.size());
    std::vector<int> suffix_degree(a.size() + 1, 0);
    for (std::size_t i = a.size(); i-- > 0;)
        suffix_degree[i] = suffix_degree[i + 1] + degree(a[i]);
    long exponent = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            m.push_back(a[i++]);
        } else {
            exponent += static_cast<long>(degree(b[j])) * suffix_degree[i];
            m.push_back(b[j++]);
        }
    }
    for (std::size_t k = 1; k < m.size(); ++k)
        if (m[k] == m[k - 1] && degree(m[k]) % 2 != 0)
            return;
    out.add_term(m, sign_power(exponent) > 0 ? c : Rational(-c));
}

FreeElement FreeAlgebra::multiply(const FreeElement& a, const FreeElement& b) const
{
    FreeElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            multiply_into(out, ma, mb, ca * cb);
    return out;
}

FreeElement FreeAlgebra::power(const FreeElement& a, int n) const
{
    FreeElement r = one();
    for (int k = 0; k < n && !r.is_zero(); ++k)
        r = multiply(r, a);
    return r;
}

std::optional<int> FreeAlgebra::degree(const FreeElement& e) const
{
    std::optional<int> deg;
    for (const auto& [m, c] : e.terms()) {
        int d = degree(m);
        if (deg && *deg != d)
            throw DegreeError("free-algebra element is not homogeneous");
        deg = d;
    }
    return deg;
}

std::string FreeAlgebra::format(const FreeElement& e) const
{
    if (e.is_zero())
        return "0";
    const char* sep = flavor_ == Flavor::tensor ? "*" : " ";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string word;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k)
                word += sep;
            word += name(m[k]);
        }
        if (m.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += word;
        else
            out += to_string(mag) + " " + word;
        first = false;
    }
    return out;
}

FreeElement apply_derivation(const FreeAlgebra& algebra, const DerivationTable& D, const FreeElement& e)
{
    if (D.flavor != algebra.flavor())
        throw InvalidInput("derivation and algebra have different flavors");
    FreeElement out;
    for (const auto& [m, c] : e.terms()) {
        int prefix_degree = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const auto g = static_cast<std::size_t>(m[j]);
            if (g < D.values.size() && !D.values[g].is_zero()) {
                Monomial prefix(m.begin(), m.begin() + static_cast<long>(j));
                Monomial suffix(m.begin() + static_cast<long>(j) + 1, m.end());
                Rational coeff = c;
                if (sign_power(static_cast<long>(D.parity) * prefix_degree) < 0)
                    coeff = -coeff;
                FreeElement left;
                left.add_term(prefix, coeff);
                FreeElement right;
                right.add_term(suffix, 1);
                out += algebra.multiply(algebra.multiply(left, D.values[g]), right);
            }
            prefix_degree += algebra.degree(m[j]);
        }
    }
    return out;
}

FreeElement exp_series(const std::function<FreeElement(const FreeElement&)>& op, const FreeElement& e, int bound)
{
    FreeElement sum = e;
    FreeElement term = e;
    for (int n = 1; !term.is_zero(); ++n) {
        term = op(term);
        if (term.is_zero())
            break;
        if (n > bound)
            throw DivergenceError(fmt::format("exponential series did not terminate within {} terms", bound));
        term *= Rational(1, n);
        sum += term;
    }
    return sum;
}

Rational evaluate(const FreeElement& e, const std::vector<Rational>& generator_values)
{
    Rational total = 0;
    for (const auto& [m, c] : e.terms()) {
        Rational p = c;
        for (int g : m) {
            const Rational& v = generator_values.at(static_cast<std::size_t>(g));
            if (v == 0) {
                p = 0;
                break;
            }
            p *= v;
        }
        total += p;
    }
    return total;
}

FreeElement project_to_commutative(const FreeAlgebra& commutative, const FreeElement& tensor_element)
{
    if (commutative.flavor() != Flavor::commutative)
        throw InvalidInput("projection target must be commutative");
    FreeElement out;
    for (const auto& [m, c] : tensor_element.terms())
        out += commutative.word(m, c);
    return out;
}

} // namespace mcgauge
