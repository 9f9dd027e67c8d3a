#include "mcgauge/lie.hpp"

#include "mcgauge/errors.hpp"

#include <algorithm>

namespace mcgauge {

namespace {

FreeElement single(const Monomial& m, const Rational& c)
{
    FreeElement e;
    e.add_term(m, c);
    return e;
}

} // namespace

FreeElement commutator(const FreeAlgebra& algebra, const FreeElement& a, const FreeElement& b)
{
    if (algebra.flavor() != Flavor::tensor)
        throw InvalidInput("commutators are taken in a tensor algebra");
    FreeElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const FreeElement x = single(ma, ca), y = single(mb, cb);
            out += algebra.multiply(x, y);
            const long e = static_cast<long>(algebra.degree(ma)) * algebra.degree(mb);
            out -= Rational(sign_power(e)) * algebra.multiply(y, x);
        }
    }
    return out;
}

bool is_lyndon(const Monomial& word)
{
    if (word.empty())
        return false;
    for (std::size_t k = 1; k < word.size(); ++k) {
        Monomial rotated(word.begin() + static_cast<long>(k), word.end());
        rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<long>(k));
        if (!(word < rotated))
            return false;
    }
    return true;
}

std::pair<Monomial, Monomial> standard_factorization(const Monomial& word)
{
    if (word.size() < 2)
        throw InvalidInput("standard factorization needs a word of length at least 2");
    std::size_t best = 1;
    for (std::size_t k = 2; k < word.size(); ++k)
        if (std::lexicographical_compare(word.begin() + static_cast<long>(k), word.end(),
                                         word.begin() + static_cast<long>(best), word.end()))
            best = k;
    return {Monomial(word.begin(), word.begin() + static_cast<long>(best)),
            Monomial(word.begin() + static_cast<long>(best), word.end())};
}

FreeElement standard_bracketing(const FreeAlgebra& algebra, const Monomial& lyndon)
{
    if (lyndon.size() == 1)
        return algebra.generator(lyndon.front());
    auto [u, v] = standard_factorization(lyndon);
    return commutator(algebra, standard_bracketing(algebra, u), standard_bracketing(algebra, v));
}

std::string format_bracket(const FreeAlgebra& algebra, const Monomial& lyndon)
{
    if (lyndon.size() == 1)
        return algebra.name(lyndon.front());
    auto [u, v] = standard_factorization(lyndon);
    return "[" + format_bracket(algebra, u) + "," + format_bracket(algebra, v) + "]";
}

LieRewrite lie_rewrite(const FreeAlgebra& algebra, const FreeElement& e)
{
    LieRewrite out;
    FreeElement rest = e;
    while (!rest.is_zero()) {
        // The smallest word of a Lie element is Lyndon and leads its P_w.
        const Monomial w = rest.terms().begin()->first;
        if (!is_lyndon(w))
            break;
        const FreeElement p = standard_bracketing(algebra, w);
        const Rational lead = p.coefficient(w);
        if (lead == 0)
            break;
        const Rational c = rest.coefficient(w) / lead;
        out.coefficients[w] += c;
        rest -= c * p;
    }
    out.remainder = std::move(rest);
    return out;
}

std::string format_lie(const FreeAlgebra& algebra, const LieRewrite& rewrite)
{
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [w, c] : rewrite.coefficients)
        if (c != 0)
            terms.emplace_back(w, c);
    if (terms.empty())
        return "0";
    // Shorter brackets first, then by word.
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        const Rational mag = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1)
            s += to_string(mag) + " ";
        s += format_bracket(algebra, w);
        first = false;
    }
    return s;
}

bool dynkin_is_lie(const FreeAlgebra& algebra, const FreeElement& e)
{
    std::map<std::size_t, FreeElement> by_length;
    for (const auto& [m, c] : e.terms())
        by_length[m.size()].add_term(m, c);
    for (const auto& [n, part] : by_length) {
        if (n == 0)
            return false;
        FreeElement image;
        for (const auto& [m, c] : part.terms()) {
            FreeElement acc = algebra.generator(m.front(), c);
            for (std::size_t k = 1; k < m.size(); ++k)
                acc = commutator(algebra, acc, algebra.generator(m[k]));
            image += acc;
        }
        if (image != Rational(static_cast<long>(n)) * part)
            return false;
    }
    return true;
}

namespace {

GradedElement evaluate_word(const AlgebraSpec& spec, const Monomial& w, const std::vector<GradedElement>& values)
{
    if (w.size() == 1)
        return values.at(static_cast<std::size_t>(w.front()));
    auto [u, v] = standard_factorization(w);
    const GradedElement left = evaluate_word(spec, u, values);
    if (left.is_zero())
        return {};
    const GradedElement right = evaluate_word(spec, v, values);
    if (right.is_zero())
        return {};
    const std::vector<GradedElement> args{left, right};
    return eval_bracket(spec, 2, args);
}

} // namespace

GradedElement evaluate_lie(const AlgebraSpec& spec, const LieRewrite& rewrite, const std::vector<GradedElement>& values)
{
    if (!rewrite.is_lie())
        throw PreconditionError("cannot evaluate an element that is not Lie");
    GradedElement out;
    for (const auto& [w, c] : rewrite.coefficients)
        out += c * evaluate_word(spec, w, values);
    return out;
}

} // namespace mcgauge
