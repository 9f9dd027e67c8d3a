#include "mcgauge/rational.hpp"

#include "mcgauge/errors.hpp"

#include <cctype>

namespace mcgauge {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw InvalidInput("rational with zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    Integer p = parse_integer(num);
    Integer q = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
            throw InvalidInput("malformed rational '" + std::string(text) + "'");
        q = parse_integer(den);
        if (q == 0)
            throw InvalidInput("rational with zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational inverse_factorial(unsigned n)
{
    return Rational(Integer(1), factorial(n));
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace mcgauge
