#include "mcgauge/ls_interval.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/gauge.hpp"
#include "mcgauge/lie.hpp"

#include <fmt/format.h>

#include <array>
#include <map>

namespace mcgauge {

namespace {

constexpr int kA = 0, kB = 1, kZ = 2;
using Multidegree = std::array<int, 3>;

Multidegree multidegree(const Monomial& w)
{
    Multidegree m{0, 0, 0};
    for (int g : w)
        ++m[static_cast<std::size_t>(g)];
    return m;
}

/// Incremental echelon form of a set of vectors in one multidegree.
/// Rows are reduced against every earlier row, so reducing a vector by the
/// rows in order clears each pivot for good.
class Span {
public:
    /// Returns false (and keeps nothing) when v is already in the span.
    bool try_add(const FreeElement& v, int id)
    {
        auto [coords, rest] = reduce(v);
        if (rest.is_zero())
            return false;
        const Monomial pivot = rest.terms().begin()->first;
        const Rational lead = rest.coefficient(pivot);
        Row row{Rational(1) / lead * rest, {}, pivot};
        // rest = v - sum coords_i b_i, so rest / lead in basis coordinates:
        row.coords[id] = 1 / lead;
        for (const auto& [i, c] : coords)
            row.coords[i] -= c / lead;
        rows_.push_back(std::move(row));
        return true;
    }

    /// Coordinates of v in the added vectors. Throws SpecError outside the span.
    std::map<int, Rational> express(const FreeElement& v) const
    {
        auto [coords, rest] = reduce(v);
        if (!rest.is_zero())
            throw SpecError("element lies outside the truncated free Lie algebra");
        return coords;
    }

private:
    struct Row {
        FreeElement r;
        std::map<int, Rational> coords;
        Monomial pivot;
    };

    std::pair<std::map<int, Rational>, FreeElement> reduce(FreeElement v) const
    {
        std::map<int, Rational> coords;
        for (const Row& row : rows_) {
            const Rational c = v.coefficient(row.pivot);
            if (c == 0)
                continue;
            v -= c * row.r;
            for (const auto& [i, k] : row.coords)
                coords[i] += c * k;
        }
        std::erase_if(coords, [](const auto& p) { return p.second == 0; });
        return {std::move(coords), std::move(v)};
    }

    std::vector<Row> rows_;
};

FreeElement right_normed(const FreeAlgebra& letters, const Monomial& w)
{
    FreeElement acc = letters.generator(w.back());
    for (std::size_t k = w.size() - 1; k-- > 0;)
        acc = commutator(letters, letters.generator(w[k]), acc);
    return acc;
}

std::string word_name(const Monomial& w)
{
    static const char names[] = {'a', 'b', 'z'};
    std::string s;
    for (int g : w)
        s += names[g];
    return s;
}

struct Candidate {
    std::string name;
    FreeElement expansion;
    Multidegree md;
    int local;
};

/// Splits v by multidegree and expresses every piece in global basis indices.
GradedElement to_basis(const FreeElement& v, const std::map<Multidegree, Span>& spans,
                       const std::map<Multidegree, std::vector<int>>& global_of_local)
{
    std::map<Multidegree, FreeElement> pieces;
    for (const auto& [m, c] : v.terms())
        pieces[multidegree(m)].add_term(m, c);
    GradedElement out;
    for (const auto& [md, piece] : pieces) {
        auto it = spans.find(md);
        if (it == spans.end())
            throw SpecError("element lies outside the truncated free Lie algebra");
        const auto& globals = global_of_local.at(md);
        for (const auto& [local, c] : it->second.express(piece))
            out.add_term(globals[static_cast<std::size_t>(local)], c);
    }
    return out;
}

} // namespace

LSPresentation ls_interval(int weight_cap)
{
    if (weight_cap < 1)
        throw InvalidInput("the interval needs a weight cap of at least 1");
    FreeAlgebra letters(Flavor::tensor, {{"a", 1, 1}, {"b", 1, 1}, {"z", 0, 1}}, weight_cap);

    std::map<Multidegree, Span> spans;
    std::map<Multidegree, int> span_size;
    std::vector<Candidate> chosen;
    for (int len = 1; len <= weight_cap; ++len) {
        Monomial w(static_cast<std::size_t>(len), 0);
        while (true) {
            const Multidegree md = multidegree(w);
            FreeElement e = right_normed(letters, w);
            if (!e.is_zero() && spans[md].try_add(e, span_size[md])) {
                chosen.push_back({word_name(w), std::move(e), md, span_size[md]});
                ++span_size[md];
            }
            // Next word in lexicographic order.
            int k = len - 1;
            while (k >= 0 && w[static_cast<std::size_t>(k)] == 2)
                w[static_cast<std::size_t>(k--)] = 0;
            if (k < 0)
                break;
            ++w[static_cast<std::size_t>(k)];
        }
    }

    std::vector<Generator> gens;
    for (const auto& c : chosen)
        gens.push_back({c.name, c.md[kA] + c.md[kB], c.md[kA] + c.md[kB] + c.md[kZ]});
    Basis basis(std::move(gens));

    std::map<Multidegree, std::vector<int>> global_of_local;
    std::vector<FreeElement> words(basis.size());
    for (const auto& c : chosen) {
        auto& g = global_of_local[c.md];
        g.resize(static_cast<std::size_t>(span_size[c.md]));
        const int index = basis.index(c.name);
        g[static_cast<std::size_t>(c.local)] = index;
        words[static_cast<std::size_t>(index)] = c.expansion;
    }

    OpTable ops;
    const int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (basis.weight(i) + basis.weight(j) > weight_cap)
                continue;
            GradedElement v = to_basis(commutator(letters, words[static_cast<std::size_t>(i)],
                                                  words[static_cast<std::size_t>(j)]),
                                       spans, global_of_local);
            if (!v.is_zero())
                ops[{i, j}] = std::move(v);
        }
    }

    const FreeElement ga = letters.generator(kA), gb = letters.generator(kB), gz = letters.generator(kZ);
    DerivationTable d{Flavor::tensor, 1, std::vector<FreeElement>(3)};
    d.values[kA] = -letters.multiply(ga, ga);
    d.values[kB] = -letters.multiply(gb, gb);
    FreeElement dz = commutator(letters, gz, gb);
    FreeElement ad = gb - ga;
    for (unsigned k = 0; !ad.is_zero(); ++k) {
        dz += bernoulli(k) * inverse_factorial(k) * ad;
        ad = commutator(letters, gz, ad);
    }
    d.values[kZ] = dz;
    for (int i = 0; i < n; ++i) {
        GradedElement v = to_basis(apply_derivation(letters, d, words[static_cast<std::size_t>(i)]), spans,
                                   global_of_local);
        if (!v.is_zero())
            ops[{i}] = std::move(v);
    }

    AlgebraSpec spec(fmt::format("ls_interval_w{}", weight_cap), Kind::dgla, basis, weight_cap, 2, std::move(ops));
    const int ia = basis.index("a"), ib = basis.index("b"), iz = basis.index("z");
    return LSPresentation{std::move(spec), std::move(letters), std::move(words), ia, ib, iz};
}

bool CheckReport::ok() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

namespace {

CheckResult zero_check(std::string name, const Basis& basis, const GradedElement& residue)
{
    const bool ok = residue.is_zero();
    return {std::move(name), ok, ok ? "0" : format(basis, residue)};
}

GradedElement d_of(const AlgebraSpec& spec, const GradedElement& e)
{
    if (e.is_zero())
        return {};
    const std::vector<GradedElement> args{e};
    return eval_bracket(spec, 1, args);
}

} // namespace

CheckReport verify_ls(int weight_cap)
{
    return verify_ls(ls_interval(weight_cap));
}

CheckReport verify_ls(const LSPresentation& ls)
{
    const AlgebraSpec& spec = ls.spec;
    const Basis& basis = spec.basis();
    const GradedElement a = GradedElement::generator(ls.a);
    const GradedElement b = GradedElement::generator(ls.b);
    const GradedElement z = GradedElement::generator(ls.z);

    CheckReport report;
    report.checks.push_back(zero_check("MC(a)", basis, mc_defect(spec, a)));
    report.checks.push_back(zero_check("MC(b)", basis, mc_defect(spec, b)));
    try {
        report.checks.push_back(zero_check("a = e^z . b", basis, gauge_closed(spec, z, b) - a));
    } catch (const Error& e) {
        report.checks.push_back({"a = e^z . b", false, e.what()});
    }
    CheckResult d2{"d^2 = 0", true, "0"};
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        const GradedElement r = d_of(spec, d_of(spec, GradedElement::generator(i)));
        if (!r.is_zero()) {
            d2.passed = false;
            d2.detail = fmt::format("d^2({}) = {}", basis.name(i), format(basis, r));
            break;
        }
    }
    report.checks.push_back(std::move(d2));
    return report;
}

CheckReport homotopy_witness_check(const AlgebraSpec& spec, const GradedElement& xi, const GradedElement& eta,
                                   const GradedElement& x)
{
    if (spec.kind() != Kind::dgla)
        throw KindError("homotopy witnesses are checked in a dgla");
    const LSPresentation ls = ls_interval(spec.weight_cap());
    const Basis& lb = ls.spec.basis();

    std::vector<GradedElement> image(lb.size());
    for (int i = 0; i < static_cast<int>(lb.size()); ++i) {
        const std::string& word = lb.name(i);
        auto letter = [&](char ch) -> const GradedElement& { return ch == 'a' ? xi : (ch == 'b' ? eta : x); };
        GradedElement acc = letter(word.back());
        for (std::size_t k = word.size() - 1; k-- > 0 && !acc.is_zero();) {
            const GradedElement& g = letter(word[k]);
            if (g.is_zero()) {
                acc = {};
                break;
            }
            const std::vector<GradedElement> args{g, acc};
            acc = eval_bracket(spec, 2, args);
        }
        image[static_cast<std::size_t>(i)] = std::move(acc);
    }

    CheckReport report;
    for (int i = 0; i < static_cast<int>(lb.size()); ++i) {
        GradedElement lhs;
        if (const GradedElement* de = ls.spec.lookup({i}))
            for (const auto& [f, c] : de->terms())
                lhs += c * image[static_cast<std::size_t>(f)];
        const GradedElement rhs = d_of(spec, image[static_cast<std::size_t>(i)]);
        report.checks.push_back(zero_check(lb.name(i), spec.basis(), lhs - rhs));
    }
    return report;
}

} // namespace mcgauge
