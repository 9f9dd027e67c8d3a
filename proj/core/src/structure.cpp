#include "mcgauge/structure.hpp"

#include "mcgauge/errors.hpp"

#include <fmt/format.h>

#include <numeric>

namespace mcgauge {

std::string to_string(Kind kind)
{
    switch (kind) {
    case Kind::dgla: return "dgla";
    case Kind::dga: return "dga";
    case Kind::linf: return "linf";
    case Kind::ainf: return "ainf";
    }
    return "?";
}

std::string to_string(McConvention convention)
{
    return convention == McConvention::paper ? "paper" : "plain";
}

namespace {

std::string key_text(const Basis& basis, const OpKey& key)
{
    std::string s = "[";
    for (std::size_t k = 0; k < key.size(); ++k) {
        if (k)
            s += ",";
        s += basis.name(key[k]);
    }
    return s + "]";
}

/// Sorts a key into storage order for symmetric kinds and returns the
/// graded-antisymmetric sign of the sorting permutation.
int sort_key(const Basis& basis, OpKey& key)
{
    // Adjacent transpositions; equal generators are never swapped.
    long exponent = 0;
    for (std::size_t a = 1; a < key.size(); ++a) {
        for (std::size_t b = a; b > 0 && key[b - 1] > key[b]; --b) {
            exponent += 1 + static_cast<long>(basis.degree(key[b - 1])) * basis.degree(key[b]);
            std::swap(key[b - 1], key[b]);
        }
    }
    return sign_power(exponent);
}

} // namespace

AlgebraSpec::AlgebraSpec(std::string name, Kind kind, Basis basis, int weight_cap, int arity_cap, OpTable ops,
                         McConvention convention)
    : name_(std::move(name)), kind_(kind), basis_(std::move(basis)), weight_cap_(weight_cap),
      arity_cap_(arity_cap), ops_(std::move(ops)), convention_(convention)
{
    validate();
}

void AlgebraSpec::validate()
{
    if (weight_cap_ < 1)
        throw SpecError("weight cap must be positive");
    if (arity_cap_ < 1)
        throw SpecError("arity cap must be positive");
    for (const auto& g : basis_.generators())
        if (g.weight > weight_cap_)
            throw SpecError(fmt::format("generator '{}' has weight {} above the weight cap {}", g.name, g.weight,
                                        weight_cap_));

    for (auto it = ops_.begin(); it != ops_.end();) {
        const auto& [key, value] = *it;
        const int arity = static_cast<int>(key.size());
        for (int g : key)
            if (g < 0 || static_cast<std::size_t>(g) >= basis_.size())
                throw SpecError("operation key refers to an unknown generator");
        const std::string where = key_text(basis_, key);
        if (arity == 0)
            throw SpecError("operation with no arguments");
        if (is_strict(kind_) && arity > 2)
            throw KindError(fmt::format("kind {} admits only arities 1 and 2, entry {} has arity {}",
                                        mcgauge::to_string(kind_), where, arity));
        if (arity > arity_cap_)
            throw UnsupportedArity(
                fmt::format("entry {} has arity {} above the arity cap {}", where, arity, arity_cap_));

        int expected_degree = 2 - arity;
        int input_weight = 0;
        for (int g : key) {
            expected_degree += basis_.degree(g);
            input_weight += basis_.weight(g);
        }

        if (is_symmetric(kind_)) {
            OpKey sorted = key;
            sort_key(basis_, sorted);
            if (sorted != key)
                throw SpecError(fmt::format("bracket key {} is not in canonical order (expected {})", where,
                                            key_text(basis_, sorted)));
            for (std::size_t k = 1; k < key.size(); ++k)
                if (key[k] == key[k - 1] && basis_.degree(key[k]) % 2 == 0 && !value.is_zero())
                    throw SpecError(fmt::format("entry {} repeats the even generator '{}' and must vanish by "
                                                "graded antisymmetry",
                                                where, basis_.name(key[k])));
        }

        for (const auto& [g, c] : value.terms()) {
            if (g < 0 || static_cast<std::size_t>(g) >= basis_.size())
                throw SpecError("operation value refers to an unknown generator");
            if (basis_.degree(g) != expected_degree)
                throw SpecError(fmt::format("entry {}: expected output degree {}, got degree {} ('{}')", where,
                                            expected_degree, basis_.degree(g), basis_.name(g)));
            if (basis_.weight(g) < input_weight)
                throw SpecError(fmt::format("entry {} is weight-decreasing: inputs have weight {}, '{}' has weight {}",
                                            where, input_weight, basis_.name(g), basis_.weight(g)));
        }

        if (value.is_zero())
            it = ops_.erase(it);
        else
            ++it;
    }
}

const GradedElement* AlgebraSpec::lookup(const OpKey& key) const
{
    auto it = ops_.find(key);
    return it == ops_.end() ? nullptr : &it->second;
}

Rational AlgebraSpec::mc_coefficient(int arity) const
{
    if (!is_symmetric(kind_) && convention_ == McConvention::plain)
        return 1;
    return inverse_factorial(static_cast<unsigned>(arity));
}

namespace {

struct BracketEvaluator {
    const AlgebraSpec& spec;
    std::span<const GradedElement> args;
    OpKey key;
    Rational coefficient;
    GradedElement result;

    void run(std::size_t position, int weight, const Rational& coeff)
    {
        if (position == args.size()) {
            OpKey storage = key;
            int sign = is_symmetric(spec.kind()) ? sort_key(spec.basis(), storage) : 1;
            if (const GradedElement* value = spec.lookup(storage)) {
                Rational c = coeff;
                if (sign < 0)
                    c = -c;
                for (const auto& [g, v] : value->terms())
                    result.add_term(g, c * v);
            }
            return;
        }
        for (const auto& [g, c] : args[position].terms()) {
            int w = weight + spec.basis().weight(g);
            if (w > spec.weight_cap())
                continue;
            key[position] = g;
            run(position + 1, w, coeff * c);
        }
    }
};

} // namespace

GradedElement eval_bracket(const AlgebraSpec& spec, int arity, std::span<const GradedElement> args)
{
    if (arity < 1 || arity > spec.arity_cap())
        throw UnsupportedArity(fmt::format("arity {} is outside 1..{}", arity, spec.arity_cap()));
    if (static_cast<int>(args.size()) != arity)
        throw InvalidInput(fmt::format("bracket of arity {} given {} arguments", arity, args.size()));
    for (const auto& a : args)
        homogeneous_degree(spec.basis(), a);
    for (const auto& a : args)
        if (a.is_zero())
            return {};
    if (is_strict(spec.kind()) && arity > 2)
        return {};

    BracketEvaluator ev{spec, args, OpKey(args.size()), Rational(1), {}};
    ev.run(0, 0, Rational(1));
    return ev.result;
}

int suspension_sign(std::span<const int> degrees)
{
    const long i = static_cast<long>(degrees.size());
    long exponent = 0;
    for (long j = 1; j < i; ++j)
        exponent += (i - j) * (degrees[static_cast<std::size_t>(j - 1)] - 1);
    return sign_power(exponent);
}

GradedElement suspended_op(const AlgebraSpec& spec, int arity, std::span<const GradedElement> args)
{
    GradedElement value = eval_bracket(spec, arity, args);
    if (value.is_zero())
        return value;
    std::vector<int> degrees;
    degrees.reserve(args.size());
    for (const auto& a : args)
        degrees.push_back(*homogeneous_degree(spec.basis(), a));
    if (suspension_sign(degrees) < 0)
        value *= Rational(-1);
    return value;
}

GradedElement mc_defect(const AlgebraSpec& spec, const GradedElement& xi)
{
    auto deg = homogeneous_degree(spec.basis(), xi);
    if (deg && *deg != 1)
        throw DegreeError(fmt::format("Maurer-Cartan candidates have degree 1, got degree {}", *deg));
    GradedElement total;
    if (xi.is_zero())
        return total;
    const int max_arity = std::min(spec.arity_cap(), spec.weight_cap());
    for (int i = 1; i <= max_arity; ++i) {
        std::vector<GradedElement> args(static_cast<std::size_t>(i), xi);
        GradedElement term = eval_bracket(spec, i, args);
        if (!term.is_zero())
            total += spec.mc_coefficient(i) * term;
    }
    return total;
}

bool is_maurer_cartan(const AlgebraSpec& spec, const GradedElement& xi)
{
    return mc_defect(spec, xi).is_zero();
}

void require_maurer_cartan(const AlgebraSpec& spec, const GradedElement& xi, const char* what)
{
    GradedElement defect = mc_defect(spec, xi);
    if (!defect.is_zero())
        throw PreconditionError(fmt::format("{} is not Maurer-Cartan (defect {})", what,
                                            format(spec.basis(), defect)));
}

void require_degree_zero(const AlgebraSpec& spec, const GradedElement& x, const char* what)
{
    auto deg = homogeneous_degree(spec.basis(), x);
    if (deg && *deg != 0)
        throw DegreeError(fmt::format("{} must have degree 0, got degree {}", what, *deg));
}

bool PolyPath::is_zero() const
{
    for (const auto& [k, e] : t_part)
        if (!e.is_zero())
            return false;
    for (const auto& [k, e] : dt_part)
        if (!e.is_zero())
            return false;
    return true;
}

GradedElement PolyPath::at(const Rational& value) const
{
    GradedElement out;
    for (const auto& [k, e] : t_part) {
        Rational p = 1;
        for (int n = 0; n < k; ++n)
            p *= value;
        out += p * e;
    }
    return out;
}

void PolyPath::normalize()
{
    std::erase_if(t_part, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(dt_part, [](const auto& kv) { return kv.second.is_zero(); });
}

std::string format(const Basis& basis, const PolyPath& path)
{
    std::string out;
    auto piece = [&](const std::string& monomial, const GradedElement& e) {
        if (!out.empty())
            out += " + ";
        out += "(" + format(basis, e) + ")" + monomial;
    };
    for (const auto& [k, e] : path.t_part)
        piece(k == 0 ? "" : (k == 1 ? " t" : fmt::format(" t^{}", k)), e);
    for (const auto& [k, e] : path.dt_part)
        piece(k == 0 ? " dt" : (k == 1 ? " t dt" : fmt::format(" t^{} dt", k)), e);
    return out.empty() ? "0" : out;
}

namespace {

/// One homogeneous summand v (x) t^power dt^has_dt of a PolyPath.
struct PathTerm {
    GradedElement value;
    int degree;
    int power;
    bool has_dt;
};

std::vector<PathTerm> split_terms(const Basis& basis, const PolyPath& h)
{
    std::vector<PathTerm> out;
    for (const auto& [k, e] : h.t_part)
        if (!e.is_zero())
            out.push_back({e, *homogeneous_degree(basis, e), k, false});
    for (const auto& [k, e] : h.dt_part)
        if (!e.is_zero())
            out.push_back({e, *homogeneous_degree(basis, e), k, true});
    return out;
}

void add_to(PolyPath& p, bool dt, int power, const GradedElement& e)
{
    if (e.is_zero())
        return;
    auto& part = dt ? p.dt_part : p.t_part;
    part[power] += e;
}

} // namespace

PolyPath mc_defect_poly(const AlgebraSpec& spec, const PolyPath& h)
{
    const Basis& basis = spec.basis();
    for (const auto& [k, e] : h.t_part) {
        auto d = homogeneous_degree(basis, e);
        if (d && *d != 1)
            throw DegreeError("t-part coefficients of a degree-1 path must have degree 1");
    }
    for (const auto& [k, e] : h.dt_part) {
        auto d = homogeneous_degree(basis, e);
        if (d && *d != 0)
            throw DegreeError("dt-part coefficients of a degree-1 path must have degree 0");
    }

    PolyPath defect;
    const auto terms = split_terms(basis, h);

    // d(v t^k) = dv t^k + (-1)^{|v|} k v t^{k-1} dt ; d(v t^k dt) = dv t^k dt
    for (const auto& term : terms) {
        std::vector<GradedElement> arg{term.value};
        add_to(defect, term.has_dt, term.power, eval_bracket(spec, 1, arg));
        if (!term.has_dt && term.power > 0) {
            Rational c = term.power * sign_power(term.degree);
            add_to(defect, true, term.power - 1, c * term.value);
        }
    }

    // Brackets of arity >= 2 on all tuples of summands. Moving the dt of
    // argument j past the later arguments gives (-1)^{|v_l|} per later l.
    const int max_arity = std::min(spec.arity_cap(), spec.weight_cap());
    for (int i = 2; i <= max_arity && !terms.empty(); ++i) {
        std::vector<std::size_t> choice(static_cast<std::size_t>(i), 0);
        std::vector<GradedElement> args(static_cast<std::size_t>(i));
        const Rational coeff = spec.mc_coefficient(i);
        while (true) {
            int dt_count = 0;
            int power = 0;
            long sign_exp = 0;
            for (int j = 0; j < i; ++j) {
                const auto& t = terms[choice[static_cast<std::size_t>(j)]];
                args[static_cast<std::size_t>(j)] = t.value;
                power += t.power;
                if (t.has_dt) {
                    ++dt_count;
                    for (int l = j + 1; l < i; ++l)
                        sign_exp += terms[choice[static_cast<std::size_t>(l)]].degree;
                }
            }
            if (dt_count <= 1) {
                GradedElement value = eval_bracket(spec, i, args);
                if (!value.is_zero())
                    add_to(defect, dt_count == 1, power, (coeff * sign_power(sign_exp)) * value);
            }
            // next tuple
            int pos = i - 1;
            while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == terms.size()) {
                choice[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0 || terms.empty())
                break;
        }
    }
    defect.normalize();
    return defect;
}

AlgebraSpec commutator_dgla(const AlgebraSpec& dga)
{
    if (dga.kind() != Kind::dga)
        throw KindError("commutator dgla requires a dga");
    const Basis& basis = dga.basis();
    OpTable ops;
    for (const auto& [key, value] : dga.ops())
        if (key.size() == 1)
            ops[key] = value;
    const int n = dga.arity_cap() >= 2 ? static_cast<int>(basis.size()) : 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            GradedElement ga = GradedElement::generator(a), gb = GradedElement::generator(b);
            std::vector<GradedElement> ab{ga, gb}, ba{gb, ga};
            GradedElement value = eval_bracket(dga, 2, ab);
            value -= Rational(sign_power(static_cast<long>(basis.degree(a)) * basis.degree(b))) *
                     eval_bracket(dga, 2, ba);
            if (!value.is_zero())
                ops[{a, b}] = value;
        }
    }
    return AlgebraSpec(dga.name() + "_commutator", Kind::dgla, basis, dga.weight_cap(), std::max(2, dga.arity_cap()),
                       std::move(ops));
}

} // namespace mcgauge
