#include "cli.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/lie.hpp"
#include "mcgauge/ls_interval.hpp"
#include "mcgauge/sullivan.hpp"
#include "mcgauge/text_format.hpp"
#include "mcgauge/trees.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace mcgauge::cli {

namespace {

/// A named element of the document, or inline text; either may use '*'.
FreeElement resolve_words(const SpecDocument& doc, const std::string& text)
{
    if (const FreeElement* e = doc.find_element(text))
        return *e;
    return parse_words(doc.algebra, text);
}

bool is_linear(const FreeElement& e)
{
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.size() == 1; });
}

/// An element of V. Products are evaluated with the dga product.
GradedElement resolve_element(const SpecDocument& doc, const std::string& text)
{
    const FreeElement words = resolve_words(doc, text);
    if (is_linear(words)) {
        GradedElement out;
        for (const auto& [m, c] : words.terms())
            out.add_term(m.front(), c);
        return out;
    }
    if (words.constant_term() != 0)
        throw InvalidInput(fmt::format("'{}' has a constant term; only gauge --method dga takes a group element", text));
    if (doc.algebra.kind() != Kind::dga)
        throw InvalidInput(fmt::format("'{}' uses products, which need a dga", text));
    return evaluate_words(doc.algebra, words).vector;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

int cmd_validate(const std::string& file, std::ostream& out)
{
    const SpecDocument doc = load_spec(file);
    const StructureReport report = validate_structure(doc.algebra);
    if (report.ok) {
        out << fmt::format("ok: {} ({}, {} generators)\n", doc.algebra.name(), to_string(doc.algebra.kind()),
                           doc.algebra.basis().size());
        return ok;
    }
    for (const auto& f : report.failures)
        out << fmt::format("FAIL: m(m({})) = {}\n", f.generator, f.residue);
    return verification_failure;
}

int cmd_mc_check(const std::string& file, const std::string& element, std::ostream& out)
{
    const SpecDocument doc = load_spec(file);
    const GradedElement xi = resolve_element(doc, element);
    const GradedElement defect = mc_defect(doc.algebra, xi);
    const Basis& basis = doc.algebra.basis();
    if (defect.is_zero()) {
        out << fmt::format("{} is Maurer-Cartan\n", format(basis, xi));
        return ok;
    }
    out << fmt::format("{} is not Maurer-Cartan: defect {}\n", format(basis, xi), format(basis, defect));
    return verification_failure;
}

int cmd_gauge(const MethodRegistry& registry, const std::string& file, const std::string& element,
              const std::string& by, const std::string& method, std::ostream& out, std::ostream& err)
{
    const GaugeMethod* m = registry.find(method);
    if (!m) {
        err << fmt::format("error: unknown method '{}'\n", method);
        return input_error;
    }
    const SpecDocument doc = load_spec(file);
    if (!m->supports(doc.algebra.kind())) {
        err << fmt::format("error: method '{}' does not apply to kind {}\n", method, to_string(doc.algebra.kind()));
        return input_error;
    }
    const GradedElement xi = resolve_element(doc, element);
    const FreeElement by_words = resolve_words(doc, by);
    if (method == "dga" && by_words.constant_term() != 0) {
        // A group element a = c + v acts directly.
        out << format(doc.algebra.basis(), gauge_dga(doc.algebra, by_words, xi)) << "\n";
        return ok;
    }
    const GradedElement x = resolve_element(doc, by);
    out << format(doc.algebra.basis(), m->apply(doc.algebra, x, xi)) << "\n";
    return ok;
}

int cmd_gauge_compare(const MethodRegistry& registry, const std::string& file, const std::string& element,
                      const std::string& by, std::ostream& out)
{
    const SpecDocument doc = load_spec(file);
    const GradedElement xi = resolve_element(doc, element);
    const GradedElement x = resolve_element(doc, by);
    const RouteComparison cmp = compare_routes(registry, doc.algebra, x, xi);
    const Basis& basis = doc.algebra.basis();
    if (cmp.agree) {
        std::string names;
        for (const auto& r : cmp.results)
            names += r.method + " = ";
        out << "AGREE: " << names << (cmp.results.empty() ? "0" : format(basis, cmp.results.front().value)) << "\n";
        return ok;
    }
    out << "DISAGREE:\n";
    for (const auto& r : cmp.results)
        out << fmt::format("  {}: {}\n", r.method, format(basis, r.value));
    return verification_failure;
}

int cmd_bch(const std::string& file, const std::string& xs, const std::string& ys, int weight, std::ostream& out,
            std::ostream& err)
{
    if (file.empty()) {
        if (weight < 1) {
            err << "error: symbolic bch needs --weight W with W >= 1\n";
            return input_error;
        }
        const FreeAlgebra symbols = bch_symbols(weight);
        const LieRewrite rw = lie_rewrite(symbols, bch(symbols, symbols.generator(0), symbols.generator(1)));
        out << format_lie(symbols, rw) << "\n";
        return rw.is_lie() ? ok : verification_failure;
    }
    const SpecDocument doc = load_spec(file);
    const GradedElement x = resolve_element(doc, xs);
    const GradedElement y = resolve_element(doc, ys);
    out << format(doc.algebra.basis(), bch_in(doc.algebra, x, y)) << "\n";
    return ok;
}

int cmd_trees(int max_vertices, int arity_cap, bool planar, std::ostream& out, std::ostream& err)
{
    if (max_vertices < 1 || arity_cap < 1) {
        err << "error: --max-vertices and --arity-cap must be positive\n";
        return input_error;
    }
    if (!planar) {
        const auto groups = enumerate_trees(max_vertices, arity_cap);
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (const RootedTree& t : groups[g])
                out << fmt::format("n={} r={} j={} coefficient={} {}\n", g + 1, monotone_count(t).get_str(),
                                   join_ints(t.xi_counts()), to_string(tree_coefficient(t)), t.encoding());
        return ok;
    }
    const auto groups = enumerate_planar(max_vertices, arity_cap);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const int n = static_cast<int>(g) + 1;
        Rational c = inverse_factorial(static_cast<unsigned>(n));
        if (n % 2 == 1)
            c = -c;
        for (const PlanarTree& t : groups[g])
            for (const Labelling& lab : labellings(t, n))
                out << fmt::format("n={} coefficient={} {}\n", n, to_string(c), encoding(t, lab));
    }
    return ok;
}

int cmd_ls_interval(int weight, bool verify, std::ostream& out)
{
    const LSPresentation ls = ls_interval(weight);
    if (!verify) {
        out << print_spec(ls.spec);
        return ok;
    }
    const CheckReport report = verify_ls(ls);
    for (const auto& c : report.checks)
        out << fmt::format("{} {}{}\n", c.passed ? "PASS" : "FAIL", c.name, c.passed ? "" : ": " + c.detail);
    return report.ok() ? ok : verification_failure;
}

int cmd_sullivan(const std::string& file, const std::string& element, const std::string& by, std::ostream& out)
{
    const SpecDocument doc = load_spec(file);
    const GradedElement xi = resolve_element(doc, element);
    const GradedElement x = resolve_element(doc, by);
    const SullivanWitness w = sullivan_witness(doc.algebra, x, xi);
    const Basis& basis = doc.algebra.basis();
    out << "path: " << format(basis, w.path) << "\n";
    out << "defect: " << format(basis, w.defect) << "\n";
    out << "t=0: " << format(basis, w.start) << "\n";
    out << "t=1: " << format(basis, w.end) << "\n";
    out << "e^x . xi: " << format(basis, w.expected_end) << "\n";
    return w.ok() ? ok : verification_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const MethodRegistry& registry)
{
    CLI::App app{"Maurer-Cartan elements and gauge actions in nilpotent algebras", "mcgauge"};
    app.require_subcommand(1);

    std::string file, element, by, method, xs, ys;
    int max_vertices = 0, arity_cap = 0, weight = 0;
    bool planar = false, verify = false;

    auto* validate = app.add_subcommand("validate", "check the structure identities (m^2 = 0)");
    validate->add_option("file", file, "algebra file")->required();

    auto* mc = app.add_subcommand("mc-check", "evaluate the Maurer-Cartan equation");
    mc->add_option("file", file, "algebra file")->required();
    mc->add_option("--element", element, "element name or linear combination")->required();

    auto* gauge = app.add_subcommand("gauge", "apply the gauge action by one method");
    gauge->add_option("file", file, "algebra file")->required();
    gauge->add_option("--element", element, "Maurer-Cartan element")->required();
    gauge->add_option("--by", by, "degree-0 gauge parameter")->required();
    gauge->add_option("--method", method, "closed | dga | trees | exp | cylinder")->required();

    auto* compare = app.add_subcommand("gauge-compare", "run every applicable method and compare");
    compare->add_option("file", file, "algebra file")->required();
    compare->add_option("--element", element, "Maurer-Cartan element")->required();
    compare->add_option("--by", by, "degree-0 gauge parameter")->required();

    auto* bch_cmd = app.add_subcommand("bch", "Baker-Campbell-Hausdorff product");
    bch_cmd->add_option("file", file, "algebra file (omit for the symbolic series)");
    bch_cmd->add_option("--x", xs, "first element");
    bch_cmd->add_option("--y", ys, "second element");
    bch_cmd->add_option("--weight", weight, "truncation weight of the symbolic series");

    auto* trees = app.add_subcommand("trees", "list the trees of the gauge formulas");
    trees->add_option("--max-vertices", max_vertices, "largest vertex count")->required();
    trees->add_option("--arity-cap", arity_cap, "largest vertex arity")->required();
    trees->add_flag("--planar", planar, "planar trees with labellings");

    auto* ls = app.add_subcommand("ls-interval", "Lawrence-Sullivan interval presentation");
    ls->add_option("--weight", weight, "weight cap")->required();
    ls->add_flag("--verify", verify, "run the interval checks instead of printing");

    auto* sullivan = app.add_subcommand("sullivan", "polynomial path witnessing e^x . xi");
    sullivan->add_option("file", file, "algebra file")->required();
    sullivan->add_option("--element", element, "Maurer-Cartan element")->required();
    sullivan->add_option("--by", by, "degree-0 gauge parameter")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file, out);
        if (mc->parsed())
            return cmd_mc_check(file, element, out);
        if (gauge->parsed())
            return cmd_gauge(registry, file, element, by, method, out, err);
        if (compare->parsed())
            return cmd_gauge_compare(registry, file, element, by, out);
        if (bch_cmd->parsed()) {
            if (!file.empty() && (xs.empty() || ys.empty())) {
                err << "error: bch with a file needs --x and --y\n";
                return input_error;
            }
            return cmd_bch(file, xs, ys, weight, out, err);
        }
        if (trees->parsed())
            return cmd_trees(max_vertices, arity_cap, planar, out, err);
        if (ls->parsed())
            return cmd_ls_interval(weight, verify, out);
        if (sullivan->parsed())
            return cmd_sullivan(file, element, by, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace mcgauge::cli
