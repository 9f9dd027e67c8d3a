#include "mcgauge/text_format.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/gauge.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace mcgauge {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Word {
    std::string text;
    int column;
};

/// A term before name resolution: coefficient times a word of names.
struct RawTerm {
    Rational coefficient;
    std::vector<Word> letters;
    int column;
};

class LineScanner {
public:
    LineScanner(std::string_view text, int line, int base_column = 1)
        : text_(text), line_(line), base_(base_column) {}

    [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
    [[noreturn]] void fail_at(int col, const std::string& message) const { throw ParseError(line_, col, message); }

    int column() const { return base_ + static_cast<int>(pos_); }
    bool done() { skip_space(); return pos_ >= text_.size(); }
    char peek() { skip_space(); return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(fmt::format("expected '{}'", c));
    }

    std::optional<Word> identifier()
    {
        skip_space();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            return std::nullopt;
        const int col = column();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return Word{std::string(text_.substr(start, pos_ - start)), col};
    }

    Word require_identifier(const char* what)
    {
        auto w = identifier();
        if (!w)
            fail(fmt::format("expected {}", what));
        return *w;
    }

    /// Whitespace-delimited token (keywords and integers in headers).
    Word token(const char* what)
    {
        skip_space();
        if (pos_ >= text_.size())
            fail(fmt::format("expected {}", what));
        const int col = column();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Word{std::string(text_.substr(start, pos_ - start)), col};
    }

    void keyword(const char* kw)
    {
        Word w = token(kw);
        if (w.text != kw)
            fail_at(w.column, fmt::format("expected '{}', found '{}'", kw, w.text));
    }

    int integer(const char* what)
    {
        Word w = token(what);
        int value = 0;
        auto [ptr, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), value);
        if (ec != std::errc() || ptr != w.text.data() + w.text.size())
            fail_at(w.column, fmt::format("expected {} (an integer), found '{}'", what, w.text));
        return value;
    }

    std::optional<Rational> number()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            return std::nullopt;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == den)
                fail("expected a denominator");
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const InvalidInput& e) {
            fail_at(base_ + static_cast<int>(start), e.what());
        }
    }

    /// TERM (+|-) TERM ... ; TERM = [RATIONAL] [NAME ('*' NAME)*], not both empty.
    std::vector<RawTerm> terms()
    {
        std::vector<RawTerm> out;
        bool first = true;
        while (!done()) {
            Rational sign = 1;
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                fail("expected '+' or '-' between terms");
            first = false;
            const int col = column();
            RawTerm term{sign, {}, col};
            if (auto n = number()) {
                term.coefficient *= *n;
                accept('*');
            }
            if (auto w = identifier()) {
                term.letters.push_back(*w);
                while (accept('*'))
                    term.letters.push_back(require_identifier("a generator name after '*'"));
            } else if (column() == col) {
                fail("expected a term");
            }
            out.push_back(std::move(term));
        }
        if (first)
            fail("expected at least one term");
        return out;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    int line_;
    int base_;
    std::size_t pos_ = 0;
};

struct RawOp {
    int line;
    int arity;
    std::vector<Word> key;
    std::vector<RawTerm> value;
};

struct RawElement {
    int line;
    Word name;
    std::vector<RawTerm> value;
};

Kind parse_kind(const Word& w, const LineScanner& s)
{
    if (w.text == "dgla")
        return Kind::dgla;
    if (w.text == "dga")
        return Kind::dga;
    if (w.text == "linf")
        return Kind::linf;
    if (w.text == "ainf")
        return Kind::ainf;
    s.fail_at(w.column, fmt::format("unknown kind '{}'", w.text));
}

int resolve(const Basis& basis, const Word& w, int line)
{
    if (auto i = basis.find(w.text))
        return *i;
    throw ParseError(line, w.column, fmt::format("undeclared generator '{}'", w.text));
}

} // namespace

const FreeElement* SpecDocument::find_element(const std::string& name) const
{
    for (const auto& [n, e] : elements)
        if (n == name)
            return &e;
    return nullptr;
}

GradedElement SpecDocument::linear_element(const std::string& name) const
{
    const FreeElement* e = find_element(name);
    if (!e)
        throw InvalidInput(fmt::format("unknown element '{}'", name));
    GradedElement out;
    for (const auto& [word, c] : e->terms()) {
        if (word.size() != 1)
            throw InvalidInput(fmt::format("element '{}' is not a linear combination of generators", name));
        out.add_term(word.front(), c);
    }
    return out;
}

SpecDocument parse_spec(std::string_view text)
{
    struct Header {
        std::string name;
        Kind kind;
        int weight_cap;
        int arity_cap;
        McConvention convention;
    };
    std::optional<Header> header;
    std::vector<Generator> generators;
    std::set<std::string> declared;
    std::vector<RawOp> ops;
    std::vector<RawElement> elements;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        LineScanner s(line, line_no);
        if (s.done())
            continue;

        Word statement = s.token("a statement");
        if (statement.text == "algebra") {
            if (header)
                s.fail_at(statement.column, "duplicate algebra statement");
            Header h;
            h.name = s.require_identifier("an algebra name").text;
            s.keyword("kind");
            h.kind = parse_kind(s.token("a kind"), s);
            s.keyword("weight-cap");
            h.weight_cap = s.integer("a weight cap");
            s.keyword("arity-cap");
            h.arity_cap = s.integer("an arity cap");
            h.convention = McConvention::paper;
            if (!s.done()) {
                s.keyword("mc-convention");
                Word c = s.token("a convention");
                if (c.text == "paper")
                    h.convention = McConvention::paper;
                else if (c.text == "plain")
                    h.convention = McConvention::plain;
                else
                    s.fail_at(c.column, fmt::format("unknown convention '{}'", c.text));
            }
            if (!s.done())
                s.fail("unexpected text after the algebra statement");
            header = h;
            continue;
        }
        if (!header)
            s.fail_at(statement.column, "the first statement must be 'algebra'");

        if (statement.text == "generator") {
            Word name = s.require_identifier("a generator name");
            if (!declared.insert(name.text).second)
                s.fail_at(name.column, fmt::format("generator '{}' declared twice", name.text));
            s.keyword("degree");
            const int degree = s.integer("a degree");
            s.keyword("weight");
            const int weight = s.integer("a weight");
            if (weight < 1)
                s.fail("weights must be positive");
            if (!s.done())
                s.fail("unexpected text after the generator statement");
            generators.push_back({name.text, degree, weight});
        } else if (statement.text == "op") {
            RawOp op{line_no, s.integer("an arity"), {}, {}};
            s.expect('[');
            if (!s.accept(']')) {
                do {
                    Word g = s.require_identifier("a generator name");
                    if (!declared.count(g.text))
                        s.fail_at(g.column, fmt::format("undeclared generator '{}'", g.text));
                    op.key.push_back(g);
                } while (s.accept(','));
                s.expect(']');
            }
            if (static_cast<int>(op.key.size()) != op.arity)
                s.fail(fmt::format("arity {} entry lists {} arguments", op.arity, op.key.size()));
            s.expect('=');
            op.value = s.terms();
            for (const auto& t : op.value) {
                if (t.letters.size() != 1)
                    s.fail_at(t.column, "operation values are linear combinations of generators");
                if (!declared.count(t.letters.front().text))
                    s.fail_at(t.letters.front().column,
                              fmt::format("undeclared generator '{}'", t.letters.front().text));
            }
            ops.push_back(std::move(op));
        } else if (statement.text == "element") {
            RawElement el{line_no, s.require_identifier("an element name"), {}};
            for (const auto& other : elements)
                if (other.name.text == el.name.text)
                    s.fail_at(el.name.column, fmt::format("element '{}' defined twice", el.name.text));
            s.expect('=');
            el.value = s.terms();
            for (const auto& t : el.value)
                for (const auto& w : t.letters)
                    if (!declared.count(w.text))
                        s.fail_at(w.column, fmt::format("undeclared generator '{}'", w.text));
            elements.push_back(std::move(el));
        } else {
            s.fail_at(statement.column, fmt::format("unknown statement '{}'", statement.text));
        }
    }
    if (!header)
        throw ParseError(line_no, 1, "missing algebra statement");

    Basis basis(std::move(generators));
    OpTable table;
    for (const auto& op : ops) {
        OpKey key;
        for (const auto& w : op.key)
            key.push_back(resolve(basis, w, op.line));
        if (is_symmetric(header->kind)) {
            for (std::size_t k = 1; k < key.size(); ++k)
                if (key[k] < key[k - 1])
                    throw ParseError(op.line, op.key[k].column,
                                     "bracket keys must list generators in canonical order");
        }
        if (table.count(key))
            throw ParseError(op.line, op.key.empty() ? 1 : op.key.front().column, "duplicate operation entry");
        GradedElement value;
        for (const auto& t : op.value)
            value.add_term(resolve(basis, t.letters.front(), op.line), t.coefficient);
        table[key] = value;
    }

    AlgebraSpec spec(header->name, header->kind, basis, header->weight_cap, header->arity_cap, std::move(table),
                     header->convention);
    const FreeAlgebra words = word_algebra(spec);
    SpecDocument doc{std::move(spec), {}};
    for (const auto& el : elements) {
        FreeElement value;
        for (const auto& t : el.value) {
            Monomial m;
            for (const auto& w : t.letters)
                m.push_back(resolve(doc.algebra.basis(), w, el.line));
            value += words.word(m, t.coefficient);
        }
        doc.elements.emplace_back(el.name.text, std::move(value));
    }
    return doc;
}

SpecDocument load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput(fmt::format("cannot read '{}'", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

std::string print_spec(const AlgebraSpec& spec)
{
    const Basis& basis = spec.basis();
    std::string out = fmt::format("algebra {} kind {} weight-cap {} arity-cap {}", spec.name(), to_string(spec.kind()),
                                  spec.weight_cap(), spec.arity_cap());
    if (spec.mc_convention() != McConvention::paper)
        out += " mc-convention " + to_string(spec.mc_convention());
    out += "\n";
    for (const auto& g : basis.generators())
        out += fmt::format("generator {} degree {} weight {}\n", g.name, g.degree, g.weight);
    std::vector<std::pair<const OpKey*, const GradedElement*>> entries;
    for (const auto& [key, value] : spec.ops())
        entries.emplace_back(&key, &value);
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first->size() < b.first->size(); });
    for (const auto& [key_ptr, value_ptr] : entries) {
        const OpKey& key = *key_ptr;
        const GradedElement& value = *value_ptr;
        std::string names;
        for (std::size_t k = 0; k < key.size(); ++k)
            names += (k ? "," : "") + basis.name(key[k]);
        out += fmt::format("op {} [{}] = {}\n", key.size(), names, format(basis, value));
    }
    return out;
}

std::string print_spec(const SpecDocument& doc)
{
    std::string out = print_spec(doc.algebra);
    const FreeAlgebra words = word_algebra(doc.algebra);
    for (const auto& [name, value] : doc.elements)
        out += fmt::format("element {} = {}\n", name, words.format(value));
    return out;
}

GradedElement parse_element(const Basis& basis, std::string_view text)
{
    LineScanner s(text, 1);
    GradedElement out;
    for (const auto& t : s.terms()) {
        // A bare "0" is the printed form of the zero element.
        if (t.letters.empty() && t.coefficient == 0)
            continue;
        if (t.letters.size() != 1)
            throw ParseError(1, t.column, "expected a linear combination of generators");
        out.add_term(resolve(basis, t.letters.front(), 1), t.coefficient);
    }
    return out;
}

FreeElement parse_words(const AlgebraSpec& spec, std::string_view text)
{
    LineScanner s(text, 1);
    const FreeAlgebra words = word_algebra(spec);
    FreeElement out;
    for (const auto& t : s.terms()) {
        Monomial m;
        for (const auto& w : t.letters)
            m.push_back(resolve(spec.basis(), w, 1));
        out += words.word(m, t.coefficient);
    }
    return out;
}

} // namespace mcgauge
