#pragma once

#include "mcgauge/freealg.hpp"
#include "mcgauge/structure.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcgauge {

/// A parsed algebra file. Elements live in word_algebra(algebra), so they
/// may contain products written with '*' and a constant term.
struct SpecDocument {
    AlgebraSpec algebra;
    std::vector<std::pair<std::string, FreeElement>> elements;

    const FreeElement* find_element(const std::string& name) const;
    /// Throws InvalidInput if the element is unknown or not a linear combination of generators.
    GradedElement linear_element(const std::string& name) const;
};

/// Line-oriented grammar, '#' starts a comment:
///
///     algebra NAME kind {dgla|dga|linf|ainf} weight-cap W arity-cap A [mc-convention {paper|plain}]
///     generator NAME degree D weight K
///     op I [G1,...,GI] = TERM (+|-) TERM ...
///     element NAME = TERM (+|-) TERM ...
///
/// Syntax problems throw ParseError with a 1-based line and column; the
/// semantic checks of AlgebraSpec run afterwards and throw their own errors.
SpecDocument parse_spec(std::string_view text);

/// Reads and parses a file. Throws InvalidInput when it cannot be read.
SpecDocument load_spec(const std::string& path);

std::string print_spec(const AlgebraSpec& spec);
std::string print_spec(const SpecDocument& doc);

/// Parses a linear combination such as "u - 1/2 w" over the basis.
GradedElement parse_element(const Basis& basis, std::string_view text);

/// Parses a polynomial in word_algebra(spec) such as "1 + x + 1/2 x*x".
FreeElement parse_words(const AlgebraSpec& spec, std::string_view text);

} // namespace mcgauge
