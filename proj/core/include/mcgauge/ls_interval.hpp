#pragma once

#include "mcgauge/freealg.hpp"
#include "mcgauge/structure.hpp"

#include <string>
#include <vector>

namespace mcgauge {

/// Truncated Lawrence-Sullivan interval: the free dgla on a, b (degree 1)
/// and z (degree 0), all of weight 1, with da = -1/2 [a,a], db = -1/2 [b,b]
/// and dz = [z,b] + sum_n B_n/n! ad_z^n (b - a).
///
/// Basis elements are right-normed brackets [g1,[g2,...,gk]] named by their
/// letters ("zab" is [z,[a,b]]), picked greedily per multidegree in
/// lexicographic word order. `words` holds the tensor-algebra expansion of
/// each basis element, indexed like the spec basis. `a`, `b` and `z` are
/// spec basis indices; in `letters` the three letters are 0, 1 and 2.
struct LSPresentation {
    AlgebraSpec spec;
    FreeAlgebra letters;
    std::vector<FreeElement> words;
    int a = 0;
    int b = 0;
    int z = 0;
};

/// Throws InvalidInput when weight_cap < 1.
LSPresentation ls_interval(int weight_cap);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool ok() const;
};

/// MC(a), MC(b), a = e^z . b and d^2 = 0 on every basis element.
CheckReport verify_ls(int weight_cap);
CheckReport verify_ls(const LSPresentation& ls);

/// Sends a -> xi, b -> eta, z -> x and checks h(dE) = d h(E) on every basis
/// element E of ls_interval at the spec's weight cap. One check per basis
/// element; a failing check carries the residue h(dE) - d h(E).
CheckReport homotopy_witness_check(const AlgebraSpec& spec, const GradedElement& xi, const GradedElement& eta,
                                   const GradedElement& x);

} // namespace mcgauge
