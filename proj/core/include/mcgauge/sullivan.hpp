#pragma once

#include "mcgauge/structure.hpp"

namespace mcgauge {

struct SullivanWitness {
    PolyPath path;
    /// mc_defect_poly(path); zero when the construction succeeded.
    PolyPath defect;
    /// Sign s of the dt-coefficient s x that annihilated the defect (0 if none did).
    int dt_sign = 0;
    GradedElement start;
    GradedElement end;
    /// gauge_closed(x, xi), for comparison with `end`.
    GradedElement expected_end;

    bool ok() const { return dt_sign != 0 && defect.is_zero() && end == expected_end; }
};

/// Polynomial path from xi to e^x . xi in a dgla: the t-expansion of
/// gauge_closed(t x, xi) plus s x dt, with s in {-1, +1} chosen so that the
/// Maurer-Cartan defect vanishes. Throws KindError for other kinds and
/// PreconditionError if xi is not Maurer-Cartan.
SullivanWitness sullivan_witness(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi);

} // namespace mcgauge
