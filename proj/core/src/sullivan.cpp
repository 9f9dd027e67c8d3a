#include "mcgauge/sullivan.hpp"

#include "mcgauge/errors.hpp"
#include "mcgauge/gauge.hpp"

namespace mcgauge {

SullivanWitness sullivan_witness(const AlgebraSpec& spec, const GradedElement& x, const GradedElement& xi)
{
    if (spec.kind() != Kind::dgla)
        throw KindError("Sullivan witnesses are built in a dgla");
    require_degree_zero(spec, x, "gauge parameter");
    require_maurer_cartan(spec, xi, "xi");

    // gauge_closed(t x, xi) = xi + sum_n t^n ad_x^{n-1}(ad_x xi - dx) / n!
    PolyPath base;
    base.t_part[0] = xi;
    const std::vector<GradedElement> dx_arg{x};
    GradedElement term = x.is_zero() ? GradedElement{} : eval_bracket(spec, 1, dx_arg);
    if (!x.is_zero() && !xi.is_zero()) {
        const std::vector<GradedElement> args{x, xi};
        term = eval_bracket(spec, 2, args) - term;
    } else {
        term = -term;
    }
    for (int n = 1; !term.is_zero(); ++n) {
        if (n > spec.weight_cap() + 1)
            throw DivergenceError("path series did not terminate within the weight cap");
        base.t_part[n] = term;
        const std::vector<GradedElement> args{x, term};
        term = Rational(1, n + 1) * eval_bracket(spec, 2, args);
    }
    base.normalize();

    SullivanWitness w;
    w.expected_end = gauge_closed(spec, x, xi);
    for (int sign : {-1, 1}) {
        PolyPath candidate = base;
        if (!x.is_zero())
            candidate.dt_part[0] = Rational(sign) * x;
        PolyPath defect = mc_defect_poly(spec, candidate);
        if (defect.is_zero() || sign == 1) {
            w.path = std::move(candidate);
            w.defect = std::move(defect);
            w.dt_sign = w.defect.is_zero() ? sign : 0;
            if (w.defect.is_zero())
                break;
        }
    }
    w.start = w.path.at(0);
    w.end = w.path.at(1);
    return w;
}

} // namespace mcgauge
