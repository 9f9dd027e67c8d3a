#include "mcgauge/freealg.hpp"
#include "mcgauge/structure.hpp"

namespace mcgauge {

StructureReport validate_structure(const AlgebraSpec& spec)
{
    const RepresentingAlgebra rep = build_representing(spec);
    StructureReport report;
    for (int g = 0; g < static_cast<int>(rep.algebra.size()); ++g) {
        const FreeElement& dg = rep.differential.values[static_cast<std::size_t>(g)];
        FreeElement residue = apply_derivation(rep.algebra, rep.differential, dg);
        if (!residue.is_zero()) {
            report.ok = false;
            report.failures.push_back({rep.algebra.name(g), rep.algebra.format(residue)});
        }
    }
    return report;
}

} // namespace mcgauge
