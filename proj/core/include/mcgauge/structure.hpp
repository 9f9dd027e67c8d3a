#pragma once

#include "mcgauge/graded.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace mcgauge {

enum class Kind { dgla, dga, linf, ainf };

/// Normalization of the A-infinity Maurer-Cartan equation: `paper` puts
/// 1/i! in front of m_i(xi, ..., xi), `plain` does not. The representing
/// tensor algebra (and hence every A-infinity gauge route) is consistent
/// with `plain`. Ignored for dgla/linf, which always use 1/i!.
enum class McConvention { paper, plain };

std::string to_string(Kind kind);
std::string to_string(McConvention convention);

/// dgla and linf: graded-antisymmetric brackets stored under sorted keys.
constexpr bool is_symmetric(Kind k) { return k == Kind::dgla || k == Kind::linf; }
/// dgla and dga: only a differential and a binary operation.
constexpr bool is_strict(Kind k) { return k == Kind::dgla || k == Kind::dga; }

using OpKey = std::vector<int>;
using OpTable = std::map<OpKey, GradedElement>;

/// Finite presentation of a weight-nilpotent algebra. The operation table
/// maps an argument key (generator indices) of length i to the value of the
/// i-ary bracket [g1, ..., gi]_i on the unsuspended side. Arity 1 is the
/// differential. Validated on construction; immutable afterwards.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, Kind kind, Basis basis, int weight_cap, int arity_cap, OpTable ops,
                McConvention convention = McConvention::paper);

    const std::string& name() const noexcept { return name_; }
    Kind kind() const noexcept { return kind_; }
    const Basis& basis() const noexcept { return basis_; }
    int weight_cap() const noexcept { return weight_cap_; }
    int arity_cap() const noexcept { return arity_cap_; }
    McConvention mc_convention() const noexcept { return convention_; }
    const OpTable& ops() const noexcept { return ops_; }

    /// Table value for a key in storage form; nullptr when absent (zero).
    const GradedElement* lookup(const OpKey& key) const;

    /// Coefficient in front of the arity-i term of the MC equation.
    Rational mc_coefficient(int arity) const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
    void validate();

    std::string name_;
    Kind kind_;
    Basis basis_;
    int weight_cap_;
    int arity_cap_;
    OpTable ops_;
    McConvention convention_;
};

/// Multilinear bracket [args]_i. For dgla/linf a permuted key picks up the
/// graded-antisymmetric sign; terms above the weight cap are dropped.
/// Throws UnsupportedArity (i > arity cap) and DegreeError.
GradedElement eval_bracket(const AlgebraSpec& spec, int arity, std::span<const GradedElement> args);

/// l_i(args) = (-1)^(sum_{j<i} (i-j)|x_j|) [args]_i where |x_j| is the
/// suspended degree (bracket-side degree minus one). Arguments and result
/// are written in the unsuspended basis.
GradedElement suspended_op(const AlgebraSpec& spec, int arity, std::span<const GradedElement> args);

/// Sign relating suspended_op and eval_bracket for the given bracket-side degrees.
int suspension_sign(std::span<const int> degrees);

/// Left-hand side of the Maurer-Cartan equation. Throws DegreeError if xi
/// does not have degree 1.
GradedElement mc_defect(const AlgebraSpec& spec, const GradedElement& xi);

bool is_maurer_cartan(const AlgebraSpec& spec, const GradedElement& xi);

/// Throws PreconditionError naming `what` unless xi is Maurer-Cartan.
void require_maurer_cartan(const AlgebraSpec& spec, const GradedElement& xi, const char* what);

/// Throws DegreeError unless x is zero or homogeneous of degree 0.
void require_degree_zero(const AlgebraSpec& spec, const GradedElement& x, const char* what);

/// Element of V (x) k[t, dt]: coefficients of t^k and of t^k dt.
struct PolyPath {
    std::map<int, GradedElement> t_part;
    std::map<int, GradedElement> dt_part;

    bool is_zero() const;
    /// Image under t -> value, dt -> 0.
    GradedElement at(const Rational& value) const;
    /// Removes zero coefficients.
    void normalize();

    friend bool operator==(const PolyPath&, const PolyPath&) = default;
};

std::string format(const Basis& basis, const PolyPath& path);

/// Maurer-Cartan defect in V (x) k[t, dt]. The differential includes
/// d/dt dt; brackets extend k[t,dt]-multilinearly with the Koszul sign
/// for dt. Throws DegreeError unless h has degree 1.
PolyPath mc_defect_poly(const AlgebraSpec& spec, const PolyPath& h);

struct StructureFailure {
    std::string generator;
    std::string residue;
};

struct StructureReport {
    bool ok = true;
    std::vector<StructureFailure> failures;
};

/// Checks m(m(g)) = 0 for every generator g of the representing algebra.
StructureReport validate_structure(const AlgebraSpec& spec);

/// The dgla of a dga with [a, b] = ab - (-1)^{|a||b|} ba.
AlgebraSpec commutator_dgla(const AlgebraSpec& dga);

} // namespace mcgauge
