#pragma once

#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/symmetrize.hpp"

namespace weyl {

// Formal partial derivations on atom-free elements: the Leibniz extension
// of dq/dq = 1, dp/dq = 0, dh/dq = 0 (and symmetrically for d/dp).
OperatorPoly d_dq(const OperatorPoly& a);
OperatorPoly d_dp(const OperatorPoly& a);

// {a, b}_S = (da/dq) ∘ (db/dp) − (da/dp) ∘ (db/dq). `a` must be atom-free;
// `b` is atom-free or the bare state atom, whose formal derivatives are
// emitted as derivative-atom letters.
OperatorPoly poisson_sym(const OperatorPoly& a, const OperatorPoly& b);

// Coordinates of `a` in the basis of symmetrized monomials S(q^n p^m).
// Throws unless `a` is exactly a linear combination of them (no h content).
struct SymmetrizedMonomial {
    long n = 0;
    long m = 0;
    Rational coeff;
};
std::vector<SymmetrizedMonomial> symmetrized_span_coords(const OperatorPoly& a);

struct Theorem4Report {
    bool holds = false;
    OperatorPoly lhs;  // {H, rho}_S (after atom substitution when atomic)
    OperatorPoly rhs;  // -h^-1 [H, rho]
};

// Checks {H, rho}_S = -h^-1 [H, rho] exactly. For the atomic state the
// derivative atoms substitute as d(rho)/dp -> -h^-1 (q rho - rho q) and
// d(rho)/dq -> h^-1 (p rho - rho p) before comparing.
Theorem4Report theorem4_check(const OperatorPoly& hamiltonian,
                              const OperatorPoly& rho);

// Formal Taylor data for the evolution d(rho)/dt = {H, rho}_S:
// coefficients[k] multiplies t^k / k!.
struct EvolutionSeries {
    std::vector<OperatorPoly> coefficients;
    long order() const { return static_cast<long>(coefficients.size()) - 1; }
};

EvolutionSeries evolve_series(const OperatorPoly& hamiltonian,
                              const OperatorPoly& rho0, long order);

}  // namespace weyl
