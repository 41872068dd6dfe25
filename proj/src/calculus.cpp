#include "weyl/calculus.hpp"

#include <algorithm>
#include <optional>

namespace weyl {

namespace {

OperatorPoly derive(const OperatorPoly& a, Generator::Kind letter) {
    std::vector<Term> raw;
    for (const auto& [key, c] : a.terms()) {
        for (const auto& g : key.word.letters)
            if (g.is_atom())
                throw PreconditionError("derivation undefined on atoms");
        for (std::size_t i = 0; i < key.word.size(); ++i) {
            if (key.word.letters[i].kind != letter) continue;
            Word w = key.word;
            w.letters.erase(w.letters.begin() + static_cast<long>(i));
            raw.emplace_back(c, key.h_exp, std::move(w));
        }
    }
    return normalize(raw);
}

// Recognizes a polynomial of the exact shape c * (single state atom).
std::optional<std::pair<Rational, Generator>> as_bare_state(
    const OperatorPoly& a) {
    if (a.terms().size() != 1) return std::nullopt;
    const auto& [key, c] = *a.terms().begin();
    if (key.h_exp != 0 || key.word.size() != 1) return std::nullopt;
    const Generator& g = key.word.letters[0];
    if (!g.is_atom() || g.atom_class != AtomClass::State) return std::nullopt;
    return std::make_pair(c, g);
}

}  // namespace

OperatorPoly d_dq(const OperatorPoly& a) { return derive(a, Generator::Kind::Q); }
OperatorPoly d_dp(const OperatorPoly& a) { return derive(a, Generator::Kind::P); }

OperatorPoly poisson_sym(const OperatorPoly& a, const OperatorPoly& b) {
    if (!a.is_atom_free())
        throw PreconditionError(
            "poisson bracket: first operand must be atom-free");
    if (b.is_atom_free()) {
        return sym_product(d_dq(a), d_dp(b)) - sym_product(d_dp(a), d_dq(b));
    }
    auto bare = as_bare_state(b);
    if (!bare)
        throw PreconditionError(
            "poisson bracket: second operand must be atom-free or the bare "
            "state atom");
    const auto& [c, g] = *bare;
    OperatorPoly dp_rho =
        OperatorPoly::atom(AtomClass::DpState, g.name).scaled(c);
    OperatorPoly dq_rho =
        OperatorPoly::atom(AtomClass::DqState, g.name).scaled(c);
    return sym_product(d_dq(a), dp_rho) - sym_product(d_dp(a), dq_rho);
}

std::vector<SymmetrizedMonomial> symmetrized_span_coords(const OperatorPoly& a) {
    if (!a.is_atom_free())
        throw PreconditionError(
            "not a combination of symmetrized monomials: atoms present");
    std::vector<SymmetrizedMonomial> coords;
    OperatorPoly rest = a;
    // Each h-free term q^n p^m must be the leading part of coeff*S(q^n p^m);
    // subtracting it only introduces terms with h >= 1 and lower degree.
    for (;;) {
        std::optional<TermKey> lead;
        Rational lead_coeff;
        for (const auto& [key, c] : rest.terms()) {
            if (key.h_exp != 0) continue;
            lead = key;
            lead_coeff = c;
            break;
        }
        if (!lead) break;
        long n = 0, m = 0;
        for (const auto& g : lead->word.letters)
            (g.kind == Generator::Kind::Q ? n : m) += 1;
        coords.push_back(SymmetrizedMonomial{n, m, lead_coeff});
        rest -= weyl_closed_form(n, m).scaled(lead_coeff);
    }
    if (!rest.is_zero())
        throw PreconditionError(
            "not a combination of symmetrized monomials: h content remains");
    return coords;
}

Theorem4Report theorem4_check(const OperatorPoly& hamiltonian,
                              const OperatorPoly& rho) {
    symmetrized_span_coords(hamiltonian);  // precondition only

    // The bracket with the state always goes through the derivative atoms:
    // they ride the arrangements as single opaque letters, and only then do
    // the substitutions d(rho)/dp -> -h^-1 [q, rho] and
    // d(rho)/dq -> h^-1 [p, rho] replace them, with `rho` either the bare
    // state atom or a concrete polynomial. Letting the symmetrizer dissolve
    // a concrete rho's letters instead is a different statement, false
    // already for rho = q^2 p.
    std::string name = "rho";
    if (auto bare = as_bare_state(rho)) {
        name = bare->second.name;
    } else if (!rho.is_atom_free()) {
        throw PreconditionError(
            "theorem4 state must be atom-free or the bare state atom");
    }

    Theorem4Report rep;
    OperatorPoly lhs_atomic =
        poisson_sym(hamiltonian, OperatorPoly::state_atom(name));
    OperatorPoly minus_h_inv = OperatorPoly::h_power(-1).scaled(-1);
    OperatorPoly dp_subst =
        multiply(minus_h_inv, commutator(OperatorPoly::q(), rho));
    OperatorPoly dq_subst =
        multiply(minus_h_inv.scaled(-1), commutator(OperatorPoly::p(), rho));
    rep.lhs = substitute_atom(lhs_atomic,
                              Generator::atom(AtomClass::DpState, name), dp_subst);
    rep.lhs = substitute_atom(rep.lhs,
                              Generator::atom(AtomClass::DqState, name), dq_subst);
    rep.rhs = multiply(minus_h_inv, commutator(hamiltonian, rho));
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

EvolutionSeries evolve_series(const OperatorPoly& hamiltonian,
                              const OperatorPoly& rho0, long order) {
    symmetrized_span_coords(hamiltonian);  // precondition only
    if (!rho0.is_atom_free())
        throw PreconditionError("evolve_series: initial state must be atom-free");
    if (order < 0)
        throw PreconditionError("evolve_series: order must be nonnegative");

    EvolutionSeries series;
    series.coefficients.reserve(static_cast<std::size_t>(order) + 1);
    series.coefficients.push_back(rho0);
    for (long k = 0; k < order; ++k)
        series.coefficients.push_back(
            poisson_sym(hamiltonian, series.coefficients.back()));
    return series;
}

}  // namespace weyl
