#include "weyl/quantize.hpp"

#include "weyl/calculus.hpp"
#include "weyl/symmetrize.hpp"

namespace weyl {

ClassicalPoly ClassicalPoly::monomial(Rational coeff, long q_exp, long p_exp,
                                      long h_exp) {
    ClassicalPoly r;
    r.add(coeff, q_exp, p_exp, h_exp);
    return r;
}

bool ClassicalPoly::is_h_free() const {
    for (const auto& [key, c] : terms_)
        if (key[2] != 0) return false;
    return true;
}

Rational ClassicalPoly::coeff_of(long q_exp, long p_exp, long h_exp) const {
    auto it = terms_.find(Key{q_exp, p_exp, h_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ClassicalPoly::add(const Rational& coeff, long q_exp, long p_exp,
                        long h_exp) {
    if (sgn(coeff) == 0) return;
    Key key{q_exp, p_exp, h_exp};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

ClassicalPoly ClassicalPoly::operator-() const {
    ClassicalPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add(c, key[0], key[1], key[2]);
    return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add(-c, key[0], key[1], key[2]);
    return *this;
}

ClassicalPoly ClassicalPoly::scaled(const Rational& c) const {
    ClassicalPoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

ClassicalPoly c_multiply(const ClassicalPoly& f, const ClassicalPoly& g) {
    ClassicalPoly r;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
            r.add(cf * cg, kf[0] + kg[0], kf[1] + kg[1], kf[2] + kg[2]);
    return r;
}

namespace {

ClassicalPoly c_derive(const ClassicalPoly& f, int axis) {
    ClassicalPoly r;
    for (const auto& [key, c] : f.terms()) {
        if (key[axis] == 0) continue;
        ClassicalPoly::Key k = key;
        k[axis] -= 1;
        r.add(c * Rational(key[axis]), k[0], k[1], k[2]);
    }
    return r;
}

}  // namespace

ClassicalPoly c_poisson(const ClassicalPoly& f, const ClassicalPoly& g) {
    return c_multiply(c_derive(f, 0), c_derive(g, 1)) -
           c_multiply(c_derive(f, 1), c_derive(g, 0));
}

OperatorPoly quantize(const ClassicalPoly& f) {
    if (!f.is_h_free())
        throw PreconditionError("quantize requires an h-free classical input");
    OperatorPoly r;
    for (const auto& [key, c] : f.terms())
        r += weyl_closed_form(key[0], key[1]).scaled(c);
    return r;
}

ClassicalPoly dequantize(const OperatorPoly& a) {
    if (!a.is_atom_free())
        throw PreconditionError("dequantize requires an atom-free input");
    if (a.min_h_exp() < 0)
        throw PreconditionError("dequantize requires nonnegative h powers");

    ClassicalPoly coords;
    OperatorPoly rest = a;
    // Descending-degree elimination: the top q/p degree terms of the
    // remainder can only come from their own S(q^n p^m) h^k images.
    while (!rest.is_zero()) {
        long top = rest.qp_degree();
        std::vector<Term> leads;
        for (const auto& [key, c] : rest.terms()) {
            long deg = static_cast<long>(key.word.size());
            if (deg == top) leads.emplace_back(c, key.h_exp, key.word);
        }
        for (const auto& t : leads) {
            long n = 0, m = 0;
            for (const auto& g : t.word.letters)
                (g.kind == Generator::Kind::Q ? n : m) += 1;
            coords.add(t.coeff, n, m, t.h_exp);
            OperatorPoly image = weyl_closed_form(n, m);
            rest -= multiply(image, OperatorPoly::h_power(t.h_exp)).scaled(t.coeff);
        }
    }
    return coords;
}

HomomorphismReport check_homomorphism(const ClassicalPoly& f,
                                      const ClassicalPoly& g) {
    HomomorphismReport rep;
    rep.product_ok =
        (quantize(c_multiply(f, g)) == sym_product(quantize(f), quantize(g)));
    rep.bracket_ok =
        (quantize(c_poisson(f, g)) == poisson_sym(quantize(f), quantize(g)));
    return rep;
}

}  // namespace weyl
