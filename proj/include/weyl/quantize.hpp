#pragma once

#include <array>
#include <map>

#include "weyl/algebra.hpp"

namespace weyl {

// Commutative polynomial in (q, p) with an h-grading. Classical inputs to
// quantize carry hExp = 0; the h component appears in dequantize output,
// where it records PBW h content.
class ClassicalPoly {
  public:
    // (qExp, pExp, hExp)
    using Key = std::array<long, 3>;

    struct GradedLexLess {
        bool operator()(const Key& a, const Key& b) const {
            long da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
            if (da != db) return da < db;
            return a < b;
        }
    };
    using TermMap = std::map<Key, Rational, GradedLexLess>;

    ClassicalPoly() = default;

    static ClassicalPoly zero() { return {}; }
    static ClassicalPoly constant(Rational c) { return monomial(std::move(c), 0, 0); }
    static ClassicalPoly q() { return monomial(1, 1, 0); }
    static ClassicalPoly p() { return monomial(1, 0, 1); }
    static ClassicalPoly monomial(Rational coeff, long q_exp, long p_exp,
                                  long h_exp = 0);

    bool is_zero() const { return terms_.empty(); }
    bool is_h_free() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff_of(long q_exp, long p_exp, long h_exp = 0) const;

    void add(const Rational& coeff, long q_exp, long p_exp, long h_exp = 0);

    ClassicalPoly operator-() const;
    ClassicalPoly& operator+=(const ClassicalPoly& rhs);
    ClassicalPoly& operator-=(const ClassicalPoly& rhs);
    friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly& b) {
        a += b;
        return a;
    }
    friend ClassicalPoly operator-(ClassicalPoly a, const ClassicalPoly& b) {
        a -= b;
        return a;
    }
    ClassicalPoly scaled(const Rational& c) const;

    friend bool operator==(const ClassicalPoly& a, const ClassicalPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    TermMap terms_;
};

ClassicalPoly c_multiply(const ClassicalPoly& f, const ClassicalPoly& g);

// Classical Poisson bracket df/dq dg/dp - df/dp dg/dq, with {q, p} = +1.
ClassicalPoly c_poisson(const ClassicalPoly& f, const ClassicalPoly& g);

// Linear extension of q^a p^b -> S(q^a p^b); constants map to multiples of
// the identity. Requires an h-free input.
OperatorPoly quantize(const ClassicalPoly& f);

// Inverse of the triangular basis change {quantize(q^n p^m) h^k}: the unique
// h-graded classical polynomial whose rebuild reproduces `a`. Requires an
// atom-free input with nonnegative h powers.
ClassicalPoly dequantize(const OperatorPoly& a);

struct HomomorphismReport {
    bool product_ok = false;  // quantize(f g) == quantize(f) ∘ quantize(g)
    bool bracket_ok = false;  // quantize({f,g}) == {quantize(f), quantize(g)}_S
};

HomomorphismReport check_homomorphism(const ClassicalPoly& f,
                                      const ClassicalPoly& g);

}  // namespace weyl
