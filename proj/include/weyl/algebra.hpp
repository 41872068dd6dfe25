#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/rational.hpp"

namespace weyl {

// Opaque noncommuting symbols embedded in words: the state and its two
// formal partial derivatives. They never reorder past q, p, or each other.
enum class AtomClass { State, DqState, DpState };

struct Generator {
    enum class Kind { Q, P, Atom };

    Kind kind = Kind::Q;
    AtomClass atom_class = AtomClass::State;  // meaningful only for Kind::Atom
    std::string name;                         // meaningful only for Kind::Atom

    static Generator q() { return Generator{Kind::Q, AtomClass::State, {}}; }
    static Generator p() { return Generator{Kind::P, AtomClass::State, {}}; }
    static Generator atom(AtomClass cls, std::string name) {
        return Generator{Kind::Atom, cls, std::move(name)};
    }

    bool is_atom() const { return kind == Kind::Atom; }

    friend bool operator==(const Generator& a, const Generator& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != Kind::Atom) return true;
        return a.atom_class == b.atom_class && a.name == b.name;
    }
};

// Q < P < atoms (by class, then name).
int generator_cmp(const Generator& a, const Generator& b);

// Finite sequence of generators; empty word is the identity.
struct Word {
    std::vector<Generator> letters;

    Word() = default;
    explicit Word(std::vector<Generator> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters == b.letters;
    }
};

// Length first, then letter-wise. This is the canonical term order used
// for OperatorPoly iteration (after the h exponent).
int word_cmp(const Word& a, const Word& b);

// q^n p^m as a word.
Word qp_word(long n, long m);

// coeff * h^hExp * word. The central element h is tracked as an exponent,
// never as a letter; hExp may be negative (formal Laurent extension).
struct Term {
    Rational coeff;
    long h_exp = 0;
    Word word;

    Term() : coeff(0) {}
    Term(Rational c, long h, Word w)
        : coeff(std::move(c)), h_exp(h), word(std::move(w)) {}
};

struct TermKey {
    long h_exp = 0;
    Word word;

    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.h_exp == b.h_exp && a.word == b.word;
    }
};

struct TermKeyLess {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.h_exp != b.h_exp) return a.h_exp < b.h_exp;
        return word_cmp(a.word, b.word) < 0;
    }
};

// Element of the enveloping algebra (extended by atoms) in PBW normal form:
// no stored zero coefficients, every q/p run of every word sorted as
// q-block then p-block, deterministic term order.
class OperatorPoly {
  public:
    using TermMap = std::map<TermKey, Rational, TermKeyLess>;

    OperatorPoly() = default;

    static OperatorPoly zero() { return {}; }
    static OperatorPoly identity() { return constant(1); }
    static OperatorPoly constant(Rational c);
    static OperatorPoly q();
    static OperatorPoly p();
    static OperatorPoly h();                // = h^1
    static OperatorPoly h_power(long k);    // h^k, k may be negative
    static OperatorPoly state_atom(std::string name = "rho");
    static OperatorPoly atom(AtomClass cls, std::string name = "rho");
    // coeff * q^n p^m h^k, already in normal form by construction.
    static OperatorPoly monomial(Rational coeff, long n, long m, long k = 0);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of (hExp, word); zero if absent.
    Rational coeff_of(long h_exp, const Word& w) const;

    bool is_atom_free() const;
    // Max over terms of the number of q/p letters (atoms not counted).
    long qp_degree() const;
    long min_h_exp() const;  // 0 for the zero polynomial

    OperatorPoly operator-() const;
    OperatorPoly& operator+=(const OperatorPoly& rhs);
    OperatorPoly& operator-=(const OperatorPoly& rhs);
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) {
        a += b;
        return a;
    }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) {
        a -= b;
        return a;
    }
    OperatorPoly scaled(const Rational& c) const;

    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Inserts into the term map without rewriting; word must already be in
    // PBW segment form. Used by normalize() and the closed-form builders.
    void add_canonical(const Rational& coeff, long h_exp, Word word);

  private:
    TermMap terms_;
};

// Canonicalize a formal sum of raw terms: every p·q descent inside a
// maximal q/p run rewrites to q·p + h until none remain, h accumulates in
// the exponent, equal keys merge, zeros vanish. Atoms block rewriting.
OperatorPoly normalize(const std::vector<Term>& raw);
OperatorPoly normalize(const Term& raw);

// Ordinary associative product of the algebra.
OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b);

// a·b − b·a.
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);

// Hermitian adjoint: q, p and state atoms are self-adjoint, h† = −h,
// words reverse. Rejects terms holding derivative atoms.
OperatorPoly hermitian_adjoint(const OperatorPoly& a);

// Replace every occurrence of the given atom letter by `replacement`,
// distributing products, then renormalize. No-op if the atom is absent.
OperatorPoly substitute_atom(const OperatorPoly& a, const Generator& which,
                             const OperatorPoly& replacement);

inline bool equals(const OperatorPoly& a, const OperatorPoly& b) {
    return a == b;
}

}  // namespace weyl
