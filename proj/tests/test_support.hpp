#pragma once

// Test-only helpers: a brute-force single-step rewriter independent of the
// engine's normalize path, plus random generators for property tests.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyl/algebra.hpp"

namespace testsupport {

using weyl::AtomClass;
using weyl::Generator;
using weyl::OperatorPoly;
using weyl::Rational;
using weyl::Term;
using weyl::TermKey;
using weyl::TermKeyLess;
using weyl::Word;

// Word from a letter string: 'q', 'p', 'r' (state atom rho),
// 'd' (dq(rho)), 'e' (dp(rho)).
inline Word word_of(const std::string& letters) {
    Word w;
    for (char c : letters) {
        switch (c) {
            case 'q': w.letters.push_back(Generator::q()); break;
            case 'p': w.letters.push_back(Generator::p()); break;
            case 'r':
                w.letters.push_back(Generator::atom(AtomClass::State, "rho"));
                break;
            case 'd':
                w.letters.push_back(Generator::atom(AtomClass::DqState, "rho"));
                break;
            case 'e':
                w.letters.push_back(Generator::atom(AtomClass::DpState, "rho"));
                break;
            default: throw std::logic_error("bad letter");
        }
    }
    return w;
}

inline Term term_of(Rational coeff, long h_exp, const std::string& letters) {
    return Term(std::move(coeff), h_exp, word_of(letters));
}

// Unreduced formal sum keyed by (h, word); the brute rewriter's state.
using RawMap = std::map<TermKey, Rational, TermKeyLess>;

inline void raw_add(RawMap& m, const TermKey& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) m.erase(it);
    }
}

// Positions i where word[i] = p and word[i+1] = q.
inline std::vector<std::size_t> descents(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w.letters[i].kind == Generator::Kind::P &&
            w.letters[i + 1].kind == Generator::Kind::Q)
            out.push_back(i);
    return out;
}

// Applies p q -> q p + h one step at a time until no descent remains.
// With an rng, the term and the position are chosen at random each step;
// without one, always the first of each. Never calls the engine.
inline RawMap brute_normalize(const std::vector<Term>& raw,
                              std::mt19937* rng = nullptr) {
    RawMap state;
    for (const auto& t : raw) raw_add(state, TermKey{t.h_exp, t.word}, t.coeff);
    for (;;) {
        std::vector<std::pair<TermKey, std::vector<std::size_t>>> rewritable;
        for (const auto& [key, c] : state) {
            auto ds = descents(key.word);
            if (!ds.empty()) rewritable.emplace_back(key, std::move(ds));
        }
        if (rewritable.empty()) return state;
        std::size_t which = 0, at = 0;
        if (rng) {
            which = (*rng)() % rewritable.size();
            at = (*rng)() % rewritable[which].second.size();
        }
        const TermKey key = rewritable[which].first;
        const std::size_t pos = rewritable[which].second[at];
        const Rational c = state.at(key);
        state.erase(key);

        Word swapped = key.word;
        std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
        raw_add(state, TermKey{key.h_exp, std::move(swapped)}, c);

        Word dropped = key.word;
        dropped.letters.erase(dropped.letters.begin() + static_cast<long>(pos),
                              dropped.letters.begin() + static_cast<long>(pos) + 2);
        raw_add(state, TermKey{key.h_exp + 1, std::move(dropped)}, c);
    }
}

inline bool raw_equals_poly(const RawMap& raw, const OperatorPoly& poly) {
    return raw == poly.terms();
}

// Raw Leibniz derivative of a single word with respect to one letter kind:
// the formal sum of the word with each matching letter removed.
inline std::vector<Term> leibniz_raw(const Term& t, Generator::Kind letter) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < t.word.size(); ++i) {
        if (t.word.letters[i].kind != letter) continue;
        Word w = t.word;
        w.letters.erase(w.letters.begin() + static_cast<long>(i));
        out.emplace_back(t.coeff, t.h_exp, std::move(w));
    }
    return out;
}

inline std::vector<Term> poly_to_raw(const OperatorPoly& a) {
    std::vector<Term> out;
    for (const auto& [key, c] : a.terms()) out.emplace_back(c, key.h_exp, key.word);
    return out;
}

// Random q/p word of length <= max_len; optionally one atom (state or
// derivative) spliced in at a random position.
inline Word random_word(std::mt19937& rng, std::size_t max_len,
                        bool with_atom = false, bool derivative_atom = true) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        w.letters.push_back(bit(rng) ? Generator::p() : Generator::q());
    if (with_atom) {
        std::uniform_int_distribution<std::size_t> pos_dist(0, w.size());
        AtomClass cls = derivative_atom
                            ? (bit(rng) ? AtomClass::DqState : AtomClass::DpState)
                            : AtomClass::State;
        w.letters.insert(w.letters.begin() + static_cast<long>(pos_dist(rng)),
                         Generator::atom(cls, "rho"));
    }
    return w;
}

inline Rational random_rational(std::mt19937& rng, long max_abs = 6,
                                long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    long n = num(rng);
    if (n == 0) n = 1;
    return weyl::make_rational(n, den(rng));
}

// Random atom-free polynomial: a few random raw words, normalized.
inline OperatorPoly random_poly(std::mt19937& rng, std::size_t terms,
                                std::size_t max_len, long max_h = 1) {
    std::vector<Term> raw;
    std::uniform_int_distribution<long> h_dist(0, max_h);
    for (std::size_t i = 0; i < terms; ++i)
        raw.emplace_back(random_rational(rng), h_dist(rng),
                         random_word(rng, max_len));
    return weyl::normalize(raw);
}

}  // namespace testsupport
