#include "weyl/algebra.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

namespace weyl {

int generator_cmp(const Generator& a, const Generator& b) {
    auto rank = [](const Generator& g) {
        switch (g.kind) {
            case Generator::Kind::Q: return 0;
            case Generator::Kind::P: return 1;
            case Generator::Kind::Atom: return 2;
        }
        return 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    if (a.kind != Generator::Kind::Atom) return 0;
    if (a.atom_class != b.atom_class)
        return static_cast<int>(a.atom_class) < static_cast<int>(b.atom_class) ? -1 : 1;
    return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
}

int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = generator_cmp(a.letters[i], b.letters[i]);
        if (c != 0) return c;
    }
    return 0;
}

Word qp_word(long n, long m) {
    Word w;
    w.letters.reserve(static_cast<std::size_t>(n + m));
    for (long i = 0; i < n; ++i) w.letters.push_back(Generator::q());
    for (long i = 0; i < m; ++i) w.letters.push_back(Generator::p());
    return w;
}

OperatorPoly OperatorPoly::constant(Rational c) {
    OperatorPoly r;
    r.add_canonical(c, 0, Word{});
    return r;
}

OperatorPoly OperatorPoly::q() { return monomial(1, 1, 0); }
OperatorPoly OperatorPoly::p() { return monomial(1, 0, 1); }
OperatorPoly OperatorPoly::h() { return h_power(1); }

OperatorPoly OperatorPoly::h_power(long k) {
    OperatorPoly r;
    r.add_canonical(1, k, Word{});
    return r;
}

OperatorPoly OperatorPoly::state_atom(std::string name) {
    return atom(AtomClass::State, std::move(name));
}

OperatorPoly OperatorPoly::atom(AtomClass cls, std::string name) {
    OperatorPoly r;
    r.add_canonical(1, 0, Word{{Generator::atom(cls, std::move(name))}});
    return r;
}

OperatorPoly OperatorPoly::monomial(Rational coeff, long n, long m, long k) {
    OperatorPoly r;
    r.add_canonical(std::move(coeff), k, qp_word(n, m));
    return r;
}

Rational OperatorPoly::coeff_of(long h_exp, const Word& w) const {
    auto it = terms_.find(TermKey{h_exp, w});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool OperatorPoly::is_atom_free() const {
    for (const auto& [key, c] : terms_)
        for (const auto& g : key.word.letters)
            if (g.is_atom()) return false;
    return true;
}

long OperatorPoly::qp_degree() const {
    long d = 0;
    for (const auto& [key, c] : terms_) {
        long n = 0;
        for (const auto& g : key.word.letters)
            if (!g.is_atom()) ++n;
        d = std::max(d, n);
    }
    return d;
}

long OperatorPoly::min_h_exp() const {
    long k = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.h_exp < k) k = key.h_exp;
        first = false;
    }
    return k;
}

OperatorPoly OperatorPoly::operator-() const {
    OperatorPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_canonical(c, key.h_exp, key.word);
    return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_canonical(-c, key.h_exp, key.word);
    return *this;
}

OperatorPoly OperatorPoly::scaled(const Rational& c) const {
    OperatorPoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

void OperatorPoly::add_canonical(const Rational& coeff, long h_exp, Word word) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(TermKey{h_exp, std::move(word)}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

namespace {

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) < 0; }
};

// Normal form of one pure q/p run: map (nQ, nP, hGained) -> integer count.
using RunNF = std::map<std::array<long, 3>, Integer>;
using RunMemo = std::map<Word, RunNF, WordLess>;

// Single-step rewriting of the leftmost p·q descent, memoized per word.
// Each step applies p q -> q p + h; both branches strictly reduce the
// inversion count, so recursion terminates.
const RunNF& normalize_run(const Word& w, RunMemo& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;

    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w.letters[i].kind == Generator::Kind::P &&
            w.letters[i + 1].kind == Generator::Kind::Q) {
            pos = i;
            break;
        }
    }

    RunNF nf;
    if (pos == w.size()) {
        long n = 0, m = 0;
        for (const auto& g : w.letters)
            (g.kind == Generator::Kind::Q ? n : m) += 1;
        nf[{n, m, 0}] = 1;
    } else {
        Word swapped = w;
        std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
        Word dropped = w;
        dropped.letters.erase(dropped.letters.begin() + static_cast<long>(pos),
                              dropped.letters.begin() + static_cast<long>(pos) + 2);
        nf = normalize_run(swapped, memo);
        const RunNF& dropped_nf = normalize_run(dropped, memo);
        for (const auto& [key, c] : dropped_nf)
            nf[{key[0], key[1], key[2] + 1}] += c;
    }
    auto [it, ok] = memo.emplace(w, std::move(nf));
    return it->second;
}

struct Partial {
    Word word;
    long h_gain = 0;
    Integer count = 1;
};

}  // namespace

OperatorPoly normalize(const std::vector<Term>& raw) {
    OperatorPoly out;
    RunMemo memo;

    for (const Term& t : raw) {
        if (sgn(t.coeff) == 0) continue;

        std::vector<Partial> partials{Partial{}};
        Word run;
        auto flush_run = [&]() {
            if (run.empty()) return;
            const RunNF& nf = normalize_run(run, memo);
            std::vector<Partial> next;
            next.reserve(partials.size() * nf.size());
            for (const auto& part : partials) {
                for (const auto& [key, c] : nf) {
                    Partial np = part;
                    for (long i = 0; i < key[0]; ++i)
                        np.word.letters.push_back(Generator::q());
                    for (long i = 0; i < key[1]; ++i)
                        np.word.letters.push_back(Generator::p());
                    np.h_gain += key[2];
                    np.count *= c;
                    next.push_back(std::move(np));
                }
            }
            partials = std::move(next);
            run.letters.clear();
        };

        for (const auto& g : t.word.letters) {
            if (g.is_atom()) {
                flush_run();
                for (auto& part : partials) part.word.letters.push_back(g);
            } else {
                run.letters.push_back(g);
            }
        }
        flush_run();

        for (auto& part : partials)
            out.add_canonical(t.coeff * Rational(part.count), t.h_exp + part.h_gain,
                              std::move(part.word));
    }
    return out;
}

OperatorPoly normalize(const Term& raw) { return normalize(std::vector<Term>{raw}); }

OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b) {
    std::vector<Term> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Word w = ka.word;
            w.letters.insert(w.letters.end(), kb.word.letters.begin(),
                             kb.word.letters.end());
            raw.emplace_back(ca * cb, ka.h_exp + kb.h_exp, std::move(w));
        }
    }
    return normalize(raw);
}

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
    return multiply(a, b) - multiply(b, a);
}

OperatorPoly hermitian_adjoint(const OperatorPoly& a) {
    std::vector<Term> raw;
    raw.reserve(a.terms().size());
    for (const auto& [key, c] : a.terms()) {
        Word rev = key.word;
        std::reverse(rev.letters.begin(), rev.letters.end());
        for (const auto& g : rev.letters) {
            if (g.is_atom() && g.atom_class != AtomClass::State)
                throw PreconditionError(
                    "hermitian adjoint undefined for derivative atoms");
        }
        Rational c2 = (key.h_exp % 2 == 0) ? c : -c;
        raw.emplace_back(std::move(c2), key.h_exp, std::move(rev));
    }
    return normalize(raw);
}

OperatorPoly substitute_atom(const OperatorPoly& a, const Generator& which,
                             const OperatorPoly& replacement) {
    OperatorPoly out;
    for (const auto& [key, c] : a.terms()) {
        OperatorPoly piece;
        piece.add_canonical(c, key.h_exp, Word{});
        Word chunk;
        auto flush_chunk = [&]() {
            if (chunk.empty()) return;
            OperatorPoly w;
            w.add_canonical(1, 0, std::move(chunk));
            chunk = Word{};
            piece = multiply(piece, w);
        };
        for (const auto& g : key.word.letters) {
            if (g.is_atom() && g == which) {
                flush_chunk();
                piece = multiply(piece, replacement);
            } else {
                chunk.letters.push_back(g);
            }
        }
        flush_chunk();
        out += piece;
    }
    return out;
}

}  // namespace weyl
