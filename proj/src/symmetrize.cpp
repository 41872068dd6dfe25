#include "weyl/symmetrize.hpp"

#include <algorithm>

namespace weyl {

std::vector<Word> arrangements(const ArrangementSpec& spec) {
    std::vector<Generator> letters;
    letters.reserve(static_cast<std::size_t>(spec.n_q + spec.n_p) + 1);
    for (long i = 0; i < spec.n_q; ++i) letters.push_back(Generator::q());
    for (long i = 0; i < spec.n_p; ++i) letters.push_back(Generator::p());
    if (spec.atom) letters.push_back(*spec.atom);

    auto less = [](const Generator& a, const Generator& b) {
        return generator_cmp(a, b) < 0;
    };
    std::sort(letters.begin(), letters.end(), less);

    std::vector<Word> words;
    do {
        words.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end(), less));
    return words;
}

namespace {

// S applied to one raw term, appended to `raw_out` as unnormalized words.
void symmetrize_term(const Rational& coeff, long h_exp, const Word& word,
                     std::vector<Term>& raw_out) {
    long n_q = 0, n_p = 0;
    std::vector<std::size_t> atom_positions;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Generator& g = word.letters[i];
        if (g.is_atom())
            atom_positions.push_back(i);
        else
            (g.kind == Generator::Kind::Q ? n_q : n_p) += 1;
    }

    if (atom_positions.size() > 1)
        throw PreconditionError("symmetrizer undefined for multi-atom words");

    if (atom_positions.size() == 1) {
        const Generator& atom = word.letters[atom_positions[0]];
        if (atom.atom_class == AtomClass::State) {
            if (atom_positions[0] != 0 && atom_positions[0] != word.size() - 1)
                throw PreconditionError(
                    "symmetrizer undefined for interior state atoms");
            raw_out.emplace_back(coeff, h_exp, word);
            return;
        }
        // Single derivative atom: any position carries the same content.
        if (h_exp > 0) return;
        std::vector<Word> words = arrangements({n_q, n_p, atom});
        Rational avg = coeff / Rational(static_cast<long>(words.size()));
        for (auto& w : words) raw_out.emplace_back(avg, h_exp, std::move(w));
        return;
    }

    if (h_exp > 0) return;
    std::vector<Word> words = arrangements({n_q, n_p, std::nullopt});
    Rational avg = coeff / Rational(static_cast<long>(words.size()));
    for (auto& w : words) raw_out.emplace_back(avg, h_exp, std::move(w));
}

}  // namespace

OperatorPoly symmetrize(const std::vector<Term>& raw) {
    std::vector<Term> out;
    for (const Term& t : raw) {
        if (sgn(t.coeff) == 0) continue;
        symmetrize_term(t.coeff, t.h_exp, t.word, out);
    }
    return normalize(out);
}

OperatorPoly symmetrize(const OperatorPoly& a) {
    std::vector<Term> out;
    for (const auto& [key, c] : a.terms())
        symmetrize_term(c, key.h_exp, key.word, out);
    return normalize(out);
}

OperatorPoly sym_product(const OperatorPoly& a, const OperatorPoly& b) {
    return symmetrize(multiply(a, b));
}

OperatorPoly weyl_order(long n, long m) {
    std::vector<Term> raw;
    Rational scale = pow2(-n);
    for (long k = 0; k <= n; ++k) {
        Word w;
        w.letters.reserve(static_cast<std::size_t>(n + m));
        for (long i = 0; i < n - k; ++i) w.letters.push_back(Generator::q());
        for (long i = 0; i < m; ++i) w.letters.push_back(Generator::p());
        for (long i = 0; i < k; ++i) w.letters.push_back(Generator::q());
        raw.emplace_back(scale * Rational(binomial(n, k)), 0, std::move(w));
    }
    return normalize(raw);
}

OperatorPoly weyl_closed_form(long n, long m) {
    OperatorPoly r;
    for (long j = 0; j <= std::min(n, m); ++j) {
        WeylCoefficient c = weyl_coefficient(n, m, j);
        r.add_canonical(c.value, c.j, qp_word(n - c.j, m - c.j));
    }
    return r;
}

WeylCoefficient weyl_coefficient(long n, long m, long j) {
    WeylCoefficient c{n, m, j, 0};
    if (j >= 0 && j <= std::min(n, m))
        c.value =
            Rational(binomial(n, j) * binomial(m, j) * factorial(j)) * pow2(-j);
    return c;
}

Rational alpha(long n, long m, long j) { return weyl_coefficient(n, m, j).value; }

OperatorPoly pq_normal_expand(long m, long n) {
    OperatorPoly r;
    for (long k = 0; k <= std::min(n, m); ++k)
        r.add_canonical(Rational(binomial(n, k) * binomial(m, k) * factorial(k)),
                        k, qp_word(n - k, m - k));
    return r;
}

namespace {

long require_param(const std::map<std::string, long>& params,
                   const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw PreconditionError("identity check missing parameter '" + key + "'");
    return it->second;
}

void require(bool cond, const char* what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace

IdentityReport check_identity(const std::string& name,
                              const std::map<std::string, long>& params) {
    IdentityReport rep;
    if (name == "id1") {
        long n = require_param(params, "n"), k = require_param(params, "k");
        require(n >= 0 && k >= 0 && k <= n, "id1 requires 0 <= k <= n");
        rep.lhs = Rational(binomial(n, k) + binomial(n, k - 1));
        rep.rhs = Rational(binomial(n + 1, k));
    } else if (name == "id2") {
        long n = require_param(params, "n"), j = require_param(params, "j");
        require(n >= 0 && j >= 0, "id2 requires n >= 0 and j >= 0");
        Integer lhs = 0;
        for (long k = 0; k <= n; ++k)
            lhs += binomial(n, k) * binomial(k, j) * factorial(j);
        rep.lhs = Rational(lhs);
        rep.rhs = pow2(n - j) * Rational(falling_factorial(n, j));
    } else if (name == "L52-i1") {
        long n = require_param(params, "n"), m = require_param(params, "m");
        require(n >= 0 && m >= 0, "L52-i1 requires n, m >= 0");
        Integer lhs = 0;
        for (long k = 0; k <= n; ++k) lhs += binomial(n + m - k, m);
        rep.lhs = Rational(lhs);
        rep.rhs = Rational(binomial(n + m + 1, n));
    } else if (name == "L52-i2") {
        long n = require_param(params, "n"), m = require_param(params, "m");
        require(n >= 0 && m >= 0, "L52-i2 requires n, m >= 0");
        Integer lhs = 0;
        for (long k = 1; k <= n; ++k) lhs += Integer(k) * binomial(n + m - k, m);
        rep.lhs = Rational(lhs);
        rep.rhs = Rational(binomial(n + m + 1, n - 1));
    } else if (name == "L52-i3") {
        long n = require_param(params, "n"), m = require_param(params, "m");
        long i = require_param(params, "i");
        require(n >= 0 && m >= 0 && i >= 0 && i <= n,
                "L52-i3 requires n, m >= 0 and 0 <= i <= n");
        Integer lhs = 0;
        for (long k = i; k <= n; ++k) lhs += binomial(k, i) * binomial(m + k, m);
        rep.lhs = Rational(lhs);
        rep.rhs = Rational(binomial(n + m + 1, n) * binomial(n, i)) *
                  make_rational(m + 1, m + 1 + i);
    } else if (name == "L52-i4") {
        long n = require_param(params, "n"), m = require_param(params, "m");
        long j = require_param(params, "j");
        require(n >= 0 && m >= 0 && j >= 0,
                "L52-i4 requires n, m, j >= 0");
        Rational lhs = 0;
        for (long k = 0; k <= n; ++k) {
            Rational inner = alpha(n - k, m, j + 1) +
                             Rational(n - k - j) * alpha(n - k, m, j);
            lhs += Rational(binomial(n - k + m, m)) * inner;
        }
        rep.lhs = lhs;
        // The lower index is n, not m: only C(m+n+1, n) matches both the
        // uniform-average prefactor this sum regularizes and the i3 route
        // through the summation; the two agree for n = m only.
        rep.rhs = Rational(binomial(m + n + 1, n)) * alpha(n, m + 1, j + 1);
    } else {
        throw PreconditionError("unknown identity '" + name + "'");
    }
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace weyl
