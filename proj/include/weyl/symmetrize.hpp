#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/algebra.hpp"

namespace weyl {

// Content of a word to symmetrize: q-count, p-count, and at most one
// derivative atom rides along.
struct ArrangementSpec {
    long n_q = 0;
    long n_p = 0;
    std::optional<Generator> atom;  // DqState/DpState letter
};

// All distinct multiset permutations of the given letter content in ascending
// lexicographic order (q < p < atom), each exactly once. The count is the
// multinomial (nQ+nP+a)! / (nQ! nP! a!).
std::vector<Word> arrangements(const ArrangementSpec& spec);

// The symmetrizer S. Per term: pure q/p content averages uniformly over
// its arrangements, any h power kills the term, state atoms at a word
// boundary pass through unchanged, a single derivative atom averages over
// the three-letter-class arrangements. Linear across terms.
OperatorPoly symmetrize(const OperatorPoly& a);
OperatorPoly symmetrize(const std::vector<Term>& raw);

// a ∘ b = S(a·b).
OperatorPoly sym_product(const OperatorPoly& a, const OperatorPoly& b);

// 2^-n * sum_k C(n,k) q^(n-k) p^m q^k, rewritten to normal form.
OperatorPoly weyl_order(long n, long m);

// sum_j alpha(n,m,j) q^(n-j) p^(m-j) h^j, built directly with no rewriting.
OperatorPoly weyl_closed_form(long n, long m);

// PBW coordinate of a Weyl-ordered monomial:
// value = C(n,j) C(m,j) j! / 2^j, zero when j > min(n,m).
struct WeylCoefficient {
    long n = 0;
    long m = 0;
    long j = 0;
    Rational value;
};

WeylCoefficient weyl_coefficient(long n, long m, long j);
Rational alpha(long n, long m, long j);

// PBW form of p^m q^n by the closed formula sum_k C(n,k) C(m,k) k!
// q^(n-k) p^(m-k) h^k (no rewriting).
OperatorPoly pq_normal_expand(long m, long n);

struct IdentityReport {
    bool holds = false;
    Rational lhs;
    Rational rhs;
};

// Evaluates one of the combinatorial identities {id1, id2, L52-i1, L52-i2,
// L52-i3, L52-i4} at concrete integer parameters, in exact arithmetic.
IdentityReport check_identity(const std::string& name,
                              const std::map<std::string, long>& params);

}  // namespace weyl
