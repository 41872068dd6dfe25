#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "weyl/symmetrize.hpp"

using namespace weyl;
using namespace testsupport;

namespace {

// Frozen by expanding the six arrangements of q^2 p^2 with the brute
// rewriter and averaging: S(q^2 p^2) = q^2 p^2 + 2 q p h + 1/2 h^2.
OperatorPoly s_q2p2() {
    return OperatorPoly::monomial(1, 2, 2) + OperatorPoly::monomial(2, 1, 1, 1) +
           OperatorPoly::monomial(make_rational(1, 2), 0, 0, 2);
}

OperatorPoly dirac_qp() {
    return OperatorPoly::monomial(1, 1, 1) +
           OperatorPoly::monomial(make_rational(1, 2), 0, 0, 1);
}

}  // namespace

TEST_CASE("arrangements: counts and canonical order") {
    auto two = arrangements({1, 1, std::nullopt});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == word_of("qp"));
    CHECK(two[1] == word_of("pq"));

    auto six = arrangements({2, 2, std::nullopt});
    REQUIRE(six.size() == 6);
    CHECK(six[0] == word_of("qqpp"));
    CHECK(six[1] == word_of("qpqp"));
    CHECK(six[2] == word_of("qppq"));
    CHECK(six[3] == word_of("pqqp"));
    CHECK(six[4] == word_of("pqpq"));
    CHECK(six[5] == word_of("ppqq"));

    auto with_atom =
        arrangements({1, 1, Generator::atom(AtomClass::DpState, "rho")});
    CHECK(with_atom.size() == 6);

    CHECK(arrangements({0, 0, std::nullopt}).size() == 1);

    // Multinomial count on a bigger spec.
    auto big = arrangements({3, 2, Generator::atom(AtomClass::DqState, "rho")});
    CHECK(big.size() == 60);  // 6!/(3! 2! 1!)
}

TEST_CASE("symmetrize: golden cases") {
    CHECK(symmetrize(normalize(term_of(1, 0, "qp"))) == dirac_qp());
    CHECK(symmetrize(normalize(term_of(1, 0, "qqpp"))) == s_q2p2());
    // Any h factor kills the term.
    CHECK(symmetrize(normalize(term_of(1, 1, "q"))) == OperatorPoly::zero());
    for (long n = 0; n <= 5; ++n) {
        OperatorPoly qn = OperatorPoly::monomial(1, n, 0);
        CHECK(symmetrize(qn) == qn);
    }
}

TEST_CASE("symmetrize: S(q^2 p^2) equals the brute-oracle average of the six words") {
    std::vector<Term> six = {term_of(make_rational(1, 6), 0, "qqpp"),
                             term_of(make_rational(1, 6), 0, "qpqp"),
                             term_of(make_rational(1, 6), 0, "qppq"),
                             term_of(make_rational(1, 6), 0, "pqqp"),
                             term_of(make_rational(1, 6), 0, "pqpq"),
                             term_of(make_rational(1, 6), 0, "ppqq")};
    RawMap averaged = brute_normalize(six);
    CHECK(raw_equals_poly(averaged, s_q2p2()));
}

TEST_CASE("symmetrize: state atoms pass through at word boundaries") {
    OperatorPoly left = normalize(term_of(1, 0, "rqp"));
    OperatorPoly right = normalize(term_of(1, 0, "qpr"));
    CHECK(symmetrize(left) == left);
    CHECK(symmetrize(right) == right);
    // Raw boundary words normalize inside the q/p run.
    CHECK(symmetrize({term_of(1, 0, "pqr")}) == normalize(term_of(1, 0, "pqr")));
}

TEST_CASE("symmetrize: derivative atom averages over three-letter arrangements") {
    // S(dp(rho) * q) = 1/2 (q dp(rho) + dp(rho) q).
    OperatorPoly got = symmetrize({term_of(1, 0, "eq")});
    OperatorPoly expected = normalize(
        {term_of(make_rational(1, 2), 0, "qe"), term_of(make_rational(1, 2), 0, "eq")});
    CHECK(got == expected);
    // h kills derivative-atom terms too.
    CHECK(symmetrize({term_of(1, 1, "eq")}) == OperatorPoly::zero());
}

TEST_CASE("symmetrize: undefined shapes raise errors") {
    CHECK_THROWS_AS(symmetrize({term_of(1, 0, "rr")}), PreconditionError);
    CHECK_THROWS_AS(symmetrize({term_of(1, 0, "qrd")}), PreconditionError);
    CHECK_THROWS_AS(symmetrize({term_of(1, 0, "qrp")}), PreconditionError);
}

TEST_CASE("sym_product: golden cases and composition") {
    OperatorPoly q = OperatorPoly::q(), p = OperatorPoly::p();
    CHECK(sym_product(q, p) == dirac_qp());

    OperatorPoly q2 = OperatorPoly::monomial(1, 2, 0);
    OperatorPoly p2 = OperatorPoly::monomial(1, 0, 2);
    CHECK(sym_product(q2, p2) == s_q2p2());

    OperatorPoly qp_sym = sym_product(q, p);
    CHECK(sym_product(qp_sym, qp_sym) == sym_product(q2, p2));

    // h x ∘ y = 0 under the total extension.
    CHECK(sym_product(multiply(OperatorPoly::h(), q), p) == OperatorPoly::zero());
}

TEST_CASE("weyl_order: golden cases") {
    CHECK(weyl_order(1, 1) == dirac_qp());
    CHECK(weyl_order(2, 2) == s_q2p2());
    for (long m = 0; m <= 4; ++m)
        CHECK(weyl_order(0, m) == OperatorPoly::monomial(1, 0, m));
}

TEST_CASE("weyl_closed_form and alpha: golden cases") {
    CHECK(weyl_closed_form(2, 2) == s_q2p2());
    CHECK(weyl_closed_form(1, 1) == dirac_qp());
    for (long n = 0; n <= 5; ++n)
        CHECK(weyl_closed_form(n, 0) == OperatorPoly::monomial(1, n, 0));

    CHECK(alpha(3, 5, 0) == 1);
    CHECK(alpha(2, 2, 1) == 2);
    CHECK(alpha(2, 2, 2) == make_rational(1, 2));
    CHECK(alpha(2, 2, 3) == 0);
    CHECK(alpha(4, 1, 2) == 0);
}

TEST_CASE("pq_normal_expand: closed form against the rewrite route") {
    CHECK(pq_normal_expand(1, 1) ==
          OperatorPoly::monomial(1, 1, 1) + OperatorPoly::h());
    // (m, 1): q p^m + m p^(m-1) h.
    for (long m = 1; m <= 6; ++m) {
        OperatorPoly expected = OperatorPoly::monomial(1, 1, m) +
                                OperatorPoly::monomial(m, 0, m - 1, 1);
        CHECK(pq_normal_expand(m, 1) == expected);
    }
    CHECK(pq_normal_expand(2, 2) ==
          OperatorPoly::monomial(1, 2, 2) + OperatorPoly::monomial(4, 1, 1, 1) +
              OperatorPoly::monomial(2, 0, 0, 2));

    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= 6; ++m) {
            Word w;
            for (long i = 0; i < m; ++i) w.letters.push_back(Generator::p());
            for (long i = 0; i < n; ++i) w.letters.push_back(Generator::q());
            CHECK(pq_normal_expand(m, n) == normalize(Term(1, 0, w)));
        }
}

TEST_CASE("check_identity: golden cases and range errors") {
    auto r1 = check_identity("id1", {{"n", 4}, {"k", 2}});
    CHECK(r1.holds);
    CHECK(r1.rhs == 10);

    for (long n = 0; n <= 8; ++n) {
        auto r2 = check_identity("id2", {{"n", n}, {"j", 0}});
        CHECK(r2.holds);
        CHECK(r2.lhs == pow2(n));
    }

    auto r3 = check_identity("L52-i1", {{"n", 2}, {"m", 1}});
    CHECK(r3.holds);
    CHECK(r3.lhs == 6);

    CHECK(check_identity("L52-i2", {{"n", 3}, {"m", 2}}).holds);
    CHECK(check_identity("L52-i3", {{"n", 3}, {"m", 2}, {"i", 1}}).holds);
    CHECK(check_identity("L52-i4", {{"n", 3}, {"m", 2}, {"j", 1}}).holds);

    CHECK_THROWS_AS(check_identity("id1", {{"n", 3}, {"k", 4}}), PreconditionError);
    CHECK_THROWS_AS(check_identity("L52-i3", {{"n", 2}, {"m", 1}, {"i", 3}}),
                    PreconditionError);
    CHECK_THROWS_AS(check_identity("nope", {}), PreconditionError);
    CHECK_THROWS_AS(check_identity("id1", {{"n", 3}}), PreconditionError);
}

TEST_CASE("representation independence of S") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 8, i % 2 == 0, true);
        std::vector<Term> raw{Term(make_rational(2, 3), 0, w)};
        CHECK(symmetrize(raw) == symmetrize(normalize(raw)));
    }
}

TEST_CASE("S is idempotent on atom-free input") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        OperatorPoly x = random_poly(rng, 3, 6);
        CHECK(symmetrize(symmetrize(x)) == symmetrize(x));
    }
}

TEST_CASE("sym_product commutes on atom-free operands") {
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        OperatorPoly a = random_poly(rng, 2, 5);
        OperatorPoly b = random_poly(rng, 2, 5);
        CHECK(sym_product(a, b) == sym_product(b, a));
    }
}

TEST_CASE("composition law (q^a ∘ p^b) ∘ (q^c ∘ p^d) = q^(a+c) ∘ p^(b+d)") {
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c)
                for (long d = 0; d <= 3; ++d) {
                    OperatorPoly lhs = sym_product(
                        sym_product(OperatorPoly::monomial(1, a, 0),
                                    OperatorPoly::monomial(1, 0, b)),
                        sym_product(OperatorPoly::monomial(1, c, 0),
                                    OperatorPoly::monomial(1, 0, d)));
                    CHECK(lhs == weyl_closed_form(a + c, b + d));
                }
}

TEST_CASE("three routes agree: S, weyl_order, weyl_closed_form (small grid)") {
    for (long n = 0; n <= 5; ++n)
        for (long m = 0; m <= 5; ++m) {
            OperatorPoly s = symmetrize(OperatorPoly::monomial(1, n, m));
            CHECK(s == weyl_order(n, m));
            CHECK(s == weyl_closed_form(n, m));
        }
}

TEST_CASE("symmetrized monomials are adjoint-invariant") {
    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= 6; ++m) {
            OperatorPoly s = symmetrize(OperatorPoly::monomial(1, n, m));
            CHECK(hermitian_adjoint(s) == s);
        }
}

TEST_CASE("alpha matches the coefficients of S(q^n p^m)") {
    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= 6; ++m) {
            OperatorPoly s = symmetrize(OperatorPoly::monomial(1, n, m));
            for (long j = 0; j <= std::min(n, m); ++j)
                CHECK(s.coeff_of(j, qp_word(n - j, m - j)) == alpha(n, m, j));
        }
}
