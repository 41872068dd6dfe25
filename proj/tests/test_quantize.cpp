#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "weyl/calculus.hpp"
#include "weyl/quantize.hpp"

using namespace weyl;
using namespace testsupport;

namespace {

ClassicalPoly random_classical(std::mt19937& rng, long max_deg, int terms = 3) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    ClassicalPoly f;
    for (int i = 0; i < terms; ++i) {
        long a = deg(rng);
        long b = deg(rng) % (max_deg - a + 1);
        f.add(random_rational(rng), a, b);
    }
    return f;
}

}  // namespace

TEST_CASE("classical ring: product and bracket basics") {
    ClassicalPoly q = ClassicalPoly::q(), p = ClassicalPoly::p();
    CHECK(c_multiply(q, p) == ClassicalPoly::monomial(1, 1, 1));

    ClassicalPoly sum = q + p, diff = q - p;
    ClassicalPoly expect = ClassicalPoly::monomial(1, 2, 0) -
                           ClassicalPoly::monomial(1, 0, 2);
    CHECK(c_multiply(sum, diff) == expect);

    CHECK(c_multiply(ClassicalPoly::monomial(1, 2, 0),
                     ClassicalPoly::monomial(1, 0, 2)) ==
          ClassicalPoly::monomial(1, 2, 2));

    CHECK(c_poisson(q, p) == ClassicalPoly::constant(1));
    CHECK(c_poisson(ClassicalPoly::monomial(1, 2, 0),
                    ClassicalPoly::monomial(1, 0, 2)) ==
          ClassicalPoly::monomial(4, 1, 1));
    std::mt19937 rng(4);
    ClassicalPoly f = random_classical(rng, 4);
    CHECK(c_poisson(f, f) == ClassicalPoly::zero());
}

TEST_CASE("quantize: golden cases") {
    CHECK(quantize(ClassicalPoly::monomial(1, 1, 1)) == weyl_closed_form(1, 1));
    CHECK(quantize(ClassicalPoly::monomial(1, 2, 2)) ==
          symmetrize(OperatorPoly::monomial(1, 2, 2)));
    CHECK(quantize(ClassicalPoly::constant(1)) == OperatorPoly::identity());
    CHECK(quantize(ClassicalPoly::zero()) == OperatorPoly::zero());

    CHECK_THROWS_AS(quantize(ClassicalPoly::monomial(1, 0, 0, 1)),
                    PreconditionError);
}

TEST_CASE("dequantize: golden cases") {
    // qp = quantize(qp) - 1/2 h quantize(1).
    ClassicalPoly expect = ClassicalPoly::monomial(1, 1, 1) +
                           ClassicalPoly::monomial(make_rational(-1, 2), 0, 0, 1);
    CHECK(dequantize(OperatorPoly::monomial(1, 1, 1)) == expect);

    ClassicalPoly f = ClassicalPoly::monomial(1, 3, 1) -
                      ClassicalPoly::monomial(2, 0, 2);
    CHECK(dequantize(quantize(f)) == f);

    for (long n = 0; n <= 5; ++n)
        CHECK(dequantize(OperatorPoly::monomial(1, n, 0)) ==
              ClassicalPoly::monomial(1, n, 0));

    CHECK_THROWS_AS(dequantize(OperatorPoly::h_power(-1)), PreconditionError);
    CHECK_THROWS_AS(dequantize(OperatorPoly::state_atom()), PreconditionError);
}

TEST_CASE("dequantize rebuilds arbitrary h-graded elements") {
    std::mt19937 rng(52);
    for (int i = 0; i < 40; ++i) {
        OperatorPoly a = random_poly(rng, 3, 6, 2);
        ClassicalPoly coords = dequantize(a);
        OperatorPoly rebuilt;
        for (const auto& [key, c] : coords.terms())
            rebuilt += multiply(weyl_closed_form(key[0], key[1]),
                                OperatorPoly::h_power(key[2]))
                           .scaled(c);
        CHECK(rebuilt == a);
    }
}

TEST_CASE("round trip dequantize ∘ quantize = id up to degree 10") {
    std::mt19937 rng(1123);
    for (int i = 0; i < 30; ++i) {
        ClassicalPoly f = random_classical(rng, 10, 4);
        CHECK(dequantize(quantize(f)) == f);
    }
}

TEST_CASE("check_homomorphism: golden cases") {
    auto r1 = check_homomorphism(ClassicalPoly::monomial(1, 2, 0),
                                 ClassicalPoly::monomial(1, 0, 2));
    CHECK(r1.product_ok);
    CHECK(r1.bracket_ok);
    // Bracket value cross-check: both routes give 4 q p + 2 h.
    OperatorPoly bracket = poisson_sym(quantize(ClassicalPoly::monomial(1, 2, 0)),
                                       quantize(ClassicalPoly::monomial(1, 0, 2)));
    CHECK(bracket ==
          OperatorPoly::monomial(4, 1, 1) + OperatorPoly::monomial(2, 0, 0, 1));

    auto r2 = check_homomorphism(ClassicalPoly::q(), ClassicalPoly::q());
    CHECK(r2.product_ok);
    CHECK(r2.bracket_ok);

    auto r3 = check_homomorphism(ClassicalPoly::monomial(1, 3, 0),
                                 ClassicalPoly::monomial(1, 0, 3));
    CHECK(r3.product_ok);
    CHECK(r3.bracket_ok);
}

TEST_CASE("homomorphism holds for random classical pairs") {
    std::mt19937 rng(65537);
    for (int i = 0; i < 25; ++i) {
        ClassicalPoly f = random_classical(rng, 4);
        ClassicalPoly g = random_classical(rng, 4);
        auto rep = check_homomorphism(f, g);
        CHECK(rep.product_ok);
        CHECK(rep.bracket_ok);
    }
}

TEST_CASE("product homomorphism for monomial pairs up to combined degree 10") {
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; a + b <= 10; ++b)
            for (long c = 0; a + b + c <= 10; ++c)
                for (long d = 0; a + b + c + d <= 10; ++d) {
                    ClassicalPoly f = ClassicalPoly::monomial(1, a, b);
                    ClassicalPoly g = ClassicalPoly::monomial(1, c, d);
                    CHECK(quantize(c_multiply(f, g)) ==
                          sym_product(quantize(f), quantize(g)));
                }
}

TEST_CASE("quantize is linear and injective on monomial content") {
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        ClassicalPoly f = random_classical(rng, 6);
        ClassicalPoly g = random_classical(rng, 6);
        Rational c = random_rational(rng);
        CHECK(quantize(f + g) == quantize(f) + quantize(g));
        CHECK(quantize(f.scaled(c)) == quantize(f).scaled(c));
        // Injectivity via the exact inverse.
        CHECK(dequantize(quantize(f)) == f);
    }
}

TEST_CASE("quantize of real classical polynomials is adjoint-invariant") {
    std::mt19937 rng(3003);
    for (int i = 0; i < 30; ++i) {
        ClassicalPoly f = random_classical(rng, 6);
        OperatorPoly a = quantize(f);
        CHECK(hermitian_adjoint(a) == a);
    }
}
