// Exact coefficient arithmetic: Laurent polynomials, rational functions,
// q-numbers. Derived expectations are computed by independent oracles
// (hand expansion, the Pascal q-recurrence) and frozen here.
#include <catch2/catch_amalgamated.hpp>

#include "qch/qnumbers.hpp"

using namespace qch;

namespace {

LaurentPoly from_terms(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

// independent oracle: Gaussian binomial by the Pascal q-recurrence
// qbinom(n,k) = q^k qbinom(n-1,k) + q^{k-n} qbinom(n-1,k-1)
LaurentPoly pascal_qbinom(long n, long k) {
    if (k == 0 || k == n) return LaurentPoly::one();
    return LaurentPoly::q_power(int(k)) * pascal_qbinom(n - 1, k) +
           LaurentPoly::q_power(int(k - n)) * pascal_qbinom(n - 1, k - 1);
}

}  // namespace

TEST_CASE("LaurentPoly basics") {
    LaurentPoly q = LaurentPoly::q_power(1);
    CHECK(LaurentPoly::zero().is_zero());
    CHECK(LaurentPoly::one().is_one());
    CHECK((q - q).is_zero());

    SECTION("no stored zero coefficients") {
        LaurentPoly p = q + LaurentPoly::q_power(-1);
        p.add_term(1, Int(-1));
        CHECK(p == LaurentPoly::q_power(-1));
        CHECK(p.terms().size() == 1);
    }

    SECTION("multiplication is exact") {
        LaurentPoly lam = LaurentPoly::lambda();
        CHECK(lam * lam == from_terms({{2, 1}, {0, -2}, {-2, 1}}));
    }

    SECTION("div_exact inverts multiplication") {
        LaurentPoly a = from_terms({{3, 2}, {0, -5}, {-2, 7}});
        LaurentPoly b = from_terms({{1, 3}, {-1, -1}});
        CHECK(LaurentPoly::div_exact(a * b, b) == a);
        CHECK_THROWS_AS(LaurentPoly::div_exact(a + LaurentPoly::one(), b * b),
                        std::domain_error);
        CHECK_THROWS_AS(LaurentPoly::div_exact(a, LaurentPoly::zero()), std::domain_error);
    }

    SECTION("canonical text round-trip") {
        LaurentPoly p = from_terms({{-1, -1}, {3, 1}});
        CHECK(p.text() == "-1*q^-1 + 1*q^3");
        CHECK(LaurentPoly::parse(p.text()) == p);
        CHECK(LaurentPoly::zero().text() == "0");
        CHECK(LaurentPoly::parse("0").is_zero());
    }
}

TEST_CASE("qnum") {
    CHECK(qnum(0).is_zero());
    CHECK(qnum(1).is_one());
    CHECK(qnum(2) == from_terms({{1, 1}, {-1, 1}}));

    SECTION("defining identity p_q (q - 1/q) = q^p - q^-p") {
        for (long p = -6; p <= 6; ++p) {
            CHECK(qnum(p) * LaurentPoly::lambda() ==
                  LaurentPoly::q_power(int(p)) - LaurentPoly::q_power(int(-p)));
        }
    }

    SECTION("antisymmetry") {
        for (long p = 0; p <= 6; ++p) CHECK(qnum(-p) == -qnum(p));
    }
}

TEST_CASE("qfact") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(2) == from_terms({{1, 1}, {-1, 1}}));
    // hand expansion of (q + 1/q)(q^2 + 1 + 1/q^2)
    CHECK(qfact(3) == from_terms({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    CHECK_THROWS_AS(qfact(-1), std::invalid_argument);
}

TEST_CASE("qbinom") {
    CHECK(qbinom(5, 0).is_one());
    CHECK(qbinom(2, 1) == RatFunc(qnum(2)));
    // frozen from the Pascal oracle: [4 2] = q^4 + q^2 + 2 + q^-2 + q^-4
    LaurentPoly expect42 = from_terms({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}});
    CHECK(qbinom_poly(4, 2) == expect42);
    CHECK(pascal_qbinom(4, 2) == expect42);

    SECTION("reduces to a Laurent polynomial and matches the Pascal oracle") {
        for (long n = 0; n <= 6; ++n) {
            for (long k = 0; k <= n; ++k) {
                RatFunc b = qbinom(n, k);
                REQUIRE(b.is_poly());
                CHECK(b.as_poly() == pascal_qbinom(n, k));
            }
        }
    }

    SECTION("symmetry in k and under q -> 1/q") {
        for (long n = 0; n <= 6; ++n) {
            for (long k = 0; k <= n; ++k) {
                CHECK(qbinom_poly(n, k) == qbinom_poly(n, n - k));
                CHECK(qbinom_poly(n, k).subst_qinv() == qbinom_poly(n, k));
            }
        }
    }

    SECTION("out of range is invalid input") {
        CHECK_THROWS_AS(qbinom(4, -1), std::invalid_argument);
        CHECK_THROWS_AS(qbinom(4, 5), std::invalid_argument);
    }
}

TEST_CASE("RatFunc canonical form") {
    RatFunc half(LaurentPoly::one(), LaurentPoly(2));
    CHECK(half + half == RatFunc::one());

    SECTION("normalization is canonical") {
        // q/(q^2+1) built three different ways
        LaurentPoly q = LaurentPoly::q_power(1);
        LaurentPoly den = from_terms({{2, 1}, {0, 1}});
        RatFunc a(q, den);
        RatFunc b(q * LaurentPoly(-3), den * LaurentPoly(-3));
        RatFunc c(LaurentPoly::one(), from_terms({{1, 1}, {-1, 1}}));
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a.den() == den);
        CHECK(a.den().low() == 0);
        CHECK(a.den().lead() > 0);
    }

    SECTION("gcd of num and den is a unit") {
        RatFunc f(qfact(4), qfact(2) * qfact(2) * LaurentPoly::q_power(5));
        CHECK(f == RatFunc(qbinom_poly(4, 2)) * RatFunc::q_power(-5));
    }

    SECTION("den = 1 embeds LaurentPoly losslessly") {
        RatFunc f(qnum(3));
        CHECK(f.is_poly());
        CHECK(f.as_poly() == qnum(3));
    }

    SECTION("zero denominator rejected") {
        CHECK_THROWS_AS(RatFunc(LaurentPoly::one(), LaurentPoly::zero()), std::domain_error);
        CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), std::domain_error);
    }

    SECTION("field arithmetic") {
        RatFunc x(qnum(2)), y(qnum(3), qnum(5));
        CHECK((x + y) - y == x);
        CHECK((x * y) / y == x);
        CHECK(x - x == RatFunc::zero());
    }

    SECTION("text round-trip") {
        RatFunc f(qnum(3), qnum(2) * LaurentPoly::q_power(1));
        CHECK(RatFunc::parse(f.text()) == f);
        CHECK(RatFunc::parse(RatFunc(qnum(2)).text()) == RatFunc(qnum(2)));
    }
}

TEST_CASE("eval_at") {
    SECTION("pointwise values") {
        CHECK(RatFunc(qnum(2)).eval(Rat(2)) == Rat(5, 2));
        CHECK(RatFunc(qnum(3)).eval(Rat(1)) == Rat(3));
    }

    SECTION("vanishing denominator is rejected and named") {
        // 1/2_q at a primitive 4th root of unity behaviour: q0 with q0 + 1/q0 = 0
        // has no rational witness, so use the polynomial q^2 + 1 directly
        RatFunc f(LaurentPoly::one(), LaurentPoly::parse("1*q^0 + 1*q^2"));
        CHECK_THROWS_WITH(f.eval(Rat(0)), Catch::Matchers::ContainsSubstring("nonzero"));
        RatFunc g(LaurentPoly::one(), LaurentPoly::parse("-1*q^0 + 1*q^1"));
        CHECK_THROWS_WITH(g.eval(Rat(1)), Catch::Matchers::ContainsSubstring("vanishes"));
        // happy path: k_q/k_q at q0 = 1
        RatFunc h(qnum(2), qnum(2));
        CHECK(h.eval(Rat(1)) == Rat(1));
    }

    SECTION("eval is a ring homomorphism on a finite sample") {
        std::vector<RatFunc> sample = {RatFunc(qnum(2)), RatFunc(qnum(3), qnum(2)),
                                       RatFunc::q_power(-2),
                                       RatFunc(LaurentPoly(7)) / RatFunc(qnum(5))};
        std::vector<Rat> points = {Rat(3, 5), Rat(7, 2), Rat(-2, 3)};
        for (const Rat& q0 : points) {
            for (const auto& f : sample) {
                for (const auto& g : sample) {
                    CHECK((f + g).eval(q0) == f.eval(q0) + g.eval(q0));
                    CHECK((f * g).eval(q0) == f.eval(q0) * g.eval(q0));
                }
            }
        }
    }
}
