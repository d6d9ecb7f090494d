// Numeric oracle: explicit representations at exact rational q, and the
// classical q = 1 cross-check with its worked instance.
#include <catch2/catch_amalgamated.hpp>

#include "qch/oracle.hpp"

using namespace qch;

namespace {
const Rat kQ1(3, 5);
const Rat kQ2(7, 2);
}  // namespace

TEST_CASE("identity representation") {
    for (int N = 2; N <= 3; ++N) {
        for (const Rat& q : {kQ1, kQ2}) {
            DYNAMIC_SECTION("N=" << N << " q=" << q.get_str()) {
                auto rep = Representation::identity_rep(N, q);
                CHECK(rep.re_residual_is_zero());

                // s(i) = q^{1-N} N_q for all i
                Rat s_expect = (qnum(N) * LaurentPoly::q_power(1 - N)).eval(q);
                for (int i = 1; i <= N; ++i) {
                    RatMat s = rep.s_value(i);
                    CHECK(s.at(1, 1) == s_expect);
                }

                // sigma(i) = q^{i(1-N)} qbinom(N, i)
                for (int i = 1; i <= N; ++i) {
                    Rat expect =
                        (qbinom_poly(N, i) * LaurentPoly::q_power(i * (1 - N))).eval(q);
                    CHECK(rep.sigma_value(i).at(1, 1) == expect);
                }

                // Det L = q^{1-N} sigma(N) = q^{1-N^2}
                Rat det = LaurentPoly::q_power(1 - N).eval(q) * rep.sigma_value(N).at(1, 1);
                CHECK(det == LaurentPoly::q_power(1 - N * N).eval(q));

                for (int i = 1; i <= N; ++i) CHECK(rep.newton_value(i).is_zero());
                CHECK(block_is_zero(rep.cayley_value()));
                auto [left, right] = rep.inverse_value();
                CHECK(block_is_zero(left));
                CHECK(block_is_zero(right));
            }
        }
    }
}

TEST_CASE("rsquared representation") {
    for (int N = 2; N <= 3; ++N) {
        for (const Rat& q : {kQ1, kQ2}) {
            DYNAMIC_SECTION("N=" << N << " q=" << q.get_str()) {
                auto rep = Representation::rsquared(N, q);
                CHECK(rep.dim() == N);
                CHECK(rep.re_residual_is_zero());
                for (int i = 1; i <= N; ++i) {
                    INFO("newton i=" << i);
                    CHECK(rep.newton_value(i).is_zero());
                }
                CHECK(block_is_zero(rep.cayley_value()));
                auto [left, right] = rep.inverse_value();
                CHECK(block_is_zero(left));
                CHECK(block_is_zero(right));
            }
        }
    }
}

TEST_CASE("minimal polynomial degree report") {
    CHECK(Representation::identity_rep(2, kQ1).minimal_degree() == 1);
    CHECK(Representation::identity_rep(3, kQ2).minimal_degree() == 1);

    SECTION("rsquared degree never exceeds N") {
        for (int N = 2; N <= 3; ++N) {
            auto rep = Representation::rsquared(N, kQ1);
            int deg = rep.minimal_degree();
            CHECK(deg >= 1);
            CHECK(deg <= N);
        }
    }
}

TEST_CASE("classical check") {
    SECTION("worked instance A = [[1,2],[3,4]]") {
        std::vector<std::vector<Rat>> a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
        auto rep = classical_check_matrix(a);
        REQUIRE(rep.pass);
        CHECK(rep.sigma[1] == 5);
        CHECK(rep.sigma[2] == -2);
        CHECK(rep.s[1] == 5);
        CHECK(rep.s[2] == 29);
        // newton i=2: 2 sigma(2) - s(1) sigma(1) + s(2) = -4 - 25 + 29 = 0
        CHECK(Rat(2) * rep.sigma[2] - rep.s[1] * rep.sigma[1] + rep.s[2] == 0);
    }

    SECTION("A = identity gives binomials and constant traces") {
        for (int N = 2; N <= 4; ++N) {
            std::vector<std::vector<Rat>> a(size_t(N), std::vector<Rat>(size_t(N), Rat(0)));
            for (int i = 0; i < N; ++i) a[size_t(i)][size_t(i)] = 1;
            auto rep = classical_check_matrix(a);
            REQUIRE(rep.pass);
            Rat binom(1);
            for (int i = 1; i <= N; ++i) {
                binom = binom * (N - i + 1) / i;
                CHECK(rep.sigma[size_t(i)] == binom);
                CHECK(rep.s[size_t(i)] == N);
            }
        }
    }

    SECTION("seeded random matrices, N = 2..4") {
        for (int N = 2; N <= 4; ++N) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto rep = classical_check(N, seed);
                INFO("N=" << N << " seed=" << seed << " detail=" << rep.detail);
                CHECK(rep.pass);
            }
        }
    }

    SECTION("determinism: same seed, same report") {
        auto a = classical_check(3, 42);
        auto b = classical_check(3, 42);
        CHECK(a.sigma == b.sigma);
        CHECK(a.s == b.s);
    }
}
