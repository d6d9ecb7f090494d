// GL_q(N) structure constants: braiding axioms, epsilon tensor (closed form
// against kernel solve), quantum trace, and the classical q = 1 limits.
#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qch/qstruct.hpp"

using namespace qch;

namespace {

TensorOp<Rat> at_q(const TensorOp<LaurentPoly>& op, const Rat& q0) {
    return op.map_coeffs<Rat>([&](const LaurentPoly& c) { return c.eval(q0); });
}

CoTensor<Rat> at_q(const CoTensor<LaurentPoly>& v, const Rat& q0) {
    return v.map_coeffs<Rat>([&](const LaurentPoly& c) { return c.eval(q0); });
}

}  // namespace

TEST_CASE("rhat entries at N=2") {
    RHat rh = RHat::build(2);
    const auto& op = rh.op();
    CHECK(op.entries().size() == 5);
    CHECK(op.entry({1, 1}, {1, 1}) == LaurentPoly::q_power(1));
    CHECK(op.entry({2, 2}, {2, 2}) == LaurentPoly::q_power(1));
    CHECK(op.entry({2, 1}, {1, 2}).is_one());
    CHECK(op.entry({1, 2}, {2, 1}).is_one());
    CHECK(op.entry({1, 2}, {1, 2}) == LaurentPoly::lambda());
}

TEST_CASE("braiding axioms hold exactly for N = 2..5") {
    for (int N = 2; N <= 5; ++N) {
        DYNAMIC_SECTION("N=" << N) {
            RHat rh = RHat::build(N);  // construction enforces YBE, Hecke, eps invariants
            auto id2 = TensorOp<LaurentPoly>::identity(N, 2);
            CHECK(compose(rh.op(), rh.op()) - rh.op().scaled_left(LaurentPoly::lambda()) - id2 ==
                  TensorOp<LaurentPoly>(N, 2));
            auto r1 = embed(rh.op(), 1, 3);
            auto r2 = embed(rh.op(), 2, 3);
            CHECK(compose(compose(r1, r2), r1) == compose(compose(r2, r1), r2));
            // inverse from the Hecke condition
            CHECK(compose(rh.op(), rh.inverse_op()) == id2);
        }
    }
}

TEST_CASE("epsilon tensor") {
    SECTION("closed form entries") {
        auto e2 = EpsilonTensor::closed_form(2);
        CHECK(e2.tensor().entry({1, 2}).is_one());
        CHECK(e2.tensor().entry({2, 1}) == LaurentPoly::monomial(Int(-1), 1));
        auto e3 = EpsilonTensor::closed_form(3);
        CHECK(e3.tensor().entry({3, 2, 1}) == LaurentPoly::monomial(Int(-1), 3));
        CHECK(e3.tensor().entry({1, 1, 2}).is_zero());
        CHECK(e3.tensor().entries().size() == 6);
    }

    SECTION("eigenrelation on both contraction sides, N = 2..4") {
        for (int N = 2; N <= 4; ++N) {
            RHat rh = RHat::build(N);
            auto eps = EpsilonTensor::closed_form(N).tensor();
            LaurentPoly minus_qinv = LaurentPoly::monomial(Int(-1), -1);
            for (int i = 1; i <= N - 1; ++i) {
                auto ri = embed(rh.op(), i, N);
                CHECK(contract_left(eps, ri) == eps.scaled_left(minus_qinv));
                CHECK(contract_right(ri, eps) == eps.scaled_left(minus_qinv));
            }
        }
    }

    SECTION("norm |eps|^2 = q^{N(N-1)/2} N_q!, N = 2..4") {
        for (int N = 2; N <= 4; ++N) {
            auto eps = EpsilonTensor::closed_form(N);
            CHECK(eps.self_pairing() == EpsilonTensor::norm_formula(N));
        }
        CHECK(EpsilonTensor::closed_form(2).self_pairing() ==
              LaurentPoly::parse("1*q^0 + 1*q^2"));
    }

    SECTION("P_+ annihilates eps") {
        for (int N = 2; N <= 3; ++N) {
            RHat rh = RHat::build(N);
            auto eps_rf = EpsilonTensor::closed_form(N).tensor().map_coeffs<RatFunc>(
                [](const LaurentPoly& c) { return RatFunc(c); });
            for (int i = 1; i <= N - 1; ++i) {
                auto p = embed(rh.p_plus(), i, N);
                CHECK(contract_left(eps_rf, p).is_zero());
            }
        }
    }
}

TEST_CASE("solve_eps cross-validates the closed form") {
    for (int N = 2; N <= 4; ++N) {
        DYNAMIC_SECTION("N=" << N) {
            RHat rh = RHat::build(N);
            CHECK(eps_kernel_dimension(rh) == 1);
            auto solved = solve_eps(rh);  // throws unless kernel is 1-dim and matches
            CHECK(solved.tensor() == EpsilonTensor::closed_form(N).tensor());
        }
    }
}

TEST_CASE("quantum trace") {
    auto lift = [](const LaurentPoly& c) { return c; };

    SECTION("Tr_q(1) = N_q") {
        for (int N = 2; N <= 4; ++N) {
            DMatrix d(N);
            auto id = TensorOp<LaurentPoly>::identity(N, 1);
            CHECK(qtrace(id, d, lift) == qnum(N));
        }
    }

    SECTION("D entries and trace") {
        DMatrix d(3);
        CHECK(d.at(1) == LaurentPoly::q_power(-2));
        CHECK(d.at(2) == LaurentPoly::one());
        CHECK(d.at(3) == LaurentPoly::q_power(2));
    }

    SECTION("q-trace of R-hat over leg 2 is q^N times the identity") {
        for (int N = 2; N <= 3; ++N) {
            RHat rh = RHat::build(N);
            DMatrix d(N);
            auto traced = qtrace_leg(rh.op(), 2, d, lift);
            CHECK(traced ==
                  TensorOp<LaurentPoly>::identity(N, 1).scaled_left(LaurentPoly::q_power(N)));
        }
    }
}

TEST_CASE("classical limit q = 1") {
    for (int N = 2; N <= 3; ++N) {
        DYNAMIC_SECTION("N=" << N) {
            RHat rh = RHat::build(N);
            // R-hat becomes the permutation operator
            TensorOp<Rat> perm(N, 2);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) perm.add_entry(MultiIndex{j, i}, MultiIndex{i, j}, Rat(1));
            CHECK(at_q(rh.op(), Rat(1)) == perm);

            // eps becomes the classical Levi-Civita tensor
            auto eps1 = at_q(EpsilonTensor::closed_form(N).tensor(), Rat(1));
            auto perm_idx = MultiIndex(size_t(N));
            std::iota(perm_idx.begin(), perm_idx.end(), 1);
            do {
                int sign = detail::inversion_count(perm_idx) % 2 == 0 ? 1 : -1;
                CHECK(eps1.entry(perm_idx) == Rat(sign));
            } while (std::next_permutation(perm_idx.begin(), perm_idx.end()));

            // D becomes the identity
            DMatrix d(N);
            for (int a = 1; a <= N; ++a) CHECK(d.at(a).eval(Rat(1)) == Rat(1));
        }
    }
}

TEST_CASE("degenerate N = 1 structure") {
    RHat rh = RHat::build(1);
    CHECK(rh.op().entry({1, 1}, {1, 1}) == LaurentPoly::q_power(1));
    auto eps = EpsilonTensor::closed_form(1);
    CHECK(eps.tensor().entry({1}).is_one());
    CHECK(eps.self_pairing().is_one());
}
