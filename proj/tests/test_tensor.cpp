// Sparse tensor engine. Composition and embedding are checked against a dense
// brute-force index-sum oracle; algebraic laws are property-tested on random
// sparse operators.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qch/qnumbers.hpp"
#include "qch/tensor.hpp"
#include "qch/tensor_io.hpp"

using namespace qch;

namespace {

// dense oracle: multiply two operators by summing over every index triple
template <class R>
TensorOp<R> dense_compose(const TensorOp<R>& a, const TensorOp<R>& b) {
    Index n = index_space_size(a.dim(), a.legs());
    TensorOp<R> r(a.dim(), a.legs());
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            R acc = RingOps<R>::zero();
            for (Index k = 0; k < n; ++k) {
                auto ita = a.entries().find({i, k});
                auto itb = b.entries().find({k, j});
                if (ita != a.entries().end() && itb != b.entries().end())
                    acc = acc + ita->second * itb->second;
            }
            r.add_entry(i, j, acc);
        }
    }
    return r;
}

TensorOp<LaurentPoly> random_op(std::mt19937& rng, int dim, int legs, int fill) {
    TensorOp<LaurentPoly> op(dim, legs);
    Index n = index_space_size(dim, legs);
    std::uniform_int_distribution<int> idx(0, int(n) - 1), coeff(-3, 3), expo(-2, 2);
    for (int t = 0; t < fill; ++t)
        op.add_entry(Index(idx(rng)), Index(idx(rng)),
                     LaurentPoly::monomial(Int(coeff(rng)), expo(rng)));
    return op;
}

template <class R>
bool no_stored_zero(const TensorOp<R>& op) {
    for (const auto& [k, v] : op.entries())
        if (RingOps<R>::is_zero(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("multi-index codec") {
    CHECK(encode_index({1, 1, 1}, 3) == 0);
    CHECK(encode_index({1, 2, 3}, 3) == 5);
    CHECK(decode_index(5, 3, 3) == MultiIndex{1, 2, 3});
    for (Index c = 0; c < index_space_size(3, 4); ++c)
        CHECK(encode_index(decode_index(c, 3, 4), 3) == c);
    CHECK_THROWS_AS(encode_index({0, 1}, 2), std::invalid_argument);
}

TEST_CASE("embed") {
    auto id1 = TensorOp<LaurentPoly>::identity(2, 1);
    CHECK(embed(id1, 1, 3) == TensorOp<LaurentPoly>::identity(2, 3));

    SECTION("entries preserved on embedded legs") {
        TensorOp<LaurentPoly> r(2, 2);
        r.add_entry(MultiIndex{1, 2}, MultiIndex{2, 1}, qnum(2));
        auto r2 = embed(r, 2, 3);
        for (int a = 1; a <= 2; ++a) {
            CHECK(r2.entry({a, 1, 2}, {a, 2, 1}) == qnum(2));
            CHECK(r2.entry({a, 1, 2}, {a, 1, 2}).is_zero());
        }
        CHECK(r2.entries().size() == 2);
    }

    SECTION("out-of-range placement") {
        TensorOp<LaurentPoly> r(2, 2);
        CHECK_THROWS_AS(embed(r, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(embed(r, 0, 3), std::invalid_argument);
    }
}

TEST_CASE("compose") {
    std::mt19937 rng(7);

    SECTION("identity is neutral") {
        auto x = random_op(rng, 2, 2, 6);
        auto id = TensorOp<LaurentPoly>::identity(2, 2);
        CHECK(compose(id, x) == x);
        CHECK(compose(x, id) == x);
    }

    SECTION("matches the dense oracle, including embedded products") {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_op(rng, 2, 3, 8);
            auto b = random_op(rng, 2, 3, 8);
            CHECK(compose(a, b) == dense_compose(a, b));
        }
        auto r = random_op(rng, 2, 2, 5);
        auto r1 = embed(r, 1, 3);
        auto r2 = embed(r, 2, 3);
        CHECK(compose(r1, r2) == dense_compose(r1, r2));
    }

    SECTION("associativity on random sparse triples") {
        for (int dim = 2; dim <= 3; ++dim) {
            for (int legs = 1; legs <= 3; ++legs) {
                for (int trial = 0; trial < 5; ++trial) {
                    auto a = random_op(rng, dim, legs, 6);
                    auto b = random_op(rng, dim, legs, 6);
                    auto c = random_op(rng, dim, legs, 6);
                    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
                }
            }
        }
    }

    SECTION("embeds with disjoint supports commute") {
        auto a = random_op(rng, 2, 1, 3);
        auto b = random_op(rng, 2, 2, 5);
        auto ea = embed(a, 1, 3);
        auto eb = embed(b, 2, 3);
        CHECK(compose(ea, eb) == compose(eb, ea));
    }

    SECTION("shape mismatch") {
        TensorOp<LaurentPoly> a(2, 2), b(2, 3);
        CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
    }

    SECTION("no operation stores an explicit zero") {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_op(rng, 2, 2, 8);
            auto b = random_op(rng, 2, 2, 8);
            CHECK(no_stored_zero(compose(a, b)));
            CHECK(no_stored_zero(a + b));
            CHECK(no_stored_zero(a - a));
        }
    }
}

TEST_CASE("contractions") {
    // eps(2) = e_12 - q e_21, entered by hand
    CoTensor<LaurentPoly> eps(2, 2);
    eps.add_entry(MultiIndex{1, 2}, LaurentPoly::one());
    eps.add_entry(MultiIndex{2, 1}, LaurentPoly::monomial(Int(-1), 1));

    SECTION("identity is neutral on both sides") {
        auto id = TensorOp<LaurentPoly>::identity(2, 2);
        CHECK(contract_left(eps, id) == eps);
        CHECK(contract_right(id, eps) == eps);
    }

    SECTION("contract_left composes") {
        std::mt19937 rng(11);
        auto a = random_op(rng, 2, 2, 6);
        auto b = random_op(rng, 2, 2, 6);
        CHECK(contract_left(eps, compose(a, b)) == contract_left(contract_left(eps, a), b));
    }

    SECTION("full pairing") {
        // |eps(2)|^2 = 1 + q^2 = q * 2_q
        CHECK(full_pairing(eps, eps) == LaurentPoly::q_power(1) * qnum(2));
        CoTensor<LaurentPoly> unit(2, 2);
        unit.add_entry(MultiIndex{1, 2}, LaurentPoly::one());
        CHECK(full_pairing(unit, unit).is_one());
    }

    SECTION("partial pairing") {
        // shared = all legs reduces to full_pairing
        auto g_all = partial_pairing(eps, eps, {1, 2});
        REQUIRE(g_all.legs() == 0);
        CHECK(g_all.entry(MultiIndex{}, MultiIndex{}) == full_pairing(eps, eps));

        // shared = none is the outer product
        auto g_none = partial_pairing(eps, eps, {});
        CHECK(g_none.entry({1, 2}, {2, 1}) == LaurentPoly::monomial(Int(-1), 1));

        // shared = leg 2: G^{1,1} = 1, G^{2,2} = q^2, off-diagonals vanish
        auto g = partial_pairing(eps, eps, {2});
        REQUIRE(g.legs() == 1);
        CHECK(g.entry({1}, {1}).is_one());
        CHECK(g.entry({2}, {2}) == LaurentPoly::q_power(2));
        CHECK(g.entry({1}, {2}).is_zero());
        CHECK(g.entry({2}, {1}).is_zero());

        CHECK_THROWS_AS(partial_pairing(eps, eps, {3}), std::invalid_argument);
    }

    SECTION("shape mismatch") {
        CoTensor<LaurentPoly> v(2, 3);
        TensorOp<LaurentPoly> op(2, 2);
        CHECK_THROWS_AS(contract_left(v, op), std::invalid_argument);
        CHECK_THROWS_AS(full_pairing(v, eps), std::invalid_argument);
    }
}

TEST_CASE("operator JSON round-trip") {
    std::mt19937 rng(23);
    SECTION("laurent ring") {
        auto op = random_op(rng, 3, 2, 10);
        std::string s = dump_tensor_op(op);
        auto back = load_tensor_op_laurent(s);
        CHECK(back == op);
        CHECK(dump_tensor_op(back) == s);  // bit-exact
    }
    SECTION("ratfunc ring") {
        TensorOp<RatFunc> op(2, 1);
        op.add_entry(MultiIndex{1}, MultiIndex{2}, RatFunc(qnum(3), qnum(2)));
        op.add_entry(MultiIndex{2}, MultiIndex{2}, RatFunc(LaurentPoly(-4)));
        std::string s = dump_tensor_op(op);
        auto back = load_tensor_op_ratfunc(s);
        CHECK(back == op);
        CHECK(dump_tensor_op(back) == s);
    }
    SECTION("cotensor round-trip") {
        CoTensor<LaurentPoly> eps(2, 2);
        eps.add_entry(MultiIndex{1, 2}, LaurentPoly::one());
        eps.add_entry(MultiIndex{2, 1}, LaurentPoly::monomial(Int(-1), 1));
        std::string s = dump_cotensor(eps);
        CHECK(load_cotensor_laurent(s) == eps);
        CHECK(dump_cotensor(load_cotensor_laurent(s)) == s);
    }
}
