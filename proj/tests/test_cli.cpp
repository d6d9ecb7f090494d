// Certificate schema, stream determinism, and the serialization surfaces the
// CLI exposes (rewrite-system JSON, ncpoly tensors).
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qch/certificate.hpp"
#include "qch/rea_io.hpp"

using namespace qch;

TEST_CASE("certificate JSON schema") {
    Certificate c;
    c.id = "eq2.11-newton-i2-n3";
    c.slug = "connected-by-the-relations";
    c.n = 3;
    c.params.emplace_back("i", "2");
    c.pass = true;

    auto j = c.to_json();

    SECTION("deterministic field order") {
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"id", "slug", "n", "params", "status", "witness",
                                               "wall_ms", "engine", "conventions"});
    }

    SECTION("pass iff empty witness") {
        CHECK(j["status"] == "pass");
        CHECK(j["witness"].get<std::string>().empty());
        Certificate f = c;
        f.pass = false;
        f.witness = "residual: (1*q^0)*l_1_1";
        auto jf = f.to_json();
        CHECK(jf["status"] == "fail");
        CHECK_FALSE(jf["witness"].get<std::string>().empty());
    }

    SECTION("conventions block names the structure choices") {
        auto conv = j["conventions"];
        CHECK(conv.contains("rhat"));
        CHECK(conv.contains("eps"));
        CHECK(conv["qsamples"] == nlohmann::ordered_json::array({"3/5", "7/2"}));
    }

    SECTION("wall time is zero unless timings are requested") {
        std::ostringstream out;
        CertificateStream cs(out, true, false);
        Certificate t = c;
        t.wall_ms = 917;
        cs.emit(t);
        auto parsed = nlohmann::json::parse(out.str());
        CHECK(parsed["wall_ms"] == 0);
    }
}

TEST_CASE("certificate stream") {
    SECTION("text lines and exit condition") {
        std::ostringstream out;
        CertificateStream cs(out, false, false);
        Certificate ok;
        ok.id = "a";
        ok.pass = true;
        Certificate bad;
        bad.id = "b";
        bad.pass = false;
        bad.witness = "w";
        cs.emit(ok);
        CHECK(cs.all_pass());
        cs.emit(bad);
        CHECK_FALSE(cs.all_pass());
        CHECK(out.str() == "PASS a\nFAIL b :: w\n");
    }

    SECTION("byte-identical streams for identical inputs") {
        auto render = [] {
            std::ostringstream out;
            CertificateStream cs(out, true, false);
            Certificate c;
            c.id = "eq2.3-hecke-n4";
            c.slug = "the-hecke-condition";
            c.n = 4;
            c.pass = true;
            cs.emit(c);
            return out.str();
        };
        CHECK(render() == render());
    }
}

TEST_CASE("rewrite system JSON") {
    auto rs = RewriteSystem::build(RHat::build(2));
    auto j = rewrite_system_to_json(rs);
    REQUIRE(j.is_array());
    CHECK(j.size() == 6);

    SECTION("rule shape: lhs pair of generator names, tail of word/coeff terms") {
        for (const auto& rule : j) {
            REQUIRE(rule.contains("lhs"));
            REQUIRE(rule.at("lhs").size() == 2);
            for (const auto& term : rule.at("tail")) {
                CHECK(term.contains("word"));
                CHECK(term.contains("coeff"));
                CHECK(RatFunc::parse(term.at("coeff").get<std::string>()) != RatFunc::zero());
            }
        }
    }

    SECTION("the l_2_1 l_1_2 rule is present with parseable content") {
        bool found = false;
        for (const auto& rule : j) {
            if (rule.at("lhs")[0] == "l_2_1" && rule.at("lhs")[1] == "l_1_2") found = true;
        }
        CHECK(found);
    }

    SECTION("generator names round-trip") {
        for (Gen g = 0; g < 9; ++g) CHECK(parse_gen(gen_text(g, 3), 3) == g);
        CHECK_THROWS_AS(parse_gen("l_4_1", 3), std::invalid_argument);
        CHECK_THROWS_AS(parse_gen("x_1_1", 3), std::invalid_argument);
    }
}

TEST_CASE("ncpoly text and tensor round-trip") {
    int N = 2;
    NCPoly p = NCPoly::monomial(Word{gen_code(2, 1, N), gen_code(1, 2, N)},
                                RatFunc(qnum(3), qnum(2))) +
               NCPoly::scalar(RatFunc(LaurentPoly(-7))) +
               NCPoly::generator(gen_code(1, 1, N)).scaled(RatFunc::q_power(-2));

    SECTION("canonical text parses back") {
        CHECK(parse_ncpoly(p.text(N), N) == p);
        CHECK(parse_ncpoly("0", N).is_zero());
    }

    SECTION("ncpoly operator JSON is bit-exact") {
        TensorOp<NCPoly> op(N, 1);
        op.add_entry(MultiIndex{1}, MultiIndex{2}, p);
        op.add_entry(MultiIndex{2}, MultiIndex{2}, NCPoly::one());
        auto j = tensor_op_to_json(op, N);
        auto back = tensor_op_ncpoly_from_json(j, N);
        CHECK(back == op);
        CHECK(tensor_op_to_json(back, N) == j);
    }
}
