#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "support.hpp"

using mik::ParseError;

TEST_CASE("ideal parsing") {
    CHECK(mik::parse_ideal("x1*x2, x2*x3") ==
          mik::MonomialIdeal::make(
              3, {mik::Monomial::variable(3, 1) * mik::Monomial::variable(3, 2),
                  mik::Monomial::variable(3, 2) * mik::Monomial::variable(3, 3)}));
    CHECK(mik::parse_ideal("x1^2*x2").generators().front().str() == "x1^2*x2");
    CHECK(mik::parse_ideal("x1*x2, x1*x2*x3") ==
          mik::parse_ideal("x1*x2", 3));
    CHECK(mik::parse_ideal("0", 3).is_zero());
    CHECK(mik::parse_ideal("1", 3).is_whole_ring());
    CHECK(mik::parse_ideal("  x1 * x2 ,x3 ", 3) ==
          mik::parse_ideal("x1*x2, x3", 3));
}

TEST_CASE("ambient resolution") {
    CHECK(mik::parse_ideal("x2").ambient() == 2);
    CHECK(mik::parse_ideal("x2", 5).ambient() == 5);
    CHECK_THROWS_AS(mik::parse_ideal("x3", 2), ParseError);
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const std::string& text) {
        try {
            mik::parse_ideal(text);
        } catch (const ParseError& e) {
            return e.position;
        }
        FAIL("no parse error for: " + text);
        return std::size_t(0);
    };
    CHECK(pos_of("x1**x2") == 3);
    CHECK(pos_of("x1, ") == 4);
    CHECK(pos_of("y1") == 0);
    CHECK(pos_of("x0") == 1);
    CHECK(pos_of("x1^") == 3);
    CHECK_THROWS_AS(mik::parse_ideal(""), ParseError);
    CHECK_THROWS_AS(mik::parse_ideal("x99999999999999999999999"), ParseError);
}

TEST_CASE("parsed text round-trips through str") {
    miktest::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = miktest::random_ideal(rng, 4, 4, 3);
        CHECK(mik::parse_ideal(I.str(), 4) == I);
    }
}

TEST_CASE("clutter parsing") {
    CHECK(mik::parse_clutter("{1,2},{2,3}") ==
          mik::Clutter(3, {{1, 2}, {2, 3}}));
    CHECK(mik::parse_clutter("{1}", 3) == mik::Clutter(3, {{1}}));
    CHECK_THROWS_AS(mik::parse_clutter("{1,2"), ParseError);
    CHECK_THROWS_AS(mik::parse_clutter("{}"), ParseError);
    CHECK_THROWS_AS(mik::parse_clutter("{0}"), ParseError);
}

TEST_CASE("certificate JSON round trip") {
    auto [v, c] = mik::certify_ntf(miktest::ntf1_ideal());
    REQUIRE(mik::replay_proves(c));

    auto j = mik::to_json(c);
    auto back = mik::certificate_from_json(j);
    CHECK(back.rule == c.rule);
    CHECK(back.ideal == c.ideal);
    CHECK(back.ambient == c.ambient);
    CHECK(back.monomial == c.monomial);
    CHECK(back.ell == c.ell);
    CHECK(back.premises.size() == c.premises.size());
    CHECK(mik::replay_proves(back));

    // Tampering with the serialized form is caught on replay.
    auto tampered = j;
    tampered["monomial"] = "x1*x4";
    CHECK_FALSE(mik::replay_certificate(mik::certificate_from_json(tampered)));
}

TEST_CASE("verdict and sweep JSON") {
    auto v = mik::check_spp(miktest::six_var_ideal(), 2);
    auto jv = mik::to_json(v);
    CHECK(jv["status"] == "Fails");
    CHECK(jv["witness_power"] == 2);

    auto rep = mik::batch_check(3, [](const mik::Clutter& C) {
        return mik::check_spp(mik::edge_ideal(C), 2).status;
    });
    auto jr = mik::to_json(rep);
    CHECK(jr["total"] == 18);
    CHECK(jr["fails"] == 0);

    auto report = mik::make_report("check", "x1*x2", {{"max_power", 2}});
    CHECK(report["schema_version"] == 1);
    CHECK(report["command"] == "check");
}
