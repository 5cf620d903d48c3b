#include "doctest.h"

#include "bcn/config.hpp"

using namespace bcn;

TEST_CASE("demo configurations round trip and validate") {
    for (const Config& c : {demo_rank1(), demo_rank2()}) {
        std::string text = dump_config(c);
        Config back = parse_config(text);
        CHECK(back == c);
        CHECK(dump_config(back) == text);
        GroupSpec S = build_spec(back);
        CHECK(validate(S.data).ok());
    }
}

TEST_CASE("optional fields take their defaults") {
    Config c = parse_config(R"J({"variables":["t"],"roots":{"t":2},"rank":1,"K":["t^(1/2)"],
                                "V2":["t^(1/2)"],"Vp":["1"]})J");
    CHECK(c.V2.over == "K2");
    CHECK(c.Vp.over == "kK2");
    CHECK_FALSE(c.Vpp.has_value());
    CHECK(c.variant == "standard");
    CHECK(c.cartan_search_bound == 6);
}

TEST_CASE("malformed configurations name the problem") {
    auto message = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("{").find("JSON") != std::string::npos);
    CHECK(message(R"J({"roots":{}})J").find("variables") != std::string::npos);
    CHECK(message(R"J({"variables":["t"],"roots":{"w":1},"rank":1,"K":[],"V2":[],"Vp":[]})J").find("w") !=
          std::string::npos);
    CHECK(message(R"J({"variables":["t"],"roots":{"t":1},"rank":1,"K":[],"V2":[],"Vp":[],"variant":"x"})J")
              .find("variant") != std::string::npos);
    Config c = demo_rank1();
    c.K = {"t^(1/8)"};
    CHECK_THROWS_AS(build_spec(c), ConfigError);
}

TEST_CASE("words round trip through JSON") {
    GroupSpec S = build_spec(demo_rank2());
    Rng rng(1);
    for (int k = 0; k < 5; ++k) {
        GroupWord w = random_word(S, 6, rng);
        GroupWord back = parse_word(S.tower(), S.rank(), dump_word(S.tower(), w));
        CHECK(evaluate(S, back) == evaluate(S, w));
    }
    GroupWord w = parse_word(S.tower(), 2, R"J({"word":[{"s":1},{"root":[1,-1],"c":"t"},{"cartan":2,"c":"1"}]})J");
    CHECK(w.size() == 3);
    CHECK_THROWS_AS(parse_word(S.tower(), 2, R"J([{"root":[1,1,0],"c":"t"}])J"), ConfigError);
    CHECK_THROWS_AS(parse_word(S.tower(), 2, R"J([{"s":3}])J"), ConfigError);
}

TEST_CASE("constraint violations carry the atom index") {
    GroupSpec S = build_spec(demo_rank1());
    // t^(1/2) is not in V' = k
    GroupWord w = parse_word(S.tower(), 1, R"J([{"s":1},{"root":[2],"c":"t^(1/2)"}])J");
    try {
        evaluate_checked(S, w);
        FAIL("expected a constraint violation");
    } catch (const ConstraintViolation& e) {
        CHECK(std::string(e.what()).find("atom 1") != std::string::npos);
    }
}
