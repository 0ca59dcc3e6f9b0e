#include <doctest.h>

#include "posetfr/instance.hpp"

using namespace posetfr;

TEST_CASE("full instance round trip") {
    const std::string text = R"({
        "ground": ["a", "b", "c"],
        "relations": [["a", "c"], ["b", "c"]],
        "groups": {"a": 2, "b": [2, 2], "c": [4]},
        "ring": "symbolic",
        "tau": "generic",
        "eta": "generic"
    })";
    const Instance inst = load_instance_text(text);
    CHECK(inst.poset.size() == 3);
    CHECK(inst.poset.is_hierarchical());
    CHECK(inst.space.size() == 2 * 4 * 4);
    CHECK(inst.space.exponent() == 4);
    REQUIRE(inst.ring.has_value());
    CHECK(inst.ring->kind == RingConfig::Kind::symbolic);
    CHECK(inst.generic_params);
}

TEST_CASE("literal parameters") {
    const std::string text = R"({
        "ground": ["a", "b"],
        "relations": [["a", "b"]],
        "groups": {"a": 2, "b": 3},
        "ring": "rational",
        "tau": {"a": "5/3", "b": 2},
        "eta": {"a": "1/2"}
    })";
    const Instance inst = load_instance_text(text);
    CHECK(inst.tau_literals.at("a") == "5/3");
    CHECK(inst.tau_literals.at("b") == "2");
    CHECK(inst.eta_literals.count("b") == 0);
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(load_instance_text("{not json"), Error);
    CHECK_THROWS_AS(load_instance_text(R"({"ground": ["a"]})"), Error);
    CHECK_THROWS_AS(load_instance_text(R"({"ground": ["a"], "groups": {"z": 2}})"), Error);
    CHECK_THROWS_AS(load_instance_text(R"({"ground": ["a", "b"], "groups": {"a": 2}})"), Error);
    CHECK_THROWS_AS(
        load_instance_text(R"({"ground": ["a"], "groups": {"a": 2}, "ring": "galois"})"), Error);
    CHECK_THROWS_AS(
        load_instance_text(
            R"({"ground": ["a", "b"], "relations": [["a","b"],["b","a"]], "groups": {"a":2,"b":2}})"),
        Error);
}

TEST_CASE("ring config parsing") {
    CHECK(RingConfig::parse("int").kind == RingConfig::Kind::integer);
    CHECK(RingConfig::parse("rational").kind == RingConfig::Kind::rational);
    CHECK(RingConfig::parse("symbolic").kind == RingConfig::Kind::symbolic);
    const auto m = RingConfig::parse("modp:10007");
    CHECK(m.kind == RingConfig::Kind::modp);
    CHECK(m.modulus == 10007);
    CHECK(m.str() == "modp:10007");
    CHECK_THROWS_AS(RingConfig::parse("modp:x"), Error);
    CHECK_THROWS_AS(RingConfig::parse("modp:1"), Error);
}
