#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <crystal/io.hpp>

#include "dot_checker.hpp"

using namespace crystal;
using testutil::valid_dot;

TEST_CASE("graph document for the published G2 chain", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    std::string doc = emit_graph_json(g);
    CHECK(doc.back() == '\n');

    auto parsed = nlohmann::json::parse(doc);
    CHECK(parsed["schema_version"] == "1");
    CHECK(parsed["cartan_type"] == "G2");
    CHECK(parsed["nodes"].size() == 7);
    CHECK(parsed["edges"].size() == 6);
    CHECK(parsed["nodes"][0]["weight"] == nlohmann::json::array({1, 0}));
    CHECK(parsed["edges"][0] == nlohmann::json({{"src", 0}, {"label", 1}, {"dst", 1}}));
}

TEST_CASE("trivial crystal document", "[io]") {
    CartanMatrix a1(CartanType(Family::A, 1));
    CrystalGraph g = build_crystal(a1, Weight::zero(1));
    auto parsed = nlohmann::json::parse(emit_graph_json(g));
    CHECK(parsed["nodes"].size() == 1);
    CHECK(parsed["edges"].size() == 0);
}

TEST_CASE("emission is byte deterministic", "[io]") {
    CartanMatrix f4(CartanType(Family::F, 4));
    CrystalGraph g = build_crystal(f4, fundamental_weight(f4, 4));
    CHECK(emit_graph_json(g) == emit_graph_json(g));
    CHECK(emit_graph_dot(g) == emit_graph_dot(g));
    CHECK(emit_graph_dot(g, DotOptions{}) == emit_graph_dot(g));
}

TEST_CASE("round trip identity over a corpus of graphs", "[io]") {
    std::vector<std::pair<CartanType, std::vector<long>>> corpus = {
        {CartanType(Family::A, 1), {1}},       {CartanType(Family::A, 2), {1, 1}},
        {CartanType(Family::B, 2), {0, 1}},    {CartanType(Family::C, 3), {0, 1, 0}},
        {CartanType(Family::D, 4), {0, 1, 0, 0}}, {CartanType(Family::G, 2), {1, 0}},
        {CartanType(Family::G, 2), {0, 1}},    {CartanType(Family::F, 4), {0, 0, 0, 1}},
    };
    for (const auto& [type, hw] : corpus) {
        CartanMatrix cm(type);
        std::vector<Rational> coords(hw.begin(), hw.end());
        CrystalGraph g = build_crystal(cm, Weight(coords));
        INFO(type.to_string());
        CrystalGraph back = parse_graph_json(emit_graph_json(g));
        CHECK(back == g);
        CHECK(emit_graph_json(back) == emit_graph_json(g));
    }
}

TEST_CASE("round trip identity for the E8 quasi-minuscule crystal", "[io]") {
    CartanMatrix e8(CartanType(Family::E, 8));
    CrystalGraph g = build_crystal(e8, fundamental_weight(e8, 8));
    CrystalGraph back = parse_graph_json(emit_graph_json(g));
    CHECK(back == g);
}

TEST_CASE("parser validates the crystal invariants", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    std::string doc = emit_graph_json(g);

    SECTION("tampered eps") {
        auto j = nlohmann::json::parse(doc);
        j["nodes"][2]["eps"][0] = 5;
        CHECK_THROWS_AS(parse_graph_json(j.dump()), InvariantViolation);
    }
    SECTION("tampered edge label") {
        auto j = nlohmann::json::parse(doc);
        j["edges"][0]["label"] = 2;
        CHECK_THROWS_AS(parse_graph_json(j.dump()), InvariantViolation);
    }
    SECTION("dropped node breaks the id sequence") {
        auto j = nlohmann::json::parse(doc);
        j["nodes"].erase(3);
        CHECK_THROWS_AS(parse_graph_json(j.dump()), InvariantViolation);
    }
    SECTION("wrong schema version") {
        auto j = nlohmann::json::parse(doc);
        j["schema_version"] = "2";
        CHECK_THROWS_AS(parse_graph_json(j.dump()), SchemaError);
    }
    SECTION("extra keys are rejected") {
        auto j = nlohmann::json::parse(doc);
        j["comment"] = "hello";
        CHECK_THROWS_AS(parse_graph_json(j.dump()), SchemaError);
    }
    SECTION("malformed JSON") {
        CHECK_THROWS_AS(parse_graph_json("{not json"), SchemaError);
    }
    SECTION("unknown type string") {
        auto j = nlohmann::json::parse(doc);
        j["cartan_type"] = "Q7";
        CHECK_THROWS_AS(parse_graph_json(j.dump()), SchemaError);
    }
}

TEST_CASE("dot output is well formed and readable", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    std::string dot = emit_graph_dot(g);
    CHECK(valid_dot(dot));
    // Chain labels and the palette for the first two operators.
    CHECK(dot.find("b1 -> b2 [label=\"1\", color=blue]") != std::string::npos);
    CHECK(dot.find("b2 -> b3 [label=\"2\", color=red]") != std::string::npos);
    CHECK(dot.find("b6 -> b7 [label=\"1\", color=blue]") != std::string::npos);
    // The zero-weight node b_4 is flagged.
    CHECK(dot.find("b4 [label=\"b4 (0,0)\", style=filled, fillcolor=yellow]") != std::string::npos);
}

TEST_CASE("component dot output flags the zero-weight node", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    ComponentResult comp = component(g, g, g2, {0, 3});
    std::string dot = emit_component_dot(g, g, comp);
    CHECK(valid_dot(dot));
    CHECK(dot.find("x4") != std::string::npos);
    CHECK(dot.find("fillcolor=yellow") != std::string::npos);
    // Six chain edges.
    std::size_t count = 0, at = 0;
    while ((at = dot.find("->", at)) != std::string::npos) { ++count; at += 2; }
    CHECK(count == 6);
}

TEST_CASE("dot validator rejects garbage", "[io]") {
    CHECK_FALSE(valid_dot("graph g { a -- b; }"));
    CHECK_FALSE(valid_dot("digraph g { a -> ; }"));
    CHECK_FALSE(valid_dot("digraph g { a -> b"));
}

TEST_CASE("report documents carry the pass flag and payload", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));

    LemmaVerification ver = verify_lemma(g2, 1);
    auto lemma = nlohmann::json::parse(emit_lemma_json(ver));
    CHECK(lemma["kind"] == "lemma");
    CHECK(lemma["pass"] == true);
    CHECK(lemma["payload"]["hypothesis_multiplicity"] == 1);
    CHECK(lemma["payload"]["seeds"][0]["betas"][0] == nlohmann::json::array({-1, 1}));

    CartanMatrix a2(CartanType(Family::A, 2));
    auto failed = nlohmann::json::parse(emit_lemma_json(verify_lemma(a2, 1)));
    CHECK(failed["pass"] == false);
    REQUIRE(failed["payload"].contains("failures"));
    CHECK(failed["payload"]["failures"].size() >= 1);

    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    auto fusion = nlohmann::json::parse(emit_fusion_json(g, g, decompose(g, g, g2)));
    CHECK(fusion["kind"] == "fusion");
    CHECK(fusion["payload"]["total_nodes"] == 49);
    CHECK(fusion["payload"]["summands"].size() == 4);

    auto qm = nlohmann::json::parse(emit_quasiminuscule_json(
        g2, fundamental_weight(g2, 1), classify_quasi_minuscule(g2, fundamental_weight(g2, 1))));
    CHECK(qm["kind"] == "quasiminuscule");
    CHECK(qm["payload"]["status"] == "quasi-minuscule");
    CHECK(qm["payload"]["zero_multiplicity"] == 1);

    auto ref = nlohmann::json::parse(emit_g2_reference_json(reproduce_g2_reference()));
    CHECK(ref["kind"] == "paperdata");
    CHECK(ref["pass"] == true);
    CHECK(ref["payload"]["matched"] == 68);
    CHECK(ref["payload"]["diffs"].empty());
}

TEST_CASE("component document lists members and edges", "[io]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    ComponentResult comp = component(g, g, g2, {0, 3});
    auto doc = nlohmann::json::parse(emit_component_json(g, g, comp));
    CHECK(doc["kind"] == "component");
    CHECK(doc["payload"]["size"] == 7);
    CHECK(doc["payload"]["members"].size() == 7);
    CHECK(doc["payload"]["edges"].size() == 6);
    CHECK(doc["payload"]["seed"] == nlohmann::json({{"left", 0}, {"right", 3}}));
    CHECK(doc["payload"]["zero_weight_members"] == nlohmann::json::array({3}));
}
