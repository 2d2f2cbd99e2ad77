#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include <crystal/graph.hpp>

using namespace crystal;

namespace {

Weight W(std::vector<long> v) {
    std::vector<Rational> c(v.begin(), v.end());
    return Weight(std::move(c));
}

// The crystal axiom battery run over a whole graph.
void check_crystal_axioms(const CartanMatrix& cm, const CrystalGraph& g) {
    int n = cm.rank();
    REQUIRE(g.size() >= 1);

    // phi - eps equals the weight coordinate; statistics are nonnegative.
    for (const CrystalNode& node : g.nodes()) {
        for (int i = 1; i <= n; ++i) {
            CHECK(node.eps[i - 1] >= 0);
            CHECK(node.phi[i - 1] >= 0);
            CHECK(Rational(node.phi[i - 1] - node.eps[i - 1]) == node.weight.coords[i - 1]);
        }
    }

    // Edge definedness tracks the statistics; f and e are mutual inverses;
    // weights drop by alpha_i along f-edges.
    for (const CrystalNode& node : g.nodes()) {
        for (int i = 1; i <= n; ++i) {
            auto down = g.f_edge(node.id, i);
            auto up = g.e_edge(node.id, i);
            CHECK(down.has_value() == (node.phi[i - 1] > 0));
            CHECK(up.has_value() == (node.eps[i - 1] > 0));
            if (down) {
                CHECK(g.node(*down).weight == node.weight - simple_root(cm, i));
                REQUIRE(g.e_edge(*down, i).has_value());
                CHECK(*g.e_edge(*down, i) == node.id);
            }
            if (up) {
                REQUIRE(g.f_edge(*up, i).has_value());
                CHECK(*g.f_edge(*up, i) == node.id);
            }
        }
    }

    // Exactly one highest node (all eps zero) of weight lambda, exactly
    // one lowest node (all phi zero).
    int highest = 0, lowest = 0;
    for (const CrystalNode& node : g.nodes()) {
        if (std::all_of(node.eps.begin(), node.eps.end(), [](int x) { return x == 0; })) {
            ++highest;
            CHECK(node.weight == g.highest_weight());
        }
        if (std::all_of(node.phi.begin(), node.phi.end(), [](int x) { return x == 0; })) ++lowest;
    }
    CHECK(highest == 1);
    CHECK(lowest == 1);

    // Node count against the dimension formula.
    CHECK(Integer(g.size()) == weyl_dim(cm, g.highest_weight()));

    // Weyl invariance: each simple reflection permutes the weight multiset.
    std::multiset<std::vector<Rational>> weights;
    for (const CrystalNode& node : g.nodes()) weights.insert(node.weight.coords);
    for (int i = 1; i <= n; ++i) {
        std::multiset<std::vector<Rational>> reflected;
        for (const CrystalNode& node : g.nodes())
            reflected.insert(simple_reflection(cm, i, node.weight).coords);
        CHECK(reflected == weights);
    }

    // i-strings: from each string head, following f-edges with label i
    // walks phi_i steps with eps/phi moving by one per step.
    for (const CrystalNode& node : g.nodes()) {
        for (int i = 1; i <= n; ++i) {
            if (node.eps[i - 1] != 0) continue;
            int expected_len = node.phi[i - 1];
            int cur = node.id, steps = 0;
            while (auto next = g.f_edge(cur, i)) {
                ++steps;
                const CrystalNode& nn = g.node(*next);
                CHECK(nn.eps[i - 1] == steps);
                CHECK(nn.phi[i - 1] == expected_len - steps);
                cur = *next;
            }
            CHECK(steps == expected_len);
        }
    }
}

} // namespace

TEST_CASE("the rank-one doublet", "[graph]") {
    CartanMatrix a1(CartanType(Family::A, 1));
    CrystalGraph g = build_crystal(a1, fundamental_weight(a1, 1));
    REQUIRE(g.size() == 2);
    auto edges = g.edges();
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == CrystalEdge{0, 1, 1});
    check_crystal_axioms(a1, g);
}

TEST_CASE("the trivial crystal", "[graph]") {
    CartanMatrix a1(CartanType(Family::A, 1));
    CrystalGraph g = build_crystal(a1, Weight::zero(1));
    CHECK(g.size() == 1);
    CHECK(g.edge_count() == 0);
    check_crystal_axioms(a1, g);
}

TEST_CASE("the G2 quasi-minuscule crystal is the published chain", "[graph]") {
    CartanMatrix g2(CartanType(Family::G, 2));
    CrystalGraph g = build_crystal(g2, fundamental_weight(g2, 1));
    REQUIRE(g.size() == 7);

    // Weights in discovery order, top to bottom.
    std::vector<Weight> expected = {W({1, 0}),  W({-1, 1}), W({2, -1}), W({0, 0}),
                                    W({-2, 1}), W({1, -1}), W({-1, 0})};
    for (int k = 0; k < 7; ++k) CHECK(g.node(k).weight == expected[k]);

    // Single chain with labels 1,2,1,1,2,1.
    std::vector<CrystalEdge> chain = {{0, 1, 1}, {1, 2, 2}, {2, 1, 3},
                                      {3, 1, 4}, {4, 2, 5}, {5, 1, 6}};
    CHECK(g.edges() == chain);
    check_crystal_axioms(g2, g);
}

TEST_CASE("the F4 quasi-minuscule crystal has 26 nodes and two zero weights", "[graph]") {
    CartanMatrix f4(CartanType(Family::F, 4));
    CrystalGraph g = build_crystal(f4, fundamental_weight(f4, 4));
    REQUIRE(g.size() == 26);
    int zeros = 0;
    for (const CrystalNode& node : g.nodes())
        if (node.weight.is_zero()) ++zeros;
    CHECK(zeros == 2);
    check_crystal_axioms(f4, g);
}

TEST_CASE("node cap aborts loudly", "[graph]") {
    CartanMatrix f4(CartanType(Family::F, 4));
    BuildOptions opt;
    opt.node_cap = 5;
    CHECK_THROWS_AS(build_crystal(f4, fundamental_weight(f4, 4), opt), NodeCapError);
}

TEST_CASE("crystal axioms hold across a mixed sample", "[graph]") {
    struct Case {
        CartanType type;
        std::vector<long> hw;
    };
    std::vector<Case> cases = {
        {CartanType(Family::A, 2), {1, 0}}, {CartanType(Family::A, 2), {1, 1}},
        {CartanType(Family::A, 3), {0, 1, 0}}, {CartanType(Family::B, 2), {1, 0}},
        {CartanType(Family::B, 2), {0, 1}}, {CartanType(Family::B, 2), {1, 1}},
        {CartanType(Family::C, 3), {0, 1, 0}}, {CartanType(Family::D, 4), {0, 1, 0, 0}},
        {CartanType(Family::G, 2), {0, 1}}, {CartanType(Family::G, 2), {2, 0}},
    };
    for (const Case& c : cases) {
        CartanMatrix cm(c.type);
        INFO(c.type.to_string());
        CrystalGraph g = build_crystal(cm, W(c.hw));
        check_crystal_axioms(cm, g);
    }
}

TEST_CASE("build is deterministic", "[graph]") {
    CartanMatrix c3(CartanType(Family::C, 3));
    CrystalGraph a = build_crystal(c3, fundamental_weight(c3, 2));
    CrystalGraph b = build_crystal(c3, fundamental_weight(c3, 2));
    CHECK(a == b);
}
