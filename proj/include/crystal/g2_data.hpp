#pragma once

// Reference data for the G2 quasi-minuscule crystal B(varpi_1) and the
// component of the tensor square generated by its weight-varpi_1 highest
// node.  The tables below are the published values for this example
// (version 1); reproduce_g2_reference() recomputes everything with the
// engine and reports an itemized diff, so any drift in conventions shows
// up as a named mismatch rather than a silent relabeling.

#include <array>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/lemma.hpp"
#include "crystal/tensor.hpp"

namespace crystal {

// One application of the tensor lowering rule along the component chain:
// operator index, the compared statistics phi_op(left) and eps_op(right),
// and which factor the operator acted on.
struct G2TensorStep {
    int op;
    int phi_left;
    int eps_right;
    bool acts_right; // true iff phi_left <= eps_right
};

struct G2ReferenceData {
    int version = 1;

    // Weights of b_1..b_7 in fundamental coordinates, top to bottom.
    std::array<std::array<int, 2>, 7> weights;

    // Edge labels along the chain b_1 -> b_2 -> ... -> b_7.
    std::array<int, 6> chain_labels;

    // String lengths, rows phi_1, eps_1, phi_2, eps_2 by column b_1..b_7.
    std::array<std::array<int, 7>, 4> string_table;

    // The component of the tensor square seeded at b_1 (x) b_4:
    // x_k = b_left (x) b_right with 1-based factor labels, its weights,
    // its chain edge labels, and the six rule applications.
    std::array<std::array<int, 2>, 7> tensor_pairs;
    std::array<std::array<int, 2>, 7> tensor_weights;
    std::array<int, 6> tensor_chain_labels;
    std::array<G2TensorStep, 6> steps;

    // Position (1-based) of the unique zero-weight node in both chains.
    int zero_node = 4;
};

inline const G2ReferenceData& g2_reference_data() {
    static const G2ReferenceData data = {
        1,
        // weights b_1..b_7
        {{{1, 0}, {-1, 1}, {2, -1}, {0, 0}, {-2, 1}, {1, -1}, {-1, 0}}},
        // chain labels
        {1, 2, 1, 1, 2, 1},
        // phi_1 / eps_1 / phi_2 / eps_2
        {{{1, 0, 2, 1, 0, 1, 0},
          {0, 1, 0, 1, 2, 0, 1},
          {0, 1, 0, 0, 1, 0, 0},
          {0, 0, 1, 0, 0, 1, 0}}},
        // tensor pairs x_1..x_7
        {{{1, 4}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {4, 7}}},
        // tensor weights
        {{{1, 0}, {-1, 1}, {2, -1}, {0, 0}, {-2, 1}, {1, -1}, {-1, 0}}},
        // tensor chain labels
        {1, 2, 1, 1, 2, 1},
        // rule applications x_k -> x_{k+1}
        {{{1, 1, 1, true},
          {2, 0, 0, true},
          {1, 1, 0, false},
          {1, 0, 0, true},
          {2, 1, 0, false},
          {1, 2, 1, false}}},
        4,
    };
    return data;
}

// The same tables computed by the engine: build B(varpi_1), walk its
// chain, take the component of b_high (x) b_4 in the square.
inline G2ReferenceData g2_engine_data() {
    CartanMatrix cm(CartanType(Family::G, 2));
    Weight varpi_1 = fundamental_weight(cm, 1);
    CrystalGraph g = build_crystal(cm, varpi_1);
    if (g.size() != 7)
        throw InvariantViolation("G2 crystal has " + std::to_string(g.size()) + " nodes");

    G2ReferenceData d;
    d.version = 1;

    // Walk the chain from the highest node; exactly one f-edge may leave
    // each node for this crystal.
    std::vector<int> order{g.highest_id()};
    std::vector<int> labels;
    while (true) {
        int cur = order.back();
        int next = -1, label = -1, count = 0;
        for (int i = 1; i <= 2; ++i) {
            if (auto dst = g.f_edge(cur, i)) {
                next = *dst;
                label = i;
                ++count;
            }
        }
        if (count == 0) break;
        if (count > 1)
            throw InvariantViolation("G2 crystal is not a chain at node " + std::to_string(cur));
        order.push_back(next);
        labels.push_back(label);
    }
    if (order.size() != 7)
        throw InvariantViolation("G2 chain walk visited " + std::to_string(order.size()) + " nodes");

    for (int k = 0; k < 7; ++k) {
        const CrystalNode& node = g.node(order[k]);
        d.weights[k] = {to_int_exact(node.weight.coords[0]), to_int_exact(node.weight.coords[1])};
        d.string_table[0][k] = node.phi[0];
        d.string_table[1][k] = node.eps[0];
        d.string_table[2][k] = node.phi[1];
        d.string_table[3][k] = node.eps[1];
    }
    for (int k = 0; k < 6; ++k) d.chain_labels[k] = labels[k];

    // Position of b_k (1-based) in the chain order for labeling pairs.
    std::vector<int> chain_pos(7);
    for (int k = 0; k < 7; ++k) chain_pos[order[k]] = k + 1;

    // Seed b_high (x) b_4 and its component.
    TensorNode seed{g.highest_id(), order[3]};
    ComponentResult comp = component(g, g, cm, seed);
    if (comp.members.size() != 7)
        throw InvariantViolation("G2 tensor component has " + std::to_string(comp.members.size()) +
                                 " members");

    // The component is a chain too; walk it the same way.
    std::vector<int> corder{0};
    std::vector<int> clabels;
    while (true) {
        int cur = corder.back();
        int next = -1, label = -1, count = 0;
        for (int i = 1; i <= 2; ++i) {
            if (comp.f_to[cur][i - 1] >= 0) {
                next = comp.f_to[cur][i - 1];
                label = i;
                ++count;
            }
        }
        if (count == 0) break;
        if (count > 1)
            throw InvariantViolation("G2 tensor component is not a chain");
        corder.push_back(next);
        clabels.push_back(label);
    }
    if (corder.size() != 7)
        throw InvariantViolation("G2 tensor chain walk visited " + std::to_string(corder.size()) +
                                 " nodes");

    d.zero_node = 0;
    for (int k = 0; k < 7; ++k) {
        TensorNode t = comp.members[corder[k]];
        d.tensor_pairs[k] = {chain_pos[t.left], chain_pos[t.right]};
        Weight w = tensor_weight(g, g, t);
        d.tensor_weights[k] = {to_int_exact(w.coords[0]), to_int_exact(w.coords[1])};
        if (w.is_zero()) d.zero_node = k + 1;
    }
    for (int k = 0; k < 6; ++k) {
        d.tensor_chain_labels[k] = clabels[k];
        TensorNode t = comp.members[corder[k]];
        int op = clabels[k];
        int phi_left = g.node(t.left).phi[op - 1];
        int eps_right = g.node(t.right).eps[op - 1];
        d.steps[k] = {op, phi_left, eps_right, phi_left <= eps_right};
    }
    return d;
}

struct DiffItem {
    std::string section;
    int index;
    std::string expected;
    std::string actual;
};

struct G2DataReport {
    int matched = 0;
    std::vector<DiffItem> diffs;

    bool pass() const { return diffs.empty(); }
};

namespace detail {

inline void diff_entry(G2DataReport& rep, const std::string& section, int index,
                       const std::string& expected, const std::string& actual) {
    if (expected == actual)
        rep.matched += 1;
    else
        rep.diffs.push_back({section, index, expected, actual});
}

inline std::string pair_str(const std::array<int, 2>& p) {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

} // namespace detail

inline G2DataReport diff_g2_data(const G2ReferenceData& expected, const G2ReferenceData& actual) {
    G2DataReport rep;
    for (int k = 0; k < 7; ++k)
        detail::diff_entry(rep, "weights", k + 1, detail::pair_str(expected.weights[k]),
                           detail::pair_str(actual.weights[k]));
    for (int k = 0; k < 6; ++k)
        detail::diff_entry(rep, "chain_labels", k + 1, std::to_string(expected.chain_labels[k]),
                           std::to_string(actual.chain_labels[k]));
    static const char* row_names[4] = {"phi_1", "eps_1", "phi_2", "eps_2"};
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 7; ++k)
            detail::diff_entry(rep, std::string("string_table.") + row_names[r], k + 1,
                               std::to_string(expected.string_table[r][k]),
                               std::to_string(actual.string_table[r][k]));
    for (int k = 0; k < 7; ++k)
        detail::diff_entry(rep, "tensor_pairs", k + 1, detail::pair_str(expected.tensor_pairs[k]),
                           detail::pair_str(actual.tensor_pairs[k]));
    for (int k = 0; k < 7; ++k)
        detail::diff_entry(rep, "tensor_weights", k + 1,
                           detail::pair_str(expected.tensor_weights[k]),
                           detail::pair_str(actual.tensor_weights[k]));
    for (int k = 0; k < 6; ++k)
        detail::diff_entry(rep, "tensor_chain_labels", k + 1,
                           std::to_string(expected.tensor_chain_labels[k]),
                           std::to_string(actual.tensor_chain_labels[k]));
    auto step_str = [](const G2TensorStep& s) {
        return "f_" + std::to_string(s.op) + ": phi(left)=" + std::to_string(s.phi_left) +
               (s.acts_right ? " <= " : " > ") + "eps(right)=" + std::to_string(s.eps_right) +
               " -> " + (s.acts_right ? "right" : "left");
    };
    for (int k = 0; k < 6; ++k)
        detail::diff_entry(rep, "steps", k + 1, step_str(expected.steps[k]),
                           step_str(actual.steps[k]));
    detail::diff_entry(rep, "zero_node", 1, std::to_string(expected.zero_node),
                       std::to_string(actual.zero_node));
    return rep;
}

inline G2DataReport reproduce_g2_reference() {
    return diff_g2_data(g2_reference_data(), g2_engine_data());
}

} // namespace crystal
