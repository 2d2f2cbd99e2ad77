#pragma once

// Tensor-product crystal B(lambda) (x) B(mu) over two prebuilt factor
// graphs.  Nodes are id pairs; the full product is never materialized,
// only the connected components that get extracted.
//
// Convention: f_i acts on the right factor of b (x) c iff
// phi_i(b) <= eps_i(c), else on the left.  The raising rule is the one
// forced by invertibility: e_i acts on the left iff phi_i(b) >= eps_i(c).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "crystal/graph.hpp"

namespace crystal {

struct TensorNode {
    int left = 0;
    int right = 0;

    friend bool operator==(const TensorNode& a, const TensorNode& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const TensorNode& a, const TensorNode& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    }
};

inline Weight tensor_weight(const CrystalGraph& A, const CrystalGraph& B, TensorNode t) {
    return A.node(t.left).weight + B.node(t.right).weight;
}

inline EpsPhi tensor_eps_phi(const CrystalGraph& A, const CrystalGraph& B, TensorNode t, int i) {
    const CrystalNode& b = A.node(t.left);
    const CrystalNode& c = B.node(t.right);
    int wt_b = to_int_exact(b.weight.coords[i - 1]);
    int wt_c = to_int_exact(c.weight.coords[i - 1]);
    int eps = std::max(b.eps[i - 1], c.eps[i - 1] - wt_b);
    int phi = std::max(c.phi[i - 1], b.phi[i - 1] + wt_c);
    return {eps, phi};
}

inline std::optional<TensorNode> tensor_f(const CrystalGraph& A, const CrystalGraph& B,
                                          TensorNode t, int i) {
    if (tensor_eps_phi(A, B, t, i).phi == 0) return std::nullopt;
    const CrystalNode& b = A.node(t.left);
    const CrystalNode& c = B.node(t.right);
    if (b.phi[i - 1] <= c.eps[i - 1]) {
        return TensorNode{t.left, *B.f_edge(t.right, i)};
    }
    return TensorNode{*A.f_edge(t.left, i), t.right};
}

inline std::optional<TensorNode> tensor_e(const CrystalGraph& A, const CrystalGraph& B,
                                          TensorNode t, int i) {
    if (tensor_eps_phi(A, B, t, i).eps == 0) return std::nullopt;
    const CrystalNode& b = A.node(t.left);
    const CrystalNode& c = B.node(t.right);
    if (b.phi[i - 1] >= c.eps[i - 1]) {
        return TensorNode{*A.e_edge(t.left, i), t.right};
    }
    return TensorNode{t.left, *B.e_edge(t.right, i)};
}

inline bool is_tensor_highest(const CrystalGraph& A, const CrystalGraph& B, TensorNode t) {
    for (int i = 1; i <= A.rank(); ++i)
        if (tensor_eps_phi(A, B, t, i).eps != 0) return false;
    return true;
}

// All highest weight nodes of the product, found by exhaustive scan and
// sorted by weight (lexicographically descending on fundamental
// coordinates; ties by id pair).
inline std::vector<TensorNode> highest_weight_nodes(const CrystalGraph& A, const CrystalGraph& B) {
    std::vector<TensorNode> out;
    for (int l = 0; l < static_cast<int>(A.size()); ++l)
        for (int r = 0; r < static_cast<int>(B.size()); ++r)
            if (is_tensor_highest(A, B, {l, r})) out.push_back({l, r});
    std::sort(out.begin(), out.end(), [&](const TensorNode& x, const TensorNode& y) {
        Weight wx = tensor_weight(A, B, x);
        Weight wy = tensor_weight(A, B, y);
        if (wx != wy) return wy < wx;
        return x < y;
    });
    return out;
}

struct ComponentResult {
    TensorNode seed;
    Weight highest_weight;
    std::vector<TensorNode> members;      // discovery order; members[0] == seed
    std::vector<std::vector<int>> f_to;   // [member index][i-1] -> member index or -1
    std::vector<int> zero_weight_members; // indices into members
};

// Connected component generated by a highest weight node, closed under
// the lowering rule with the same deterministic ordering as
// build_crystal.  Verifies |members| == weyl_dim(wt(seed)).
inline ComponentResult component(const CrystalGraph& A, const CrystalGraph& B,
                                 const CartanMatrix& cm, TensorNode seed,
                                 const BuildOptions& opt = {}) {
    if (!is_tensor_highest(A, B, seed))
        throw UsageError("component seed is not a highest weight node");

    ComponentResult comp;
    comp.seed = seed;
    comp.highest_weight = tensor_weight(A, B, seed);

    const std::uint64_t width = B.size();
    auto key = [width](TensorNode t) {
        return static_cast<std::uint64_t>(t.left) * width + static_cast<std::uint64_t>(t.right);
    };
    std::unordered_map<std::uint64_t, int> index;
    index.emplace(key(seed), 0);
    comp.members.push_back(seed);

    for (int head = 0; head < static_cast<int>(comp.members.size()); ++head) {
        TensorNode t = comp.members[head];
        comp.f_to.emplace_back(cm.rank(), -1);
        for (int i = 1; i <= cm.rank(); ++i) {
            std::optional<TensorNode> lowered = tensor_f(A, B, t, i);
            if (!lowered) continue;
            auto [it, fresh] = index.emplace(key(*lowered), static_cast<int>(comp.members.size()));
            if (fresh) {
                if (comp.members.size() >= opt.node_cap)
                    throw NodeCapError("tensor component exceeded node cap of " +
                                       std::to_string(opt.node_cap));
                comp.members.push_back(*lowered);
            }
            comp.f_to[head][i - 1] = it->second;
        }
    }

    for (int k = 0; k < static_cast<int>(comp.members.size()); ++k)
        if (tensor_weight(A, B, comp.members[k]).is_zero()) comp.zero_weight_members.push_back(k);

    Integer expected = weyl_dim(cm, comp.highest_weight);
    if (Integer(comp.members.size()) != expected)
        throw InvariantViolation("component of weight " + comp.highest_weight.to_string() +
                                 " has " + std::to_string(comp.members.size()) +
                                 " members, dimension formula gives " + expected.str());
    return comp;
}

struct FusionSummand {
    Weight highest_weight;
    int multiplicity = 0;
    Integer dim; // weyl_dim of the highest weight
};

struct FusionDecomposition {
    std::vector<FusionSummand> summands; // lex-descending highest weight
    std::size_t total_nodes = 0;         // |A| * |B|
};

// Full decomposition of the product into connected components.  Extracts
// every component, checks that they partition the product node set, and
// returns the multiset of highest weights.
inline FusionDecomposition decompose(const CrystalGraph& A, const CrystalGraph& B,
                                     const CartanMatrix& cm, const BuildOptions& opt = {}) {
    std::vector<TensorNode> tops = highest_weight_nodes(A, B);

    const std::uint64_t width = B.size();
    std::vector<char> mark(A.size() * B.size(), 0);
    std::size_t covered = 0;

    FusionDecomposition fd;
    fd.total_nodes = A.size() * B.size();
    for (const TensorNode& top : tops) {
        ComponentResult comp = component(A, B, cm, top, opt);
        for (const TensorNode& t : comp.members) {
            std::uint64_t k = static_cast<std::uint64_t>(t.left) * width + t.right;
            if (mark[k])
                throw InvariantViolation("tensor components overlap at node (" +
                                         std::to_string(t.left) + "," + std::to_string(t.right) + ")");
            mark[k] = 1;
        }
        covered += comp.members.size();

        if (!fd.summands.empty() && fd.summands.back().highest_weight == comp.highest_weight) {
            fd.summands.back().multiplicity += 1;
        } else {
            fd.summands.push_back({comp.highest_weight, 1, weyl_dim(cm, comp.highest_weight)});
        }
    }
    if (covered != fd.total_nodes)
        throw InvariantViolation("tensor components cover " + std::to_string(covered) +
                                 " of " + std::to_string(fd.total_nodes) + " product nodes");
    return fd;
}

// Decides whether a component is isomorphic to a standalone crystal graph
// by simultaneous traversal from the two highest elements.  A crystal
// isomorphism is unique when it exists, so this is a plain deterministic
// walk comparing weights, string statistics, and edge labels.
inline bool component_isomorphic(const CrystalGraph& A, const CrystalGraph& B,
                                 const ComponentResult& comp, const CrystalGraph& G) {
    if (comp.members.size() != G.size()) return false;
    int n = G.rank();

    std::vector<int> match(comp.members.size(), -1); // member index -> G node id
    std::vector<char> hit(G.size(), 0);
    match[0] = G.highest_id();
    hit[G.highest_id()] = 1;

    for (int k = 0; k < static_cast<int>(comp.members.size()); ++k) {
        int g = match[k];
        if (g < 0) return false; // disconnected mismatch
        TensorNode t = comp.members[k];
        const CrystalNode& gn = G.node(g);
        if (tensor_weight(A, B, t) != gn.weight) return false;
        for (int i = 1; i <= n; ++i) {
            EpsPhi ep = tensor_eps_phi(A, B, t, i);
            if (ep.eps != gn.eps[i - 1] || ep.phi != gn.phi[i - 1]) return false;
            int cdst = comp.f_to[k][i - 1];
            std::optional<int> gdst = G.f_edge(g, i);
            if ((cdst >= 0) != gdst.has_value()) return false;
            if (cdst >= 0) {
                if (match[cdst] == -1) {
                    if (hit[*gdst]) return false;
                    match[cdst] = *gdst;
                    hit[*gdst] = 1;
                } else if (match[cdst] != *gdst) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace crystal
