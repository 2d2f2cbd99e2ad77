#pragma once

// Generation of the full crystal graph B(lambda) by closing the straight
// dominant path under the lowering operators.  Node ids are discovery
// order (FIFO queue, operators tried in index order 1..n), so builds are
// deterministic; node 0 is the highest element.

#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "crystal/path.hpp"

namespace crystal {

struct CrystalNode {
    int id = 0;
    Weight weight;
    std::vector<int> eps; // eps[i-1] = eps_i
    std::vector<int> phi;

    friend bool operator==(const CrystalNode& a, const CrystalNode& b) {
        return a.id == b.id && a.weight == b.weight && a.eps == b.eps && a.phi == b.phi;
    }
};

struct CrystalEdge {
    int src;
    int label; // operator index, 1-based
    int dst;

    friend bool operator==(const CrystalEdge& a, const CrystalEdge& b) {
        return a.src == b.src && a.label == b.label && a.dst == b.dst;
    }
    friend bool operator<(const CrystalEdge& a, const CrystalEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.label != b.label) return a.label < b.label;
        return a.dst < b.dst;
    }
};

class CrystalGraph {
public:
    CrystalGraph(CartanType type, Weight highest_weight)
        : type_(type), highest_weight_(std::move(highest_weight)) {}

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const Weight& highest_weight() const { return highest_weight_; }

    std::size_t size() const { return nodes_.size(); }
    const CrystalNode& node(int id) const { return nodes_.at(id); }
    const std::vector<CrystalNode>& nodes() const { return nodes_; }

    int highest_id() const { return highest_id_; }

    std::optional<int> f_edge(int id, int i) const {
        int dst = f_to_.at(id).at(i - 1);
        if (dst < 0) return std::nullopt;
        return dst;
    }
    std::optional<int> e_edge(int id, int i) const {
        int dst = e_to_.at(id).at(i - 1);
        if (dst < 0) return std::nullopt;
        return dst;
    }

    // All f-edges sorted by (src, label).
    std::vector<CrystalEdge> edges() const {
        std::vector<CrystalEdge> es;
        for (int id = 0; id < static_cast<int>(nodes_.size()); ++id)
            for (int i = 1; i <= rank(); ++i)
                if (f_to_[id][i - 1] >= 0) es.push_back({id, i, f_to_[id][i - 1]});
        return es; // already ordered by construction
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& row : f_to_)
            for (int dst : row)
                if (dst >= 0) ++c;
        return c;
    }

    // The realizing paths, in node-id order; empty for parsed graphs.
    const std::vector<PiecewisePath>& paths() const { return paths_; }
    bool has_paths() const { return !paths_.empty(); }

    // Content equality: paths are a realization detail and do not count.
    friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
        return a.type_ == b.type_ && a.highest_weight_ == b.highest_weight_ &&
               a.nodes_ == b.nodes_ && a.f_to_ == b.f_to_;
    }

    // --- construction interface (used by the builder and the parser) ---

    int add_node(Weight w, std::vector<int> eps, std::vector<int> phi) {
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back({id, std::move(w), std::move(eps), std::move(phi)});
        f_to_.emplace_back(rank(), -1);
        e_to_.emplace_back(rank(), -1);
        return id;
    }

    void add_f_edge(int src, int i, int dst) {
        if (f_to_.at(src).at(i - 1) >= 0 || e_to_.at(dst).at(i - 1) >= 0)
            throw InvariantViolation("duplicate f-edge at node " + std::to_string(src) +
                                     " label " + std::to_string(i));
        f_to_[src][i - 1] = dst;
        e_to_[dst][i - 1] = src;
    }

    void set_highest_id(int id) { highest_id_ = id; }
    void attach_paths(std::vector<PiecewisePath> p) { paths_ = std::move(p); }

private:
    CartanType type_;
    Weight highest_weight_;
    std::vector<CrystalNode> nodes_;
    std::vector<std::vector<int>> f_to_;
    std::vector<std::vector<int>> e_to_;
    std::vector<PiecewisePath> paths_;
    int highest_id_ = 0;
};

struct BuildOptions {
    std::size_t node_cap = 1'000'000;
};

inline CrystalGraph build_crystal(const CartanMatrix& cm, const Weight& lambda,
                                  const BuildOptions& opt = {}) {
    PiecewisePath start = straight_path(cm, lambda); // validates dominance
    CrystalGraph g(cm.type(), lambda);

    std::vector<PiecewisePath> paths;
    std::map<PiecewisePath, int> index;

    auto intern = [&](PiecewisePath p) -> std::pair<int, bool> {
        auto it = index.find(p);
        if (it != index.end()) return {it->second, false};
        if (paths.size() >= opt.node_cap)
            throw NodeCapError("crystal for " + lambda.to_string() + " of type " +
                               cm.type().to_string() + " exceeded node cap of " +
                               std::to_string(opt.node_cap));
        std::vector<int> eps(cm.rank()), phi(cm.rank());
        for (int i = 1; i <= cm.rank(); ++i) {
            EpsPhi ep = eps_phi(p, i);
            eps[i - 1] = ep.eps;
            phi[i - 1] = ep.phi;
        }
        int id = g.add_node(p.endpoint(), std::move(eps), std::move(phi));
        index.emplace(p, id);
        paths.push_back(std::move(p));
        return {id, true};
    };

    intern(start);
    for (int head = 0; head < static_cast<int>(paths.size()); ++head) {
        for (int i = 1; i <= cm.rank(); ++i) {
            // Copy: paths may reallocate while we extend the frontier.
            PiecewisePath p = paths[head];
            std::optional<PiecewisePath> lowered = f_op(cm, p, i);
            if (!lowered) continue;
            auto [dst, fresh] = intern(std::move(*lowered));
            (void)fresh;
            g.add_f_edge(head, i, dst);
        }
    }
    g.set_highest_id(0);
    g.attach_paths(std::move(paths));
    return g;
}

} // namespace crystal
