#pragma once

// Structural checks on quasi-minuscule representations and on the
// tensor-square component generated by a highest weight node of weight
// varpi_i.  The central claim being verified: in the component generated
// by b_high (x) c with wt(c) = 0, every other node b' (x) c' has
// wt(c') < 0 (in fact wt(c') <= -alpha_i), and every weight-zero node
// satisfies wt(b') = -wt(c') != 0 with wt(b') a positive root.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/tensor.hpp"

namespace crystal {

enum class QMStatus { Minuscule, QuasiMinuscule, Neither };

inline const char* to_string(QMStatus s) {
    switch (s) {
        case QMStatus::Minuscule: return "minuscule";
        case QMStatus::QuasiMinuscule: return "quasi-minuscule";
        case QMStatus::Neither: return "neither";
    }
    return "?";
}

struct QuasiMinusculeReport {
    QMStatus status = QMStatus::Neither;
    int zero_multiplicity = 0;
    bool nonzero_weights_single_orbit = false;
};

// Builds B(lambda) and compares its weight set with the Weyl orbit of
// lambda: one orbit and no zero weight is minuscule, one orbit plus a
// zero weight is quasi-minuscule.
inline QuasiMinusculeReport classify_quasi_minuscule(const CartanMatrix& cm, const Weight& lambda,
                                                     const BuildOptions& opt = {}) {
    CrystalGraph g = build_crystal(cm, lambda, opt);
    QuasiMinusculeReport rep;
    std::set<std::vector<Rational>> nonzero;
    for (const CrystalNode& node : g.nodes()) {
        if (node.weight.is_zero())
            rep.zero_multiplicity += 1;
        else
            nonzero.insert(node.weight.coords);
    }
    std::set<std::vector<Rational>> orbit;
    for (const Weight& w : weyl_orbit(cm, lambda)) orbit.insert(w.coords);
    rep.nonzero_weights_single_orbit = nonzero == orbit;
    if (rep.nonzero_weights_single_orbit)
        rep.status = rep.zero_multiplicity == 0 ? QMStatus::Minuscule : QMStatus::QuasiMinuscule;
    else
        rep.status = QMStatus::Neither;
    return rep;
}

struct LemmaSeedResult {
    // Ids of the zero-weight nodes c in B(varpi_i) for which
    // b_high (x) c is a highest weight node (eps_j(c) <= delta_ji).
    std::vector<int> candidates;
    bool unique = false;
};

inline LemmaSeedResult find_lemma_seed(const CrystalGraph& factor, int i) {
    LemmaSeedResult res;
    for (const CrystalNode& node : factor.nodes()) {
        if (!node.weight.is_zero()) continue;
        bool ok = true;
        for (int j = 1; j <= factor.rank(); ++j)
            if (node.eps[j - 1] > (j == i ? 1 : 0)) { ok = false; break; }
        if (ok) res.candidates.push_back(node.id);
    }
    res.unique = res.candidates.size() == 1;
    return res;
}

// Multiplicity of varpi_i among the highest weights of the tensor square
// of B(varpi_i); 0 means the hypothesis fails.
inline int verify_hypothesis(const CartanMatrix& cm, int i, const BuildOptions& opt = {}) {
    CrystalGraph g = build_crystal(cm, fundamental_weight(cm, i), opt);
    Weight target = fundamental_weight(cm, i);
    int mult = 0;
    for (const TensorNode& t : highest_weight_nodes(g, g))
        if (tensor_weight(g, g, t) == target) ++mult;
    return mult;
}

// One itemized check failure, carrying enough node data to audit it.
struct LemmaFailure {
    std::string check;
    TensorNode node;
    Weight node_weight;
    Weight left_weight;
    Weight right_weight;
    std::string left_path;
    std::string right_path;
    std::string detail;
};

struct LemmaReport {
    CartanType type;
    int index = 0;
    TensorNode seed;
    int component_size = 0;
    bool part_i_holds = false;              // wt(c') < 0 for every non-seed member
    bool part_i_strengthened_holds = false; // wt(c') <= -alpha_i for every non-seed member
    bool part_ii_holds = false;             // zero-weight members: wt(b') = -wt(c') != 0
    std::vector<Weight> betas;              // wt(b') over the zero-weight members
    bool betas_are_positive_roots = false;
    int zero_node_count = 0;
    bool step1_ok = false; // phi_j of the factor highest element = delta_ji
    bool step2_ok = false; // eps_i(c) >= 1 for the seed's right factor
    bool component_size_ok = false;
    bool component_isomorphic_ok = false;
    std::vector<LemmaFailure> failures;

    LemmaReport(CartanType t, int i, TensorNode s) : type(t), index(i), seed(s) {}

    bool pass() const { return failures.empty(); }
};

struct LemmaVerification {
    CartanType type;
    int index = 0;
    int hypothesis_multiplicity = 0;
    std::vector<LemmaReport> reports; // one per qualifying seed

    LemmaVerification(CartanType t, int i) : type(t), index(i) {}

    bool hypothesis_holds() const { return hypothesis_multiplicity >= 1; }
    bool pass() const {
        if (!hypothesis_holds()) return false;
        for (const auto& r : reports)
            if (!r.pass()) return false;
        return true;
    }
};

namespace detail {

inline LemmaFailure make_failure(const CrystalGraph& g, std::string check, TensorNode t,
                                 std::string detail) {
    LemmaFailure f;
    f.check = std::move(check);
    f.node = t;
    f.left_weight = g.node(t.left).weight;
    f.right_weight = g.node(t.right).weight;
    f.node_weight = f.left_weight + f.right_weight;
    if (g.has_paths()) {
        f.left_path = g.paths()[t.left].to_string();
        f.right_path = g.paths()[t.right].to_string();
    }
    f.detail = std::move(detail);
    return f;
}

} // namespace detail

// Runs every check on the component generated by one seed.
inline LemmaReport verify_lemma_seed(const CartanMatrix& cm, int i, const CrystalGraph& factor,
                                     const RootSystemData& roots, TensorNode seed,
                                     const BuildOptions& opt = {}) {
    LemmaReport rep(cm.type(), i, seed);
    Weight alpha_i = simple_root(cm, i);
    Weight varpi_i = fundamental_weight(cm, i);

    // Step 1: the factor's highest element has phi_j = delta_ji.
    rep.step1_ok = true;
    const CrystalNode& top = factor.node(factor.highest_id());
    for (int j = 1; j <= cm.rank(); ++j) {
        if (top.phi[j - 1] != (j == i ? 1 : 0)) rep.step1_ok = false;
    }
    if (!rep.step1_ok)
        rep.failures.push_back(detail::make_failure(
            factor, "step1_phi_of_highest", seed,
            "phi vector of the factor highest element is not the i-th unit vector"));

    // Step 2: the seed's right factor has eps_i >= 1.
    rep.step2_ok = factor.node(seed.right).eps[i - 1] >= 1;
    if (!rep.step2_ok)
        rep.failures.push_back(detail::make_failure(factor, "step2_eps_i_of_seed", seed,
                                                    "eps_i of the seed right factor is 0"));

    ComponentResult comp = component(factor, factor, cm, seed, opt);
    rep.component_size = static_cast<int>(comp.members.size());
    rep.zero_node_count = static_cast<int>(comp.zero_weight_members.size());

    rep.component_size_ok = Integer(comp.members.size()) == weyl_dim(cm, varpi_i);
    if (!rep.component_size_ok)
        rep.failures.push_back(detail::make_failure(factor, "component_size", seed,
                                                    "component size does not match the dimension"));

    // Part (i) and the strengthened bound wt(c') <= -alpha_i.
    rep.part_i_holds = true;
    rep.part_i_strengthened_holds = true;
    for (int k = 1; k < static_cast<int>(comp.members.size()); ++k) {
        TensorNode y = comp.members[k];
        const Weight& right_wt = factor.node(y.right).weight;
        if (weight_sign(cm, right_wt) != WeightSign::Negative) {
            rep.part_i_holds = false;
            rep.failures.push_back(detail::make_failure(
                factor, "part_i_right_factor_negative", y,
                "right factor weight " + right_wt.to_string() + " classifies as " +
                    to_string(weight_sign(cm, right_wt))));
        }
        WeightSign slack = weight_sign(cm, -alpha_i - right_wt);
        if (slack != WeightSign::Zero && slack != WeightSign::Positive) {
            rep.part_i_strengthened_holds = false;
            rep.failures.push_back(detail::make_failure(
                factor, "part_i_strengthened_bound", y,
                "right factor weight " + right_wt.to_string() + " is not <= -alpha_i"));
        }
    }

    // Part (ii) plus the positive-root refinement on the betas.
    rep.part_ii_holds = true;
    rep.betas_are_positive_roots = true;
    std::set<RootCoords> positive(roots.positive_roots.begin(), roots.positive_roots.end());
    for (int k : comp.zero_weight_members) {
        TensorNode y = comp.members[k];
        const Weight& left_wt = factor.node(y.left).weight;
        const Weight& right_wt = factor.node(y.right).weight;
        rep.betas.push_back(left_wt);
        if (left_wt.is_zero() || !(left_wt == -right_wt)) {
            rep.part_ii_holds = false;
            rep.failures.push_back(detail::make_failure(
                factor, "part_ii_opposite_nonzero", y,
                "zero-weight member does not split as beta (x) -beta"));
        }
        RootCoords rc = to_root_coords(cm, left_wt);
        if (!rc.is_integral() || positive.find(rc) == positive.end()) {
            rep.betas_are_positive_roots = false;
            rep.failures.push_back(detail::make_failure(
                factor, "beta_positive_root", y,
                "left factor weight " + left_wt.to_string() + " is not a positive root"));
        }
    }

    rep.component_isomorphic_ok = component_isomorphic(factor, factor, comp, factor);
    if (!rep.component_isomorphic_ok)
        rep.failures.push_back(detail::make_failure(
            factor, "component_isomorphic", seed,
            "component is not isomorphic to the factor crystal"));

    return rep;
}

// Builds B(varpi_i), locates every qualifying seed, and verifies the
// component of each.  hypothesis_multiplicity = 0 means there is nothing
// to check (reported distinctly from a violated check).
inline LemmaVerification verify_lemma(const CartanMatrix& cm, int i, const BuildOptions& opt = {}) {
    cm.check_index(i);
    LemmaVerification ver(cm.type(), i);

    CrystalGraph factor = build_crystal(cm, fundamental_weight(cm, i), opt);
    Weight target = fundamental_weight(cm, i);
    std::vector<TensorNode> seeds;
    for (const TensorNode& t : highest_weight_nodes(factor, factor))
        if (tensor_weight(factor, factor, t) == target) seeds.push_back(t);
    ver.hypothesis_multiplicity = static_cast<int>(seeds.size());
    if (seeds.empty()) return ver;

    RootSystemData roots = positive_roots(cm);
    for (const TensorNode& seed : seeds)
        ver.reports.push_back(verify_lemma_seed(cm, i, factor, roots, seed, opt));
    return ver;
}

// --- generalization sweep -------------------------------------------------

struct SweepTarget {
    CartanType type;
    int index;
    Integer dim;
};

// Every fundamental weight of the listed types whose crystal has at most
// max_dim nodes.
inline std::vector<SweepTarget> sweep_targets(Integer max_dim = 30) {
    std::vector<SweepTarget> targets;
    const std::vector<CartanType> types = {
        CartanType(Family::A, 1), CartanType(Family::A, 2), CartanType(Family::A, 3),
        CartanType(Family::B, 2), CartanType(Family::B, 3), CartanType(Family::C, 3),
        CartanType(Family::D, 4), CartanType(Family::G, 2),
    };
    for (const CartanType& t : types) {
        CartanMatrix cm(t);
        for (int i = 1; i <= t.rank; ++i) {
            Integer d = weyl_dim(cm, fundamental_weight(cm, i));
            if (d <= max_dim) targets.push_back({t, i, d});
        }
    }
    return targets;
}

struct SweepEntry {
    SweepTarget target;
    LemmaVerification verification;
};

struct SweepResult {
    std::vector<SweepEntry> entries;

    // Targets whose hypothesis fails are skipped, not failed.
    bool pass() const {
        for (const auto& e : entries)
            if (e.verification.hypothesis_holds() && !e.verification.pass()) return false;
        return true;
    }
};

inline SweepResult verify_sweep(Integer max_dim = 30, const BuildOptions& opt = {}) {
    SweepResult res;
    for (const SweepTarget& t : sweep_targets(max_dim)) {
        CartanMatrix cm(t.type);
        res.entries.push_back({t, verify_lemma(cm, t.index, opt)});
    }
    return res;
}

} // namespace crystal
