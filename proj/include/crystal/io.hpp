#pragma once

// Deterministic serialization.
//
// Graph documents (schema_version "1") are JSON objects with keys in this
// fixed order:
//   schema_version, cartan_type, highest_weight, nodes, edges
// where nodes carry {id, weight, eps, phi} (ids dense 0..N-1 in discovery
// order) and edges carry {src, label, dst} sorted by (src, label).  All
// numbers are integers; emission is compact, newline-terminated, and
// byte-identical across runs.
//
// Report documents wrap a payload as
//   {schema_version, kind, pass, payload}
// with kind one of "lemma", "fusion", "quasiminuscule", "paperdata",
// "component".
//
// DOT output labels nodes b1..bN (discovery order, 1-based) with their
// weight, flags zero-weight nodes with a yellow fill, and colors edges by
// operator index through the fixed palette
//   1 blue, 2 red, 3 forestgreen, 4 darkorange,
//   5 purple, 6 saddlebrown, 7 deeppink, 8 teal
// cycling for higher ranks.  No layout hints are emitted.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "crystal/g2_data.hpp"
#include "crystal/graph.hpp"
#include "crystal/lemma.hpp"
#include "crystal/tensor.hpp"

namespace crystal {

inline constexpr std::string_view kSchemaVersion = "1";

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json weight_to_json(const Weight& w) {
    ordered_json a = ordered_json::array();
    for (const Rational& c : w.coords) a.push_back(to_int_exact(c));
    return a;
}

inline ordered_json int_vector_to_json(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

inline std::string finish(const ordered_json& doc) {
    return doc.dump() + "\n";
}

inline ordered_json report_document(const char* kind, bool pass, ordered_json payload) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind;
    doc["pass"] = pass;
    doc["payload"] = std::move(payload);
    return doc;
}

} // namespace detail

inline std::string emit_graph_json(const CrystalGraph& g) {
    detail::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["cartan_type"] = g.type().to_string();
    doc["highest_weight"] = detail::weight_to_json(g.highest_weight());
    detail::ordered_json nodes = detail::ordered_json::array();
    for (const CrystalNode& n : g.nodes()) {
        detail::ordered_json jn;
        jn["id"] = n.id;
        jn["weight"] = detail::weight_to_json(n.weight);
        jn["eps"] = detail::int_vector_to_json(n.eps);
        jn["phi"] = detail::int_vector_to_json(n.phi);
        nodes.push_back(std::move(jn));
    }
    doc["nodes"] = std::move(nodes);
    detail::ordered_json edges = detail::ordered_json::array();
    for (const CrystalEdge& e : g.edges()) {
        detail::ordered_json je;
        je["src"] = e.src;
        je["label"] = e.label;
        je["dst"] = e.dst;
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    return detail::finish(doc);
}

namespace detail {

inline void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                         const char* what) {
    if (!obj.is_object())
        throw SchemaError(std::string(what) + " is not an object");
    for (const char* k : keys)
        if (!obj.contains(k))
            throw SchemaError(std::string(what) + " is missing key '" + k + "'");
    if (obj.size() != keys.size())
        throw SchemaError(std::string(what) + " has unexpected extra keys");
}

inline std::vector<int> int_vector_from_json(const nlohmann::json& a, int rank, const char* what) {
    if (!a.is_array() || static_cast<int>(a.size()) != rank)
        throw SchemaError(std::string(what) + " is not an array of length rank");
    std::vector<int> v;
    v.reserve(rank);
    for (const auto& x : a) {
        if (!x.is_number_integer())
            throw SchemaError(std::string(what) + " contains a non-integer");
        v.push_back(x.get<int>());
    }
    return v;
}

inline Weight weight_from_ints(const std::vector<int>& v) {
    std::vector<Rational> coords(v.begin(), v.end());
    return Weight(std::move(coords));
}

} // namespace detail

// Parses a graph document and re-validates the crystal invariants before
// returning: dense ids, sorted edges, phi - eps = weight coordinate,
// weight drop by alpha_i along f-edges, a unique source of all e-edges,
// and node count matching the dimension formula.
inline CrystalGraph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    detail::require_keys(doc, {"schema_version", "cartan_type", "highest_weight", "nodes", "edges"},
                         "graph document");
    if (!doc["schema_version"].is_string() || doc["schema_version"] != kSchemaVersion)
        throw SchemaError("unsupported schema_version");
    if (!doc["cartan_type"].is_string())
        throw SchemaError("cartan_type is not a string");

    CartanType type = [&] {
        try {
            return CartanType::parse(doc["cartan_type"].get<std::string>());
        } catch (const UsageError& e) {
            throw SchemaError(e.what());
        }
    }();
    CartanMatrix cm(type);
    int n = type.rank;

    Weight highest =
        detail::weight_from_ints(detail::int_vector_from_json(doc["highest_weight"], n, "highest_weight"));
    CrystalGraph g(type, highest);

    if (!doc["nodes"].is_array() || doc["nodes"].empty())
        throw SchemaError("nodes is not a nonempty array");
    int expected_id = 0;
    for (const auto& jn : doc["nodes"]) {
        detail::require_keys(jn, {"id", "weight", "eps", "phi"}, "node");
        if (!jn["id"].is_number_integer() || jn["id"].get<int>() != expected_id)
            throw InvariantViolation("node ids are not dense 0..N-1");
        ++expected_id;
        Weight w = detail::weight_from_ints(detail::int_vector_from_json(jn["weight"], n, "weight"));
        std::vector<int> eps = detail::int_vector_from_json(jn["eps"], n, "eps");
        std::vector<int> phi = detail::int_vector_from_json(jn["phi"], n, "phi");
        for (int i = 0; i < n; ++i) {
            if (eps[i] < 0 || phi[i] < 0)
                throw InvariantViolation("negative string length at node " +
                                         std::to_string(expected_id - 1));
            if (Rational(phi[i] - eps[i]) != w.coords[i])
                throw InvariantViolation("phi - eps mismatch with weight at node " +
                                         std::to_string(expected_id - 1));
        }
        g.add_node(std::move(w), std::move(eps), std::move(phi));
    }

    if (!doc["edges"].is_array())
        throw SchemaError("edges is not an array");
    int node_count = static_cast<int>(g.size());
    CrystalEdge prev{-1, 0, 0};
    for (const auto& je : doc["edges"]) {
        detail::require_keys(je, {"src", "label", "dst"}, "edge");
        if (!je["src"].is_number_integer() || !je["label"].is_number_integer() ||
            !je["dst"].is_number_integer())
            throw SchemaError("edge fields must be integers");
        CrystalEdge e{je["src"].get<int>(), je["label"].get<int>(), je["dst"].get<int>()};
        if (e.src < 0 || e.src >= node_count || e.dst < 0 || e.dst >= node_count)
            throw InvariantViolation("edge endpoint out of range");
        if (e.label < 1 || e.label > n)
            throw InvariantViolation("edge label out of range");
        if (!(prev < e))
            throw InvariantViolation("edges are not sorted by (src, label)");
        prev = e;
        if (g.node(e.src).weight - simple_root(cm, e.label) != g.node(e.dst).weight)
            throw InvariantViolation("edge " + std::to_string(e.src) + " -" +
                                     std::to_string(e.label) + "-> " + std::to_string(e.dst) +
                                     " does not drop the weight by alpha_i");
        g.add_f_edge(e.src, e.label, e.dst); // rejects duplicate (src,label)/(dst,label)
    }

    int highest_id = -1;
    for (const CrystalNode& node : g.nodes()) {
        bool all_zero = std::all_of(node.eps.begin(), node.eps.end(), [](int x) { return x == 0; });
        if (all_zero) {
            if (highest_id >= 0)
                throw InvariantViolation("multiple nodes with all eps = 0");
            highest_id = node.id;
        }
    }
    if (highest_id < 0)
        throw InvariantViolation("no node with all eps = 0");
    if (!(g.node(highest_id).weight == highest))
        throw InvariantViolation("highest node weight does not match highest_weight");
    g.set_highest_id(highest_id);

    if (Integer(g.size()) != weyl_dim(cm, highest))
        throw InvariantViolation("node count does not match the dimension formula");
    return g;
}

namespace detail {

inline const char* edge_color(int label) {
    static const char* palette[8] = {"blue",   "red",         "forestgreen", "darkorange",
                                     "purple", "saddlebrown", "deeppink",    "teal"};
    return palette[(label - 1) % 8];
}

inline std::string weight_label(const Weight& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.coords.size(); ++k) {
        if (k) s += ",";
        s += to_integer(w.coords[k]).str();
    }
    return s + ")";
}

} // namespace detail

struct DotOptions {
    bool flag_zero_weight = true;
};

inline std::string emit_graph_dot(const CrystalGraph& g, const DotOptions& opt = {}) {
    std::string out = "digraph crystal {\n";
    out += "  label=\"B" + detail::weight_label(g.highest_weight()) + " type " +
           g.type().to_string() + "\";\n";
    for (const CrystalNode& n : g.nodes()) {
        out += "  b" + std::to_string(n.id + 1) + " [label=\"b" + std::to_string(n.id + 1) + " " +
               detail::weight_label(n.weight) + "\"";
        if (opt.flag_zero_weight && n.weight.is_zero())
            out += ", style=filled, fillcolor=yellow";
        out += "];\n";
    }
    for (const CrystalEdge& e : g.edges()) {
        out += "  b" + std::to_string(e.src + 1) + " -> b" + std::to_string(e.dst + 1) +
               " [label=\"" + std::to_string(e.label) + "\", color=" + detail::edge_color(e.label) +
               "];\n";
    }
    out += "}\n";
    return out;
}

inline std::string emit_component_dot(const CrystalGraph& A, const CrystalGraph& B,
                                      const ComponentResult& comp, const DotOptions& opt = {}) {
    std::string out = "digraph component {\n";
    out += "  label=\"component of weight " + detail::weight_label(comp.highest_weight) + "\";\n";
    for (std::size_t k = 0; k < comp.members.size(); ++k) {
        TensorNode t = comp.members[k];
        Weight w = tensor_weight(A, B, t);
        out += "  x" + std::to_string(k + 1) + " [label=\"b" + std::to_string(t.left + 1) +
               "⊗b" + std::to_string(t.right + 1) + " " + detail::weight_label(w) + "\"";
        if (opt.flag_zero_weight && w.is_zero()) out += ", style=filled, fillcolor=yellow";
        out += "];\n";
    }
    for (std::size_t k = 0; k < comp.members.size(); ++k)
        for (int i = 1; i <= static_cast<int>(comp.f_to[k].size()); ++i)
            if (comp.f_to[k][i - 1] >= 0)
                out += "  x" + std::to_string(k + 1) + " -> x" +
                       std::to_string(comp.f_to[k][i - 1] + 1) + " [label=\"" + std::to_string(i) +
                       "\", color=" + detail::edge_color(i) + "];\n";
    out += "}\n";
    return out;
}

inline std::string emit_component_json(const CrystalGraph& A, const CrystalGraph& B,
                                       const ComponentResult& comp) {
    detail::ordered_json payload;
    payload["cartan_type"] = A.type().to_string();
    payload["factor_a"] = detail::weight_to_json(A.highest_weight());
    payload["factor_b"] = detail::weight_to_json(B.highest_weight());
    payload["seed"] = {{"left", comp.seed.left}, {"right", comp.seed.right}};
    payload["highest_weight"] = detail::weight_to_json(comp.highest_weight);
    payload["size"] = comp.members.size();
    detail::ordered_json members = detail::ordered_json::array();
    for (const TensorNode& t : comp.members) {
        detail::ordered_json jm;
        jm["left"] = t.left;
        jm["right"] = t.right;
        jm["weight"] = detail::weight_to_json(tensor_weight(A, B, t));
        members.push_back(std::move(jm));
    }
    payload["members"] = std::move(members);
    detail::ordered_json edges = detail::ordered_json::array();
    for (std::size_t k = 0; k < comp.members.size(); ++k)
        for (std::size_t i = 1; i <= comp.f_to[k].size(); ++i)
            if (comp.f_to[k][i - 1] >= 0) {
                detail::ordered_json je;
                je["src"] = k;
                je["label"] = i;
                je["dst"] = comp.f_to[k][i - 1];
                edges.push_back(std::move(je));
            }
    payload["edges"] = std::move(edges);
    payload["zero_weight_members"] = detail::int_vector_to_json(comp.zero_weight_members);
    return detail::finish(detail::report_document("component", true, std::move(payload)));
}

inline std::string emit_fusion_json(const CrystalGraph& A, const CrystalGraph& B,
                                    const FusionDecomposition& fd) {
    detail::ordered_json payload;
    payload["cartan_type"] = A.type().to_string();
    payload["factor_a"] = detail::weight_to_json(A.highest_weight());
    payload["factor_b"] = detail::weight_to_json(B.highest_weight());
    payload["total_nodes"] = fd.total_nodes;
    detail::ordered_json summands = detail::ordered_json::array();
    for (const FusionSummand& s : fd.summands) {
        detail::ordered_json js;
        js["highest_weight"] = detail::weight_to_json(s.highest_weight);
        js["multiplicity"] = s.multiplicity;
        js["dim"] = s.dim.str();
        summands.push_back(std::move(js));
    }
    payload["summands"] = std::move(summands);
    return detail::finish(detail::report_document("fusion", true, std::move(payload)));
}

inline std::string emit_quasiminuscule_json(const CartanMatrix& cm, const Weight& lambda,
                                            const QuasiMinusculeReport& rep) {
    detail::ordered_json payload;
    payload["cartan_type"] = cm.type().to_string();
    payload["weight"] = detail::weight_to_json(lambda);
    payload["status"] = to_string(rep.status);
    payload["zero_multiplicity"] = rep.zero_multiplicity;
    payload["nonzero_weights_single_orbit"] = rep.nonzero_weights_single_orbit;
    return detail::finish(detail::report_document("quasiminuscule", true, std::move(payload)));
}

namespace detail {

inline ordered_json lemma_failure_to_json(const LemmaFailure& f) {
    ordered_json jf;
    jf["check"] = f.check;
    jf["node"] = {{"left", f.node.left}, {"right", f.node.right}};
    jf["weight"] = weight_to_json(f.node_weight);
    jf["left_weight"] = weight_to_json(f.left_weight);
    jf["right_weight"] = weight_to_json(f.right_weight);
    jf["left_path"] = f.left_path;
    jf["right_path"] = f.right_path;
    jf["detail"] = f.detail;
    return jf;
}

inline ordered_json lemma_verification_payload(const LemmaVerification& ver) {
    ordered_json payload;
    payload["cartan_type"] = ver.type.to_string();
    payload["index"] = ver.index;
    payload["hypothesis_multiplicity"] = ver.hypothesis_multiplicity;
    ordered_json seeds = ordered_json::array();
    for (const LemmaReport& rep : ver.reports) {
        ordered_json js;
        js["seed"] = {{"left", rep.seed.left}, {"right", rep.seed.right}};
        js["component_size"] = rep.component_size;
        js["part_i"] = rep.part_i_holds;
        js["part_i_strengthened"] = rep.part_i_strengthened_holds;
        js["part_ii"] = rep.part_ii_holds;
        ordered_json betas = ordered_json::array();
        for (const Weight& b : rep.betas) betas.push_back(weight_to_json(b));
        js["betas"] = std::move(betas);
        js["betas_are_positive_roots"] = rep.betas_are_positive_roots;
        js["zero_node_count"] = rep.zero_node_count;
        js["step1_ok"] = rep.step1_ok;
        js["step2_ok"] = rep.step2_ok;
        js["component_size_ok"] = rep.component_size_ok;
        js["component_isomorphic"] = rep.component_isomorphic_ok;
        ordered_json failures = ordered_json::array();
        for (const LemmaFailure& f : rep.failures) failures.push_back(lemma_failure_to_json(f));
        js["failures"] = std::move(failures);
        seeds.push_back(std::move(js));
    }
    payload["seeds"] = std::move(seeds);
    if (!ver.hypothesis_holds()) {
        ordered_json failures = ordered_json::array();
        ordered_json jf;
        jf["check"] = "hypothesis";
        jf["detail"] = "hypothesis fails: weight varpi_" + std::to_string(ver.index) +
                       " does not occur among the highest weights of the tensor square";
        failures.push_back(std::move(jf));
        payload["failures"] = std::move(failures);
    }
    return payload;
}

} // namespace detail

inline std::string emit_lemma_json(const LemmaVerification& ver) {
    return detail::finish(detail::report_document(
        "lemma", ver.pass(), detail::lemma_verification_payload(ver)));
}

inline std::string emit_sweep_json(const SweepResult& res) {
    detail::ordered_json payload;
    payload["sweep"] = true;
    detail::ordered_json targets = detail::ordered_json::array();
    for (const SweepEntry& e : res.entries) {
        detail::ordered_json jt;
        jt["cartan_type"] = e.target.type.to_string();
        jt["index"] = e.target.index;
        jt["dim"] = e.target.dim.str();
        jt["hypothesis_holds"] = e.verification.hypothesis_holds();
        jt["verification"] = detail::lemma_verification_payload(e.verification);
        targets.push_back(std::move(jt));
    }
    payload["targets"] = std::move(targets);
    return detail::finish(detail::report_document("lemma", res.pass(), std::move(payload)));
}

inline std::string emit_g2_reference_json(const G2DataReport& rep) {
    detail::ordered_json payload;
    payload["matched"] = rep.matched;
    detail::ordered_json diffs = detail::ordered_json::array();
    for (const DiffItem& d : rep.diffs) {
        detail::ordered_json jd;
        jd["section"] = d.section;
        jd["index"] = d.index;
        jd["expected"] = d.expected;
        jd["actual"] = d.actual;
        diffs.push_back(std::move(jd));
    }
    payload["diffs"] = std::move(diffs);
    return detail::finish(detail::report_document("paperdata", rep.pass(), std::move(payload)));
}

} // namespace crystal
