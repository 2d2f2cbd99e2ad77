// Command-line frontend.
//
// Exit codes (stable, for CI):
//   0  success / verification passed
//   1  verification failure (reports carry the counterexample payload)
//   2  usage error
//   3  node cap exceeded
//   4  internal error
//
// Documents go to --out when given, otherwise to standard out; progress
// lines go to standard error, so stdout stays machine-parseable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <crystal/crystal.hpp>

namespace {

using namespace crystal;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNodeCap = 3;
constexpr int kExitInternal = 4;

std::size_t default_node_cap() {
    if (const char* env = std::getenv("CRYSTAL_NODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw UsageError("CRYSTAL_NODE_CAP is not a positive integer");
    }
    return BuildOptions{}.node_cap;
}

Weight parse_weight(const std::string& text, int rank, const std::string& flag) {
    std::vector<Rational> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            coords.push_back(Rational(v));
        } catch (const std::exception&) {
            throw UsageError(flag + ": cannot parse '" + part + "' as an integer");
        }
    }
    if (static_cast<int>(coords.size()) != rank)
        throw UsageError(flag + ": expected " + std::to_string(rank) +
                         " comma-separated coordinates, got " + std::to_string(coords.size()));
    return Weight(std::move(coords));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + out_path + "'");
    f << text;
    if (!f) throw Error("failed writing '" + out_path + "'");
}

struct CommonArgs {
    std::string type_str;
    std::string out_path;
    std::size_t node_cap = 0; // 0 = use default

    BuildOptions build_options() const {
        BuildOptions opt;
        opt.node_cap = node_cap ? node_cap : default_node_cap();
        return opt;
    }
    CartanMatrix matrix() const { return CartanMatrix(CartanType::parse(type_str)); }
};

int run(int argc, char** argv) {
    CLI::App app{"exact crystal graph engine"};
    app.require_subcommand(1);

    // --- build ---
    CommonArgs build_args;
    std::string build_hw, build_format = "json";
    auto* cmd_build = app.add_subcommand("build", "build the crystal graph of a highest weight");
    cmd_build->add_option("--type", build_args.type_str, "Cartan type, e.g. G2")->required();
    cmd_build->add_option("--hw", build_hw, "dominant weight, comma-separated fundamental coordinates")
        ->required();
    cmd_build->add_option("--format", build_format, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd_build->add_option("--out", build_args.out_path, "output file (default: stdout)");
    cmd_build->add_option("--node-cap", build_args.node_cap, "node cap override");

    // --- tensor ---
    CommonArgs tensor_args;
    std::string tensor_a, tensor_b, component_weight;
    bool do_decompose = false;
    auto* cmd_tensor = app.add_subcommand("tensor", "tensor product of two crystals");
    cmd_tensor->add_option("--type", tensor_args.type_str, "Cartan type")->required();
    cmd_tensor->add_option("--a", tensor_a, "highest weight of the left factor")->required();
    cmd_tensor->add_option("--b", tensor_b, "highest weight of the right factor")->required();
    auto* opt_decompose =
        cmd_tensor->add_flag("--decompose", do_decompose, "print the full fusion decomposition");
    auto* opt_component = cmd_tensor->add_option(
        "--component", component_weight, "print the component seeded at this highest weight");
    opt_decompose->excludes(opt_component);
    cmd_tensor->add_option("--out", tensor_args.out_path, "output file (default: stdout)");
    cmd_tensor->add_option("--node-cap", tensor_args.node_cap, "node cap override");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "run a verification target");
    cmd_verify->require_subcommand(1);

    CommonArgs lemma_args;
    int lemma_index = 0;
    auto* cmd_lemma = cmd_verify->add_subcommand("lemma", "verify the tensor-square component checks");
    cmd_lemma->add_option("--type", lemma_args.type_str, "Cartan type")->required();
    cmd_lemma->add_option("--index", lemma_index, "fundamental weight index")->required();
    cmd_lemma->add_option("--out", lemma_args.out_path, "output file (default: stdout)");
    cmd_lemma->add_option("--node-cap", lemma_args.node_cap, "node cap override");

    std::string paper_out;
    auto* cmd_paper =
        cmd_verify->add_subcommand("paper-g2", "check the built-in G2 reference tables");
    cmd_paper->add_option("--out", paper_out, "output file (default: stdout)");

    CommonArgs sweep_args;
    long long sweep_max_dim = 30;
    auto* cmd_sweep = cmd_verify->add_subcommand(
        "sweep", "verify every qualifying fundamental weight in the sweep set");
    cmd_sweep->add_option("--max-dim", sweep_max_dim, "largest crystal dimension to include");
    cmd_sweep->add_option("--out", sweep_args.out_path, "output file (default: stdout)");
    cmd_sweep->add_option("--node-cap", sweep_args.node_cap, "node cap override");

    // --- dim / orbit / classify ---
    CommonArgs dim_args;
    std::string dim_hw, dim_format = "text";
    auto* cmd_dim = app.add_subcommand("dim", "dimension of the highest weight module");
    cmd_dim->add_option("--type", dim_args.type_str, "Cartan type")->required();
    cmd_dim->add_option("--hw", dim_hw, "dominant weight")->required();
    cmd_dim->add_option("--format", dim_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CommonArgs orbit_args;
    std::string orbit_w, orbit_format = "text";
    auto* cmd_orbit = app.add_subcommand("orbit", "Weyl orbit of an integral weight");
    cmd_orbit->add_option("--type", orbit_args.type_str, "Cartan type")->required();
    cmd_orbit->add_option("--w", orbit_w, "integral weight")->required();
    cmd_orbit->add_option("--format", orbit_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CommonArgs classify_args;
    std::string classify_hw;
    auto* cmd_classify =
        app.add_subcommand("classify", "minuscule / quasi-minuscule classification");
    cmd_classify->add_option("--type", classify_args.type_str, "Cartan type")->required();
    cmd_classify->add_option("--hw", classify_hw, "dominant weight")->required();
    cmd_classify->add_option("--out", classify_args.out_path, "output file (default: stdout)");
    cmd_classify->add_option("--node-cap", classify_args.node_cap, "node cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_build->parsed()) {
        CartanMatrix cm = build_args.matrix();
        Weight hw = parse_weight(build_hw, cm.rank(), "--hw");
        CrystalGraph g = build_crystal(cm, hw, build_args.build_options());
        std::cerr << "nodes=" << g.size() << " edges=" << g.edge_count() << "\n";
        write_output(build_format == "dot" ? emit_graph_dot(g) : emit_graph_json(g),
                     build_args.out_path);
        return kExitOk;
    }

    if (cmd_tensor->parsed()) {
        if (!do_decompose && component_weight.empty())
            throw UsageError("tensor: pass --decompose or --component");
        CartanMatrix cm = tensor_args.matrix();
        BuildOptions opt = tensor_args.build_options();
        CrystalGraph A = build_crystal(cm, parse_weight(tensor_a, cm.rank(), "--a"), opt);
        CrystalGraph B = build_crystal(cm, parse_weight(tensor_b, cm.rank(), "--b"), opt);
        std::cerr << "factors " << A.size() << " x " << B.size() << "\n";
        if (do_decompose) {
            FusionDecomposition fd = decompose(A, B, cm, opt);
            write_output(emit_fusion_json(A, B, fd), tensor_args.out_path);
        } else {
            Weight target = parse_weight(component_weight, cm.rank(), "--component");
            std::optional<TensorNode> seed;
            for (const TensorNode& t : highest_weight_nodes(A, B))
                if (tensor_weight(A, B, t) == target) { seed = t; break; }
            if (!seed)
                throw UsageError("no highest weight node of weight " + target.to_string() +
                                 " in this tensor product");
            ComponentResult comp = component(A, B, cm, *seed, opt);
            write_output(emit_component_json(A, B, comp), tensor_args.out_path);
        }
        return kExitOk;
    }

    if (cmd_lemma->parsed()) {
        CartanMatrix cm = lemma_args.matrix();
        cm.check_index(lemma_index);
        LemmaVerification ver = verify_lemma(cm, lemma_index, lemma_args.build_options());
        write_output(emit_lemma_json(ver), lemma_args.out_path);
        if (!ver.hypothesis_holds())
            std::cerr << "hypothesis fails for " << cm.type().to_string() << " index "
                      << lemma_index << "\n";
        return ver.pass() ? kExitOk : kExitVerifyFail;
    }

    if (cmd_paper->parsed()) {
        G2DataReport rep = reproduce_g2_reference();
        write_output(emit_g2_reference_json(rep), paper_out);
        return rep.pass() ? kExitOk : kExitVerifyFail;
    }

    if (cmd_sweep->parsed()) {
        if (sweep_max_dim < 1) throw UsageError("--max-dim must be positive");
        SweepResult res = verify_sweep(Integer(sweep_max_dim), sweep_args.build_options());
        write_output(emit_sweep_json(res), sweep_args.out_path);
        return res.pass() ? kExitOk : kExitVerifyFail;
    }

    if (cmd_dim->parsed()) {
        CartanMatrix cm = dim_args.matrix();
        Integer d = weyl_dim(cm, parse_weight(dim_hw, cm.rank(), "--hw"));
        if (dim_format == "json")
            std::cout << "{\"dim\":" << d << "}\n";
        else
            std::cout << d << "\n";
        return kExitOk;
    }

    if (cmd_orbit->parsed()) {
        CartanMatrix cm = orbit_args.matrix();
        std::vector<Weight> orbit = weyl_orbit(cm, parse_weight(orbit_w, cm.rank(), "--w"));
        if (orbit_format == "json") {
            detail::ordered_json doc;
            doc["size"] = orbit.size();
            detail::ordered_json elems = detail::ordered_json::array();
            for (const Weight& w : orbit) elems.push_back(detail::weight_to_json(w));
            doc["elements"] = std::move(elems);
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << orbit.size() << "\n";
            for (const Weight& w : orbit) std::cout << w.to_string() << "\n";
        }
        return kExitOk;
    }

    if (cmd_classify->parsed()) {
        CartanMatrix cm = classify_args.matrix();
        Weight hw = parse_weight(classify_hw, cm.rank(), "--hw");
        QuasiMinusculeReport rep =
            classify_quasi_minuscule(cm, hw, classify_args.build_options());
        write_output(emit_quasiminuscule_json(cm, hw, rep), classify_args.out_path);
        return kExitOk;
    }

    throw UsageError("no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const crystal::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const crystal::NodeCapError& e) {
        std::cerr << "node cap exceeded: " << e.what() << "\n";
        return kExitNodeCap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
