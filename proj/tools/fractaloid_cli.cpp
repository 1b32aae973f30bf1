// Command-line front end: fractaloid verdicts, moment tables, method
// comparison, lattice path counts, cumulants, and axiom checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "fractaloid/automaton.hpp"
#include "fractaloid/combinatorics.hpp"
#include "fractaloid/freeprob.hpp"
#include "fractaloid/json_io.hpp"
#include "fractaloid/operator.hpp"

namespace {

using nlohmann::ordered_json;
using namespace fractaloid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct Loaded {
    ShadowedGraph graph;
    Weighting weighting;
};

Loaded load(const std::string& path) {
    DirectedGraph g = graph_from_json_file(path);
    Weighting w = canonical_weighting(g);
    return {shadow(std::move(g)), std::move(w)};
}

ordered_json verdict_json(const FractaloidVerdict& v) {
    ordered_json out;
    out["fractaloid"] = v.fractaloid;
    out["degree_ok"] = v.degree_ok;
    out["wpart_ok"] = v.wpart_ok;
    out["uniform_labels"] = v.uniform_labels;
    out["witness"] = v.witness.empty() ? ordered_json(nullptr) : ordered_json(v.witness);
    out["depth"] = v.depth;
    out["N"] = v.N;
    return out;
}

struct MethodValues {
    ordered_json per_vertex; // object for enum/operator, null otherwise
    bool uniform = true;
    std::string value; // decimal string, single value when uniform
};

MethodValues method_moment(const Loaded& in, const std::string& method, std::size_t n,
                           std::uint64_t budget) {
    MethodValues mv;
    mv.per_vertex = nullptr;
    if (method == "enum" || method == "operator") {
        DiagonalElement diag;
        if (method == "enum") {
            for (VertexId v = 0; v < in.graph.vertex_count(); ++v)
                diag.coeff[v] = enumerate_F(in.graph, v, n, budget);
        } else {
            diag = moment_operator(in.graph, n);
        }
        mv.per_vertex = ordered_json::object();
        for (const auto& [v, c] : diag.coeff)
            mv.per_vertex[in.graph.base().vertex_name(v)] = c.get_str();
        mv.uniform = diag.uniform();
        if (mv.uniform) {
            mv.value = diag.common_value().get_str();
        } else {
            std::string joined;
            for (const auto& [v, c] : diag.coeff) {
                if (!joined.empty()) joined += ';';
                joined += c.get_str();
            }
            mv.value = joined;
        }
        return mv;
    }
    int n_labels = static_cast<int>(max_out_degree(in.graph.base()));
    mpz_class count;
    if (method == "zerosum")
        count = count_zero_sum(n_labels, n);
    else if (method == "pascal")
        count = coeff_sum_zero(n_labels, n);
    else
        throw std::invalid_argument("unknown method: " + method);
    mv.value = count.get_str();
    return mv;
}

int run_check(const std::string& path, std::uint32_t depth) {
    Loaded in = load(path);
    FractaloidVerdict v = is_fractaloid(in.graph, in.weighting, depth);
    std::cout << verdict_json(v).dump(2) << "\n";
    return kExitOk;
}

int run_moments(const std::string& path, std::size_t n, const std::string& method,
                std::uint64_t budget) {
    Loaded in = load(path);
    MethodValues mv = method_moment(in, method, n, budget);
    ordered_json out;
    out["n"] = n;
    out["method"] = method;
    out["per_vertex"] = mv.per_vertex;
    out["uniform"] = mv.uniform;
    out["value"] = mv.uniform ? ordered_json(mv.value) : ordered_json(nullptr);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_compare(const std::string& path, std::size_t max_n, bool strict,
                std::uint64_t budget, const std::string& format) {
    Loaded in = load(path);
    bool all_agree = true;
    std::vector<std::array<std::string, 6>> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        MethodValues en = method_moment(in, "enum", n, budget);
        MethodValues op = method_moment(in, "operator", n, budget);
        MethodValues zs = method_moment(in, "zerosum", n, budget);
        MethodValues pc = method_moment(in, "pascal", n, budget);
        bool agree = en.uniform && op.uniform && en.value == op.value &&
                     op.value == zs.value && zs.value == pc.value;
        all_agree = all_agree && agree;
        rows.push_back({std::to_string(n), en.value, op.value, zs.value, pc.value,
                        agree ? "true" : "false"});
    }
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["n"] = r[0];
            row["method_enum"] = r[1];
            row["method_operator"] = r[2];
            row["method_zerosum"] = r[3];
            row["method_pascal"] = r[4];
            row["agree"] = r[5] == "true";
            out.push_back(row);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n,method_enum,method_operator,method_zerosum,method_pascal,agree\n";
        for (const auto& r : rows)
            std::cout << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4]
                      << ',' << r[5] << "\n";
    }
    if (strict && !all_agree) return kExitDisagreement;
    return kExitOk;
}

int run_lattice(int n_labels, std::size_t len, bool axis_only, bool list,
                std::uint64_t budget) {
    std::vector<LatticePath> paths = lattice_paths(n_labels, len, axis_only, budget);
    ordered_json out;
    out["N"] = n_labels;
    out["n"] = len;
    out["axis_only"] = axis_only;
    out["count"] = paths.size();
    if (list) {
        ordered_json arr = ordered_json::array();
        for (const LatticePath& p : paths) arr.push_back(p);
        out["paths"] = arr;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_cumulants(const std::string& path, std::size_t max_n, std::uint64_t budget) {
    Loaded in = load(path);
    std::vector<mpq_class> moments;
    for (std::size_t n = 1; n <= max_n; ++n) {
        DiagonalElement diag;
        for (VertexId v = 0; v < in.graph.vertex_count(); ++v)
            diag.coeff[v] = enumerate_F(in.graph, v, n, budget);
        if (!diag.uniform())
            throw std::invalid_argument(
                "cumulants: per-vertex moments are not uniform; no scalar moment sequence");
        moments.emplace_back(diag.common_value());
    }
    std::vector<mpq_class> cumulants = cumulants_from_moments(moments);
    std::cout << "n,moment,cumulant\n";
    for (std::size_t n = 1; n <= max_n; ++n)
        std::cout << n << ',' << moments[n - 1] << ',' << cumulants[n - 1] << "\n";
    return kExitOk;
}

int run_axioms(const std::string& path, std::size_t samples, std::uint64_t seed) {
    Loaded in = load(path);
    AxiomReport groupoid = check_groupoid_axioms(in.graph, samples, seed);
    ActionCheckResult actions = action_compose_check(in.graph, in.weighting, 3);
    Basis basis(in.graph, 4);
    bool adjoints = true;
    for (int k = 1; k <= in.weighting.N(); ++k)
        adjoints = adjoints && adjoint_check(in.graph, in.weighting, basis, k);
    adjoints = adjoints && labeling_self_adjoint_check(in.graph, basis);

    ordered_json out;
    out["groupoid_axioms"] = groupoid.passed;
    out["groupoid_counterexample"] =
        groupoid.counterexample.empty() ? ordered_json(nullptr)
                                        : ordered_json(groupoid.counterexample);
    out["action_composition"] = actions.passed;
    out["adjoint_identities"] = adjoints;
    out["samples"] = samples;
    out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
    bool ok = groupoid.passed && actions.passed && adjoints;
    return ok ? kExitOk : kExitDisagreement;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"labeled graph groupoids: fractal verdicts and operator moments"};
    app.require_subcommand(1);

    std::uint64_t budget = 0; // 0 = library default / FRACTALOID_BUDGET
    app.add_option("--budget", budget, "enumeration budget in elementary steps");

    std::string graph_path;
    std::uint32_t depth = 3;
    auto* check = app.add_subcommand("check", "decide the fractal property");
    check->add_option("graph", graph_path, "graph json file")->required();
    check->add_option("--depth", depth, "walk-tree depth for the part check");

    std::size_t n = 2;
    std::string method = "operator";
    auto* moments = app.add_subcommand("moments", "diagonal moments of the labeling operator");
    moments->add_option("graph", graph_path, "graph json file")->required();
    moments->add_option("--n", n, "moment order")->required();
    moments->add_option("--method", method, "enum|operator|zerosum|pascal");

    std::size_t max_n = 4;
    bool strict = false;
    std::string format = "csv";
    auto* compare = app.add_subcommand("compare", "compare all moment methods");
    compare->add_option("graph", graph_path, "graph json file")->required();
    compare->add_option("--max-n", max_n, "largest moment order")->required();
    compare->add_flag("--strict", strict, "exit 2 when methods disagree");
    compare->add_option("--format", format, "csv|json");

    int lattice_n = 1;
    std::size_t lattice_len = 2;
    bool axis_only = false;
    bool list_paths = false;
    auto* lattice = app.add_subcommand("lattice", "lattice path enumeration");
    lattice->add_option("--N", lattice_n, "number of step indices")->required();
    lattice->add_option("--n", lattice_len, "path length")->required();
    lattice->add_flag("--axis-only", axis_only, "keep axis-property paths only");
    lattice->add_flag("--list", list_paths, "emit the paths, not just the count");

    auto* cumulants = app.add_subcommand("cumulants", "moment-cumulant table");
    cumulants->add_option("graph", graph_path, "graph json file")->required();
    cumulants->add_option("--max-n", max_n, "largest order")->required();

    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    auto* axioms = app.add_subcommand("axioms", "randomized structural checks");
    axioms->add_option("graph", graph_path, "graph json file")->required();
    axioms->add_option("--samples", samples, "number of random words");
    axioms->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(graph_path, depth);
        if (moments->parsed()) return run_moments(graph_path, n, method, budget);
        if (compare->parsed()) return run_compare(graph_path, max_n, strict, budget, format);
        if (lattice->parsed())
            return run_lattice(lattice_n, lattice_len, axis_only, list_paths, budget);
        if (cumulants->parsed()) return run_cumulants(graph_path, max_n, budget);
        if (axioms->parsed()) return run_axioms(graph_path, samples, seed);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
