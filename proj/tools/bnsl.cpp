// Command-line front end: learn, simulate, oracle-check.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnsl/ci.hpp"
#include "bnsl/dataset.hpp"
#include "bnsl/eval.hpp"
#include "bnsl/path.hpp"
#include "bnsl/pipeline.hpp"
#include "bnsl/rng.hpp"
#include "bnsl/simulate.hpp"
#include "bnsl/skeleton.hpp"

namespace fs = std::filesystem;
using namespace bnsl;

namespace {

constexpr int kConfigError = 1;
constexpr int kDataError = 2;
constexpr int kCheckFailed = 3;

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct LearnArgs {
    std::string algo = "phgs";
    fs::path data;
    fs::path truth;
    fs::path out = ".";
    bool no_header = false;
    double alpha = -1.0;
    int m = 3;
    int tau = 10;
    double alpha_min = 1e-5;
    std::string lambda = "bic";
    int t0 = 100;
    int t1 = 100;
    std::uint64_t seed = 0;
    int threads = 1;
};

int cmd_learn(const LearnArgs& a) {
    RunConfig cfg;
    try {
        cfg.algorithm = parse_algorithm(a.algo);
        if (a.alpha >= 0.0) cfg.alpha = a.alpha;
        if (a.lambda != "bic") {
            if (a.lambda.rfind("fixed:", 0) != 0) throw std::invalid_argument("lambda must be 'bic' or 'fixed:<value>'");
            cfg.lambda = std::stod(a.lambda.substr(6));
        }
        if (a.m < 0 || a.tau < 1 || a.t0 < 0 || a.t1 < 0 || a.threads < 1)
            throw std::invalid_argument("numeric option out of range");
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    cfg.max_size = a.m;
    cfg.tau = a.tau;
    cfg.alpha_min = a.alpha_min;
    cfg.tabu = {a.t0, a.t1};
    cfg.seed = a.seed;
    cfg.threads = a.threads;

    Dataset data;
    std::optional<BayesNet> truth;
    try {
        data = load_csv(a.data, !a.no_header);
        if (!a.truth.empty()) {
            truth = load_net(a.truth);
            if (truth->p() != data.p()) throw DataError("truth network and data differ in variable count");
        }
    } catch (const std::exception& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    }

    const auto res = learn(data, cfg);
    fs::create_directories(a.out);
    write_text(a.out / "estimate.edges", to_edge_list(res.estimate));
    if (res.path) write_text(a.out / "path.json", dump(res.path->to_json()));
    const nlohmann::json calls = {{"ci_tests", res.calls.ci_tests},
                                  {"score_calls", res.calls.score_calls},
                                  {"mi_entropy_calls", res.calls.mi_entropy_calls},
                                  {"total", res.calls.total()}};
    write_text(a.out / "calls.json", dump(calls));
    if (truth) {
        const auto rep = compare(res.estimate, truth->dag, res.calls);
        auto j = to_json(rep);
        j["algorithm"] = a.algo;
        write_text(a.out / "report.json", dump(j));
        write_text(a.out / "report.tsv", tsv_header() + "\n" + tsv_row(rep) + "\n");
    }
    return 0;
}

struct SimArgs {
    std::string net = "asia";
    int copies = 1;
    int max_levels = 8;
    std::size_t n = 1000;
    bool permute = false;
    std::uint64_t seed = 0;
    int threads = 1;
    fs::path out = ".";
};

int cmd_simulate(const SimArgs& a) {
    if (a.copies < 1 || a.max_levels < 2 || a.n < 1 || a.threads < 1) {
        std::cerr << "config error: numeric option out of range\n";
        return kConfigError;
    }
    BayesNet base;
    try {
        const auto names = builtin_names();
        base = std::find(names.begin(), names.end(), a.net) != names.end() ? builtin_net(a.net) : load_net(a.net);
    } catch (const std::exception& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    }
    BayesNet bn = merge_states(tile(base, a.copies, mix_seed(a.seed, "cli_tile", 0)), a.max_levels, mix_seed(a.seed, "cli_merge", 0));
    Dataset d = sample(bn, a.n, mix_seed(a.seed, "cli_sample", 0), a.threads);
    if (a.permute) {
        const auto perm = random_permutation(bn.p(), mix_seed(a.seed, "cli_permute", 0));
        bn = permute_net(bn, perm);
        d = d.permuted(perm);
    }
    fs::create_directories(a.out);
    save_net(bn, a.out / "net.json");
    write_csv(d, a.out / "data.csv");
    return 0;
}

struct OracleArgs {
    int runs = 200;
    int min_p = 4;
    int max_p = 8;
    double edge_prob = 0.3;
    std::uint64_t seed = 0;
    fs::path net;
    int threads = 1;
};

// pPC and PC with the d-separation oracle, plus PATH and DAG extension on
// the oracle output, must all reproduce the true CPDAG.
bool oracle_case(const BayesNet& bn, std::uint64_t seed, int threads, std::string& why) {
    const int p = bn.p();
    const Pdag truth = cpdag_of_dag(bn.dag);
    OracleCi ci(bn.dag);
    auto rng = make_rng(seed, "oracle_partition");
    const auto k = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(p)));
    std::vector<int> labels(static_cast<std::size_t>(p));
    for (auto& l : labels) l = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(k)));
    PpcOptions po;
    po.alpha = 0.5;
    po.threads = threads;
    po.max_size = p;
    po.partition = Partition::from_labels(labels);
    const auto r = ppc(ci, nullptr, po);
    if (!(r.cpdag == truth)) return why = "ppc", false;
    if (!(pc(ci, po).cpdag == truth)) return why = "pc", false;
    const Dataset tiny = sample(bn, 50, seed);
    const auto path = path_select(r.record, r.skeleton, tiny, bic_lambda(50), {2, 0.0, seed}, cpdag_orienter());
    if (!(path.best().estimate == truth)) return why = "path", false;
    const auto ext = pdag_to_dag(truth);
    if (!ext || !(cpdag_of_dag(*ext) == truth)) return why = "extension", false;
    return true;
}

int cmd_oracle_check(const OracleArgs& a) {
    if (a.runs < 0 || a.min_p < 2 || a.max_p < a.min_p || a.edge_prob < 0 || a.edge_prob > 1) {
        std::cerr << "config error: numeric option out of range\n";
        return kConfigError;
    }
    std::optional<BayesNet> fixed;
    if (!a.net.empty()) {
        try {
            fixed = load_net(a.net);
        } catch (const std::exception& e) {
            std::cerr << "data error: " << e.what() << '\n';
            return kDataError;
        }
    }
    int passed = 0;
    for (int r = 0; r < a.runs; ++r) {
        const auto s = mix_seed(a.seed, "oracle_run", static_cast<std::uint64_t>(r));
        BayesNet bn;
        if (fixed) {
            bn = *fixed;
        } else {
            auto rng = make_rng(s, "oracle_size");
            const int p = a.min_p + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(a.max_p - a.min_p + 1)));
            bn = random_net(p, a.edge_prob, 2, 2, s);
        }
        std::string why;
        if (oracle_case(bn, s, a.threads, why))
            ++passed;
        else
            std::cerr << "run " << r << " failed at " << why << '\n';
    }
    std::cout << "oracle-check: " << passed << "/" << a.runs << " passed\n";
    return passed == a.runs ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Bayesian network structure learning"};
    app.require_subcommand(1);

    LearnArgs la;
    auto* learn_cmd = app.add_subcommand("learn", "Learn a structure from a CSV dataset");
    learn_cmd->add_option("--algo", la.algo, "pc, ppc, pc-path, ppc-path, hc, gsc, hgi-hc or phgs");
    learn_cmd->add_option("--data", la.data, "Input CSV")->required();
    learn_cmd->add_option("--truth", la.truth, "True network JSON for evaluation");
    learn_cmd->add_option("--out", la.out, "Output directory");
    learn_cmd->add_flag("--no-header", la.no_header, "CSV has no header row");
    learn_cmd->add_option("--alpha", la.alpha, "Significance level (default depends on algorithm)");
    learn_cmd->add_option("--m", la.m, "Maximum conditioning set size");
    learn_cmd->add_option("--tau", la.tau, "Number of estimates on the solution path");
    learn_cmd->add_option("--alpha-min", la.alpha_min, "Smallest threshold on the solution path");
    learn_cmd->add_option("--lambda", la.lambda, "'bic' or 'fixed:<value>'");
    learn_cmd->add_option("--t0", la.t0, "Tabu iterations without improvement");
    learn_cmd->add_option("--t1", la.t1, "Tabu list length");
    learn_cmd->add_option("--seed", la.seed, "Random seed")->envname("CS_SEED");
    learn_cmd->add_option("--threads", la.threads, "Worker threads");

    SimArgs sa;
    auto* sim_cmd = app.add_subcommand("simulate", "Tile, merge states, sample and optionally permute a network");
    sim_cmd->add_option("--net", sa.net, "Built-in name (asia, cancer, random10) or network JSON");
    sim_cmd->add_option("--copies", sa.copies, "Number of tiled copies");
    sim_cmd->add_option("--max-levels", sa.max_levels, "Maximum states per variable");
    sim_cmd->add_option("--n", sa.n, "Sample size");
    sim_cmd->add_flag("--permute", sa.permute, "Randomly permute variables");
    sim_cmd->add_option("--seed", sa.seed, "Random seed")->envname("CS_SEED");
    sim_cmd->add_option("--threads", sa.threads, "Worker threads");
    sim_cmd->add_option("--out", sa.out, "Output directory");

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Run the pipelines with a d-separation oracle");
    oracle_cmd->alias("oracle_check");
    oracle_cmd->add_option("--runs", oa.runs, "Number of random networks");
    oracle_cmd->add_option("--min-p", oa.min_p, "Smallest network");
    oracle_cmd->add_option("--max-p", oa.max_p, "Largest network");
    oracle_cmd->add_option("--edge-prob", oa.edge_prob, "Edge probability of random networks");
    oracle_cmd->add_option("--net", oa.net, "Check this network JSON instead of random ones");
    oracle_cmd->add_option("--seed", oa.seed, "Random seed")->envname("CS_SEED");
    oracle_cmd->add_option("--threads", oa.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*learn_cmd) return cmd_learn(la);
        if (*sim_cmd) return cmd_simulate(sa);
        if (*oracle_cmd) return cmd_oracle_check(oa);
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
