#include "bnsl/pipeline.hpp"

#include <stdexcept>

#include "bnsl/hgi.hpp"

namespace bnsl {

namespace {

const std::pair<const char*, Algorithm> kNames[] = {
    {"pc", Algorithm::pc},         {"ppc", Algorithm::ppc}, {"pc-path", Algorithm::pc_path},
    {"ppc-path", Algorithm::ppc_path}, {"hc", Algorithm::hc},   {"gsc", Algorithm::gsc},
    {"hgi-hc", Algorithm::hgi_hc},   {"phgs", Algorithm::phgs},
};

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    for (const auto& [n, a] : kNames)
        if (name == n) return a;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
    for (const auto& [n, x] : kNames)
        if (x == a) return n;
    return "?";
}

double RunConfig::effective_alpha() const {
    if (alpha) return *alpha;
    switch (algorithm) {
        case Algorithm::hc:
        case Algorithm::gsc:
        case Algorithm::hgi_hc:
        case Algorithm::phgs: return 0.05;
        default: return 0.1;
    }
}

LearnResult learn(const Dataset& data, const RunConfig& cfg) {
    CallCounter counter;
    ScoreCache cache;
    const double alpha = cfg.effective_alpha();
    const double lambda = cfg.lambda ? *cfg.lambda : bic_lambda(data.n());
    DataCi ci(data, alpha, &counter);
    PpcOptions po;
    po.alpha = alpha;
    po.max_size = cfg.max_size;
    po.threads = cfg.threads;
    po.counter = &counter;
    auto constraint = [&](bool partitioned) { return partitioned ? ppc(ci, &data, po) : pc(ci, po); };

    LearnResult out;
    switch (cfg.algorithm) {
        case Algorithm::pc:
        case Algorithm::ppc: out.estimate = constraint(cfg.algorithm == Algorithm::ppc).cpdag; break;
        case Algorithm::pc_path:
        case Algorithm::ppc_path: {
            const auto sk = constraint(cfg.algorithm == Algorithm::ppc_path);
            out.path = path_select(sk.record, sk.skeleton, data, lambda, {cfg.tau, cfg.alpha_min, cfg.seed},
                                   cpdag_orienter(), &cache, &counter);
            out.estimate = out.path->best().estimate;
            break;
        }
        case Algorithm::hc:
            out.estimate = hill_climb(data, Pdag(data.p()), CandidateSet::all(data.p()), lambda, cfg.tabu, &cache, &counter);
            break;
        case Algorithm::gsc: out.estimate = gsc(data, constraint(true).skeleton, lambda, cfg.tabu, &cache, &counter); break;
        case Algorithm::hgi_hc: {
            const auto sk = constraint(true);
            const auto vs = detect_vstructures_from_sepsets(sk.skeleton, sk.record, alpha);
            const Pdag init = hgi(sk.skeleton, data, vs, lambda, &cache, &counter);
            out.estimate = hill_climb(data, init, CandidateSet::from_graph(sk.skeleton), lambda, cfg.tabu, &cache, &counter);
            break;
        }
        case Algorithm::phgs: {
            PhgsOptions o;
            o.alpha = alpha;
            o.max_size = cfg.max_size;
            o.tau = cfg.tau;
            o.alpha_min = cfg.alpha_min;
            o.tabu = cfg.tabu;
            o.seed = cfg.seed;
            o.threads = cfg.threads;
            auto r = phgs(data, lambda, o, &cache, &counter);
            out.estimate = std::move(r.dag);
            out.path = std::move(r.path);
            break;
        }
    }
    out.calls = counter.snapshot();
    return out;
}

}  // namespace bnsl
