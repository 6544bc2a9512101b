#include "bnsl/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bnsl/rng.hpp"

namespace bnsl {

Orienter cpdag_orienter() {
    return [](const Pdag& skeleton, const SeparationRecord& rec, double threshold) {
        const auto vs = detect_vstructures_from_sepsets(skeleton, rec, threshold);
        return Orientation{skel_to_cpdag(skeleton, vs), std::nullopt};
    };
}

Pdag threshold_skeleton(const SeparationRecord& rec, double alpha) {
    const int p = rec.node_count();
    Pdag g(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (rec.phi(i, j) <= alpha) g.add_undirected(i, j);
    return g;
}

std::vector<double> threshold_sequence(const SeparationRecord& rec, const Pdag& skeleton, int tau, double alpha_min) {
    if (tau < 1) throw std::invalid_argument("tau must be at least 1");
    const int p = rec.node_count();
    std::vector<double> phi;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (skeleton.adjacent(i, j)) phi.push_back(std::max(0.0, rec.phi(i, j)));
    std::sort(phi.begin(), phi.end());
    const double top = phi.empty() ? alpha_min : phi.back();
    // A floor above every recorded value collapses the path to one graph.
    alpha_min = std::min(alpha_min, top);
    std::vector<double> out{top};
    if (tau == 1) return out;

    const auto e1 = static_cast<long>(phi.size());
    const auto etau = static_cast<long>(std::upper_bound(phi.begin(), phi.end(), alpha_min) - phi.begin());
    for (int t = 2; t < tau; ++t) {
        const long target = e1 - std::lround(static_cast<double>(t - 1) * static_cast<double>(e1 - etau) / (tau - 1));
        out.push_back(target > etau ? phi[static_cast<std::size_t>(target - 1)] : alpha_min);
    }
    out.push_back(alpha_min);
    return out;
}

double score_difference(const Dataset& data, const Pdag& from, const Pdag& to, double lambda, ScoreCache* cache,
                        CallCounter* counter) {
    double d = 0.0;
    for (int v = 0; v < to.node_count(); ++v) {
        const auto a = from.parents(v);
        const auto b = to.parents(v);
        if (a == b) continue;
        d += family_score(data, v, b, lambda, cache, counter) - family_score(data, v, a, lambda, cache, counter);
    }
    return d;
}

SolutionPath path_select(const SeparationRecord& rec, const Pdag& skeleton, const Dataset& data, double lambda,
                         const PathOptions& opts, const Orienter& orienter, ScoreCache* cache, CallCounter* counter) {
    const auto thresholds = threshold_sequence(rec, skeleton, opts.tau, opts.alpha_min);
    const auto before = counter ? counter->snapshot().score_calls : 0;
    SolutionPath path;
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
        PathStep step;
        step.threshold = thresholds[t];
        step.skeleton = t == 0 ? skeleton : threshold_skeleton(rec, thresholds[t]);
        // Later skeletons must stay inside the first one.
        if (t > 0)
            for (const auto& e : step.skeleton.edges())
                if (!skeleton.adjacent(e.from, e.to)) step.skeleton.remove_edge(e.from, e.to);
        step.edge_count = step.skeleton.edge_count();
        auto o = orienter(step.skeleton, rec, thresholds[t]);
        step.estimate = std::move(o.estimate);
        if (o.dag) {
            step.dag = std::move(*o.dag);
        } else if (auto ext = pdag_to_dag(step.estimate)) {
            step.dag = std::move(*ext);
        } else {
            step.valid = false;
            step.dag = semi_arbitrary_extension(step.estimate, mix_seed(opts.seed, "path_extension", t));
        }
        if (t > 0) {
            const auto& prev = path.steps.back();
            step.delta = score_difference(data, prev.dag, step.dag, lambda, cache, counter);
            step.cumulative = prev.cumulative + step.delta;
        }
        path.steps.push_back(std::move(step));
    }

    const bool any_valid = std::any_of(path.steps.begin(), path.steps.end(), [](const auto& s) { return s.valid; });
    int best = -1;
    for (std::size_t t = 0; t < path.steps.size(); ++t) {
        const auto& s = path.steps[t];
        if (any_valid && !s.valid) continue;
        if (best < 0) {
            best = static_cast<int>(t);
            continue;
        }
        const double cur = path.steps[static_cast<std::size_t>(best)].cumulative;
        if (s.cumulative > cur + 1e-9 * std::max(1.0, std::abs(cur))) best = static_cast<int>(t);
    }
    path.selected = best;
    path.score_calls = counter ? counter->snapshot().score_calls - before : 0;
    return path;
}

nlohmann::json SolutionPath::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& s : steps)
        arr.push_back({{"threshold", s.threshold},
                       {"edge_count", s.edge_count},
                       {"valid", s.valid},
                       {"delta", s.delta},
                       {"cumulative_score", s.cumulative},
                       {"edges", to_edge_list(s.estimate)}});
    return {{"selected", selected}, {"estimates", arr}};
}

}  // namespace bnsl
