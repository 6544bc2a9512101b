#pragma once

#include <optional>
#include <string>

#include "bnsl/dataset.hpp"
#include "bnsl/path.hpp"
#include "bnsl/search.hpp"
#include "bnsl/skeleton.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

enum class Algorithm { pc, ppc, pc_path, ppc_path, hc, gsc, hgi_hc, phgs };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct RunConfig {
    Algorithm algorithm = Algorithm::phgs;
    /// Significance level; when unset, 0.05 for score-based methods and 0.1
    /// for the constraint-based ones.
    std::optional<double> alpha;
    int max_size = 3;
    int tau = 10;
    double alpha_min = 1e-5;
    /// Fixed penalty; BIC's 0.5 log n when unset.
    std::optional<double> lambda;
    TabuConfig tabu;
    std::uint64_t seed = 0;
    int threads = 1;

    double effective_alpha() const;
};

struct LearnResult {
    /// CPDAG, PDAG or DAG depending on the algorithm.
    Pdag estimate;
    std::optional<SolutionPath> path;
    CallSnapshot calls;
};

LearnResult learn(const Dataset& data, const RunConfig& cfg);

}  // namespace bnsl
