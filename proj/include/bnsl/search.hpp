#pragma once

#include <cstdint>
#include <vector>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/path.hpp"
#include "bnsl/skeleton.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

/// Unordered node pairs allowed to carry an edge.
class CandidateSet {
public:
    explicit CandidateSet(int p = 0) : p_(p), allowed_(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0) {}
    static CandidateSet all(int p);
    static CandidateSet from_graph(const Pdag& g);

    int node_count() const { return p_; }
    bool allows(int i, int j) const { return allowed_[static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(j)] != 0; }
    void allow(int i, int j);

private:
    int p_;
    std::vector<char> allowed_;
};

struct TabuConfig {
    /// Iterations allowed without improving the best score.
    int t0 = 100;
    /// Number of recent structures that may not be revisited.
    int t1 = 100;
};

/// Hill-climbing over single-edge additions, deletions and reversals, taking
/// the best non-tabu move each step (even when it lowers the score) until t0
/// consecutive steps fail to improve on the best DAG seen, which is returned.
/// Ties prefer additions, then deletions, then reversals, then the smaller
/// pair, then i->j over j->i.
Pdag hill_climb(const Dataset& data, const Pdag& init, const CandidateSet& candidates, double lambda,
                const TabuConfig& tabu = {}, ScoreCache* cache = nullptr, CallCounter* counter = nullptr);

/// Hill-climbing from the empty graph restricted to the adjacencies of
/// `skeleton`.
Pdag gsc(const Dataset& data, const Pdag& skeleton, double lambda, const TabuConfig& tabu = {},
         ScoreCache* cache = nullptr, CallCounter* counter = nullptr);

struct PhgsOptions {
    double alpha = 0.05;
    int max_size = 3;
    int tau = 10;
    double alpha_min = 1e-5;
    TabuConfig tabu;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct PhgsResult {
    Pdag dag;
    PpcResult skeleton;
    SolutionPath path;
};

/// pPC skeleton, PATH over HGI estimates, then hill-climbing from the
/// selected DAG restricted to the densest skeleton on the path.
PhgsResult phgs(const Dataset& data, double lambda, const PhgsOptions& opts, ScoreCache* cache = nullptr,
                CallCounter* counter = nullptr);

}  // namespace bnsl
