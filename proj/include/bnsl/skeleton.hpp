#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bnsl/ci.hpp"
#include "bnsl/clustering.hpp"
#include "bnsl/graph.hpp"

namespace bnsl {

/// Extra admissibility test on a conditioning set for pair (i, j), i < j.
using SetFilter = std::function<bool(int i, int j, std::span<const int> set)>;

struct SkeletonOptions {
    int max_size = 3;
    int start_level = 0;
    int threads = 1;
    SetFilter filter;
};

/// PC-stable adjacency search starting from `init`. Neighbourhoods are
/// frozen at the start of each level; for each adjacent pair, subsets of
/// N(i)\{j} then unseen subsets of N(j)\{i} are tested in lexicographic order
/// and the edge is removed at the first independence. Every evaluated test
/// updates `rec`. Results do not depend on `threads`.
Pdag pc_skeleton(const CiSource& ci, Pdag init, SeparationRecord& rec, const SkeletonOptions& opts);

struct PpcOptions {
    double alpha = 0.05;
    int max_size = 3;
    int threads = 1;
    /// Fixed cluster assignment. When absent the partition is learned from
    /// the normalized-MI distances of `data`.
    std::optional<Partition> partition;
    CallCounter* counter = nullptr;
};

struct PpcResult {
    Pdag skeleton;
    Pdag cpdag;
    SeparationRecord record;
    Partition partition;
    std::vector<std::pair<int, int>> blacklist;
    /// Snapshots after the within-cluster stage and after each screen.
    Pdag after_within;
    Pdag after_screen1;
    Pdag after_screen2;
};

/// Partitioned PC. `data` is required when no partition is supplied; with a
/// supplied partition the marginal tests are run through `ci`.
PpcResult ppc(const CiSource& ci, const Dataset* data, const PpcOptions& opts);

/// Plain PC-stable from the complete graph (marginal tests through `ci`)
/// followed by orientation from separation sets.
PpcResult pc(const CiSource& ci, const PpcOptions& opts);

}  // namespace bnsl
