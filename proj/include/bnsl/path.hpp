#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

/// An oriented estimate and, when the orienter produces one itself, the DAG
/// used to score it.
struct Orientation {
    Pdag estimate;
    std::optional<Pdag> dag;
};

/// Maps a thresholded skeleton to an oriented estimate. `threshold` tells
/// which separation sets are in force (those of pairs with phi above it).
using Orienter = std::function<Orientation(const Pdag& skeleton, const SeparationRecord& rec, double threshold)>;

/// Sepset v-structures followed by Meek closure.
Orienter cpdag_orienter();

/// Pairs whose recorded maximum p-value is at most `alpha` (untested pairs
/// are always kept).
Pdag threshold_skeleton(const SeparationRecord& rec, double alpha);

/// Decreasing thresholds from the largest phi among pairs adjacent in
/// `skeleton` down to `alpha_min`, spaced by order statistics of phi so that
/// consecutive edge counts drop by roughly equal amounts. `alpha_min` is
/// lowered to the largest such phi when it exceeds it.
std::vector<double> threshold_sequence(const SeparationRecord& rec, const Pdag& skeleton, int tau, double alpha_min);

struct PathStep {
    double threshold = 0.0;
    Pdag skeleton;
    Pdag estimate;
    Pdag dag;
    bool valid = true;
    double delta = 0.0;
    double cumulative = 0.0;
    int edge_count = 0;
};

struct SolutionPath {
    std::vector<PathStep> steps;
    int selected = 0;
    std::uint64_t score_calls = 0;

    const PathStep& best() const { return steps.at(static_cast<std::size_t>(selected)); }
    nlohmann::json to_json() const;
};

struct PathOptions {
    int tau = 10;
    double alpha_min = 1e-5;
    std::uint64_t seed = 0;
};

/// Builds the solution path and selects the estimate with the largest
/// cumulative score difference, among valid estimates when there are any;
/// ties go to the densest. Estimates without a consistent extension are
/// scored through a seeded semi-arbitrary extension.
SolutionPath path_select(const SeparationRecord& rec, const Pdag& skeleton, const Dataset& data, double lambda,
                         const PathOptions& opts, const Orienter& orienter, ScoreCache* cache = nullptr,
                         CallCounter* counter = nullptr);

/// Score difference between two DAGs, rescoring only families whose parent
/// sets differ.
double score_difference(const Dataset& data, const Pdag& from, const Pdag& to, double lambda, ScoreCache* cache,
                        CallCounter* counter);

}  // namespace bnsl
