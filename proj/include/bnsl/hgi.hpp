#pragma once

#include <span>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/path.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

/// Hybrid greedy initialization. Candidate v-structures are applied greedily
/// by score gain; the remaining skeleton is then resolved one edge at a time,
/// orienting toward Dor-Tarsi sink candidates (or Meek-compelled edges when
/// there are none) when that improves the score and deleting the least
/// favourable candidate otherwise. Returns the DAG of committed edges.
Pdag hgi(const Pdag& skeleton, const Dataset& data, std::span<const VStructure> vstructs, double lambda,
         ScoreCache* cache = nullptr, CallCounter* counter = nullptr);

/// PATH orienter that runs HGI on each thresholded skeleton with v-structures
/// detected from the separation sets in force.
Orienter hgi_orienter(const Dataset& data, double lambda, ScoreCache* cache, CallCounter* counter);

}  // namespace bnsl
