#pragma once

// The desk-scale benchmark: four tiled copies of the 8-node ASIA-like net.

#include "bnsl/rng.hpp"
#include "bnsl/simulate.hpp"

namespace workload {

struct Instance {
    bnsl::BayesNet net;
    bnsl::Dataset data;
};

inline Instance tiled_asia(std::uint64_t seed, int copies = 4, std::size_t n = 25000) {
    Instance w;
    w.net = bnsl::tile(bnsl::builtin_net("asia"), copies, bnsl::mix_seed(seed, "workload_tile", 0));
    w.data = bnsl::sample(w.net, n, bnsl::mix_seed(seed, "workload_sample", 0));
    return w;
}

}  // namespace workload
