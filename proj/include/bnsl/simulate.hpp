#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"

namespace bnsl {

/// Discrete Bayesian network. cpts[v] holds one distribution over the
/// states of v per parent configuration, rows concatenated. Parents are taken
/// in ascending index order and the first parent varies fastest.
struct BayesNet {
    Pdag dag;
    std::vector<int> cards;
    std::vector<std::vector<double>> cpts;
    std::vector<std::string> names;

    int p() const { return dag.node_count(); }
    std::size_t parent_configs(int v) const;
    /// Number of free parameters, sum (r_i - 1) q_i.
    std::size_t parameter_count() const;
    /// Throws std::invalid_argument when shapes or row sums are off.
    void validate() const;
    double prob(int v, std::size_t config, int state) const {
        return cpts[static_cast<std::size_t>(v)][config * static_cast<std::size_t>(cards[static_cast<std::size_t>(v)]) +
                                                 static_cast<std::size_t>(state)];
    }
    /// Parent-configuration index of v within a full assignment.
    std::size_t config_of(int v, std::span<const int> assignment) const;
};

std::vector<int> topological_order(const Pdag& dag);

/// Uniformly random node order; each forward pair joined with probability
/// `edge_prob`.
Pdag random_dag(int p, double edge_prob, std::uint64_t seed);

/// Random DAG with cardinalities in [min_card, max_card] and Dirichlet(1)
/// CPT rows.
BayesNet random_net(int p, double edge_prob, int min_card, int max_card, std::uint64_t seed);

/// Fills every CPT row of v from a symmetric Dirichlet(1).
void dirichlet_cpt(BayesNet& bn, int v, std::mt19937_64& rng);

/// `copies` disjoint copies of `base`. Every root of a non-first copy draws
/// a parent count from the base in-degree distribution (counts above 4
/// excluded) and takes that many parents uniformly from earlier copies; its
/// CPT is redrawn from Dirichlet(1).
BayesNet tile(const BayesNet& base, int copies, std::uint64_t seed);

/// Forward sampling; row r uses its own stream derived from (seed, r), so
/// the output does not depend on `threads`.
Dataset sample(const BayesNet& bn, std::size_t n, std::uint64_t seed, int threads = 1);

/// Random column permutation; perm[k] is the original index of column k.
std::vector<int> random_permutation(int p, std::uint64_t seed);

/// Relabels nodes so that new node k is old node perm[k]; CPTs are
/// re-laid out for the new parent order.
BayesNet permute_net(const BayesNet& bn, std::span<const int> perm);

/// Reduces every variable with more than `max_levels` states by merging
/// random state pairs. Child-side states are summed; parent-side rows are
/// averaged with weights proportional to the merged states' marginals.
BayesNet merge_states(const BayesNet& bn, int max_levels, std::uint64_t seed);

/// Exact single-variable marginals by enumeration of the joint.
std::vector<std::vector<double>> exact_marginals(const BayesNet& bn);

nlohmann::json to_json(const BayesNet& bn);
BayesNet bayesnet_from_json(const nlohmann::json& j);
BayesNet load_net(const std::filesystem::path& path);
void save_net(const BayesNet& bn, const std::filesystem::path& path);

/// Built-in nets: "asia" (8 nodes), "cancer" (5 nodes), "random10".
BayesNet builtin_net(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace bnsl
