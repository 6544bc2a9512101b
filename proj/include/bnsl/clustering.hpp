#pragma once

#include <utility>
#include <vector>

#include "bnsl/dataset.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

/// Pairwise normalized-MI distances plus the marginal tests they imply.
struct DistanceMatrix {
    int p = 0;
    /// d_ij = 1 - I(X_i, X_j) / H(X_i, X_j), row-major p x p.
    std::vector<double> d;
    /// Pr(chi^2_f > 2 n I(X_i, X_j)), row-major p x p, diagonal 1.
    std::vector<double> marginal_p;
    /// Pairs (i < j) declared marginally independent at the given alpha.
    std::vector<std::pair<int, int>> blacklist;

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)]; }
    double pvalue(int i, int j) const {
        return marginal_p[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)];
    }
};

/// Uses p entropy and p(p-1)/2 mutual-information evaluations.
DistanceMatrix distance_matrix(const Dataset& data, double alpha, CallCounter* counter = nullptr);

struct Partition {
    /// Cluster label per node, 0-based, numbered by smallest member.
    std::vector<int> labels;
    int kappa = 1;

    static Partition single(int p) { return {std::vector<int>(static_cast<std::size_t>(p), 0), 1}; }
    /// Renumbers arbitrary labels so clusters are ordered by smallest member.
    static Partition from_labels(const std::vector<int>& labels);
};

inline constexpr int kMaxClusters = 20;

/// Average-linkage agglomerative clustering of a row-major distance matrix.
/// The dendrogram is cut at the highest merge level giving the most clusters
/// of size >= 0.05 p (at most kMaxClusters of them); smaller clusters are then
/// folded, smallest first, into their nearest cluster by average linkage.
Partition partition(const std::vector<double>& d, int p);

}  // namespace bnsl
