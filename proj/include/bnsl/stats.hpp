#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "bnsl/dataset.hpp"

namespace bnsl {

class Pdag;

struct CallSnapshot {
    std::uint64_t ci_tests = 0;
    std::uint64_t score_calls = 0;
    std::uint64_t mi_entropy_calls = 0;

    std::uint64_t total() const { return ci_tests + score_calls + mi_entropy_calls; }
};

/// Statistical-call tallies. Increments are atomic so concurrent workers
/// produce the same totals as a sequential run.
class CallCounter {
public:
    CallCounter() = default;
    CallCounter(const CallCounter&) = delete;
    CallCounter& operator=(const CallCounter&) = delete;

    void add_ci_test() { ci_tests_.fetch_add(1, std::memory_order_relaxed); }
    void add_score_call() { score_calls_.fetch_add(1, std::memory_order_relaxed); }
    void add_mi_entropy_call() { mi_entropy_calls_.fetch_add(1, std::memory_order_relaxed); }

    CallSnapshot snapshot() const {
        return {ci_tests_.load(), score_calls_.load(), mi_entropy_calls_.load()};
    }

private:
    std::atomic<std::uint64_t> ci_tests_{0};
    std::atomic<std::uint64_t> score_calls_{0};
    std::atomic<std::uint64_t> mi_entropy_calls_{0};
};

struct CiTestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

/// Pr(chi^2_df > stat) via the regularized upper incomplete gamma function.
double chi_square_upper_tail(double stat, double df);

/// Empirical entropy in nats.
double entropy(const Dataset& data, int i, CallCounter* counter = nullptr);

/// Empirical joint entropy of (X_i, X_j) in nats.
double joint_entropy(const Dataset& data, int i, int j, CallCounter* counter = nullptr);

/// Empirical mutual information in nats. Requires i != j; use entropy() for
/// I(X, X).
double mutual_information(const Dataset& data, int i, int j, CallCounter* counter = nullptr);

/// G^2 likelihood-ratio test of X_i _||_ X_j | X_cond with
/// df = (r_i - 1)(r_j - 1) prod r_k. Empty strata are not subtracted from df.
CiTestResult g_squared(const Dataset& data, int i, int j, std::span<const int> cond,
                       CallCounter* counter = nullptr, std::size_t cell_budget = kDefaultCellBudget);

/// BIC penalty weight 0.5 * log(n).
double bic_lambda(std::size_t n);

/// Memoized family scores keyed by (child, sorted parent set). Inserts are
/// idempotent, so concurrent writers cannot change observed values.
class ScoreCache {
public:
    bool lookup(int child, std::span<const int> sorted_parents, double& value) const;
    void insert(int child, std::span<const int> sorted_parents, double value);

    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }
    std::size_t size() const;

private:
    static std::vector<int> key(int child, std::span<const int> parents);

    mutable std::mutex mutex_;
    std::map<std::vector<int>, double> entries_;
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
};

/// Penalized multinomial log-likelihood of X_i given `parents`:
///   sum n[x, pa] log(n[x, pa] / n[pa]) - lambda (r_i - 1) q_i.
/// Returns -infinity when the family table exceeds the cell budget. The
/// counter is bumped only when the cache misses.
double family_score(const Dataset& data, int i, std::span<const int> parents, double lambda,
                    ScoreCache* cache = nullptr, CallCounter* counter = nullptr,
                    std::size_t cell_budget = kDefaultCellBudget);

/// Sum of family scores of a fully directed acyclic graph. Throws
/// std::invalid_argument otherwise.
double graph_score(const Dataset& data, const Pdag& dag, double lambda, ScoreCache* cache = nullptr,
                   CallCounter* counter = nullptr);

}  // namespace bnsl
