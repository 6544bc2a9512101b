#pragma once

#include <span>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

struct CiOutcome {
    double p_value = 0.0;
    bool independent = false;
    /// False when the test could not be run (cell budget); such outcomes are
    /// treated as dependence and never recorded.
    bool evaluated = true;
};

/// Conditional-independence information consumed by the skeleton learners.
class CiSource {
public:
    virtual ~CiSource() = default;
    virtual int node_count() const = 0;
    virtual CiOutcome test(int i, int j, std::span<const int> cond) const = 0;
};

/// G^2 tests on data; independence iff p-value > alpha.
class DataCi final : public CiSource {
public:
    DataCi(const Dataset& data, double alpha, CallCounter* counter = nullptr,
           std::size_t cell_budget = kDefaultCellBudget)
        : data_(&data), alpha_(alpha), counter_(counter), budget_(cell_budget) {}

    int node_count() const override { return data_->p(); }
    double alpha() const { return alpha_; }
    const Dataset& data() const { return *data_; }

    CiOutcome test(int i, int j, std::span<const int> cond) const override {
        try {
            const auto r = g_squared(*data_, i, j, cond, counter_, budget_);
            return {r.p_value, r.p_value > alpha_, true};
        } catch (const CellBudgetExceeded&) {
            return {0.0, false, false};
        }
    }

private:
    const Dataset* data_;
    double alpha_;
    CallCounter* counter_;
    std::size_t budget_;
};

/// d-separation oracle over a known DAG. Reports p-value 1 for separated
/// pairs and 0 otherwise.
class OracleCi final : public CiSource {
public:
    explicit OracleCi(const Pdag& dag, CallCounter* counter = nullptr) : dag_(&dag), counter_(counter) {}

    int node_count() const override { return dag_->node_count(); }

    CiOutcome test(int i, int j, std::span<const int> cond) const override {
        if (counter_) counter_->add_ci_test();
        const bool sep = d_separated(*dag_, i, j, cond);
        return {sep ? 1.0 : 0.0, sep, true};
    }

private:
    const Pdag* dag_;
    CallCounter* counter_;
};

}  // namespace bnsl
