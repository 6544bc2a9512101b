#pragma once

#include <string>

#include <json.hpp>

#include "bnsl/graph.hpp"
#include "bnsl/stats.hpp"

namespace bnsl {

struct EvalReport {
    int tp = 0;
    int p_est = 0;
    int p_true = 0;
    /// Adjacent in both graphs but with a different edge kind or direction.
    int reversed = 0;
    /// Adjacent in the estimate only.
    int fp = 0;
    double ji = 0.0;
    int shd = 0;
    CallSnapshot calls;
};

/// Compares CPDAG forms: the truth through cpdag_of_dag, the estimate through
/// cpdag_of_dag when it is a DAG and as given otherwise.
EvalReport compare(const Pdag& est, const Pdag& truth, CallSnapshot calls = {});

/// Same comparison with both graphs taken as given.
EvalReport compare_raw(const Pdag& est, const Pdag& truth_cpdag, CallSnapshot calls = {});

nlohmann::json to_json(const EvalReport& r);
std::string tsv_header();
std::string tsv_row(const EvalReport& r);

}  // namespace bnsl
