#include "bnsl/eval.hpp"

#include <sstream>
#include <stdexcept>

namespace bnsl {

namespace {

// 0 absent, 1 undirected, 2 a->b, 3 b->a
int status(const Pdag& g, int a, int b) {
    if (!g.adjacent(a, b)) return 0;
    if (g.undirected(a, b)) return 1;
    return g.directed(a, b) ? 2 : 3;
}

}  // namespace

EvalReport compare_raw(const Pdag& est, const Pdag& truth, CallSnapshot calls) {
    if (est.node_count() != truth.node_count()) throw std::invalid_argument("graphs differ in node count");
    EvalReport r;
    r.calls = calls;
    const int p = est.node_count();
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            const int se = status(est, a, b);
            const int st = status(truth, a, b);
            if (se) ++r.p_est;
            if (st) ++r.p_true;
            if (se != st) ++r.shd;
            if (se && se == st) ++r.tp;
            if (se && st && se != st) ++r.reversed;
            if (se && !st) ++r.fp;
        }
    const int denom = r.p_est + r.p_true - r.tp;
    r.ji = denom == 0 ? 1.0 : static_cast<double>(r.tp) / denom;
    return r;
}

EvalReport compare(const Pdag& est, const Pdag& truth, CallSnapshot calls) {
    const Pdag t = cpdag_of_dag(truth);
    const Pdag e = est.is_dag() ? cpdag_of_dag(est) : est;
    return compare_raw(e, t, calls);
}

nlohmann::json to_json(const EvalReport& r) {
    return {{"tp", r.tp},
            {"p_est", r.p_est},
            {"p_true", r.p_true},
            {"reversed", r.reversed},
            {"fp", r.fp},
            {"ji", r.ji},
            {"shd", r.shd},
            {"calls",
             {{"ci_tests", r.calls.ci_tests},
              {"score_calls", r.calls.score_calls},
              {"mi_entropy_calls", r.calls.mi_entropy_calls},
              {"total", r.calls.total()}}}};
}

std::string tsv_header() { return "tp\tp_est\tp_true\treversed\tfp\tji\tshd\tci_tests\tscore_calls\tmi_entropy_calls"; }

std::string tsv_row(const EvalReport& r) {
    std::ostringstream o;
    o.precision(6);
    o << r.tp << '\t' << r.p_est << '\t' << r.p_true << '\t' << r.reversed << '\t' << r.fp << '\t' << r.ji << '\t' << r.shd
      << '\t' << r.calls.ci_tests << '\t' << r.calls.score_calls << '\t' << r.calls.mi_entropy_calls;
    return o.str();
}

}  // namespace bnsl
