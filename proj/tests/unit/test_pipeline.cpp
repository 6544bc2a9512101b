#include <doctest.h>

#include "bnsl/eval.hpp"
#include "bnsl/pipeline.hpp"
#include "bnsl/simulate.hpp"

using namespace bnsl;

TEST_CASE("algorithm names round trip") {
    for (auto a : {Algorithm::pc, Algorithm::ppc, Algorithm::pc_path, Algorithm::ppc_path, Algorithm::hc, Algorithm::gsc,
                   Algorithm::hgi_hc, Algorithm::phgs})
        CHECK(parse_algorithm(algorithm_name(a)) == a);
    CHECK_THROWS(parse_algorithm("ges"));
}

TEST_CASE("default significance levels") {
    RunConfig c;
    c.algorithm = Algorithm::phgs;
    CHECK(c.effective_alpha() == 0.05);
    c.algorithm = Algorithm::ppc_path;
    CHECK(c.effective_alpha() == 0.1);
    c.alpha = 0.01;
    CHECK(c.effective_alpha() == 0.01);
}

TEST_CASE("every algorithm learns a reasonable asia") {
    const auto bn = builtin_net("asia");
    const auto d = sample(bn, 20000, 1);
    for (auto a : {Algorithm::pc, Algorithm::ppc, Algorithm::pc_path, Algorithm::ppc_path, Algorithm::hc, Algorithm::gsc,
                   Algorithm::hgi_hc, Algorithm::phgs}) {
        RunConfig c;
        c.algorithm = a;
        const auto r = learn(d, c);
        CAPTURE(algorithm_name(a));
        CHECK(compare(r.estimate, bn.dag).ji >= 0.6);
        const bool has_path = a == Algorithm::pc_path || a == Algorithm::ppc_path || a == Algorithm::phgs;
        CHECK(r.path.has_value() == has_path);
        const bool score_based = a == Algorithm::hc || a == Algorithm::gsc || a == Algorithm::hgi_hc || a == Algorithm::phgs;
        if (score_based) CHECK(r.estimate.is_dag());
        if (a == Algorithm::hc) CHECK(r.calls.ci_tests == 0);
        if (a == Algorithm::ppc || a == Algorithm::phgs) CHECK(r.calls.mi_entropy_calls == 36);
    }
}

TEST_CASE("fixed lambda is used") {
    const auto d = sample(builtin_net("cancer"), 2000, 2);
    RunConfig c;
    c.algorithm = Algorithm::hc;
    c.lambda = 1e6;
    CHECK(learn(d, c).estimate.edge_count() == 0);
}
