#include <doctest.h>

#include "bnsl/eval.hpp"
#include "bnsl/simulate.hpp"

using namespace bnsl;

TEST_CASE("perfect estimate") {
    const Pdag truth = builtin_net("asia").dag;
    const auto r = compare(cpdag_of_dag(truth), truth);
    CHECK(r.ji == 1.0);
    CHECK(r.shd == 0);
    CHECK(r.tp == truth.edge_count());
}

TEST_CASE("empty estimate") {
    Pdag truth(6);
    for (int v = 1; v < 6; ++v) truth.add_directed(v - 1, v);
    const auto r = compare(Pdag(6), truth);
    CHECK(r.ji == 0.0);
    CHECK(r.shd == 5);
    CHECK(r.p_true == 5);
}

TEST_CASE("undirected skeleton against a collider") {
    Pdag truth(3);
    truth.add_directed(0, 2);
    truth.add_directed(1, 2);
    const auto r = compare(truth.skeleton(), truth);
    CHECK(r.tp == 0);
    CHECK(r.ji == 0.0);
    CHECK(r.shd == 2);
    CHECK(r.reversed == 2);
    CHECK(r.fp == 0);
}

TEST_CASE("false positives and a reversal") {
    Pdag truth(4), est(4);
    truth.add_directed(0, 2);
    truth.add_directed(1, 2);
    est.add_directed(0, 2);
    est.add_directed(2, 1);
    est.add_undirected(1, 3);
    const auto r = compare_raw(est, truth);
    CHECK(r.tp == 1);
    CHECK(r.reversed == 1);
    CHECK(r.fp == 1);
    CHECK(r.shd == 2);
    CHECK(r.ji == doctest::Approx(1.0 / 4.0));
}

TEST_CASE("both empty") {
    CHECK(compare(Pdag(3), Pdag(3)).ji == 1.0);
}

TEST_CASE("reports serialize") {
    CallSnapshot calls{3, 4, 5};
    const auto r = compare(Pdag(2), Pdag(2), calls);
    const auto j = to_json(r);
    CHECK(j["calls"]["ci_tests"] == 3);
    CHECK(j["calls"]["total"] == 12);
    CHECK(tsv_row(r).find('\t') != std::string::npos);
    CHECK(tsv_header().rfind("tp\t", 0) == 0);
}
