#include <doctest.h>

#include "bnsl/ci.hpp"
#include "bnsl/hgi.hpp"
#include "bnsl/rng.hpp"
#include "bnsl/search.hpp"
#include "bnsl/simulate.hpp"

using namespace bnsl;

TEST_CASE("starting at the truth with the true candidates") {
    int ok = 0;
    const int runs = 20;
    for (int s = 0; s < runs; ++s) {
        const auto bn = random_net(8, 0.3, 2, 3, mix_seed(1, "search_truth", s));
        const auto d = sample(bn, 25000, mix_seed(1, "search_data", s));
        const double lambda = bic_lambda(d.n());
        const auto out = hill_climb(d, bn.dag, CandidateSet::from_graph(bn.dag), lambda);
        CHECK(graph_score(d, out, lambda) >= graph_score(d, bn.dag, lambda));
        ok += cpdag_of_dag(out) == cpdag_of_dag(bn.dag);
    }
    CHECK(ok >= 18);
}

TEST_CASE("no candidates") {
    const auto bn = random_net(5, 0.5, 2, 3, 2);
    const auto d = sample(bn, 2000, 3);
    const CandidateSet none(5);
    CHECK(hill_climb(d, Pdag(5), none, bic_lambda(d.n())) == Pdag(5));
    const auto out = hill_climb(d, bn.dag, none, bic_lambda(d.n()));
    for (const auto& e : out.edges()) CHECK(bn.dag.adjacent(e.from, e.to));
}

TEST_CASE("two dependent variables") {
    std::vector<Level> a, b;
    for (int r = 0; r < 400; ++r) {
        a.push_back(r % 2);
        b.push_back(r % 5 == 0 ? 1 - r % 2 : r % 2);
    }
    const Dataset d({a, b}, {2, 2});
    CandidateSet c(2);
    c.allow(0, 1);
    const auto out = hill_climb(d, Pdag(2), c, bic_lambda(d.n()));
    CHECK(out.edge_count() == 1);
    CHECK(out.directed(0, 1));
}

TEST_CASE("gsc is hill climbing from the empty graph") {
    const auto bn = random_net(7, 0.4, 2, 3, 4);
    const auto d = sample(bn, 5000, 5);
    const double lambda = bic_lambda(d.n());
    const Pdag skel = bn.dag.skeleton();
    CHECK(gsc(d, skel, lambda) == hill_climb(d, Pdag(7), CandidateSet::from_graph(skel), lambda));
}

TEST_CASE("hill climbing respects candidates and stays acyclic") {
    for (int s = 0; s < 10; ++s) {
        const auto bn = random_net(8, 0.4, 2, 3, mix_seed(6, "hc", s));
        const auto d = sample(bn, 3000, mix_seed(6, "hc_data", s));
        const double lambda = bic_lambda(d.n());
        const Pdag skel = bn.dag.skeleton();
        const auto out = gsc(d, skel, lambda, {10, 10});
        CHECK(out.is_dag());
        for (const auto& e : out.edges()) CHECK(skel.adjacent(e.from, e.to));
        CHECK(graph_score(d, out, lambda) >= graph_score(d, Pdag(8), lambda));
    }
}

TEST_CASE("candidate sets") {
    Pdag g(4);
    g.add_directed(2, 0);
    const auto c = CandidateSet::from_graph(g);
    CHECK(c.allows(0, 2));
    CHECK(c.allows(2, 0));
    CHECK_FALSE(c.allows(0, 1));
    const auto all = CandidateSet::all(4);
    CHECK(all.allows(3, 1));
    CHECK_FALSE(all.allows(1, 1));
}

TEST_CASE("phgs recovers a small network at large n") {
    const auto bn = builtin_net("asia");
    const auto d = sample(bn, 50000, 7);
    const auto r = phgs(d, bic_lambda(d.n()), {});
    CHECK(cpdag_of_dag(r.dag) == cpdag_of_dag(bn.dag));
}

TEST_CASE("phgs with one step is hgi then restricted search") {
    const auto d = sample(tile(builtin_net("asia"), 2, 8), 5000, 9);
    const double lambda = bic_lambda(d.n());
    PhgsOptions o;
    o.tau = 1;
    const auto r = phgs(d, lambda, o);

    DataCi ci(d, o.alpha);
    PpcOptions po;
    po.alpha = o.alpha;
    const auto sk = ppc(ci, &d, po);
    double top = 0;
    for (const auto& e : sk.skeleton.edges()) top = std::max(top, sk.record.phi(e.from, e.to));
    const auto vs = detect_vstructures_from_sepsets(sk.skeleton, sk.record, top);
    const auto init = hgi(sk.skeleton, d, vs, lambda);
    CHECK(r.dag == hill_climb(d, init, CandidateSet::from_graph(sk.skeleton), lambda));
}
