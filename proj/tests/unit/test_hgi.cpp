#include <doctest.h>

#include "bnsl/ci.hpp"
#include "bnsl/hgi.hpp"
#include "bnsl/simulate.hpp"
#include "../support/oracles.hpp"

using namespace bnsl;

namespace {

bool subset_of_skeleton(const Pdag& g, const Pdag& skel) {
    for (const auto& e : g.edges())
        if (!skel.adjacent(e.from, e.to)) return false;
    return true;
}

BayesNet with_strong_cpts(Pdag dag, std::uint64_t seed) {
    // Rows alternate between two peaked distributions so every edge matters.
    BayesNet bn;
    bn.dag = std::move(dag);
    bn.cards.assign(bn.dag.node_count(), 2);
    bn.names.resize(bn.cards.size());
    auto rng = make_rng(seed, "strong_cpts");
    for (int v = 0; v < bn.p(); ++v) {
        std::vector<double> cpt;
        for (std::size_t q = 0; q < bn.parent_configs(v); ++q) {
            const double hi = 0.8 + 0.15 * uniform01(rng);
            const bool flip = (q + static_cast<std::size_t>(v)) % 2 == 1;
            cpt.push_back(flip ? 1 - hi : hi);
            cpt.push_back(flip ? hi : 1 - hi);
        }
        bn.cpts.push_back(cpt);
        bn.names[v] = "v" + std::to_string(v);
    }
    bn.validate();
    return bn;
}

}  // namespace

TEST_CASE("true skeleton and v-structures give the true class") {
    int ok = 0;
    for (int s = 0; s < 20; ++s) {
        const auto bn = random_net(6, 0.4, 2, 3, mix_seed(1, "hgi_collider", s));
        const auto d = sample(bn, 100000, mix_seed(1, "hgi_collider_data", s));
        const auto out = hgi(bn.dag.skeleton(), d, vstructures_of(bn.dag), bic_lambda(d.n()));
        CHECK(out.is_dag());
        ok += cpdag_of_dag(out) == cpdag_of_dag(bn.dag);
    }
    CHECK(ok >= 19);
}

TEST_CASE("a tree without v-structures is oriented without colliders") {
    Pdag tree(6);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}) tree.add_directed(a, b);
    const auto bn = with_strong_cpts(tree, 2);
    const auto d = sample(bn, 5000, 3);
    const auto out = hgi(tree.skeleton(), d, {}, bic_lambda(d.n()));
    CHECK(out.is_dag());
    CHECK(out.skeleton() == tree.skeleton());
    CHECK(oracle::colliders(out).empty());
}

TEST_CASE("a spurious triangle edge can leave a new v-structure") {
    // True collider 0->2<-1; the skeleton wrongly adds 0--1 and carries no
    // v-structures. Deleting 0--1 after orienting both edges into 2 leaves
    // 0->2<-1. Look for at least one seed where that is what the score wants.
    Pdag truth(3);
    truth.add_directed(0, 2);
    truth.add_directed(1, 2);
    const auto bn = with_strong_cpts(truth, 4);
    Pdag triangle = Pdag::complete(3);
    int found = 0;
    for (int s = 0; s < 10; ++s) {
        const auto d = sample(bn, 5000, mix_seed(4, "triangle", s));
        const auto out = hgi(triangle, d, {}, bic_lambda(d.n()));
        CHECK(out.is_dag());
        found += out == truth;
    }
    CHECK(found >= 1);
}

TEST_CASE("output stays inside the skeleton and is deterministic") {
    for (int s = 0; s < 10; ++s) {
        const auto bn = random_net(8, 0.35, 2, 3, mix_seed(5, "hgi_net", s));
        const auto d = sample(bn, 3000, mix_seed(5, "hgi_data", s));
        Pdag skel = bn.dag.skeleton();
        // a couple of spurious pairs
        skel.add_undirected(0, 7);
        skel.add_undirected(2, 5);
        const auto vs = detect_vstructures_by_testing(skel, DataCi(d, 0.05), 3);
        ScoreCache cache;
        const auto a = hgi(skel, d, vs, bic_lambda(d.n()), &cache);
        const auto b = hgi(skel, d, vs, bic_lambda(d.n()));
        CHECK(a == b);
        CHECK(a.is_dag());
        CHECK(subset_of_skeleton(a, skel));
    }
}

TEST_CASE("hgi never lowers the score of the empty graph") {
    for (int s = 0; s < 10; ++s) {
        const auto bn = random_net(7, 0.4, 2, 3, mix_seed(6, "hgi_mono", s));
        const auto d = sample(bn, 2000, mix_seed(6, "hgi_mono_data", s));
        const double lambda = bic_lambda(d.n());
        const auto out = hgi(bn.dag.skeleton(), d, vstructures_of(bn.dag), lambda);
        CHECK(graph_score(d, out, lambda) >= graph_score(d, Pdag(7), lambda) - 1e-9);
    }
}
