#include <doctest.h>

#include <cmath>

#include "bnsl/simulate.hpp"
#include "bnsl/stats.hpp"
#include "../support/oracles.hpp"

using namespace bnsl;

namespace {

Dataset from_columns(std::vector<std::vector<Level>> cols) {
    std::vector<int> cards;
    for (const auto& c : cols) cards.push_back(*std::max_element(c.begin(), c.end()) + 1);
    return Dataset(std::move(cols), cards);
}

// Two binary columns with the given cell counts for (0,0), (0,1), (1,0), (1,1).
Dataset table2x2(int a, int b, int c, int d) {
    std::vector<std::vector<Level>> cols(2);
    auto put = [&](int k, Level x, Level y) {
        for (int r = 0; r < k; ++r) cols[0].push_back(x), cols[1].push_back(y);
    };
    put(a, 0, 0);
    put(b, 0, 1);
    put(c, 1, 0);
    put(d, 1, 1);
    return from_columns(cols);
}

double big(const oracle::Big& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("entropy closed forms") {
    CHECK(entropy(from_columns({{0, 1}}), 0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(entropy(from_columns({{0, 0, 0, 1}}), 0) ==
          doctest::Approx(-(0.75 * std::log(0.75) + 0.25 * std::log(0.25))).epsilon(1e-14));
}

TEST_CASE("entropy matches high precision") {
    auto d = oracle::random_data(1, 1000, 4, 11);
    if (d.cardinality(0) != 4) d = oracle::random_data(1, 1000, 4, 12);
    CHECK(std::abs(entropy(d, 0) - big(oracle::entropy(d, {0}))) < 1e-13);
}

TEST_CASE("mutual information") {
    CHECK(std::abs(mutual_information(table2x2(25, 25, 25, 25), 0, 1)) < 1e-15);
    const auto copy = from_columns({{0, 1, 1, 0, 1, 2, 2}, {0, 1, 1, 0, 1, 2, 2}});
    CHECK(mutual_information(copy, 0, 1) == doctest::Approx(entropy(copy, 0)).epsilon(1e-13));
    const auto t = table2x2(30, 10, 10, 50);
    CHECK(std::abs(mutual_information(t, 0, 1) - big(oracle::mutual_information(t, 0, 1))) < 1e-15);
    CHECK_THROWS_AS(mutual_information(t, 1, 1), std::invalid_argument);
}

TEST_CASE("mutual information from entropies") {
    const auto d = oracle::random_data(2, 700, 4, 13);
    const double lhs = mutual_information(d, 0, 1);
    const double rhs = entropy(d, 0) + entropy(d, 1) - joint_entropy(d, 0, 1);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("g squared on exact independence") {
    const auto r = g_squared(table2x2(25, 25, 25, 25), 0, 1, {});
    CHECK(r.statistic == 0.0);
    CHECK(r.df == 1.0);
    CHECK(r.p_value == 1.0);
}

TEST_CASE("unconditional g squared is 2n times MI") {
    for (int s = 0; s < 50; ++s) {
        const auto d = oracle::random_data(2, 400, 5, 100 + s);
        CHECK(std::abs(g_squared(d, 0, 1, {}).statistic - 2.0 * d.n() * mutual_information(d, 0, 1)) < 1e-10);
    }
}

TEST_CASE("conditional g squared matches high precision") {
    for (int s = 0; s < 20; ++s) {
        const auto d = oracle::random_data(3, 250, 2, 200 + s);
        const int k[] = {2};
        const auto r = g_squared(d, 0, 1, k);
        const double want = big(oracle::g_squared(d, 0, 1, {2}));
        CHECK(r.statistic == doctest::Approx(want).epsilon(1e-10));
        CHECK(r.df == 2.0);
        CHECK(r.p_value == doctest::Approx(chi_square_upper_tail(want, 2.0)).epsilon(1e-9));
    }
}

TEST_CASE("g squared argument checks") {
    const auto d = oracle::random_data(3, 60, 2, 3);
    const int overlap[] = {0};
    const int dup[] = {2, 2};
    CHECK_THROWS_AS(g_squared(d, 0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(g_squared(d, 0, 1, overlap), std::invalid_argument);
    CHECK_THROWS_AS(g_squared(d, 0, 1, dup), std::invalid_argument);
    const int k[] = {2};
    CHECK_THROWS_AS(g_squared(d, 0, 1, k, nullptr, 4), CellBudgetExceeded);
}

TEST_CASE("chi-square tail reference values") {
    CHECK(chi_square_upper_tail(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_upper_tail(5.991464547107979, 2) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_upper_tail(2.0, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(chi_square_upper_tail(0.0, 3) == 1.0);
}

TEST_CASE("family score closed forms") {
    const auto d = oracle::random_data(2, 100, 3, 21);
    const double lambda = bic_lambda(d.n());
    CHECK(family_score(d, 0, {}, lambda) ==
          doctest::Approx(-100.0 * entropy(d, 0) - lambda * (d.cardinality(0) - 1)).epsilon(1e-12));

    std::vector<Level> x(100);
    for (int r = 0; r < 100; ++r) x[r] = r % 2;
    const auto copy = from_columns({x, x});
    const int pa[] = {1};
    CHECK(family_score(copy, 0, pa, bic_lambda(100)) == doctest::Approx(-std::log(100.0)).epsilon(1e-12));
}

TEST_CASE("family score matches high precision") {
    const auto d = sample(random_net(3, 1.0, 2, 3, 5), 2000, 6);
    const int pa[] = {0, 1};
    const double lambda = bic_lambda(d.n());
    CHECK(family_score(d, 2, pa, lambda) == doctest::Approx(big(oracle::family_score(d, 2, {0, 1}, lambda))).epsilon(1e-12));
}

TEST_CASE("graph score decomposes") {
    const auto d = oracle::random_data(4, 300, 3, 31);
    const double lambda = bic_lambda(d.n());
    double want = 0;
    for (int v = 0; v < 4; ++v) want += -300.0 * entropy(d, v) - lambda * (d.cardinality(v) - 1);
    CHECK(graph_score(d, Pdag(4), lambda) == doctest::Approx(want).epsilon(1e-12));

    const auto bn = random_net(5, 0.5, 2, 3, 32);
    const auto data = sample(bn, 1000, 33);
    const double l2 = bic_lambda(data.n());
    oracle::Big total = 0;
    for (int v = 0; v < 5; ++v) total += oracle::family_score(data, v, bn.dag.parents(v), l2);
    ScoreCache cache;
    CHECK(graph_score(data, bn.dag, l2, &cache) == doctest::Approx(big(total)).epsilon(1e-12));
    CHECK(graph_score(data, bn.dag, l2, &cache) == doctest::Approx(big(total)).epsilon(1e-12));
}

TEST_CASE("equivalent DAGs score equally") {
    const auto d = oracle::random_data(3, 500, 3, 41);
    Pdag chain(3), fork(3);
    chain.add_directed(0, 1);
    chain.add_directed(1, 2);
    fork.add_directed(1, 0);
    fork.add_directed(1, 2);
    const double lambda = bic_lambda(d.n());
    const double a = graph_score(d, chain, lambda), b = graph_score(d, fork, lambda);
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
}

TEST_CASE("score cache counts misses only") {
    const auto d = oracle::random_data(3, 100, 2, 51);
    ScoreCache cache;
    CallCounter counter;
    const int pa[] = {2, 1};
    const int pa2[] = {1, 2};
    const double a = family_score(d, 0, pa, 1.0, &cache, &counter);
    const double b = family_score(d, 0, pa2, 1.0, &cache, &counter);
    CHECK(a == b);
    CHECK(counter.snapshot().score_calls == 1);
    CHECK(cache.hits() == 1);
    CHECK(cache.size() == 1);
}

TEST_CASE("graph score rejects non-DAGs") {
    const auto d = oracle::random_data(2, 20, 2, 61);
    Pdag g(2);
    g.add_undirected(0, 1);
    CHECK_THROWS_AS(graph_score(d, g, 1.0), std::invalid_argument);
}
