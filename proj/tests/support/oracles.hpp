#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/rng.hpp"
#include "bnsl/simulate.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

// Row-scan joint count of one configuration.
inline long count_rows(const bnsl::Dataset& d, const std::vector<int>& vars, const std::vector<int>& values) {
    long c = 0;
    for (std::size_t r = 0; r < d.n(); ++r) {
        bool ok = true;
        for (std::size_t k = 0; k < vars.size() && ok; ++k) ok = d.column(vars[k])[r] == values[k];
        c += ok;
    }
    return c;
}

// Visits every configuration of `vars`.
inline void each_config(const bnsl::Dataset& d, const std::vector<int>& vars, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> x(vars.size(), 0);
    while (true) {
        f(x);
        std::size_t k = 0;
        while (k < vars.size() && ++x[k] == d.cardinality(vars[k])) x[k++] = 0;
        if (k == vars.size()) return;
    }
}

inline Big entropy(const bnsl::Dataset& d, const std::vector<int>& vars) {
    Big h = 0;
    const Big n = static_cast<double>(d.n());
    each_config(d, vars, [&](const std::vector<int>& x) {
        const long c = count_rows(d, vars, x);
        if (c) h -= (Big(c) / n) * log(Big(c) / n);
    });
    return h;
}

inline Big mutual_information(const bnsl::Dataset& d, int i, int j) {
    return entropy(d, {i}) + entropy(d, {j}) - entropy(d, {i, j});
}

// G^2 = 2 sum n[xi,xj,xk] log(n[xi,xj,xk] n[xk] / (n[xi,xk] n[xj,xk])).
inline Big g_squared(const bnsl::Dataset& d, int i, int j, const std::vector<int>& cond) {
    std::vector<int> all{i, j};
    all.insert(all.end(), cond.begin(), cond.end());
    Big g = 0;
    each_config(d, all, [&](const std::vector<int>& x) {
        const long nijk = count_rows(d, all, x);
        if (!nijk) return;
        std::vector<int> ik{i}, jk{j}, vk = cond;
        std::vector<int> xik{x[0]}, xjk{x[1]}, xk(x.begin() + 2, x.end());
        ik.insert(ik.end(), cond.begin(), cond.end());
        jk.insert(jk.end(), cond.begin(), cond.end());
        xik.insert(xik.end(), xk.begin(), xk.end());
        xjk.insert(xjk.end(), xk.begin(), xk.end());
        const Big nk = cond.empty() ? Big(static_cast<double>(d.n())) : Big(count_rows(d, vk, xk));
        g += Big(nijk) * log(Big(nijk) * nk / (Big(count_rows(d, ik, xik)) * Big(count_rows(d, jk, xjk))));
    });
    return 2 * g;
}

// sum n[x, pa] log(n[x, pa] / n[pa]) - lambda (r - 1) q
inline Big family_score(const bnsl::Dataset& d, int i, const std::vector<int>& pa, double lambda) {
    std::vector<int> all{i};
    all.insert(all.end(), pa.begin(), pa.end());
    Big ll = 0;
    double q = 1;
    for (int u : pa) q *= d.cardinality(u);
    each_config(d, all, [&](const std::vector<int>& x) {
        const long c = count_rows(d, all, x);
        if (!c) return;
        std::vector<int> xp(x.begin() + 1, x.end());
        const Big npa = pa.empty() ? Big(static_cast<double>(d.n())) : Big(count_rows(d, pa, xp));
        ll += Big(c) * log(Big(c) / npa);
    });
    return ll - Big(lambda) * (d.cardinality(i) - 1) * q;
}

// d-separation by enumerating every simple path between i and j.
inline bool d_separated(const bnsl::Pdag& g, int i, int j, const std::vector<int>& cond) {
    const int p = g.node_count();
    std::vector<char> z(p, 0);
    for (int c : cond) z[c] = 1;
    // descendants-or-self in cond
    auto opens_collider = [&](int v) {
        std::vector<int> stack{v};
        std::vector<char> seen(p, 0);
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (z[u]) return true;
            for (int c : g.children(u))
                if (!seen[c]) seen[c] = 1, stack.push_back(c);
        }
        return false;
    };
    std::vector<int> path{i};
    std::vector<char> on(p, 0);
    on[i] = 1;
    std::function<bool(int)> active_path = [&](int u) -> bool {
        if (u == j) {
            for (std::size_t k = 1; k + 1 < path.size(); ++k) {
                const int a = path[k - 1], v = path[k], b = path[k + 1];
                const bool collider = g.directed(a, v) && g.directed(b, v);
                if (collider ? !opens_collider(v) : z[v] != 0) return false;
            }
            return true;
        }
        for (int w : g.neighbors(u)) {
            if (on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            const bool hit = active_path(w);
            path.pop_back();
            on[w] = 0;
            if (hit) return true;
        }
        return false;
    };
    return !active_path(i);
}

// Every DAG on p labelled nodes.
inline std::vector<bnsl::Pdag> all_dags(int p) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
    std::vector<bnsl::Pdag> out;
    std::size_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        bnsl::Pdag g(p);
        std::size_t c = code;
        for (auto [a, b] : pairs) {
            const int s = static_cast<int>(c % 3);
            c /= 3;
            if (s == 1) g.add_directed(a, b);
            if (s == 2) g.add_directed(b, a);
        }
        if (!g.has_directed_cycle()) out.push_back(g);
    }
    return out;
}

// Directed where every member agrees, undirected otherwise.
inline bnsl::Pdag orientation_intersection(const std::vector<bnsl::Pdag>& cls) {
    bnsl::Pdag out = cls.front().skeleton();
    for (const auto& e : cls.front().edges()) {
        bool same = true;
        for (const auto& g : cls) same = same && g.directed(e.from, e.to);
        if (same) out.orient(e.from, e.to);
    }
    return out;
}

inline bool contains(const std::vector<bnsl::Pdag>& v, const bnsl::Pdag& g) {
    for (const auto& x : v)
        if (x == g) return true;
    return false;
}

// Unshielded colliders (a, k, b) with a < b, read straight off the marks.
inline std::vector<std::array<int, 3>> colliders(const bnsl::Pdag& g) {
    std::vector<std::array<int, 3>> out;
    const int p = g.node_count();
    for (int k = 0; k < p; ++k)
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                if (a != k && b != k && g.directed(a, k) && g.directed(b, k) && !g.adjacent(a, b)) out.push_back({a, k, b});
    return out;
}

// Markov equivalence class by trying every orientation of the skeleton.
inline std::vector<bnsl::Pdag> equivalence_class(const bnsl::Pdag& dag) {
    const auto edges = dag.edges();
    const auto want = colliders(dag);
    std::vector<bnsl::Pdag> out;
    for (std::size_t code = 0; code < (std::size_t{1} << edges.size()); ++code) {
        bnsl::Pdag g(dag.node_count());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const int a = std::min(edges[k].from, edges[k].to), b = std::max(edges[k].from, edges[k].to);
            if (code >> k & 1)
                g.add_directed(b, a);
            else
                g.add_directed(a, b);
        }
        if (!g.has_directed_cycle() && colliders(g) == want) out.push_back(g);
    }
    return out;
}

// Random dataset with independent uniform columns.
inline bnsl::Dataset random_data(int p, std::size_t n, int max_card, std::uint64_t seed) {
    auto rng = bnsl::make_rng(seed, "test_random_data");
    std::vector<std::vector<bnsl::Level>> cols(p, std::vector<bnsl::Level>(n));
    std::vector<int> cards(p);
    for (int v = 0; v < p; ++v) {
        cards[v] = 2 + static_cast<int>(bnsl::uniform_index(rng, static_cast<std::uint64_t>(max_card - 1)));
        for (auto& x : cols[v]) x = static_cast<bnsl::Level>(bnsl::uniform_index(rng, static_cast<std::uint64_t>(cards[v])));
        cols[v][0] = 0;
        cols[v][1] = 1;
    }
    return bnsl::Dataset(std::move(cols), cards);
}

}  // namespace oracle
