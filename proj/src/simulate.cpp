#include "bnsl/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bnsl/rng.hpp"

namespace bnsl {

std::size_t BayesNet::parent_configs(int v) const {
    std::size_t q = 1;
    for (int u : dag.parents(v)) q *= static_cast<std::size_t>(cards[static_cast<std::size_t>(u)]);
    return q;
}

std::size_t BayesNet::parameter_count() const {
    std::size_t total = 0;
    for (int v = 0; v < p(); ++v) total += static_cast<std::size_t>(cards[static_cast<std::size_t>(v)] - 1) * parent_configs(v);
    return total;
}

std::size_t BayesNet::config_of(int v, std::span<const int> assignment) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (int u : dag.parents(v)) {
        idx += static_cast<std::size_t>(assignment[static_cast<std::size_t>(u)]) * stride;
        stride *= static_cast<std::size_t>(cards[static_cast<std::size_t>(u)]);
    }
    return idx;
}

void BayesNet::validate() const {
    if (!dag.is_dag()) throw std::invalid_argument("network graph must be a DAG");
    const auto sp = static_cast<std::size_t>(p());
    if (cards.size() != sp || cpts.size() != sp) throw std::invalid_argument("network arrays disagree on node count");
    if (!names.empty() && names.size() != sp) throw std::invalid_argument("network names disagree on node count");
    for (int v = 0; v < p(); ++v) {
        const int r = cards[static_cast<std::size_t>(v)];
        if (r < 2) throw std::invalid_argument("cardinality must be at least 2");
        const auto& cpt = cpts[static_cast<std::size_t>(v)];
        if (cpt.size() != parent_configs(v) * static_cast<std::size_t>(r))
            throw std::invalid_argument("CPT size mismatch for node " + std::to_string(v));
        for (std::size_t row = 0; row < parent_configs(v); ++row) {
            double s = 0.0;
            for (int x = 0; x < r; ++x) {
                const double q = cpt[row * static_cast<std::size_t>(r) + static_cast<std::size_t>(x)];
                if (!(q >= 0.0)) throw std::invalid_argument("negative CPT entry");
                s += q;
            }
            if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("CPT row does not sum to one");
        }
    }
}

std::vector<int> topological_order(const Pdag& dag) {
    const int p = dag.node_count();
    std::vector<int> indeg(static_cast<std::size_t>(p), 0), order;
    for (int v = 0; v < p; ++v) indeg[static_cast<std::size_t>(v)] = static_cast<int>(dag.parents(v).size());
    std::vector<int> ready;
    for (int v = p - 1; v >= 0; --v)
        if (!indeg[static_cast<std::size_t>(v)]) ready.push_back(v);
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        auto ch = dag.children(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            if (--indeg[static_cast<std::size_t>(*it)] == 0) ready.push_back(*it);
    }
    if (static_cast<int>(order.size()) != p) throw std::invalid_argument("graph has a directed cycle");
    return order;
}

std::vector<int> random_permutation(int p, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    auto rng = make_rng(seed, "permutation");
    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[uniform_index(rng, k)]);
    return perm;
}

BayesNet permute_net(const BayesNet& bn, std::span<const int> perm) {
    const int p = bn.p();
    if (static_cast<int>(perm.size()) != p) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> inv(static_cast<std::size_t>(p), -1);
    for (int k = 0; k < p; ++k) {
        const int old = perm[static_cast<std::size_t>(k)];
        if (old < 0 || old >= p || inv[static_cast<std::size_t>(old)] >= 0) throw std::invalid_argument("not a permutation");
        inv[static_cast<std::size_t>(old)] = k;
    }
    BayesNet out;
    out.dag = Pdag(p);
    for (const auto& e : bn.dag.edges()) out.dag.add_directed(inv[static_cast<std::size_t>(e.from)], inv[static_cast<std::size_t>(e.to)]);
    out.cards.resize(static_cast<std::size_t>(p));
    out.cpts.resize(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        const int old = perm[static_cast<std::size_t>(k)];
        out.cards[static_cast<std::size_t>(k)] = bn.cards[static_cast<std::size_t>(old)];
        if (!bn.names.empty()) out.names.push_back(bn.names[static_cast<std::size_t>(old)]);
    }
    std::vector<int> y(static_cast<std::size_t>(p), 0);
    for (int k = 0; k < p; ++k) {
        const int old = perm[static_cast<std::size_t>(k)];
        const auto pa = out.dag.parents(k);
        const auto r = static_cast<std::size_t>(out.cards[static_cast<std::size_t>(k)]);
        const std::size_t q = out.parent_configs(k);
        auto& cpt = out.cpts[static_cast<std::size_t>(k)];
        cpt.resize(q * r);
        for (std::size_t row = 0; row < q; ++row) {
            std::size_t rem = row;
            for (int u : pa) {
                const auto ru = static_cast<std::size_t>(out.cards[static_cast<std::size_t>(u)]);
                y[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = static_cast<int>(rem % ru);
                rem /= ru;
            }
            const std::size_t old_row = bn.config_of(old, y);
            for (std::size_t s = 0; s < r; ++s) cpt[row * r + s] = bn.cpts[static_cast<std::size_t>(old)][old_row * r + s];
        }
    }
    out.validate();
    return out;
}

Pdag random_dag(int p, double edge_prob, std::uint64_t seed) {
    const auto order = random_permutation(p, mix_seed(seed, "random_dag_order", 0));
    auto rng = make_rng(seed, "random_dag_edges");
    Pdag g(p);
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (uniform01(rng) < edge_prob) g.add_directed(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
    return g;
}

void dirichlet_cpt(BayesNet& bn, int v, std::mt19937_64& rng) {
    const auto r = static_cast<std::size_t>(bn.cards[static_cast<std::size_t>(v)]);
    const std::size_t q = bn.parent_configs(v);
    auto& cpt = bn.cpts[static_cast<std::size_t>(v)];
    cpt.assign(q * r, 0.0);
    for (std::size_t row = 0; row < q; ++row) {
        double s = 0.0;
        for (std::size_t x = 0; x < r; ++x) {
            // Gamma(1) draws are exponentials.
            const double g = -std::log1p(-uniform01(rng));
            cpt[row * r + x] = g;
            s += g;
        }
        for (std::size_t x = 0; x < r; ++x) cpt[row * r + x] = s > 0.0 ? cpt[row * r + x] / s : 1.0 / static_cast<double>(r);
    }
}

BayesNet random_net(int p, double edge_prob, int min_card, int max_card, std::uint64_t seed) {
    if (min_card < 2 || max_card < min_card) throw std::invalid_argument("bad cardinality range");
    BayesNet bn;
    bn.dag = random_dag(p, edge_prob, seed);
    auto rng = make_rng(seed, "random_net");
    bn.cards.resize(static_cast<std::size_t>(p));
    for (auto& r : bn.cards) r = min_card + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_card - min_card + 1)));
    bn.cpts.resize(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) dirichlet_cpt(bn, v, rng);
    for (int v = 0; v < p; ++v) bn.names.push_back("V" + std::to_string(v));
    return bn;
}

BayesNet tile(const BayesNet& base, int copies, std::uint64_t seed) {
    if (copies < 1) throw std::invalid_argument("tile needs at least one copy");
    base.validate();
    const int b = base.p();
    const int p = b * copies;

    // Parent-count law over the base nodes, counts 0..min(max in-degree, 4).
    int dmax = 0;
    std::vector<int> indeg(static_cast<std::size_t>(b));
    for (int v = 0; v < b; ++v) {
        indeg[static_cast<std::size_t>(v)] = static_cast<int>(base.dag.parents(v).size());
        dmax = std::max(dmax, indeg[static_cast<std::size_t>(v)]);
    }
    const int amax = std::min(dmax, 4);
    std::vector<double> law(static_cast<std::size_t>(amax) + 1, 0.0);
    for (int d : indeg)
        if (d <= amax) law[static_cast<std::size_t>(d)] += 1.0;

    BayesNet out;
    out.dag = Pdag(p);
    out.cards.resize(static_cast<std::size_t>(p));
    out.cpts.resize(static_cast<std::size_t>(p));
    for (int c = 0; c < copies; ++c)
        for (int v = 0; v < b; ++v) {
            const int u = c * b + v;
            out.cards[static_cast<std::size_t>(u)] = base.cards[static_cast<std::size_t>(v)];
            out.cpts[static_cast<std::size_t>(u)] = base.cpts[static_cast<std::size_t>(v)];
            const std::string name = base.names.empty() ? "V" + std::to_string(v) : base.names[static_cast<std::size_t>(v)];
            out.names.push_back(copies == 1 ? name : name + "_" + std::to_string(c + 1));
            for (int w : base.dag.parents(v)) out.dag.add_directed(c * b + w, u);
        }

    auto rng = make_rng(seed, "tile");
    const double total = std::accumulate(law.begin(), law.end(), 0.0);
    for (int c = 1; c < copies; ++c)
        for (int v = 0; v < b; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            const int u = c * b + v;
            double x = uniform01(rng) * total;
            int e = 0;
            while (e < amax && x >= law[static_cast<std::size_t>(e)]) x -= law[static_cast<std::size_t>(e++)];
            const int pool = c * b;
            e = std::min(e, pool);
            // Partial Fisher-Yates over earlier-copy nodes.
            std::vector<int> cand(static_cast<std::size_t>(pool));
            std::iota(cand.begin(), cand.end(), 0);
            for (int k = 0; k < e; ++k) {
                const auto pick = static_cast<std::size_t>(k) + uniform_index(rng, static_cast<std::uint64_t>(pool - k));
                std::swap(cand[static_cast<std::size_t>(k)], cand[pick]);
                out.dag.add_directed(cand[static_cast<std::size_t>(k)], u);
            }
            if (e > 0) dirichlet_cpt(out, u, rng);
        }
    out.validate();
    return out;
}

namespace {

// splitmix64 stream; cheap to construct per row.
struct RowStream {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

int draw(const BayesNet& bn, int v, std::size_t config, double u) {
    const int r = bn.cards[static_cast<std::size_t>(v)];
    for (int x = 0; x < r - 1; ++x) {
        u -= bn.prob(v, config, x);
        if (u < 0.0) return x;
    }
    return r - 1;
}

}  // namespace

Dataset sample(const BayesNet& bn, std::size_t n, std::uint64_t seed, int threads) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    bn.validate();
    const int p = bn.p();
    const auto order = topological_order(bn.dag);
    std::vector<std::vector<Level>> cols(static_cast<std::size_t>(p), std::vector<Level>(n));
    auto rows = [&](std::size_t lo, std::size_t hi) {
        std::vector<int> x(static_cast<std::size_t>(p));
        for (std::size_t r = lo; r < hi; ++r) {
            RowStream rs{mix_seed(seed, "sample", r)};
            for (int v : order) {
                const int s = draw(bn, v, bn.config_of(v, x), rs.uniform());
                x[static_cast<std::size_t>(v)] = s;
                cols[static_cast<std::size_t>(v)][r] = static_cast<Level>(s);
            }
        }
    };
    const auto t = static_cast<std::size_t>(std::max(1, threads));
    if (t == 1 || n < 1024) {
        rows(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + t - 1) / t;
        for (std::size_t k = 0; k < t; ++k) {
            const std::size_t lo = k * chunk, hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return Dataset(std::move(cols), bn.cards, bn.names);
}

std::vector<std::vector<double>> exact_marginals(const BayesNet& bn) {
    const int p = bn.p();
    double configs = 1.0;
    for (int r : bn.cards) configs *= r;
    if (configs > 1e7) throw std::invalid_argument("network too large for exact marginals");
    std::vector<std::vector<double>> marg(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) marg[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(bn.cards[static_cast<std::size_t>(v)]), 0.0);
    std::vector<int> x(static_cast<std::size_t>(p), 0);
    while (true) {
        double pr = 1.0;
        for (int v = 0; v < p && pr > 0.0; ++v) pr *= bn.prob(v, bn.config_of(v, x), x[static_cast<std::size_t>(v)]);
        for (int v = 0; v < p; ++v) marg[static_cast<std::size_t>(v)][static_cast<std::size_t>(x[static_cast<std::size_t>(v)])] += pr;
        int k = 0;
        while (k < p && ++x[static_cast<std::size_t>(k)] == bn.cards[static_cast<std::size_t>(k)]) x[static_cast<std::size_t>(k++)] = 0;
        if (k == p) break;
    }
    return marg;
}

namespace {

std::vector<std::vector<double>> estimated_marginals(const BayesNet& bn, std::uint64_t seed) {
    constexpr std::size_t kDraws = 100000;
    const auto d = sample(bn, kDraws, mix_seed(seed, "merge_marginals", 0));
    std::vector<std::vector<double>> marg(static_cast<std::size_t>(bn.p()));
    for (int v = 0; v < bn.p(); ++v) {
        marg[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(bn.cards[static_cast<std::size_t>(v)]), 0.0);
        for (Level s : d.column(v)) marg[static_cast<std::size_t>(v)][s] += 1.0 / kDraws;
    }
    return marg;
}

}  // namespace

BayesNet merge_states(const BayesNet& bn, int max_levels, std::uint64_t seed) {
    if (max_levels < 2) throw std::invalid_argument("max_levels must be at least 2");
    bn.validate();
    const int p = bn.p();
    bool any = false;
    for (int r : bn.cards) any = any || r > max_levels;
    if (!any) return bn;

    double configs = 1.0;
    for (int r : bn.cards) configs *= r;
    const auto marg = configs <= 1e6 ? exact_marginals(bn) : estimated_marginals(bn, seed);

    // groups[v][s'] = original states folded into new state s'.
    std::vector<std::vector<std::vector<int>>> groups(static_cast<std::size_t>(p));
    auto rng = make_rng(seed, "merge_states");
    for (int v = 0; v < p; ++v) {
        auto& g = groups[static_cast<std::size_t>(v)];
        for (int s = 0; s < bn.cards[static_cast<std::size_t>(v)]; ++s) g.push_back({s});
        while (static_cast<int>(g.size()) > max_levels) {
            std::size_t fewest = g[0].size();
            for (const auto& m : g) fewest = std::min(fewest, m.size());
            std::vector<std::size_t> pool;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (g[k].size() == fewest) pool.push_back(k);
            if (pool.size() < 2) {
                // Pair the single least-merged state with a random other one.
                std::vector<std::size_t> rest;
                for (std::size_t k = 0; k < g.size(); ++k)
                    if (k != pool[0]) rest.push_back(k);
                pool.push_back(rest[uniform_index(rng, rest.size())]);
            } else {
                for (std::size_t k = 0; k < 2; ++k)
                    std::swap(pool[k], pool[k + uniform_index(rng, pool.size() - k)]);
                pool.resize(2);
            }
            const auto a = std::min(pool[0], pool[1]);
            const auto b = std::max(pool[0], pool[1]);
            g[a].insert(g[a].end(), g[b].begin(), g[b].end());
            std::sort(g[a].begin(), g[a].end());
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(b));
        }
    }

    BayesNet out;
    out.dag = bn.dag;
    out.names = bn.names;
    out.cards.resize(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) out.cards[static_cast<std::size_t>(v)] = static_cast<int>(groups[static_cast<std::size_t>(v)].size());
    out.cpts.resize(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) {
        const auto pa = bn.dag.parents(v);
        const int r_new = out.cards[static_cast<std::size_t>(v)];
        const std::size_t q_new = out.parent_configs(v);
        auto& cpt = out.cpts[static_cast<std::size_t>(v)];
        cpt.assign(q_new * static_cast<std::size_t>(r_new), 0.0);
        std::vector<int> newcfg(pa.size()), pick(pa.size());
        for (std::size_t row = 0; row < q_new; ++row) {
            std::size_t rem = row;
            for (std::size_t k = 0; k < pa.size(); ++k) {
                const auto rk = static_cast<std::size_t>(out.cards[static_cast<std::size_t>(pa[k])]);
                newcfg[k] = static_cast<int>(rem % rk);
                rem /= rk;
            }
            // Walk every combination of original parent states inside the
            // merged configuration.
            std::fill(pick.begin(), pick.end(), 0);
            std::vector<double> acc(static_cast<std::size_t>(r_new), 0.0);
            double wsum = 0.0;
            std::size_t combos = 0;
            std::vector<double> plain(static_cast<std::size_t>(r_new), 0.0);
            while (true) {
                std::size_t old_cfg = 0, stride = 1;
                double w = 1.0;
                for (std::size_t k = 0; k < pa.size(); ++k) {
                    const auto& grp = groups[static_cast<std::size_t>(pa[k])][static_cast<std::size_t>(newcfg[k])];
                    const int s = grp[static_cast<std::size_t>(pick[k])];
                    old_cfg += static_cast<std::size_t>(s) * stride;
                    stride *= static_cast<std::size_t>(bn.cards[static_cast<std::size_t>(pa[k])]);
                    w *= marg[static_cast<std::size_t>(pa[k])][static_cast<std::size_t>(s)];
                }
                for (int s2 = 0; s2 < r_new; ++s2)
                    for (int x : groups[static_cast<std::size_t>(v)][static_cast<std::size_t>(s2)]) {
                        acc[static_cast<std::size_t>(s2)] += w * bn.prob(v, old_cfg, x);
                        plain[static_cast<std::size_t>(s2)] += bn.prob(v, old_cfg, x);
                    }
                wsum += w;
                ++combos;
                std::size_t k = 0;
                for (; k < pa.size(); ++k) {
                    const auto& grp = groups[static_cast<std::size_t>(pa[k])][static_cast<std::size_t>(newcfg[k])];
                    if (++pick[k] < static_cast<int>(grp.size())) break;
                    pick[k] = 0;
                }
                if (k == pa.size()) break;
            }
            const auto& src = wsum > 0.0 ? acc : plain;
            const double norm = std::accumulate(src.begin(), src.end(), 0.0);
            for (int s2 = 0; s2 < r_new; ++s2)
                cpt[row * static_cast<std::size_t>(r_new) + static_cast<std::size_t>(s2)] = src[static_cast<std::size_t>(s2)] / norm;
        }
    }
    out.validate();
    return out;
}

nlohmann::json to_json(const BayesNet& bn) {
    nlohmann::json j;
    j["nodes"] = bn.p();
    j["names"] = bn.names;
    j["cardinalities"] = bn.cards;
    auto edges = nlohmann::json::array();
    for (const auto& e : bn.dag.edges()) edges.push_back({e.from, e.to});
    j["edges"] = edges;
    auto cpts = nlohmann::json::array();
    for (int v = 0; v < bn.p(); ++v) {
        const auto r = static_cast<std::size_t>(bn.cards[static_cast<std::size_t>(v)]);
        auto rows = nlohmann::json::array();
        const auto& c = bn.cpts[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < c.size(); k += r) rows.push_back(std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(k), c.begin() + static_cast<std::ptrdiff_t>(k + r)));
        cpts.push_back(rows);
    }
    j["cpts"] = cpts;
    return j;
}

BayesNet bayesnet_from_json(const nlohmann::json& j) {
    try {
        BayesNet bn;
        const int p = j.at("nodes").get<int>();
        if (p < 1) throw std::invalid_argument("network needs at least one node");
        bn.dag = Pdag(p);
        bn.cards = j.at("cardinalities").get<std::vector<int>>();
        if (j.contains("names")) bn.names = j.at("names").get<std::vector<std::string>>();
        for (const auto& e : j.at("edges")) {
            const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
            if (a < 0 || b < 0 || a >= p || b >= p || a == b || bn.dag.adjacent(a, b))
                throw std::invalid_argument("bad edge in network");
            bn.dag.add_directed(a, b);
        }
        for (const auto& rows : j.at("cpts")) {
            std::vector<double> flat;
            for (const auto& row : rows)
                for (const auto& x : row) flat.push_back(x.get<double>());
            bn.cpts.push_back(std::move(flat));
        }
        bn.validate();
        return bn;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed network JSON: ") + e.what());
    }
}

BayesNet load_net(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open network file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed network JSON: ") + e.what());
    }
    return bayesnet_from_json(j);
}

void save_net(const BayesNet& bn, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json(bn).dump(2) << '\n';
}

namespace {

BayesNet make_net(std::vector<std::string> names, std::vector<std::pair<int, int>> edges,
                  std::vector<std::vector<double>> cpts) {
    BayesNet bn;
    const int p = static_cast<int>(names.size());
    bn.dag = Pdag(p);
    for (auto [a, b] : edges) bn.dag.add_directed(a, b);
    bn.cards.assign(static_cast<std::size_t>(p), 2);
    bn.cpts = std::move(cpts);
    bn.names = std::move(names);
    bn.validate();
    return bn;
}

}  // namespace

BayesNet builtin_net(const std::string& name) {
    if (name == "asia") {
        return make_net({"asia", "smoke", "tub", "lung", "bronc", "either", "xray", "dysp"},
                        {{0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {5, 6}, {4, 7}, {5, 7}},
                        {{0.7, 0.3},
                         {0.5, 0.5},
                         {0.8, 0.2, 0.3, 0.7},
                         {0.85, 0.15, 0.35, 0.65},
                         {0.7, 0.3, 0.25, 0.75},
                         {0.9, 0.1, 0.3, 0.7, 0.25, 0.75, 0.05, 0.95},
                         {0.85, 0.15, 0.2, 0.8},
                         {0.85, 0.15, 0.35, 0.65, 0.3, 0.7, 0.1, 0.9}});
    }
    if (name == "cancer") {
        return make_net({"pollution", "smoker", "cancer", "xray", "dyspnoea"}, {{0, 2}, {1, 2}, {2, 3}, {2, 4}},
                        {{0.7, 0.3},
                         {0.6, 0.4},
                         {0.9, 0.1, 0.6, 0.4, 0.55, 0.45, 0.2, 0.8},
                         {0.8, 0.2, 0.2, 0.8},
                         {0.7, 0.3, 0.25, 0.75}});
    }
    if (name == "random10") return random_net(10, 0.3, 2, 3, 2021);
    throw std::invalid_argument("unknown built-in network '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"asia", "cancer", "random10"}; }

}  // namespace bnsl
