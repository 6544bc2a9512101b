#include "bnsl/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bnsl {

DistanceMatrix distance_matrix(const Dataset& data, double alpha, CallCounter* counter) {
    const int p = data.p();
    if (p < 2) throw std::invalid_argument("distance matrix needs at least two variables");
    const auto sp = static_cast<std::size_t>(p);
    DistanceMatrix out;
    out.p = p;
    out.d.assign(sp * sp, 0.0);
    out.marginal_p.assign(sp * sp, 1.0);

    std::vector<double> h(sp);
    for (int i = 0; i < p; ++i) h[static_cast<std::size_t>(i)] = entropy(data, i, counter);
    const double n = static_cast<double>(data.n());
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            const double mi = std::max(0.0, mutual_information(data, i, j, counter));
            // H(X_i, X_j) = H(X_i) + H(X_j) - I(X_i, X_j)
            const double hij = h[static_cast<std::size_t>(i)] + h[static_cast<std::size_t>(j)] - mi;
            const double dij = hij > 0.0 ? std::clamp(1.0 - mi / hij, 0.0, 1.0) : 1.0;
            const double df = static_cast<double>(data.cardinality(i) - 1) * (data.cardinality(j) - 1);
            const double pv = chi_square_upper_tail(2.0 * n * mi, df);
            const auto a = static_cast<std::size_t>(i) * sp + static_cast<std::size_t>(j);
            const auto b = static_cast<std::size_t>(j) * sp + static_cast<std::size_t>(i);
            out.d[a] = out.d[b] = dij;
            out.marginal_p[a] = out.marginal_p[b] = pv;
            if (pv > alpha) out.blacklist.emplace_back(i, j);
        }
    return out;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    std::map<int, int> first;
    for (std::size_t v = 0; v < labels.size(); ++v) first.emplace(labels[v], static_cast<int>(first.size()));
    Partition out;
    out.labels.resize(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) out.labels[v] = first.at(labels[v]);
    out.kappa = std::max<int>(1, static_cast<int>(first.size()));
    return out;
}

namespace {

using Groups = std::vector<std::vector<int>>;

double average_linkage(const std::vector<double>& d, int p, const std::vector<int>& a, const std::vector<int>& b) {
    double s = 0.0;
    for (int x : a)
        for (int y : b) s += d[static_cast<std::size_t>(x) * static_cast<std::size_t>(p) + static_cast<std::size_t>(y)];
    return s / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

bool is_large(std::size_t size, int p) { return static_cast<double>(size) >= 0.05 * p; }

int count_large(const Groups& g, int p) {
    int c = 0;
    for (const auto& members : g)
        if (is_large(members.size(), p)) ++c;
    return c;
}

// Groups ordered by smallest member; members sorted.
Groups normalize(Groups g) {
    for (auto& m : g) std::sort(m.begin(), m.end());
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

// Folds the smallest cluster (ties: smallest member) into its nearest
// neighbour by average linkage (ties: smallest member).
void fold_smallest(Groups& g, const std::vector<double>& d, int p) {
    std::size_t s = 0;
    for (std::size_t k = 1; k < g.size(); ++k)
        if (g[k].size() < g[s].size()) s = k;
    std::size_t target = g.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k == s) continue;
        const double l = average_linkage(d, p, g[s], g[k]);
        if (l < best) {
            best = l;
            target = k;
        }
    }
    g[target].insert(g[target].end(), g[s].begin(), g[s].end());
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(s));
    g = normalize(std::move(g));
}

}  // namespace

Partition partition(const std::vector<double>& d, int p) {
    if (p < 0 || d.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p))
        throw std::invalid_argument("distance matrix size does not match p");
    if (p <= 1) return Partition::single(p);
    const auto sp = static_cast<std::size_t>(p);

    // Agglomeration with Lance-Williams average-linkage updates. Cluster
    // slot k is alive while size[k] > 0 and is keyed by its smallest member.
    std::vector<double> link(d);
    std::vector<std::size_t> size(sp, 1);
    Groups members(sp);
    for (int v = 0; v < p; ++v) members[static_cast<std::size_t>(v)] = {v};

    Groups best_cut;
    int best_large = -1;
    const double tol = 1e-12;
    for (int step = 0; step < p - 1; ++step) {
        double h = std::numeric_limits<double>::infinity();
        std::size_t a = 0, b = 0;
        for (std::size_t x = 0; x < sp; ++x) {
            if (!size[x]) continue;
            for (std::size_t y = x + 1; y < sp; ++y) {
                if (!size[y]) continue;
                if (link[x * sp + y] < h) {
                    h = link[x * sp + y];
                    a = x;
                    b = y;
                }
            }
        }
        for (std::size_t c = 0; c < sp; ++c) {
            if (!size[c] || c == a || c == b) continue;
            const double v = (static_cast<double>(size[a]) * link[a * sp + c] + static_cast<double>(size[b]) * link[b * sp + c]) /
                             static_cast<double>(size[a] + size[b]);
            link[a * sp + c] = link[c * sp + a] = v;
        }
        size[a] += size[b];
        size[b] = 0;
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();

        // Only states between distinct merge heights are valid cuts.
        double next = std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < sp; ++x) {
            if (!size[x]) continue;
            for (std::size_t y = x + 1; y < sp; ++y)
                if (size[y]) next = std::min(next, link[x * sp + y]);
        }
        if (next <= h + tol && step + 1 < p - 1) continue;

        Groups cut;
        for (std::size_t x = 0; x < sp; ++x)
            if (size[x]) cut.push_back(members[x]);
        const int large = count_large(cut, p);
        if (large <= kMaxClusters && large >= best_large) {
            best_large = large;
            best_cut = std::move(cut);
        }
    }

    Groups g = normalize(std::move(best_cut));
    auto has_small = [&] {
        return std::any_of(g.begin(), g.end(), [&](const auto& m) { return !is_large(m.size(), p); });
    };
    while (g.size() > 1 && has_small()) fold_smallest(g, d, p);
    while (g.size() > static_cast<std::size_t>(kMaxClusters)) fold_smallest(g, d, p);

    std::vector<int> labels(sp, 0);
    for (std::size_t k = 0; k < g.size(); ++k)
        for (int v : g[k]) labels[static_cast<std::size_t>(v)] = static_cast<int>(k);
    return Partition::from_labels(labels);
}

}  // namespace bnsl
