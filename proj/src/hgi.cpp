#include "bnsl/hgi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bnsl {

namespace {

struct Candidate {
    int from;
    int to;
    double delta;
};

bool better_gain(double a, double b) { return a > b + 1e-9 * std::max(1.0, std::abs(b)); }

class HgiState {
public:
    HgiState(const Pdag& skeleton, const Dataset& data, double lambda, ScoreCache* cache, CallCounter* counter)
        : g0_(skeleton), g_(skeleton.node_count()), data_(data), lambda_(lambda), cache_(cache), counter_(counter) {}

    double family(int v, const std::vector<int>& parents) const {
        return family_score(data_, v, parents, lambda_, cache_, counter_);
    }

    // Gain of giving `child` the extra parents in `add`.
    double gain(int child, std::initializer_list<int> add) const {
        auto pa = g_.parents(child);
        const double before = family(child, pa);
        for (int a : add)
            if (!g_.directed(a, child)) pa.push_back(a);
        return family(child, pa) - before;
    }

    void commit(int from, int to) {
        g_.add_directed(from, to);
        g0_.orient(from, to);
    }

    void vstructure_phase(std::span<const VStructure> vstructs) {
        while (true) {
            int best = -1;
            double best_gain = 0.0;
            for (std::size_t k = 0; k < vstructs.size(); ++k) {
                const auto& v = vstructs[k];
                if (!g0_.adjacent(v.i, v.k) || !g0_.adjacent(v.j, v.k)) continue;
                if (g_.directed(v.k, v.i) || g_.directed(v.k, v.j)) continue;
                if (g_.directed(v.i, v.k) && g_.directed(v.j, v.k)) continue;
                if (g_.reaches(v.k, v.i) || g_.reaches(v.k, v.j)) continue;
                const double d = gain(v.k, {v.i, v.j});
                if (!(d > 0.0)) continue;
                if (best < 0 || better_gain(d, best_gain)) {
                    best = static_cast<int>(k);
                    best_gain = d;
                }
            }
            if (best < 0) return;
            const auto& v = vstructs[static_cast<std::size_t>(best)];
            if (!g_.directed(v.i, v.k)) commit(v.i, v.k);
            if (!g_.directed(v.j, v.k)) commit(v.j, v.k);
        }
    }

    void remove_complete_sinks() {
        const int p = g0_.node_count();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < p; ++v) {
                const auto nb = g0_.neighbors(v);
                if (nb.empty()) continue;
                if (static_cast<std::size_t>(g0_.parents(v).size()) != nb.size()) continue;
                for (int u : nb) g0_.remove_edge(u, v);
                changed = true;
            }
        }
    }

    // Sink (no children in g0) whose undirected neighbours are adjacent to
    // every other neighbour.
    bool eligible_sink(int j) const {
        if (!g0_.children(j).empty()) return false;
        const auto und = g0_.undirected_neighbors(j);
        if (und.empty()) return false;
        const auto nb = g0_.neighbors(j);
        for (int y : und)
            for (int z : nb)
                if (z != y && !g0_.adjacent(y, z)) return false;
        return true;
    }

    std::vector<Candidate> sink_candidates() const {
        std::vector<Candidate> out;
        for (int j = 0; j < g0_.node_count(); ++j) {
            if (!eligible_sink(j)) continue;
            for (int i : g0_.undirected_neighbors(j)) {
                if (g_.reaches(j, i)) continue;
                out.push_back({i, j, gain(j, {i})});
            }
        }
        return out;
    }

    std::vector<Candidate> meek_candidates() const {
        std::vector<Candidate> out;
        const int p = g0_.node_count();
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                if (a == b || !g0_.undirected(a, b)) continue;
                if (!meek_rule_compelling(g0_, a, b)) continue;
                if (g_.reaches(b, a)) continue;
                out.push_back({a, b, gain(b, {a})});
            }
        return out;
    }

    // Commits the best strictly improving candidate, else deletes the most
    // deteriorating one. Candidates are assumed ordered by (from, to).
    void resolve(std::vector<Candidate> cands) {
        std::sort(cands.begin(), cands.end(),
                  [](const auto& x, const auto& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
        const Candidate* up = nullptr;
        const Candidate* down = nullptr;
        for (const auto& c : cands) {
            if (c.delta > 0.0 && (!up || better_gain(c.delta, up->delta))) up = &c;
            if (!down || better_gain(-c.delta, -down->delta)) down = &c;
        }
        if (up)
            commit(up->from, up->to);
        else
            g0_.remove_edge(down->from, down->to);
    }

    void extension_phase() {
        while (true) {
            remove_complete_sinks();
            if (!g0_.has_undirected()) return;
            auto sinks = sink_candidates();
            if (!sinks.empty()) {
                resolve(std::move(sinks));
                continue;
            }
            auto meek = meek_candidates();
            if (meek.empty()) return;
            resolve(std::move(meek));
        }
    }

    const Pdag& dag() const { return g_; }

private:
    Pdag g0_;
    Pdag g_;
    const Dataset& data_;
    double lambda_;
    ScoreCache* cache_;
    CallCounter* counter_;
};

}  // namespace

Pdag hgi(const Pdag& skeleton, const Dataset& data, std::span<const VStructure> vstructs, double lambda,
         ScoreCache* cache, CallCounter* counter) {
    HgiState s(skeleton.skeleton(), data, lambda, cache, counter);
    s.vstructure_phase(vstructs);
    s.extension_phase();
    return s.dag();
}

Orienter hgi_orienter(const Dataset& data, double lambda, ScoreCache* cache, CallCounter* counter) {
    return [&data, lambda, cache, counter](const Pdag& skeleton, const SeparationRecord& rec, double threshold) {
        const auto vs = detect_vstructures_from_sepsets(skeleton, rec, threshold);
        Pdag dag = hgi(skeleton, data, vs, lambda, cache, counter);
        return Orientation{dag, dag};
    };
}

}  // namespace bnsl
