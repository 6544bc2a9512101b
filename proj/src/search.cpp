#include "bnsl/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "bnsl/hgi.hpp"
#include "bnsl/rng.hpp"

namespace bnsl {

CandidateSet CandidateSet::all(int p) {
    CandidateSet c(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) c.allow(i, j);
    return c;
}

CandidateSet CandidateSet::from_graph(const Pdag& g) {
    CandidateSet c(g.node_count());
    for (const auto& e : g.edges()) c.allow(e.from, e.to);
    return c;
}

void CandidateSet::allow(int i, int j) {
    allowed_[static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(j)] = 1;
    allowed_[static_cast<std::size_t>(j) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(i)] = 1;
}

namespace {

enum class MoveKind { add = 0, remove = 1, reverse = 2 };

struct Move {
    MoveKind kind;
    int from;
    int to;
    double delta;
};

double safe_delta(double after, double before) {
    if (std::isinf(after) && after < 0) return -std::numeric_limits<double>::infinity();
    return after - before;
}

class Climber {
public:
    Climber(const Dataset& data, const Pdag& init, const CandidateSet& cand, double lambda, ScoreCache* cache,
            CallCounter* counter)
        : data_(data), g_(init), cand_(cand), lambda_(lambda), cache_(cache), counter_(counter), p_(init.node_count()) {
        auto rng = make_rng(0, "tabu_signature");
        keys_.resize(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_));
        for (auto& k : keys_) k = rng();
        fs_.resize(static_cast<std::size_t>(p_));
        for (int v = 0; v < p_; ++v) fs_[static_cast<std::size_t>(v)] = score(v, g_.parents(v));
        for (const auto& e : g_.edges()) hash_ ^= key(e.from, e.to);
    }

    double total() const {
        double s = 0.0;
        for (double f : fs_) s += f;
        return s;
    }

    Pdag run(const TabuConfig& cfg) {
        Pdag best = g_;
        double best_score = total();
        remember(cfg);
        int stall = 0;
        while (true) {
            closure();
            Move m{};
            if (!best_move(m)) break;
            apply(m);
            remember(cfg);
            const double s = total();
            if (s > best_score + 1e-9 * std::max(1.0, std::abs(best_score))) {
                best_score = s;
                best = g_;
                stall = 0;
            } else if (++stall > cfg.t0) {
                break;
            }
        }
        return best;
    }

private:
    double score(int v, const std::vector<int>& pa) const { return family_score(data_, v, pa, lambda_, cache_, counter_); }
    std::uint64_t key(int a, int b) const { return keys_[static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b)]; }
    bool reach(int a, int b) const { return reach_[static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b)] != 0; }

    // reach_[a][b]: directed path from a to b of length >= 1.
    void closure() {
        const auto sp = static_cast<std::size_t>(p_);
        reach_.assign(sp * sp, 0);
        for (int a = 0; a < p_; ++a)
            for (int b : g_.children(a)) reach_[static_cast<std::size_t>(a) * sp + static_cast<std::size_t>(b)] = 1;
        for (std::size_t k = 0; k < sp; ++k)
            for (std::size_t a = 0; a < sp; ++a)
                if (reach_[a * sp + k])
                    for (std::size_t b = 0; b < sp; ++b)
                        if (reach_[k * sp + b]) reach_[a * sp + b] = 1;
    }

    struct Signature {
        std::uint64_t hash;
        std::vector<std::pair<int, int>> edges;
    };

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g_.edges()) out.emplace_back(e.from, e.to);
        return out;
    }

    void remember(const TabuConfig& cfg) {
        if (cfg.t1 <= 0) return;
        tabu_.push_back({hash_, edge_list()});
        while (static_cast<int>(tabu_.size()) > cfg.t1) tabu_.pop_front();
    }

    std::uint64_t hash_after(const Move& m) const {
        switch (m.kind) {
            case MoveKind::add: return hash_ ^ key(m.from, m.to);
            case MoveKind::remove: return hash_ ^ key(m.from, m.to);
            case MoveKind::reverse: return hash_ ^ key(m.from, m.to) ^ key(m.to, m.from);
        }
        return hash_;
    }

    bool is_tabu(const Move& m) const {
        const auto h = hash_after(m);
        bool candidate = false;
        for (const auto& s : tabu_) candidate = candidate || s.hash == h;
        if (!candidate) return false;
        Pdag next = g_;
        apply_to(next, m);
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : next.edges()) edges.emplace_back(e.from, e.to);
        for (const auto& s : tabu_)
            if (s.hash == h && s.edges == edges) return true;
        return false;
    }

    static void apply_to(Pdag& g, const Move& m) {
        switch (m.kind) {
            case MoveKind::add: g.add_directed(m.from, m.to); break;
            case MoveKind::remove: g.remove_edge(m.from, m.to); break;
            case MoveKind::reverse: g.add_directed(m.to, m.from); break;
        }
    }

    void apply(const Move& m) {
        hash_ = hash_after(m);
        apply_to(g_, m);
        fs_[static_cast<std::size_t>(m.to)] = score(m.to, g_.parents(m.to));
        if (m.kind == MoveKind::reverse) fs_[static_cast<std::size_t>(m.from)] = score(m.from, g_.parents(m.from));
    }

    std::vector<int> with(std::vector<int> pa, int x) const {
        pa.insert(std::upper_bound(pa.begin(), pa.end(), x), x);
        return pa;
    }
    std::vector<int> without(std::vector<int> pa, int x) const {
        pa.erase(std::remove(pa.begin(), pa.end(), x), pa.end());
        return pa;
    }

    // Directed path a -> ... -> b avoiding the edge a->b itself.
    bool other_path(int a, int b) const {
        for (int c : g_.children(a))
            if (c != b && reach(c, b)) return true;
        return false;
    }

    bool consider(Move m, Move& best, bool& found) const {
        if (std::isnan(m.delta)) m.delta = -std::numeric_limits<double>::infinity();
        if (found && !(m.delta > best.delta + 1e-9 * std::max(1.0, std::abs(best.delta)))) return false;
        if (std::isinf(m.delta) && m.delta < 0 && found) return false;
        if (is_tabu(m)) return false;
        best = m;
        found = true;
        return true;
    }

    bool best_move(Move& best) const {
        bool found = false;
        for (int pass = 0; pass < 3; ++pass)
            for (int a = 0; a < p_; ++a)
                for (int b = a + 1; b < p_; ++b)
                    for (int dir = 0; dir < 2; ++dir) {
                        const int i = dir == 0 ? a : b;
                        const int j = dir == 0 ? b : a;
                        const auto fj = fs_[static_cast<std::size_t>(j)];
                        if (pass == 0) {
                            if (g_.adjacent(i, j) || !cand_.allows(i, j) || reach(j, i)) continue;
                            consider({MoveKind::add, i, j, safe_delta(score(j, with(g_.parents(j), i)), fj)}, best, found);
                        } else if (pass == 1) {
                            if (!g_.directed(i, j)) continue;
                            consider({MoveKind::remove, i, j, safe_delta(score(j, without(g_.parents(j), i)), fj)}, best, found);
                        } else {
                            if (!g_.directed(i, j) || other_path(i, j)) continue;
                            const double d = safe_delta(score(j, without(g_.parents(j), i)), fj) +
                                             safe_delta(score(i, with(g_.parents(i), j)), fs_[static_cast<std::size_t>(i)]);
                            consider({MoveKind::reverse, i, j, d}, best, found);
                        }
                    }
        return found;
    }

    const Dataset& data_;
    Pdag g_;
    const CandidateSet& cand_;
    double lambda_;
    ScoreCache* cache_;
    CallCounter* counter_;
    int p_;
    std::vector<double> fs_;
    std::vector<char> reach_;
    std::vector<std::uint64_t> keys_;
    std::uint64_t hash_ = 0;
    std::deque<Signature> tabu_;
};

}  // namespace

Pdag hill_climb(const Dataset& data, const Pdag& init, const CandidateSet& candidates, double lambda,
                const TabuConfig& tabu, ScoreCache* cache, CallCounter* counter) {
    if (init.node_count() != data.p() || candidates.node_count() != data.p())
        throw std::invalid_argument("hill_climb inputs disagree on variable count");
    if (!init.is_dag()) throw std::invalid_argument("hill_climb must start from a DAG");
    Climber c(data, init, candidates, lambda, cache, counter);
    return c.run(tabu);
}

Pdag gsc(const Dataset& data, const Pdag& skeleton, double lambda, const TabuConfig& tabu, ScoreCache* cache,
         CallCounter* counter) {
    return hill_climb(data, Pdag(data.p()), CandidateSet::from_graph(skeleton), lambda, tabu, cache, counter);
}

PhgsResult phgs(const Dataset& data, double lambda, const PhgsOptions& opts, ScoreCache* cache, CallCounter* counter) {
    PhgsResult out;
    DataCi ci(data, opts.alpha, counter);
    PpcOptions po;
    po.alpha = opts.alpha;
    po.max_size = opts.max_size;
    po.threads = opts.threads;
    po.counter = counter;
    out.skeleton = ppc(ci, &data, po);
    PathOptions pa{opts.tau, opts.alpha_min, opts.seed};
    out.path = path_select(out.skeleton.record, out.skeleton.skeleton, data, lambda, pa,
                           hgi_orienter(data, lambda, cache, counter), cache, counter);
    const auto allowed = CandidateSet::from_graph(out.path.steps.front().skeleton);
    out.dag = hill_climb(data, out.path.best().dag, allowed, lambda, opts.tabu, cache, counter);
    return out;
}

}  // namespace bnsl
