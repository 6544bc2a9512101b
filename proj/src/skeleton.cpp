#include "bnsl/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "bnsl/combinations.hpp"

namespace bnsl {

namespace {

struct Trial {
    std::vector<int> set;
    double p_value;
};

struct PairOutcome {
    std::vector<Trial> trials;
    bool separated = false;
};

using PairList = std::vector<std::pair<int, int>>;

// Evaluates `work` for every pair, possibly on several threads, and returns
// outcomes in pair order so callers can merge them sequentially.
template <typename Work>
std::vector<PairOutcome> run_pairs(const PairList& pairs, int threads, Work&& work) {
    std::vector<PairOutcome> out(pairs.size());
    const auto nthreads = static_cast<std::size_t>(std::max(1, threads));
    if (nthreads == 1 || pairs.size() < 2) {
        for (std::size_t k = 0; k < pairs.size(); ++k) out[k] = work(pairs[k].first, pairs[k].second);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < pairs.size(); k = next.fetch_add(1))
            out[k] = work(pairs[k].first, pairs[k].second);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < std::min(nthreads, pairs.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

// Runs one test; returns true on independence. Unevaluated tests (cell
// budget) count as dependence and leave no record.
bool run_test(const CiSource& ci, int i, int j, std::span<const int> set, PairOutcome& po) {
    const auto r = ci.test(i, j, set);
    if (!r.evaluated) return false;
    po.trials.push_back({std::vector<int>(set.begin(), set.end()), r.p_value});
    if (r.independent) po.separated = true;
    return r.independent;
}

void merge(const PairList& pairs, const std::vector<PairOutcome>& outcomes, SeparationRecord& rec) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (const auto& t : outcomes[k].trials) rec.update(pairs[k].first, pairs[k].second, t.set, t.p_value);
}

std::vector<int> without(std::vector<int> v, int x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
    return v;
}

bool contains_all(const std::vector<int>& sorted_pool, std::span<const int> s) {
    return std::all_of(s.begin(), s.end(), [&](int v) { return std::binary_search(sorted_pool.begin(), sorted_pool.end(), v); });
}

}  // namespace

Pdag pc_skeleton(const CiSource& ci, Pdag g, SeparationRecord& rec, const SkeletonOptions& opts) {
    const int p = g.node_count();
    for (int l = opts.start_level; l <= opts.max_size; ++l) {
        const Pdag frozen = g;
        PairList pairs;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                if (!frozen.adjacent(i, j)) continue;
                const auto di = static_cast<int>(frozen.neighbors(i).size()) - 1;
                const auto dj = static_cast<int>(frozen.neighbors(j).size()) - 1;
                if (std::max(di, dj) >= l) pairs.emplace_back(i, j);
            }
        if (pairs.empty()) break;

        auto outcomes = run_pairs(pairs, opts.threads, [&](int i, int j) {
            PairOutcome po;
            const auto ni = without(frozen.neighbors(i), j);
            const auto nj = without(frozen.neighbors(j), i);
            auto visit_side = [&](const std::vector<int>& pool, bool skip_seen) {
                return for_each_subset(pool, l, [&](std::span<const int> s) {
                    if (skip_seen && static_cast<int>(ni.size()) >= l && contains_all(ni, s)) return false;
                    if (opts.filter && !opts.filter(i, j, s)) return false;
                    return run_test(ci, i, j, s, po);
                });
            };
            if (!visit_side(ni, false)) visit_side(nj, true);
            return po;
        });
        merge(pairs, outcomes, rec);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (outcomes[k].separated) g.remove_edge(pairs[k].first, pairs[k].second);
    }
    return g;
}

namespace {

using SetBook = std::map<std::pair<int, int>, std::set<std::vector<int>>>;

// Tests `set` itself, or every size-m subset of it when it is larger than m,
// stopping at the first independence. Sets already tested for the pair are
// not repeated.
bool capped_test(const CiSource& ci, int i, int j, const std::vector<int>& set, int m,
                 const std::set<std::vector<int>>& seen, PairOutcome& po) {
    if (set.empty()) return false;
    auto one = [&](std::span<const int> s) {
        std::vector<int> key(s.begin(), s.end());
        if (seen.count(key)) return false;
        for (const auto& t : po.trials)
            if (t.set == key) return false;
        return run_test(ci, i, j, s, po);
    };
    if (static_cast<int>(set.size()) <= m) return one(set);
    return for_each_subset(set, m, one);
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void orient(PpcResult& res, double alpha) {
    const auto vs = detect_vstructures_from_sepsets(res.skeleton, res.record, alpha);
    res.cpdag = skel_to_cpdag(res.skeleton, vs);
}

// Marginal tests for every pair through the CI source.
std::vector<std::pair<int, int>> marginal_screen(const CiSource& ci, SeparationRecord& rec, int threads) {
    const int p = ci.node_count();
    PairList pairs;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
    auto outcomes = run_pairs(pairs, threads, [&](int i, int j) {
        PairOutcome po;
        run_test(ci, i, j, {}, po);
        return po;
    });
    merge(pairs, outcomes, rec);
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (outcomes[k].separated) out.push_back(pairs[k]);
    return out;
}

}  // namespace

PpcResult ppc(const CiSource& ci, const Dataset* data, const PpcOptions& opts) {
    const int p = ci.node_count();
    PpcResult res;
    res.record = SeparationRecord(p);

    if (opts.partition) {
        if (static_cast<int>(opts.partition->labels.size()) != p)
            throw std::invalid_argument("partition size does not match variable count");
        res.partition = *opts.partition;
        res.blacklist = marginal_screen(ci, res.record, opts.threads);
    } else {
        if (!data) throw std::invalid_argument("ppc needs data when no partition is supplied");
        if (data->p() != p) throw std::invalid_argument("data and CI source disagree on variable count");
        if (p < 2) {
            res.partition = Partition::single(p);
        } else {
            const auto dm = distance_matrix(*data, opts.alpha, opts.counter);
            res.partition = partition(dm.d, p);
            res.blacklist = dm.blacklist;
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) res.record.update(i, j, {}, dm.pvalue(i, j));
        }
    }
    const auto& c = res.partition.labels;
    std::vector<char> black(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0);
    for (auto [i, j] : res.blacklist) black[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)] = 1;
    auto blacklisted = [&](int i, int j) {
        return black[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)] != 0;
    };
    auto label = [&](int v) { return c[static_cast<std::size_t>(v)]; };

    // Within clusters.
    Pdag g(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (label(i) == label(j) && !blacklisted(i, j)) g.add_undirected(i, j);
    SkeletonOptions within{opts.max_size, 1, opts.threads, {}};
    g = pc_skeleton(ci, std::move(g), res.record, within);
    res.after_within = g;

    SetBook tested;
    auto record_sets = [&](const PairList& pairs, const std::vector<PairOutcome>& outcomes) {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            for (const auto& t : outcomes[k].trials) tested[pairs[k]].insert(t.set);
    };
    static const std::set<std::vector<int>> kNone;
    auto seen_for = [&](int i, int j) -> const std::set<std::vector<int>>& {
        auto it = tested.find({i, j});
        return it == tested.end() ? kNone : it->second;
    };

    // Screen 1: connect between-cluster pairs dependent given N(i) u N(j).
    {
        const Pdag frozen = g;
        PairList pairs;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (label(i) != label(j) && !blacklisted(i, j)) pairs.emplace_back(i, j);
        auto outcomes = run_pairs(pairs, opts.threads, [&](int i, int j) {
            PairOutcome po;
            capped_test(ci, i, j, sorted_union(frozen.neighbors(i), frozen.neighbors(j)), opts.max_size, kNone, po);
            return po;
        });
        merge(pairs, outcomes, res.record);
        record_sets(pairs, outcomes);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (!outcomes[k].separated) g.add_undirected(pairs[k].first, pairs[k].second);
    }
    res.after_screen1 = g;

    // Screen 2: disconnect between-cluster edges separated by N(i)\{j} or N(j)\{i}.
    {
        const Pdag frozen = g;
        PairList pairs;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (label(i) != label(j) && frozen.adjacent(i, j)) pairs.emplace_back(i, j);
        auto outcomes = run_pairs(pairs, opts.threads, [&](int i, int j) {
            PairOutcome po;
            const auto& seen = seen_for(i, j);
            if (!capped_test(ci, i, j, without(frozen.neighbors(i), j), opts.max_size, seen, po))
                capped_test(ci, i, j, without(frozen.neighbors(j), i), opts.max_size, seen, po);
            return po;
        });
        merge(pairs, outcomes, res.record);
        record_sets(pairs, outcomes);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (outcomes[k].separated) g.remove_edge(pairs[k].first, pairs[k].second);
    }
    res.after_screen2 = g;

    // Completion, excluding sets already covered.
    SkeletonOptions completion{opts.max_size, 1, opts.threads, {}};
    completion.filter = [&](int i, int j, std::span<const int> s) {
        if (label(i) == label(j))
            return std::any_of(s.begin(), s.end(), [&](int v) { return label(v) != label(i); });
        return seen_for(i, j).count(std::vector<int>(s.begin(), s.end())) == 0;
    };
    res.skeleton = pc_skeleton(ci, std::move(g), res.record, completion);
    orient(res, opts.alpha);
    return res;
}

PpcResult pc(const CiSource& ci, const PpcOptions& opts) {
    const int p = ci.node_count();
    PpcResult res;
    res.record = SeparationRecord(p);
    res.partition = Partition::single(p);
    SkeletonOptions so{opts.max_size, 0, opts.threads, {}};
    res.skeleton = pc_skeleton(ci, Pdag::complete(p), res.record, so);
    res.after_within = res.after_screen1 = res.after_screen2 = res.skeleton;
    orient(res, opts.alpha);
    return res;
}

}  // namespace bnsl
