#include "bnsl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "bnsl/graph.hpp"

namespace bnsl {

namespace {

// Fills `cells` with joint counts of `vars` (first variable fastest). Uses
// thread-local scratch so repeated tests do not allocate.
void joint_counts(const Dataset& data, std::span<const int> vars, std::vector<std::uint32_t>& cells) {
    thread_local std::vector<std::uint32_t> idx;
    const std::size_t n = data.n();
    idx.assign(n, 0);
    std::uint32_t stride = 1;
    for (int v : vars) {
        const auto col = data.column(v);
        for (std::size_t r = 0; r < n; ++r) idx[r] += static_cast<std::uint32_t>(col[r]) * stride;
        stride *= static_cast<std::uint32_t>(data.cardinality(v));
    }
    cells.assign(stride, 0);
    for (std::size_t r = 0; r < n; ++r) ++cells[idx[r]];
}

void check_index(const Dataset& data, int v) {
    if (v < 0 || v >= data.p()) throw std::invalid_argument("variable index out of range");
}

// c * log(num / den) for exact integer num, den, accurate when num ~ den.
double xlog_ratio(double c, std::int64_t num, std::int64_t den) {
    return c * std::log1p(static_cast<double>(num - den) / static_cast<double>(den));
}

}  // namespace

double chi_square_upper_tail(double stat, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
    if (stat <= 0.0) return 1.0;
    if (std::isinf(stat)) return 0.0;
    return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

double entropy(const Dataset& data, int i, CallCounter* counter) {
    check_index(data, i);
    if (counter) counter->add_mi_entropy_call();
    thread_local std::vector<std::uint32_t> cells;
    const int vars[] = {i};
    joint_counts(data, vars, cells);
    const double n = static_cast<double>(data.n());
    double h = 0.0;
    for (std::uint32_t c : cells)
        if (c) h -= (c / n) * std::log(c / n);
    return h;
}

double joint_entropy(const Dataset& data, int i, int j, CallCounter* counter) {
    check_index(data, i);
    check_index(data, j);
    if (i == j) return entropy(data, i, counter);
    if (counter) counter->add_mi_entropy_call();
    thread_local std::vector<std::uint32_t> cells;
    const int vars[] = {i, j};
    joint_counts(data, vars, cells);
    const double n = static_cast<double>(data.n());
    double h = 0.0;
    for (std::uint32_t c : cells)
        if (c) h -= (c / n) * std::log(c / n);
    return h;
}

double mutual_information(const Dataset& data, int i, int j, CallCounter* counter) {
    check_index(data, i);
    check_index(data, j);
    if (i == j) throw std::invalid_argument("mutual_information requires distinct variables; use entropy");
    if (counter) counter->add_mi_entropy_call();
    thread_local std::vector<std::uint32_t> cells;
    const int vars[] = {i, j};
    joint_counts(data, vars, cells);
    const int ri = data.cardinality(i);
    const int rj = data.cardinality(j);
    std::vector<std::int64_t> ni(static_cast<std::size_t>(ri), 0), nj(static_cast<std::size_t>(rj), 0);
    for (int b = 0; b < rj; ++b)
        for (int a = 0; a < ri; ++a) {
            const auto c = cells[static_cast<std::size_t>(a + ri * b)];
            ni[static_cast<std::size_t>(a)] += c;
            nj[static_cast<std::size_t>(b)] += c;
        }
    const auto n = static_cast<std::int64_t>(data.n());
    double mi = 0.0;
    for (int b = 0; b < rj; ++b)
        for (int a = 0; a < ri; ++a) {
            const std::int64_t c = cells[static_cast<std::size_t>(a + ri * b)];
            if (c == 0) continue;
            mi += xlog_ratio(static_cast<double>(c), c * n,
                             ni[static_cast<std::size_t>(a)] * nj[static_cast<std::size_t>(b)]);
        }
    return mi / static_cast<double>(n);
}

CiTestResult g_squared(const Dataset& data, int i, int j, std::span<const int> cond, CallCounter* counter,
                       std::size_t cell_budget) {
    check_index(data, i);
    check_index(data, j);
    if (i == j) throw std::invalid_argument("g_squared requires distinct variables");
    for (int k : cond) {
        check_index(data, k);
        if (k == i || k == j) throw std::invalid_argument("conditioning set overlaps tested pair");
    }
    std::vector<int> vars{i, j};
    vars.insert(vars.end(), cond.begin(), cond.end());
    for (std::size_t a = 2; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b)
            if (vars[a] == vars[b]) throw std::invalid_argument("duplicate conditioning variable");
    const std::size_t size = table_size(data, vars);
    if (size > cell_budget) throw CellBudgetExceeded("G^2 table exceeds cell budget");
    if (counter) counter->add_ci_test();

    thread_local std::vector<std::uint32_t> cells;
    joint_counts(data, vars, cells);
    const int ri = data.cardinality(i);
    const int rj = data.cardinality(j);
    const std::size_t block = static_cast<std::size_t>(ri) * static_cast<std::size_t>(rj);
    const std::size_t strata = cells.size() / block;

    std::vector<std::int64_t> nik(static_cast<std::size_t>(ri)), njk(static_cast<std::size_t>(rj));
    double g = 0.0;
    double cond_levels = 1.0;
    for (int k : cond) cond_levels *= data.cardinality(k);
    for (std::size_t s = 0; s < strata; ++s) {
        const std::uint32_t* cell = cells.data() + s * block;
        std::fill(nik.begin(), nik.end(), 0);
        std::fill(njk.begin(), njk.end(), 0);
        std::int64_t nk = 0;
        for (int b = 0; b < rj; ++b)
            for (int a = 0; a < ri; ++a) {
                const auto c = cell[a + ri * b];
                nik[static_cast<std::size_t>(a)] += c;
                njk[static_cast<std::size_t>(b)] += c;
                nk += c;
            }
        if (nk == 0) continue;
        for (int b = 0; b < rj; ++b)
            for (int a = 0; a < ri; ++a) {
                const std::int64_t c = cell[a + ri * b];
                if (c == 0) continue;
                g += xlog_ratio(static_cast<double>(c), c * nk,
                                nik[static_cast<std::size_t>(a)] * njk[static_cast<std::size_t>(b)]);
            }
    }
    CiTestResult res;
    res.statistic = std::max(0.0, 2.0 * g);
    res.df = static_cast<double>(ri - 1) * static_cast<double>(rj - 1) * cond_levels;
    res.p_value = chi_square_upper_tail(res.statistic, res.df);
    return res;
}

double bic_lambda(std::size_t n) { return 0.5 * std::log(static_cast<double>(n)); }

std::vector<int> ScoreCache::key(int child, std::span<const int> parents) {
    std::vector<int> k;
    k.reserve(parents.size() + 1);
    k.push_back(child);
    k.insert(k.end(), parents.begin(), parents.end());
    return k;
}

bool ScoreCache::lookup(int child, std::span<const int> sorted_parents, double& value) const {
    const auto k = key(child, sorted_parents);
    std::lock_guard lock(mutex_);
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        misses_.fetch_add(1, std::memory_order_relaxed);
        return false;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    value = it->second;
    return true;
}

void ScoreCache::insert(int child, std::span<const int> sorted_parents, double value) {
    auto k = key(child, sorted_parents);
    std::lock_guard lock(mutex_);
    entries_.emplace(std::move(k), value);
}

std::size_t ScoreCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

double family_score(const Dataset& data, int i, std::span<const int> parents, double lambda, ScoreCache* cache,
                    CallCounter* counter, std::size_t cell_budget) {
    check_index(data, i);
    std::vector<int> pa(parents.begin(), parents.end());
    std::sort(pa.begin(), pa.end());
    for (std::size_t k = 0; k < pa.size(); ++k) {
        check_index(data, pa[k]);
        if (pa[k] == i) throw std::invalid_argument("variable cannot be its own parent");
        if (k && pa[k] == pa[k - 1]) throw std::invalid_argument("duplicate parent");
    }
    double value = 0.0;
    if (cache && cache->lookup(i, pa, value)) return value;

    std::vector<int> vars{i};
    vars.insert(vars.end(), pa.begin(), pa.end());
    if (table_size(data, vars) > cell_budget) {
        value = -std::numeric_limits<double>::infinity();
    } else {
        if (counter) counter->add_score_call();
        thread_local std::vector<std::uint32_t> cells;
        joint_counts(data, vars, cells);
        const auto ri = static_cast<std::size_t>(data.cardinality(i));
        const std::size_t q = cells.size() / ri;
        double ll = 0.0;
        for (std::size_t c = 0; c < q; ++c) {
            const std::uint32_t* row = cells.data() + c * ri;
            double npa = 0.0;
            for (std::size_t x = 0; x < ri; ++x) npa += row[x];
            if (npa == 0.0) continue;
            for (std::size_t x = 0; x < ri; ++x)
                if (row[x]) ll += row[x] * std::log(row[x] / npa);
        }
        value = ll - lambda * static_cast<double>(ri - 1) * static_cast<double>(q);
    }
    if (cache) cache->insert(i, pa, value);
    return value;
}

double graph_score(const Dataset& data, const Pdag& dag, double lambda, ScoreCache* cache, CallCounter* counter) {
    if (dag.node_count() != data.p()) throw std::invalid_argument("graph and data disagree on variable count");
    if (!dag.is_dag()) throw std::invalid_argument("graph_score requires a directed acyclic graph");
    double total = 0.0;
    for (int v = 0; v < dag.node_count(); ++v) total += family_score(data, v, dag.parents(v), lambda, cache, counter);
    return total;
}

}  // namespace bnsl
