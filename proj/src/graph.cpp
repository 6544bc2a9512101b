#include "bnsl/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bnsl/ci.hpp"
#include "bnsl/combinations.hpp"
#include "bnsl/rng.hpp"

namespace bnsl {

// ---------------------------------------------------------------------------
// Pdag

Pdag Pdag::complete(int p) {
    Pdag g(p);
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) g.add_undirected(a, b);
    return g;
}

void Pdag::check(int a, int b) const {
    if (a < 0 || b < 0 || a >= p_ || b >= p_) throw std::out_of_range("node index out of range");
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
}

void Pdag::add_undirected(int a, int b) {
    check(a, b);
    marks_[idx(a, b)] = 1;
    marks_[idx(b, a)] = 1;
}

void Pdag::add_directed(int a, int b) {
    check(a, b);
    marks_[idx(a, b)] = 1;
    marks_[idx(b, a)] = 0;
}

void Pdag::remove_edge(int a, int b) {
    check(a, b);
    marks_[idx(a, b)] = 0;
    marks_[idx(b, a)] = 0;
}

void Pdag::orient(int a, int b) {
    check(a, b);
    if (!adjacent(a, b)) throw std::invalid_argument("cannot orient a missing edge");
    add_directed(a, b);
}

std::vector<int> Pdag::neighbors(int a) const {
    std::vector<int> out;
    for (int b = 0; b < p_; ++b)
        if (b != a && adjacent(a, b)) out.push_back(b);
    return out;
}

std::vector<int> Pdag::parents(int a) const {
    std::vector<int> out;
    for (int b = 0; b < p_; ++b)
        if (b != a && directed(b, a)) out.push_back(b);
    return out;
}

std::vector<int> Pdag::children(int a) const {
    std::vector<int> out;
    for (int b = 0; b < p_; ++b)
        if (b != a && directed(a, b)) out.push_back(b);
    return out;
}

std::vector<int> Pdag::undirected_neighbors(int a) const {
    std::vector<int> out;
    for (int b = 0; b < p_; ++b)
        if (b != a && undirected(a, b)) out.push_back(b);
    return out;
}

int Pdag::edge_count() const {
    int count = 0;
    for (int a = 0; a < p_; ++a)
        for (int b = a + 1; b < p_; ++b)
            if (adjacent(a, b)) ++count;
    return count;
}

bool Pdag::has_undirected() const {
    for (int a = 0; a < p_; ++a)
        for (int b = a + 1; b < p_; ++b)
            if (undirected(a, b)) return true;
    return false;
}

bool Pdag::has_directed_cycle() const {
    // Kahn's algorithm over directed edges only.
    std::vector<int> indeg(static_cast<std::size_t>(p_), 0);
    for (int a = 0; a < p_; ++a)
        for (int b = 0; b < p_; ++b)
            if (a != b && directed(a, b)) ++indeg[static_cast<std::size_t>(b)];
    std::vector<int> stack;
    for (int v = 0; v < p_; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w = 0; w < p_; ++w)
            if (w != v && directed(v, w) && --indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    return seen != p_;
}

bool Pdag::reaches(int from, int to) const {
    std::vector<char> seen(static_cast<std::size_t>(p_), 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < p_; ++w) {
            if (w == v || !directed(v, w)) continue;
            if (w == to) return true;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

Pdag Pdag::skeleton() const {
    Pdag s(p_);
    for (int a = 0; a < p_; ++a)
        for (int b = a + 1; b < p_; ++b)
            if (adjacent(a, b)) s.add_undirected(a, b);
    return s;
}

std::vector<Edge> Pdag::edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < p_; ++a)
        for (int b = a + 1; b < p_; ++b) {
            if (undirected(a, b))
                out.push_back({a, b, false});
            else if (directed(a, b))
                out.push_back({a, b, true});
            else if (directed(b, a))
                out.push_back({b, a, true});
        }
    return out;
}

// ---------------------------------------------------------------------------
// SeparationRecord

SeparationRecord::SeparationRecord(int p)
    : p_(p),
      phi_(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), -1.0),
      sepsets_(static_cast<std::size_t>(p) * static_cast<std::size_t>(p)) {}

void SeparationRecord::update(int i, int j, std::span<const int> set, double p_value) {
    if (i == j) throw std::invalid_argument("separation record needs distinct nodes");
    const auto k = idx(i, j);
    if (p_value > phi_[k]) {
        phi_[k] = p_value;
        sepsets_[k].assign(set.begin(), set.end());
        std::sort(sepsets_[k].begin(), sepsets_[k].end());
    }
}

void SeparationRecord::set(int i, int j, double p_value, std::vector<int> set) {
    const auto k = idx(i, j);
    phi_[k] = p_value;
    std::sort(set.begin(), set.end());
    sepsets_[k] = std::move(set);
}

// ---------------------------------------------------------------------------
// V-structures

std::vector<VStructure> detect_vstructures_from_sepsets(const Pdag& skeleton, const SeparationRecord& rec,
                                                        double threshold) {
    std::vector<VStructure> out;
    const int p = skeleton.node_count();
    for (int k = 0; k < p; ++k) {
        const auto nbrs = skeleton.neighbors(k);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const int i = nbrs[a];
                const int j = nbrs[b];
                if (skeleton.adjacent(i, j)) continue;
                if (!rec.has(i, j))
                    throw std::invalid_argument("no separation record for nonadjacent pair " + std::to_string(i) +
                                                "," + std::to_string(j));
                if (!(rec.phi(i, j) > threshold)) continue;
                const auto& s = rec.sepset(i, j);
                if (std::find(s.begin(), s.end(), k) == s.end()) out.push_back({i, k, j});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// True when some set S with k in S, S \ {k} drawn from pool \ {k}, and
// |S| <= max_size separates i and j.
bool separable_through(const CiSource& ci, int i, int j, int k, const std::vector<int>& pool, int max_size) {
    std::vector<int> others;
    for (int v : pool)
        if (v != k && v != i && v != j) others.push_back(v);
    for (int size = 0; size + 1 <= max_size && size <= static_cast<int>(others.size()); ++size) {
        const bool hit = for_each_subset(others, size, [&](std::span<const int> s) {
            std::vector<int> cond(s.begin(), s.end());
            cond.push_back(k);
            std::sort(cond.begin(), cond.end());
            return ci.test(i, j, cond).independent;
        });
        if (hit) return true;
    }
    return false;
}

}  // namespace

std::vector<VStructure> detect_vstructures_by_testing(const Pdag& skeleton, const CiSource& ci, int max_size) {
    std::vector<VStructure> out;
    const int p = skeleton.node_count();
    for (int k = 0; k < p; ++k) {
        const auto nbrs = skeleton.neighbors(k);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const int i = nbrs[a];
                const int j = nbrs[b];
                if (skeleton.adjacent(i, j)) continue;
                const auto ni = skeleton.neighbors(i);
                const auto nj = skeleton.neighbors(j);
                const bool i_smaller = ni.size() <= nj.size();
                const auto& first = i_smaller ? ni : nj;
                const auto& second = i_smaller ? nj : ni;
                if (separable_through(ci, i, j, k, first, max_size)) continue;
                if (separable_through(ci, i, j, k, second, max_size)) continue;
                out.push_back({i, k, j});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VStructure> vstructures_of(const Pdag& g) {
    std::vector<VStructure> out;
    for (int k = 0; k < g.node_count(); ++k) {
        const auto pa = g.parents(k);
        for (std::size_t a = 0; a < pa.size(); ++a)
            for (std::size_t b = a + 1; b < pa.size(); ++b)
                if (!g.adjacent(pa[a], pa[b])) out.push_back({pa[a], k, pa[b]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Meek's rules

namespace {

bool rule1(const Pdag& g, int a, int b) {
    for (int c = 0; c < g.node_count(); ++c)
        if (c != a && c != b && g.directed(c, a) && !g.adjacent(c, b)) return true;
    return false;
}

bool rule2(const Pdag& g, int a, int b) {
    for (int c = 0; c < g.node_count(); ++c)
        if (c != a && c != b && g.directed(a, c) && g.directed(c, b)) return true;
    return false;
}

bool rule3(const Pdag& g, int a, int b) {
    const int p = g.node_count();
    for (int c = 0; c < p; ++c) {
        if (c == a || c == b || !g.undirected(a, c) || !g.directed(c, b)) continue;
        for (int d = c + 1; d < p; ++d)
            if (d != a && d != b && g.undirected(a, d) && g.directed(d, b) && !g.adjacent(c, d)) return true;
    }
    return false;
}

// a--d, d->c, c->b, a adjacent to c, b and d nonadjacent.
bool rule4(const Pdag& g, int a, int b) {
    const int p = g.node_count();
    for (int c = 0; c < p; ++c) {
        if (c == a || c == b || !g.directed(c, b) || !g.adjacent(a, c)) continue;
        for (int d = 0; d < p; ++d)
            if (d != a && d != b && d != c && g.undirected(a, d) && g.directed(d, c) && !g.adjacent(b, d))
                return true;
    }
    return false;
}

}  // namespace

int meek_rule_compelling(const Pdag& g, int a, int b) {
    if (!g.undirected(a, b)) return 0;
    if (rule1(g, a, b)) return 1;
    if (rule2(g, a, b)) return 2;
    if (rule3(g, a, b)) return 3;
    if (rule4(g, a, b)) return 4;
    return 0;
}

Pdag meek_closure(Pdag g) {
    using Rule = bool (*)(const Pdag&, int, int);
    static constexpr Rule rules[] = {rule1, rule2, rule3, rule4};
    const int p = g.node_count();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Rule rule : rules) {
            for (int a = 0; a < p && !changed; ++a)
                for (int b = a + 1; b < p && !changed; ++b) {
                    if (!g.undirected(a, b)) continue;
                    if (rule(g, a, b)) {
                        g.orient(a, b);
                        changed = true;
                    } else if (rule(g, b, a)) {
                        g.orient(b, a);
                        changed = true;
                    }
                }
            if (changed) break;
        }
    }
    return g;
}

Pdag apply_vstructures(Pdag g, std::span<const VStructure> vstructs) {
    for (const auto& v : vstructs) {
        if (!g.adjacent(v.i, v.k) || !g.adjacent(v.j, v.k)) continue;
        if (g.directed(v.k, v.i) || g.directed(v.k, v.j)) continue;
        g.orient(v.i, v.k);
        g.orient(v.j, v.k);
    }
    return g;
}

Pdag skel_to_cpdag(const Pdag& skeleton, std::span<const VStructure> vstructs) {
    return meek_closure(apply_vstructures(skeleton, vstructs));
}

// ---------------------------------------------------------------------------
// Extensions

namespace {

// Runs Dor-Tarsi until it finishes or gets stuck. Orientations are written to
// `result`; `work` keeps whatever could not be resolved.
bool dor_tarsi(Pdag& work, Pdag& result) {
    const int p = work.node_count();
    std::vector<char> alive(static_cast<std::size_t>(p), 1);
    while (true) {
        bool any_edges = false;
        bool found = false;
        for (int x = 0; x < p; ++x) {
            if (!alive[static_cast<std::size_t>(x)]) continue;
            const auto nbrs = work.neighbors(x);
            if (nbrs.empty()) {
                alive[static_cast<std::size_t>(x)] = 0;
                continue;
            }
            any_edges = true;
            if (!work.children(x).empty()) continue;
            bool ok = true;
            for (int y : nbrs) {
                if (!work.undirected(x, y)) continue;
                for (int z : nbrs)
                    if (z != y && !work.adjacent(y, z)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            for (int y : nbrs) {
                if (work.undirected(x, y)) result.orient(y, x);
                work.remove_edge(x, y);
            }
            alive[static_cast<std::size_t>(x)] = 0;
            found = true;
            break;
        }
        if (!any_edges) return true;
        if (!found) return false;
    }
}

}  // namespace

std::optional<Pdag> pdag_to_dag(const Pdag& g) {
    Pdag work = g;
    Pdag result = g;
    if (!dor_tarsi(work, result)) return std::nullopt;
    return result;
}

Pdag semi_arbitrary_extension(const Pdag& g, std::uint64_t seed) {
    Pdag work = g;
    Pdag partial = g;
    dor_tarsi(work, partial);

    const int p = g.node_count();
    Pdag dag(p);
    std::vector<Edge> pending;
    for (const auto& e : partial.edges()) {
        if (!e.directed) {
            pending.push_back(e);
            continue;
        }
        if (!dag.reaches(e.to, e.from)) dag.add_directed(e.from, e.to);
    }
    auto rng = make_rng(seed, "semi_arbitrary_extension");
    for (std::size_t k = pending.size(); k > 1; --k)
        std::swap(pending[k - 1], pending[uniform_index(rng, k)]);
    for (const auto& e : pending) {
        int a = e.from;
        int b = e.to;
        if (rng() & 1) std::swap(a, b);
        if (!dag.reaches(b, a))
            dag.add_directed(a, b);
        else if (!dag.reaches(a, b))
            dag.add_directed(b, a);
    }
    return dag;
}

Pdag pattern_of(const Pdag& dag) {
    Pdag out = dag.skeleton();
    for (const auto& v : vstructures_of(dag)) {
        out.orient(v.i, v.k);
        out.orient(v.j, v.k);
    }
    return out;
}

Pdag cpdag_of_dag(const Pdag& dag) {
    if (!dag.is_dag()) throw std::invalid_argument("cpdag_of_dag requires a DAG");
    return meek_closure(pattern_of(dag));
}

// ---------------------------------------------------------------------------
// d-separation (reachability with ball directions)

bool d_separated(const Pdag& dag, int i, int j, std::span<const int> cond) {
    const int p = dag.node_count();
    if (i == j) throw std::invalid_argument("d_separated needs distinct endpoints");
    std::vector<char> in_cond(static_cast<std::size_t>(p), 0);
    for (int z : cond) {
        if (z == i || z == j) throw std::invalid_argument("conditioning set overlaps endpoints");
        in_cond[static_cast<std::size_t>(z)] = 1;
    }
    // Nodes that are in cond or have a descendant in cond.
    std::vector<char> anc(static_cast<std::size_t>(p), 0);
    std::vector<int> stack(cond.begin(), cond.end());
    for (int z : cond) anc[static_cast<std::size_t>(z)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : dag.parents(v))
            if (!anc[static_cast<std::size_t>(u)]) {
                anc[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    // State: (node, arrived_from_child). Arriving "up" means travelling
    // against an edge direction, i.e. from a child.
    std::vector<char> seen_up(static_cast<std::size_t>(p), 0), seen_down(static_cast<std::size_t>(p), 0);
    std::deque<std::pair<int, bool>> queue{{i, true}};
    while (!queue.empty()) {
        const auto [v, up] = queue.front();
        queue.pop_front();
        auto& seen = up ? seen_up : seen_down;
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        const bool observed = in_cond[static_cast<std::size_t>(v)] != 0;
        if (v == j && !observed) return false;
        if (up) {
            if (observed) continue;
            for (int u : dag.parents(v)) queue.emplace_back(u, true);
            for (int c : dag.children(v)) queue.emplace_back(c, false);
        } else {
            if (!observed)
                for (int c : dag.children(v)) queue.emplace_back(c, false);
            if (anc[static_cast<std::size_t>(v)])
                for (int u : dag.parents(v)) queue.emplace_back(u, true);
        }
    }
    return true;
}

std::vector<Pdag> enumerate_equivalence_class(const Pdag& dag) {
    if (dag.node_count() > 6) throw std::invalid_argument("equivalence enumeration limited to 6 nodes");
    if (!dag.is_dag()) throw std::invalid_argument("enumerate_equivalence_class requires a DAG");
    const auto skel = dag.skeleton().edges();
    const auto target = vstructures_of(dag);
    std::vector<Pdag> out;
    const std::uint32_t total = 1u << skel.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Pdag g(dag.node_count());
        for (std::size_t e = 0; e < skel.size(); ++e) {
            if (mask & (1u << e))
                g.add_directed(skel[e].to, skel[e].from);
            else
                g.add_directed(skel[e].from, skel[e].to);
        }
        if (g.has_directed_cycle()) continue;
        if (vstructures_of(g) == target) out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list serialization

std::string to_edge_list(const Pdag& g) {
    std::ostringstream out;
    out << "nodes " << g.node_count() << '\n';
    for (const auto& e : g.edges()) out << e.from << (e.directed ? " -> " : " -- ") << e.to << '\n';
    return out.str();
}

Pdag parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int p = -1;
    if (!(in >> word >> p) || word != "nodes" || p < 0) throw std::invalid_argument("edge list must start with 'nodes <p>'");
    Pdag g(p);
    int a = 0;
    int b = 0;
    std::string arrow;
    while (in >> a >> arrow >> b) {
        if (g.adjacent(a, b)) throw std::invalid_argument("duplicate edge in edge list");
        if (arrow == "->")
            g.add_directed(a, b);
        else if (arrow == "--")
            g.add_undirected(a, b);
        else
            throw std::invalid_argument("unknown edge token '" + arrow + "'");
    }
    if (!in.eof()) throw std::invalid_argument("malformed edge list");
    return g;
}

}  // namespace bnsl
