#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bnsl {

class CiSource;
class CallCounter;

/// One edge of a partially directed graph. For undirected edges from < to.
struct Edge {
    int from = 0;
    int to = 0;
    bool directed = false;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Partially directed graph over nodes 0..p-1 with at most one edge per
/// unordered pair. Stored as a dense mark matrix: mark(a, b) && mark(b, a)
/// is a--b, mark(a, b) alone is a->b. Serves as skeleton, PDAG, CPDAG and
/// DAG depending on which invariants a caller relies on.
class Pdag {
public:
    explicit Pdag(int p = 0) : p_(p), marks_(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0) {}

    /// Complete undirected graph.
    static Pdag complete(int p);

    int node_count() const { return p_; }

    bool adjacent(int a, int b) const { return mark(a, b) || mark(b, a); }
    bool directed(int a, int b) const { return mark(a, b) && !mark(b, a); }
    bool undirected(int a, int b) const { return mark(a, b) && mark(b, a); }

    void add_undirected(int a, int b);
    void add_directed(int a, int b);
    void remove_edge(int a, int b);
    /// Turns an existing edge between a and b into a->b.
    void orient(int a, int b);

    std::vector<int> neighbors(int a) const;
    std::vector<int> parents(int a) const;
    std::vector<int> children(int a) const;
    std::vector<int> undirected_neighbors(int a) const;

    int edge_count() const;
    bool has_undirected() const;
    bool has_directed_cycle() const;
    bool is_dag() const { return !has_undirected() && !has_directed_cycle(); }
    /// True iff a directed path from `from` to `to` exists (from != to).
    bool reaches(int from, int to) const;

    Pdag skeleton() const;
    /// Edges sorted by (min endpoint, max endpoint).
    std::vector<Edge> edges() const;

    friend bool operator==(const Pdag& a, const Pdag& b) { return a.p_ == b.p_ && a.marks_ == b.marks_; }

private:
    bool mark(int a, int b) const { return marks_[idx(a, b)] != 0; }
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b);
    }
    void check(int a, int b) const;

    int p_ = 0;
    std::vector<std::uint8_t> marks_;
};

/// Collider i -> k <- j with i < j nonadjacent.
struct VStructure {
    int i = 0;
    int k = 0;
    int j = 0;

    friend bool operator==(const VStructure&, const VStructure&) = default;
    friend auto operator<=>(const VStructure&, const VStructure&) = default;
};

/// Per-pair maximum p-value over every conditioning set tested, together with
/// the set that attained it (first one on ties).
class SeparationRecord {
public:
    explicit SeparationRecord(int p = 0);

    int node_count() const { return p_; }
    void update(int i, int j, std::span<const int> set, double p_value);
    bool has(int i, int j) const { return phi_[idx(i, j)] >= 0.0; }
    /// Maximum p-value, or -1 when the pair was never tested.
    double phi(int i, int j) const { return phi_[idx(i, j)]; }
    const std::vector<int>& sepset(int i, int j) const { return sepsets_[idx(i, j)]; }

    /// Stores a value directly, overwriting any previous entry.
    void set(int i, int j, double p_value, std::vector<int> set);

    friend bool operator==(const SeparationRecord&, const SeparationRecord&) = default;

private:
    std::size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(j);
    }

    int p_ = 0;
    std::vector<double> phi_;
    std::vector<std::vector<int>> sepsets_;
};

/// Unshielded triples i--k--j whose pair (i, j) is separated
/// (phi > threshold) by a set not containing k. Sorted.
std::vector<VStructure> detect_vstructures_from_sepsets(const Pdag& skeleton, const SeparationRecord& rec,
                                                        double threshold);

/// Unshielded triples declared colliders when no conditioning set containing
/// k, drawn from the neighbors of the endpoint with fewer neighbors, renders
/// i and j independent. When that side finds no separation the other side is
/// also checked before declaring a collider. Sets are capped at `max_size`.
std::vector<VStructure> detect_vstructures_by_testing(const Pdag& skeleton, const CiSource& ci, int max_size);

/// V-structures i->k<-j present in g.
std::vector<VStructure> vstructures_of(const Pdag& g);

/// Which of Meek's rules (1..4) compels a->b in g, or 0. Requires a--b.
int meek_rule_compelling(const Pdag& g, int a, int b);

/// Fixed point of Meek's rules R1-R4.
Pdag meek_closure(Pdag g);

/// Orients v-structures in order; one that would reverse an already directed
/// edge is skipped entirely.
Pdag apply_vstructures(Pdag skeleton, std::span<const VStructure> vstructs);

Pdag skel_to_cpdag(const Pdag& skeleton, std::span<const VStructure> vstructs);

/// Dor-Tarsi consistent extension; std::nullopt if none exists.
std::optional<Pdag> pdag_to_dag(const Pdag& g);

/// Best-effort extension of a PDAG without a consistent extension: Dor-Tarsi
/// as far as it goes, then the remaining undirected edges in seeded random
/// order and direction, dropping any edge that cannot be added acyclically.
Pdag semi_arbitrary_extension(const Pdag& g, std::uint64_t seed);

Pdag pattern_of(const Pdag& dag);
Pdag cpdag_of_dag(const Pdag& dag);

/// d-separation of i and j given `cond` in a DAG.
bool d_separated(const Pdag& dag, int i, int j, std::span<const int> cond);

/// Every DAG sharing skeleton and v-structures with `dag`. At most 6 nodes.
std::vector<Pdag> enumerate_equivalence_class(const Pdag& dag);

/// `nodes <p>` header followed by one `i -> j` or `i -- j` line per edge.
std::string to_edge_list(const Pdag& g);
Pdag parse_edge_list(const std::string& text);

}  // namespace bnsl
