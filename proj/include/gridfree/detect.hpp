#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gridfree/hypergraph.hpp"
#include "gridfree/pattern.hpp"

namespace gridfree {

/// Flattened search host: integer vertices, edges as sorted id triples,
/// incidence and pair indexes. Built once per host, then shared read-only.
class HostView {
public:
    static HostView of(const TripartiteHypergraph& h);
    static HostView of(const Pattern& f);

    std::uint32_t vertex_count() const { return n_; }
    const std::vector<std::array<std::uint32_t, 3>>& edges() const { return edges_; }
    bool tripartite() const { return !part_of_.empty(); }
    /// 0/1/2 for X/Y/Z when tripartite.
    std::int8_t part_of(std::uint32_t v) const {
        return part_of_.empty() ? std::int8_t{-1} : part_of_[v];
    }
    const std::vector<std::uint32_t>& incident_edges(std::uint32_t v) const {
        return incidence_[v];
    }
    /// Edges containing both vertices (at most one in a linear host).
    const std::vector<std::uint32_t>* edges_with_pair(std::uint32_t a,
                                                      std::uint32_t b) const;
    /// Index of the edge with exactly this vertex set, or -1.
    std::int64_t edge_with_vertices(std::array<std::uint32_t, 3> sorted) const;

private:
    void build_indexes();

    std::uint32_t n_ = 0;
    std::vector<std::array<std::uint32_t, 3>> edges_;  // sorted triples
    std::vector<std::int8_t> part_of_;                 // empty if not tripartite
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_lookup_;
};

/// Injective vertex map witnessing a pattern copy. vertex_image is indexed by
/// pattern vertex id (UINT32_MAX for isolated pattern vertices); edge_image by
/// pattern edge index.
struct Embedding {
    std::vector<std::uint32_t> vertex_image;
    std::vector<std::uint32_t> edge_image;
};

enum class SearchMode { First, Count, All };
enum class SearchStatus { Done, BudgetExceeded };

struct SearchOptions {
    SearchMode mode = SearchMode::First;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    int threads = 1;              // used by Count/All only; First stays serial
    /// Optional per-pattern-vertex part constraint (-1 = unconstrained).
    /// Ignored for non-tripartite hosts.
    std::vector<std::int8_t> part_constraint;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Done;
    std::uint64_t copies = 0;              // distinct image edge-sets
    std::vector<Embedding> embeddings;     // one representative per copy
    std::uint64_t nodes = 0;               // candidate placements tried
    bool found() const { return copies > 0; }
};

/// Backtracking subhypergraph search. Copies are counted as distinct image
/// edge-sets (pattern automorphisms factored out). Results are sorted by
/// image edge-set, so output does not depend on the thread count.
SearchResult find_embeddings(const HostView& host, const Pattern& f,
                             const SearchOptions& opts = {});
SearchResult find_embeddings(const TripartiteHypergraph& h, const Pattern& f,
                             const SearchOptions& opts = {});

/// Grid detection for 3-partite hosts. Exploits the equivalence of all
/// 3-partitions of the grid to pin pattern classes to host parts (both
/// partitions are tried). Budget 0 = unlimited; budget exhaustion throws
/// BudgetExceededError so "indeterminate" can never read as "free".
bool grid_free(const TripartiteHypergraph& h, std::uint64_t max_nodes = 0,
               int threads = 1);

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of distinct triangle copies (distinct 3-edge image sets).
std::uint64_t triangle_count(const TripartiteHypergraph& h, int threads = 1);

/// Independent witness checker; deliberately shares no code or indexes with
/// the search (rebuilds the host edge set from scratch on every call).
bool verify_embedding(const TripartiteHypergraph& h, const Pattern& f,
                      const Embedding& emb);
bool verify_embedding_pattern_host(const Pattern& host, const Pattern& f,
                                   const Embedding& emb);

/// All vertex permutations preserving the edge set.
std::vector<std::vector<std::uint8_t>> automorphisms(const Pattern& f);
std::uint64_t automorphism_group_order(const Pattern& f);

/// V(F) = P u Q u R with every edge meeting each class exactly once.
/// Classes are sorted; the partition stores classes in lexicographic order.
struct ThreePartition {
    std::array<std::vector<std::uint8_t>, 3> classes;
    bool operator==(const ThreePartition& o) const { return classes == o.classes; }
};

struct PartitionReport {
    std::vector<ThreePartition> partitions;   // unordered partitions, deduped
    bool all_equivalent = true;               // pairwise automorphism-related
    std::uint64_t automorphism_order = 0;
};

PartitionReport enumerate_3partitions(const Pattern& f);

/// True iff some automorphism maps the classes of a onto the classes of b
/// (as unordered class sets).
bool partitions_equivalent(const Pattern& f, const ThreePartition& a,
                           const ThreePartition& b);

}  // namespace gridfree
