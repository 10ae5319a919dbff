#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace gridfree {

enum class Part : std::uint8_t { X = 0, Y = 1, Z = 2 };

const char* part_name(Part p);

/// Edge of a 3-partite hypergraph: one value per part, plus the indices of
/// those values inside the part lists.
struct TriEdge {
    std::array<std::uint64_t, 3> val;  // (x, y, z) field values
    std::array<std::uint32_t, 3> idx;  // positions in parts[0..2]

    bool operator==(const TriEdge& o) const { return val == o.val; }
};

struct Provenance {
    std::string construction;  // "mult", "qr", "quadratic", "ap", ...
    std::uint64_t p = 0;
    std::string x_set;
    std::string a_set;
    std::string note;  // e.g. linearization record
};

/// 3-partite 3-uniform hypergraph with part-tagged vertices. A vertex is the
/// pair (part, value); equal values in different parts are distinct vertices.
/// Immutable after construction.
class TripartiteHypergraph {
public:
    /// Validates: parts sorted and duplicate-free, every edge value present
    /// in its part, no duplicate edges. Throws std::invalid_argument.
    static TripartiteHypergraph from_parts_edges(
        std::uint64_t p, std::array<std::vector<std::uint64_t>, 3> parts,
        const std::vector<std::array<std::uint64_t, 3>>& edge_values,
        Provenance prov);

    /// Parts derived from the edges themselves (sorted value sets).
    static TripartiteHypergraph from_edges(
        std::uint64_t p, const std::vector<std::array<std::uint64_t, 3>>& edge_values,
        Provenance prov);

    std::uint64_t modulus() const { return p_; }
    const Provenance& provenance() const { return prov_; }

    const std::vector<std::uint64_t>& part(Part s) const {
        return parts_[static_cast<int>(s)];
    }
    const std::vector<TriEdge>& edges() const { return edges_; }
    std::size_t vertex_count() const {
        return parts_[0].size() + parts_[1].size() + parts_[2].size();
    }
    std::size_t edge_count() const { return edges_.size(); }

    /// Global vertex ids: X-part first, then Y, then Z.
    std::uint32_t part_offset(Part s) const;
    std::uint32_t vertex_id(Part s, std::uint32_t index_in_part) const {
        return part_offset(s) + index_in_part;
    }
    /// Inverse of vertex_id.
    std::pair<Part, std::uint64_t> vertex_by_id(std::uint32_t id) const;

private:
    std::uint64_t p_ = 0;
    std::array<std::vector<std::uint64_t>, 3> parts_;
    std::vector<TriEdge> edges_;
    Provenance prov_;
};

/// Co-occurrence counts for unordered vertex pairs inside edges.
/// Pairs absent from the map have count 0.
struct PairDegreeTable {
    std::unordered_map<std::uint64_t, std::uint32_t> counts;  // key = lo*nv+hi
    std::uint32_t n_vertices = 0;
    std::uint32_t max_count = 0;

    static std::uint64_t key(std::uint32_t a, std::uint32_t b, std::uint32_t nv) {
        if (a > b) std::swap(a, b);
        return std::uint64_t{a} * nv + b;
    }
    std::uint32_t count(std::uint32_t a, std::uint32_t b) const {
        auto it = counts.find(key(a, b, n_vertices));
        return it == counts.end() ? 0 : it->second;
    }
};

PairDegreeTable pair_degree_table(const TripartiteHypergraph& h);

/// True iff every vertex pair lies in at most one edge.
bool is_linear(const TripartiteHypergraph& h);

/// Unordered pair of edge indices with |e ∩ f| = 2.
struct ConflictingPair {
    std::uint32_t e, f;  // e < f
    bool operator==(const ConflictingPair& o) const { return e == o.e && f == o.f; }
};

/// All 2-intersecting edge pairs, sorted by (e, f). Computed by bucketing
/// edges on their two-slot value pairs, independently of pair_degree_table.
std::vector<ConflictingPair> conflicting_pairs(const TripartiteHypergraph& h);

/// Deletes one edge per conflicting pair; the surviving hypergraph is linear.
/// Within a pair the lexicographically larger edge (by X, then Y, then Z
/// value) is deleted. When some edge sits in more than one pair, falls back
/// to greedy deletion over pairs in sorted order and says so in the
/// provenance note.
TripartiteHypergraph linearize(const TripartiteHypergraph& h);

}  // namespace gridfree
