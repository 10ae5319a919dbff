#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gridfree {

/// Abstract small 3-uniform hypergraph used as a forbidden configuration.
/// Vertices are 0..n-1; edges are sorted vertex triples without duplicates.
struct Pattern {
    int n = 0;
    std::vector<std::array<std::uint8_t, 3>> edges;
    std::string name;

    /// 3x3 grid: 9 points, the 6 horizontal and vertical lines.
    static Pattern grid3x3();
    /// Triangle: 6 vertices, edges {0,1,2},{2,3,4},{4,5,0}.
    static Pattern triangle();

    /// Throws std::invalid_argument on malformed data (bad vertex ids,
    /// repeated vertices inside an edge, duplicate edges).
    void validate() const;

    bool operator==(const Pattern& o) const {
        return n == o.n && edges == o.edges;
    }
};

inline constexpr int kMaxPatternVertices = 12;

/// Colexicographic order on sorted triples: compare (c,b,a).
bool colex_less(const std::array<std::uint8_t, 3>& s,
                const std::array<std::uint8_t, 3>& t);

/// Sorts the edge list colexicographically (normal form for stored patterns).
void sort_edges_colex(Pattern& f);

std::vector<int> pattern_degrees(const Pattern& f);
bool pattern_is_linear(const Pattern& f);
int pattern_min_degree(const Pattern& f);

/// Applies a vertex permutation: vertex v becomes perm[v].
Pattern relabeled(const Pattern& f, const std::vector<int>& perm);

/// Canonical byte string: vertex count followed by the colex-minimal edge
/// list over all vertex relabelings. Equal strings iff isomorphic.
/// Throws std::length_error above kMaxPatternVertices vertices.
std::string canonical_form(const Pattern& f);

/// True iff the pattern's own labeling already realizes the canonical form.
/// Cheaper than canonical_form: bails out at the first smaller relabeling.
bool is_canonically_labeled(const Pattern& f);

std::string canonical_hex(const Pattern& f);

}  // namespace gridfree
