#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridfree/detect.hpp"
#include "gridfree/hypergraph.hpp"
#include "gridfree/pattern.hpp"

namespace gridfree {

/// One linear 2-core, canonically labeled, with derived flags.
struct CoreEntry {
    Pattern pattern;             // canonical labeling, colex-sorted edges
    std::string name;            // core_v{v}_e{e}_{seq}
    std::string canonical_hex;
    int min_degree = 0;
    bool contains_triangle = false;
    bool is_grid = false;
    bool contains_grid = false;
    bool minimal = false;  // no proper edge subset is itself a 2-core
};

struct CoreCatalog {
    int max_vertices = 0;
    std::vector<CoreEntry> entries;  // sorted by (v, e, canonical form)

    const CoreEntry* find_grid() const;
};

/// Complete isomorphism-deduplicated list of linear 3-uniform hypergraphs
/// with minimum degree >= 2 on at most max_vertices vertices (6..9).
/// Orderly generation: edges are appended in colex order and every
/// intermediate object must be canonically labeled, so each isomorphism
/// class is constructed exactly once.
CoreCatalog enumerate_linear_2cores(int max_vertices);

struct Classify96Report {
    std::uint64_t total = 0;               // linear, 9 vertices, 6 edges
    std::uint64_t with_triangle = 0;
    std::uint64_t grid_isomorphic = 0;
    std::uint64_t triangle_free_non_grid = 0;
    // Facts about the triangle-free instances:
    bool t_free_max_degree_le_2 = true;
    bool t_free_all_degrees_2 = true;
    bool t_free_c4_structure = true;
    std::vector<std::string> t_free_canonical_hex;
};

/// Enumerates every linear hypergraph with exactly 9 vertices and 6 edges
/// (no degree requirement) and classifies it: triangle-containing vs
/// grid-isomorphic. Also checks, on the triangle-free instances, that the
/// maximum degree is 2, hence all degrees are 2, and that around every
/// vertex the four non-incident edges trace a 4-cycle.
Classify96Report classify_96_configurations();

enum class ScanOutcome { Found, NotFound, Indeterminate };

struct ScanVerdict {
    std::string entry_name;
    ScanOutcome outcome = ScanOutcome::NotFound;
    bool entry_is_grid = false;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
};

/// Runs a first-copy search for every catalog entry against the host.
/// Budget exhaustion is reported as Indeterminate, never as NotFound.
std::vector<ScanVerdict> scan_for_cores(const TripartiteHypergraph& h,
                                        const CoreCatalog& catalog,
                                        std::uint64_t budget_per_entry = 0,
                                        int threads = 1);

}  // namespace gridfree
