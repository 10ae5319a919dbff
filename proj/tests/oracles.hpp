#pragma once

// Test-only oracles. Each one recomputes a quantity from its definition,
// independently of the library code path it is used to check.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridfree/hypergraph.hpp"
#include "gridfree/pattern.hpp"

namespace gridfree::oracles {

/// Inverse by scanning all field elements.
std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p);

/// (QR, QNR) straight from the definition {x^2 : x != 0}.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
brute_residue_classes(std::uint64_t p);

/// All 2-intersecting edge pairs by the O(e^2) definition |e ∩ f| = 2,
/// with vertices compared as (part, value) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> brute_conflicting_pairs(
    const TripartiteHypergraph& h);

/// Number of pattern copies by enumerating edge subsets of size e(F) whose
/// vertex span stays within f.n, then checking isomorphism via canonical
/// forms. Exponential; meant for hosts with at most ~60 edges.
std::uint64_t brute_copy_count(const TripartiteHypergraph& h, const Pattern& f);

/// Canonical forms of all linear min-degree-2 hypergraphs on exactly six
/// labeled vertices, by filtering every subset of the 20 triples.
std::set<std::string> brute_v6_core_forms();

/// Same census on exactly v labeled vertices via a recursive DFS over
/// lex-ordered triples (feasible up to v = 8).
std::set<std::string> brute_core_forms(int v);

/// Automorphism count by running through all n! permutations.
std::uint64_t brute_automorphism_count(const Pattern& f);

}  // namespace gridfree::oracles
