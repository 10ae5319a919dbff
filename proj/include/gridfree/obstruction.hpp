#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gridfree/constructions.hpp"
#include "gridfree/hypergraph.hpp"

namespace gridfree {

/// The three obstruction equations:
///   MultTriangle: x in X, pairwise-distinct a,b,c in A, (x+a-b)*b = x*c
///   QuadTriangle: pairwise-distinct a,b,c in A,          a + c^2 - c = b^2
///   QuadGrid:     x1,x2 in X, a in A,                    4*x1 + 4*a = 4*x2 + 1
enum class EquationKind { MultTriangle, QuadTriangle, QuadGrid };

EquationKind parse_equation_kind(const std::string& name);
const char* equation_name(EquationKind k);

struct ObstructionWitness {
    std::array<std::uint64_t, 4> vals{};  // mult: (x,a,b,c); quad-tri: (a,b,c); quad-grid: (x1,a,x2)
    int arity = 0;
};

struct SolutionReport {
    EquationKind kind = EquationKind::MultTriangle;
    std::uint64_t p = 0;
    std::string x_set, a_set;
    std::uint64_t count = 0;  // ordered tuples subject to distinctness
    std::vector<ObstructionWitness> witnesses;  // first few, in scan order
    std::size_t witness_cap = 0;
    bool exhaustive = true;
};

/// Exact exhaustive count. Solutions are ordered tuples; the distinctness
/// constraints are those of the equation kind. Witnesses (up to cap) are
/// re-verified by direct field evaluation before the report is returned.
SolutionReport count_solutions(EquationKind kind, std::uint64_t p,
                               const SetSpec& xspec, const SetSpec& aspec,
                               std::size_t witness_cap = 16, int threads = 1);

/// Direct evaluation of one witness, shared with nothing in the counting loop.
bool witness_satisfies(EquationKind kind, std::uint64_t p,
                       const ObstructionWitness& w);

struct ConsistencyVerdict {
    std::uint64_t equation_solutions = 0;
    std::uint64_t triangle_copies = 0;
    bool consistent = true;  // !(equation_solutions == 0 && triangle_copies > 0)
};

/// Checks, on a concrete instance, that a solution-free multiplicative
/// triangle equation really does give a triangle-free H(X,A).
ConsistencyVerdict triangle_obstruction_consistency(std::uint64_t p,
                                                    const SetSpec& xspec,
                                                    const SetSpec& aspec);

enum class SearchStrategy { Greedy, RandomizedGreedy };
enum class CandidateOrder { Ascending, Interval };

struct SetSearchOptions {
    SearchStrategy strategy = SearchStrategy::Greedy;
    std::uint64_t seed = 0;
    CandidateOrder candidates = CandidateOrder::Ascending;
    /// Grow X together with A (X = A). When false, X stays fixed at full
    /// field for kinds that use X, and only A is grown.
    bool tie_x = true;
};

struct SetSearchResult {
    std::vector<std::uint64_t> x_set;
    std::vector<std::uint64_t> a_set;
    SolutionReport verification;  // exhaustive recount over the final sets
};

/// Greedy / seeded-greedy growth of obstruction-free sets. The returned sets
/// always verify to zero solutions; same inputs give identical outputs.
SetSearchResult search_sets(std::uint64_t p, EquationKind kind,
                            const SetSearchOptions& opts = {});

struct DensityReport {
    std::size_t v = 0;
    std::size_t e = 0;
    double density = 0.0;  // e / v^2
    bool linear = false;
    double sixteenth = 1.0 / 16.0;
    double eighteenth = 1.0 / 18.0;
    double ratio_to_sixteenth = 0.0;
    double ratio_to_eighteenth = 0.0;
};

DensityReport density_report(const TripartiteHypergraph& h);

}  // namespace gridfree
