#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gridfree/constructions.hpp"
#include "gridfree/hypergraph.hpp"
#include "oracles.hpp"

using namespace gridfree;

namespace {

TripartiteHypergraph tiny(std::vector<std::array<std::uint64_t, 3>> edges) {
    return TripartiteHypergraph::from_edges(7, edges, Provenance{});
}

SetSpec one_to_four() { return SetSpec::list({1, 2, 3, 4}); }

}  // namespace

TEST_CASE("pair degree table on toy hosts") {
    auto single = tiny({{0, 1, 2}});
    auto t = pair_degree_table(single);
    CHECK(t.counts.size() == 3);
    CHECK(t.max_count == 1);

    // Two edges sharing their Y and Z vertices: one pair with count 2.
    auto sharing = tiny({{1, 2, 3}, {4, 2, 3}});
    auto t2 = pair_degree_table(sharing);
    CHECK(t2.max_count == 2);
    int twos = 0;
    for (const auto& [k, c] : t2.counts) twos += (c == 2);
    CHECK(twos == 1);

    CHECK(pair_degree_table(build_qr(13)).max_count == 1);
}

TEST_CASE("linearity: three independent routes agree") {
    auto hosts = std::vector<TripartiteHypergraph>{
        build_qr(13),
        build_multiplicative(5, one_to_four(), one_to_four()),
        build_multiplicative(7, SetSpec::nonzero(), SetSpec::nonzero()),
        build_ap(7),
        tiny({{0, 1, 2}}),
        tiny({{1, 2, 3}, {4, 2, 3}}),
    };
    for (const auto& h : hosts) {
        bool via_table = pair_degree_table(h).max_count <= 1;
        bool via_pairs = conflicting_pairs(h).empty();
        auto brute = oracles::brute_conflicting_pairs(h);
        CHECK(is_linear(h) == via_table);
        CHECK(via_table == via_pairs);
        CHECK(via_pairs == brute.empty());
    }
    CHECK(is_linear(build_qr(13)));
    CHECK_FALSE(is_linear(build_multiplicative(7, SetSpec::nonzero(),
                                               SetSpec::nonzero())));
    auto empty = TripartiteHypergraph::from_edges(7, {}, Provenance{});
    CHECK(is_linear(empty));
}

TEST_CASE("conflicting pairs match the quadratic-solution structure") {
    auto h = build_multiplicative(5, one_to_four(), one_to_four());
    CHECK(h.edge_count() == 16);
    auto pairs = conflicting_pairs(h);
    CHECK(pairs.size() == 6);

    auto brute = oracles::brute_conflicting_pairs(h);
    REQUIRE(brute.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].e == brute[i].first);
        CHECK(pairs[i].f == brute[i].second);
    }

    // Each edge in at most one pair; the partner of (x, x+a, xa) is exactly
    // (a, x+a, xa).
    std::vector<int> uses(h.edge_count(), 0);
    PrimeField f(5);
    for (const auto& pr : pairs) {
        ++uses[pr.e];
        ++uses[pr.f];
        const auto& e = h.edges()[pr.e];
        const auto& g = h.edges()[pr.f];
        CHECK(e.val[1] == g.val[1]);
        CHECK(e.val[2] == g.val[2]);
        CHECK(g.val[0] == f.sub(e.val[1], e.val[0]));
        CHECK(e.val[0] == f.sub(g.val[1], g.val[0]));
    }
    CHECK(*std::max_element(uses.begin(), uses.end()) == 1);
    // Unpaired edges are exactly the x = a diagonal.
    int unpaired = 0;
    for (std::size_t i = 0; i < uses.size(); ++i)
        if (uses[i] == 0) {
            ++unpaired;
            const auto& e = h.edges()[i];
            CHECK(f.sub(e.val[1], e.val[0]) == e.val[0]);  // a == x
        }
    CHECK(unpaired == 4);

    CHECK(conflicting_pairs(build_qr(13)).empty());
    CHECK(conflicting_pairs(tiny({{0, 1, 2}})).empty());
}

TEST_CASE("linearize deletes one edge per pair and keeps the vertex set") {
    auto h = build_multiplicative(5, one_to_four(), one_to_four());
    auto hp = linearize(h);
    CHECK(hp.edge_count() == 10);  // 16 - 6
    CHECK(is_linear(hp));
    CHECK(hp.vertex_count() == h.vertex_count());
    CHECK(hp.provenance().note.find("linearized") != std::string::npos);

    auto qr = build_qr(13);
    auto qr2 = linearize(qr);
    CHECK(qr2.edge_count() == 36);
    CHECK(qr2.provenance().note.empty());

    // Idempotence.
    auto hpp = linearize(hp);
    CHECK(hpp.edge_count() == hp.edge_count());

    auto empty = TripartiteHypergraph::from_edges(7, {}, Provenance{});
    CHECK(linearize(empty).edge_count() == 0);
}

TEST_CASE("linearize greedy fallback handles shared-edge conflicts") {
    // 0 in X gives (0, a, 0) edges that pairwise conflict: a clique of
    // conflicts, so some edge sits in more than one pair.
    auto h = build_multiplicative(7, SetSpec::list({0, 1}), SetSpec::nonzero());
    auto pairs = conflicting_pairs(h);
    std::vector<int> uses(h.edge_count(), 0);
    for (const auto& pr : pairs) {
        ++uses[pr.e];
        ++uses[pr.f];
    }
    CHECK(*std::max_element(uses.begin(), uses.end()) > 1);
    auto hp = linearize(h);
    CHECK(is_linear(hp));
    CHECK(static_cast<long long>(hp.edge_count()) >=
          static_cast<long long>(h.edge_count()) -
              static_cast<long long>(pairs.size()));
    CHECK(hp.provenance().note.find("greedy") != std::string::npos);
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(tiny({{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
    std::array<std::vector<std::uint64_t>, 3> parts = {
        std::vector<std::uint64_t>{0}, {1}, {2}};
    CHECK_THROWS_AS(TripartiteHypergraph::from_parts_edges(
                        7, parts, {{0, 1, 3}}, Provenance{}),
                    std::invalid_argument);
    std::array<std::vector<std::uint64_t>, 3> unsorted = {
        std::vector<std::uint64_t>{1, 0}, {1}, {2}};
    CHECK_THROWS_AS(TripartiteHypergraph::from_parts_edges(
                        7, unsorted, {}, Provenance{}),
                    std::invalid_argument);
}

TEST_CASE("vertex identity is (part, value)") {
    auto h = build_multiplicative(7, SetSpec::list({1}), SetSpec::list({1}));
    REQUIRE(h.edge_count() == 1);
    // Edge (1, 2, 1): X-vertex 1 and Z-vertex 1 are distinct vertices.
    CHECK(h.edges()[0].val == std::array<std::uint64_t, 3>{1, 2, 1});
    CHECK(h.vertex_count() == 3);
    auto [px, vx] = h.vertex_by_id(h.vertex_id(Part::X, 0));
    auto [pz, vz] = h.vertex_by_id(h.vertex_id(Part::Z, 0));
    CHECK(vx == vz);
    CHECK(px != pz);
}
