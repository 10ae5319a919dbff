#include "gridfree/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gridfree {

const char* part_name(Part p) {
    switch (p) {
        case Part::X: return "X";
        case Part::Y: return "Y";
        case Part::Z: return "Z";
    }
    return "?";
}

namespace {

std::uint32_t index_of(const std::vector<std::uint64_t>& sorted_part,
                       std::uint64_t value, const char* side) {
    auto it = std::lower_bound(sorted_part.begin(), sorted_part.end(), value);
    if (it == sorted_part.end() || *it != value)
        throw std::invalid_argument(std::string("edge value not in part ") + side);
    return static_cast<std::uint32_t>(it - sorted_part.begin());
}

}  // namespace

TripartiteHypergraph TripartiteHypergraph::from_parts_edges(
    std::uint64_t p, std::array<std::vector<std::uint64_t>, 3> parts,
    const std::vector<std::array<std::uint64_t, 3>>& edge_values,
    Provenance prov) {
    TripartiteHypergraph h;
    h.p_ = p;
    h.prov_ = std::move(prov);
    for (auto& side : parts) {
        if (!std::is_sorted(side.begin(), side.end()) ||
            std::adjacent_find(side.begin(), side.end()) != side.end())
            throw std::invalid_argument("part list must be sorted and duplicate-free");
        for (auto v : side)
            if (p != 0 && v >= p)
                throw std::invalid_argument("part value outside [0, p)");
    }
    h.parts_ = std::move(parts);

    std::unordered_set<std::string> seen;
    h.edges_.reserve(edge_values.size());
    for (const auto& ev : edge_values) {
        TriEdge e;
        e.val = ev;
        e.idx = {index_of(h.parts_[0], ev[0], "X"),
                 index_of(h.parts_[1], ev[1], "Y"),
                 index_of(h.parts_[2], ev[2], "Z")};
        std::string key = std::to_string(ev[0]) + "," + std::to_string(ev[1]) +
                          "," + std::to_string(ev[2]);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge " + key);
        h.edges_.push_back(e);
    }
    return h;
}

TripartiteHypergraph TripartiteHypergraph::from_edges(
    std::uint64_t p, const std::vector<std::array<std::uint64_t, 3>>& edge_values,
    Provenance prov) {
    std::array<std::vector<std::uint64_t>, 3> parts;
    for (int s = 0; s < 3; ++s) {
        for (const auto& ev : edge_values) parts[s].push_back(ev[s]);
        std::sort(parts[s].begin(), parts[s].end());
        parts[s].erase(std::unique(parts[s].begin(), parts[s].end()),
                       parts[s].end());
    }
    return from_parts_edges(p, std::move(parts), edge_values, std::move(prov));
}

std::uint32_t TripartiteHypergraph::part_offset(Part s) const {
    switch (s) {
        case Part::X: return 0;
        case Part::Y: return static_cast<std::uint32_t>(parts_[0].size());
        case Part::Z:
            return static_cast<std::uint32_t>(parts_[0].size() + parts_[1].size());
    }
    return 0;
}

std::pair<Part, std::uint64_t> TripartiteHypergraph::vertex_by_id(
    std::uint32_t id) const {
    if (id < parts_[0].size()) return {Part::X, parts_[0][id]};
    id -= static_cast<std::uint32_t>(parts_[0].size());
    if (id < parts_[1].size()) return {Part::Y, parts_[1][id]};
    id -= static_cast<std::uint32_t>(parts_[1].size());
    if (id < parts_[2].size()) return {Part::Z, parts_[2][id]};
    throw std::out_of_range("vertex id out of range");
}

PairDegreeTable pair_degree_table(const TripartiteHypergraph& h) {
    PairDegreeTable t;
    t.n_vertices = static_cast<std::uint32_t>(h.vertex_count());
    auto bump = [&](std::uint32_t a, std::uint32_t b) {
        std::uint32_t c = ++t.counts[PairDegreeTable::key(a, b, t.n_vertices)];
        t.max_count = std::max(t.max_count, c);
    };
    for (const auto& e : h.edges()) {
        std::uint32_t vx = h.vertex_id(Part::X, e.idx[0]);
        std::uint32_t vy = h.vertex_id(Part::Y, e.idx[1]);
        std::uint32_t vz = h.vertex_id(Part::Z, e.idx[2]);
        bump(vx, vy);
        bump(vx, vz);
        bump(vy, vz);
    }
    return t;
}

bool is_linear(const TripartiteHypergraph& h) {
    return pair_degree_table(h).max_count <= 1;
}

std::vector<ConflictingPair> conflicting_pairs(const TripartiteHypergraph& h) {
    // Two distinct edges share two vertices iff they agree on exactly two
    // slots. Bucket edges by each pair of slot values; duplicates are
    // impossible, so every bucket collision is a genuine conflict.
    std::vector<ConflictingPair> out;
    const auto& edges = h.edges();
    for (int s = 0; s < 3; ++s) {
        int u = (s + 1) % 3, v = (s + 2) % 3;  // the two kept slots
        std::unordered_map<std::string, std::vector<std::uint32_t>> buckets;
        for (std::uint32_t i = 0; i < edges.size(); ++i) {
            std::string key = std::to_string(edges[i].val[u]) + "," +
                              std::to_string(edges[i].val[v]);
            buckets[key].push_back(i);
        }
        for (auto& [key, ids] : buckets) {
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b)
                    out.push_back({std::min(ids[a], ids[b]),
                                   std::max(ids[a], ids[b])});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.e != b.e ? a.e < b.e : a.f < b.f;
    });
    return out;
}

TripartiteHypergraph linearize(const TripartiteHypergraph& h) {
    auto pairs = conflicting_pairs(h);
    const auto& edges = h.edges();

    std::vector<int> pair_count(edges.size(), 0);
    for (const auto& pr : pairs) {
        ++pair_count[pr.e];
        ++pair_count[pr.f];
    }
    bool matched = std::all_of(pair_count.begin(), pair_count.end(),
                               [](int c) { return c <= 1; });

    // Pairs sorted by edge values so the deletion order is reproducible.
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        auto ka = std::minmax(edges[a.e].val, edges[a.f].val);
        auto kb = std::minmax(edges[b.e].val, edges[b.f].val);
        return ka < kb;
    });

    std::vector<bool> removed(edges.size(), false);
    for (const auto& pr : pairs) {
        if (removed[pr.e] || removed[pr.f]) continue;  // greedy fallback path
        removed[edges[pr.e].val > edges[pr.f].val ? pr.e : pr.f] = true;
    }

    std::vector<std::array<std::uint64_t, 3>> kept;
    kept.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!removed[i]) kept.push_back(edges[i].val);

    Provenance prov = h.provenance();
    if (!pairs.empty()) {
        prov.note += prov.note.empty() ? "" : "; ";
        prov.note += matched ? "linearized (one edge per conflicting pair)"
                             : "linearized (greedy fallback)";
    }
    // The vertex set is kept as-is: linearize returns a sub-hypergraph on
    // the same parts, so density comparisons use the original v(H).
    std::array<std::vector<std::uint64_t>, 3> parts = {
        h.part(Part::X), h.part(Part::Y), h.part(Part::Z)};
    return TripartiteHypergraph::from_parts_edges(h.modulus(), std::move(parts),
                                                  kept, std::move(prov));
}

}  // namespace gridfree
