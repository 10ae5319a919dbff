#include "gridfree/cores.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <stdexcept>

#include "gridfree/parallel.hpp"

namespace gridfree {

namespace {

using Triple = std::array<std::uint8_t, 3>;

bool linear_with(const Pattern& f, const Triple& t) {
    for (const auto& e : f.edges) {
        int common = 0;
        for (auto a : t)
            for (auto b : e) common += (a == b);
        if (common >= 2) return false;
    }
    return true;
}

// Colex-largest triple containing w when labels run up to max_v-1.
Triple max_triple_with(int w, int max_v) {
    std::array<int, 3> t = {w, -1, -1};
    int k = 1;
    for (int v = max_v - 1; v >= 0 && k < 3; --v)
        if (v != w) t[k++] = v;
    std::sort(t.begin(), t.end());
    return {static_cast<std::uint8_t>(t[0]), static_cast<std::uint8_t>(t[1]),
            static_cast<std::uint8_t>(t[2])};
}

// Orderly generation of canonically-labeled linear hypergraphs: edges are
// appended in strictly increasing colex order, new vertices take the next
// consecutive labels, and a child survives only if its labeling is still
// canonical. Deleting the colex-largest edge of a canonical object leaves a
// canonical object, so every isomorphism class is reached exactly once.
struct OrderlyGen {
    int max_v = 9;
    int max_e = 12;
    bool need_min_degree_2 = false;  // catalog mode
    int exact_edges = -1;            // classify mode
    int exact_vertices = -1;         // classify mode
    std::function<void(const Pattern&)> sink;

    std::uint64_t states = 0;

    void run() {
        Pattern f;
        f.n = 3;
        f.edges = {{0, 1, 2}};
        recurse(f);
    }

    void recurse(Pattern& f) {
        ++states;
        int e = static_cast<int>(f.edges.size());
        auto deg = pattern_degrees(f);

        if (exact_edges >= 0) {
            if (e == exact_edges) {
                if (exact_vertices < 0 || f.n == exact_vertices) sink(f);
                return;
            }
        } else if (need_min_degree_2 && f.n >= 6 &&
                   *std::min_element(deg.begin(), deg.end()) >= 2) {
            sink(f);
        }
        if (e >= max_e) return;

        // The lowest vertex still below degree 2 must remain fixable by a
        // colex-larger edge, otherwise the branch is dead.
        if (need_min_degree_2) {
            for (int w = 0; w < f.n; ++w) {
                if (deg[w] >= 2) continue;
                if (!colex_less(f.edges.back(), max_triple_with(w, max_v)))
                    return;
                break;
            }
        }
        if (exact_vertices >= 0 && exact_vertices - f.n > 3 * (exact_edges - e))
            return;

        const Triple last = f.edges.back();
        int u = f.n;
        int c_hi = std::min(u + 2, max_v - 1);
        for (int c = last[2]; c <= c_hi; ++c) {
            for (int b = 1; b < c; ++b) {
                for (int a = 0; a < b; ++a) {
                    Triple t = {static_cast<std::uint8_t>(a),
                                static_cast<std::uint8_t>(b),
                                static_cast<std::uint8_t>(c)};
                    if (!colex_less(last, t)) continue;
                    if (c >= u) {
                        // new labels must be exactly u..c, all in this edge
                        bool ok = true;
                        for (int lab = u; lab <= c; ++lab)
                            ok = ok && (a == lab || b == lab || c == lab);
                        if (!ok) continue;
                    }
                    if (!linear_with(f, t)) continue;

                    int saved_n = f.n;
                    f.n = std::max(f.n, c + 1);
                    f.edges.push_back(t);
                    if (is_canonically_labeled(f)) recurse(f);
                    f.edges.pop_back();
                    f.n = saved_n;
                }
            }
        }
    }
};

}  // namespace

const CoreEntry* CoreCatalog::find_grid() const {
    for (const auto& e : entries)
        if (e.is_grid) return &e;
    return nullptr;
}

CoreCatalog enumerate_linear_2cores(int max_vertices) {
    if (max_vertices < 6 || max_vertices > 9)
        throw std::invalid_argument(
            "max_vertices must lie in [6, 9]: no 3-uniform 2-core exists on "
            "fewer than 6 vertices");

    CoreCatalog cat;
    cat.max_vertices = max_vertices;

    std::string grid_canon = canonical_form(Pattern::grid3x3());
    Pattern triangle = Pattern::triangle();

    OrderlyGen gen;
    gen.max_v = max_vertices;
    gen.max_e = max_vertices * (max_vertices - 1) / 6;
    gen.need_min_degree_2 = true;
    gen.sink = [&](const Pattern& f) {
        CoreEntry entry;
        entry.pattern = f;
        entry.min_degree = pattern_min_degree(f);
        cat.entries.push_back(std::move(entry));
    };
    gen.run();

    Pattern grid = Pattern::grid3x3();
    for (auto& entry : cat.entries) {
        entry.canonical_hex = canonical_hex(entry.pattern);
        entry.is_grid = canonical_form(entry.pattern) == grid_canon;
        SearchOptions first_only;
        first_only.mode = SearchMode::First;
        HostView as_host = HostView::of(entry.pattern);
        entry.contains_triangle =
            find_embeddings(as_host, triangle, first_only).found();
        entry.contains_grid =
            entry.is_grid ||
            find_embeddings(as_host, grid, first_only).found();
        // Minimal iff no proper nonempty edge subset already has min degree 2.
        entry.minimal = true;
        int e = static_cast<int>(entry.pattern.edges.size());
        for (int mask = 1; mask + 1 < (1 << e) && entry.minimal; ++mask) {
            std::vector<int> deg(entry.pattern.n, 0);
            for (int i = 0; i < e; ++i)
                if (mask & (1 << i))
                    for (auto v : entry.pattern.edges[i]) ++deg[v];
            bool sub_core = true;
            for (int v = 0; v < entry.pattern.n; ++v)
                if (deg[v] == 1) sub_core = false;
            if (sub_core) entry.minimal = false;
        }
    }

    // Generation order is already deterministic; sort by (v, e, canonical
    // form) anyway so the on-disk catalog layout is stable.
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const CoreEntry& a, const CoreEntry& b) {
                  if (a.pattern.n != b.pattern.n) return a.pattern.n < b.pattern.n;
                  if (a.pattern.edges.size() != b.pattern.edges.size())
                      return a.pattern.edges.size() < b.pattern.edges.size();
                  return a.canonical_hex < b.canonical_hex;
              });
    int seq = 0;
    int last_v = -1, last_e = -1;
    for (auto& entry : cat.entries) {
        int v = entry.pattern.n;
        int e = static_cast<int>(entry.pattern.edges.size());
        if (v != last_v || e != last_e) {
            seq = 0;
            last_v = v;
            last_e = e;
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "core_v%d_e%d_%03d", v, e, seq++);
        entry.name = buf;
        entry.pattern.name = entry.name;
    }
    return cat;
}

Classify96Report classify_96_configurations() {
    Classify96Report rep;
    std::string grid_canon = canonical_form(Pattern::grid3x3());
    Pattern triangle = Pattern::triangle();

    OrderlyGen gen;
    gen.max_v = 9;
    gen.max_e = 6;
    gen.exact_edges = 6;
    gen.exact_vertices = 9;
    gen.sink = [&](const Pattern& f) {
        ++rep.total;
        SearchOptions first_only;
        first_only.mode = SearchMode::First;
        bool has_triangle =
            find_embeddings(HostView::of(f), triangle, first_only).found();
        bool grid_iso = canonical_form(f) == grid_canon;
        if (has_triangle) ++rep.with_triangle;
        if (grid_iso) ++rep.grid_isomorphic;
        if (!has_triangle && !grid_iso) ++rep.triangle_free_non_grid;
        if (has_triangle) return;

        rep.t_free_canonical_hex.push_back(canonical_hex(f));
        auto deg = pattern_degrees(f);
        int dmax = *std::max_element(deg.begin(), deg.end());
        if (dmax > 2) rep.t_free_max_degree_le_2 = false;
        if (dmax != 2 || *std::min_element(deg.begin(), deg.end()) != 2)
            rep.t_free_all_degrees_2 = false;

        // Around every vertex a: the four edges missing a each carry two
        // vertices outside N[a] and one inside; the outside pairs trace a
        // 4-cycle; a's partners from one incident edge sit on opposite
        // cycle edges, likewise for the other incident edge.
        for (int a = 0; a < f.n && rep.t_free_c4_structure; ++a) {
            std::vector<Triple> at, off;
            for (const auto& e : f.edges)
                (e[0] == a || e[1] == a || e[2] == a ? at : off).push_back(e);
            if (at.size() != 2 || off.size() != 4) {
                rep.t_free_c4_structure = false;
                break;
            }
            std::vector<int> near;
            for (const auto& e : at)
                for (auto v : e)
                    if (v != a) near.push_back(v);
            std::vector<int> outer;
            for (int v = 0; v < f.n; ++v)
                if (v != a && std::find(near.begin(), near.end(), v) == near.end())
                    outer.push_back(v);
            if (outer.size() != 4) {
                rep.t_free_c4_structure = false;
                break;
            }
            std::vector<std::pair<std::pair<int, int>, int>> cyc;  // pair + near
            std::vector<int> outer_deg(f.n, 0);
            bool shape_ok = true;
            for (const auto& e : off) {
                std::vector<int> in_outer, in_near;
                for (auto v : e) {
                    if (std::find(outer.begin(), outer.end(), v) != outer.end())
                        in_outer.push_back(v);
                    else if (std::find(near.begin(), near.end(), v) != near.end())
                        in_near.push_back(v);
                }
                if (in_outer.size() != 2 || in_near.size() != 1) {
                    shape_ok = false;
                    break;
                }
                ++outer_deg[in_outer[0]];
                ++outer_deg[in_outer[1]];
                cyc.push_back({{in_outer[0], in_outer[1]}, in_near[0]});
            }
            if (shape_ok)
                for (int v : outer)
                    if (outer_deg[v] != 2) shape_ok = false;
            if (shape_ok) {
                // Four distinct pairs, all degrees two: necessarily a single
                // 4-cycle. Opposite cycle edges are the vertex-disjoint ones.
                auto opposite = [&](int i, int j) {
                    auto [p, q] = cyc[i].first;
                    auto [r, s] = cyc[j].first;
                    return p != r && p != s && q != r && q != s;
                };
                for (int which = 0; which < 2 && shape_ok; ++which) {
                    int v1 = -1, v2 = -1;
                    for (auto v : at[which])
                        if (v != a) (v1 < 0 ? v1 : v2) = v;
                    int e1 = -1, e2 = -1;
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        if (cyc[i].second == v1) e1 = static_cast<int>(i);
                        if (cyc[i].second == v2) e2 = static_cast<int>(i);
                    }
                    if (e1 < 0 || e2 < 0 || !opposite(e1, e2)) shape_ok = false;
                }
            }
            if (!shape_ok) rep.t_free_c4_structure = false;
        }
    };
    gen.run();
    return rep;
}

std::vector<ScanVerdict> scan_for_cores(const TripartiteHypergraph& h,
                                        const CoreCatalog& catalog,
                                        std::uint64_t budget_per_entry,
                                        int threads) {
    if (!is_linear(h))
        std::cerr << "warning: scanning a non-linear host; the catalog covers "
                     "linear cores only\n";
    HostView host = HostView::of(h);
    std::vector<ScanVerdict> verdicts(catalog.entries.size());

    parallel_chunks(
        catalog.entries.size(), threads, catalog.entries.size(),
        [&](std::size_t lo, std::size_t hi, std::size_t) {
            for (std::size_t i = lo; i < hi; ++i) {
                const CoreEntry& entry = catalog.entries[i];
                SearchOptions opts;
                opts.mode = SearchMode::First;
                opts.max_nodes = budget_per_entry;
                SearchResult r = find_embeddings(host, entry.pattern, opts);
                ScanVerdict v;
                v.entry_name = entry.name;
                v.entry_is_grid = entry.is_grid;
                v.nodes = r.nodes;
                if (r.found()) {
                    v.outcome = ScanOutcome::Found;
                    v.witness = r.embeddings.front();
                } else if (r.status == SearchStatus::BudgetExceeded) {
                    v.outcome = ScanOutcome::Indeterminate;
                } else {
                    v.outcome = ScanOutcome::NotFound;
                }
                verdicts[i] = std::move(v);
            }
        });
    return verdicts;
}

}  // namespace gridfree
