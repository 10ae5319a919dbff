#include "gridfree/detect.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "gridfree/parallel.hpp"

namespace gridfree {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
    if (a > b) std::swap(a, b);
    return std::uint64_t{a} * n + b;
}

std::uint64_t triple_key(const std::array<std::uint32_t, 3>& t, std::uint32_t n) {
    return (std::uint64_t{t[0]} * n + t[1]) * n + t[2];
}

}  // namespace

HostView HostView::of(const TripartiteHypergraph& h) {
    HostView v;
    v.n_ = static_cast<std::uint32_t>(h.vertex_count());
    v.part_of_.resize(v.n_);
    for (int s = 0; s < 3; ++s) {
        Part part = static_cast<Part>(s);
        std::uint32_t off = h.part_offset(part);
        for (std::uint32_t i = 0; i < h.part(part).size(); ++i)
            v.part_of_[off + i] = static_cast<std::int8_t>(s);
    }
    v.edges_.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::array<std::uint32_t, 3> t = {h.vertex_id(Part::X, e.idx[0]),
                                          h.vertex_id(Part::Y, e.idx[1]),
                                          h.vertex_id(Part::Z, e.idx[2])};
        v.edges_.push_back(t);  // part offsets keep ids ascending
    }
    v.build_indexes();
    return v;
}

HostView HostView::of(const Pattern& f) {
    HostView v;
    v.n_ = static_cast<std::uint32_t>(f.n);
    for (auto e : f.edges) {
        std::sort(e.begin(), e.end());
        v.edges_.push_back({e[0], e[1], e[2]});
    }
    v.build_indexes();
    return v;
}

void HostView::build_indexes() {
    if (n_ >= (1u << 21))
        throw std::invalid_argument("host too large for search indexes");
    incidence_.assign(n_, {});
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        for (auto vtx : edges_[i]) incidence_[vtx].push_back(i);
        const auto& e = edges_[i];
        pair_edges_[pair_key(e[0], e[1], n_)].push_back(i);
        pair_edges_[pair_key(e[0], e[2], n_)].push_back(i);
        pair_edges_[pair_key(e[1], e[2], n_)].push_back(i);
        edge_lookup_[triple_key(e, n_)] = i;
    }
}

const std::vector<std::uint32_t>* HostView::edges_with_pair(
    std::uint32_t a, std::uint32_t b) const {
    auto it = pair_edges_.find(pair_key(a, b, n_));
    return it == pair_edges_.end() ? nullptr : &it->second;
}

std::int64_t HostView::edge_with_vertices(std::array<std::uint32_t, 3> sorted) const {
    auto it = edge_lookup_.find(triple_key(sorted, n_));
    return it == edge_lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

namespace {

// Backtracking matcher. Pattern edges are placed one at a time, always
// picking an unplaced edge with the most already-bound vertices: in a linear
// host an edge with two bound vertices has at most one candidate, which is
// what keeps grid searches on dense hosts shallow.
struct Searcher {
    const HostView& host;
    const Pattern& pat;
    const SearchOptions& opts;

    int m;  // pattern edge count
    std::vector<std::array<int, 3>> pedges;
    std::vector<std::vector<int>> pinc;  // pattern vertex -> incident edges
    std::vector<std::uint32_t> vmap;
    std::vector<std::uint32_t> emap;
    std::vector<std::uint8_t> host_used;
    std::vector<int> placed;  // pattern edge -> # bound vertices
    std::vector<std::uint8_t> edge_done;

    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;  // 0 = unlimited
    bool budget_hit = false;
    bool stop = false;

    std::map<std::vector<std::uint32_t>, Embedding> found;

    Searcher(const HostView& hv, const Pattern& f, const SearchOptions& o)
        : host(hv), pat(f), opts(o) {
        m = static_cast<int>(f.edges.size());
        pinc.assign(f.n, {});
        for (int i = 0; i < m; ++i) {
            const auto& e = f.edges[i];
            pedges.push_back({e[0], e[1], e[2]});
            for (auto vtx : e) pinc[vtx].push_back(i);
        }
        vmap.assign(f.n, kUnset);
        emap.assign(m, kUnset);
        host_used.assign(host.vertex_count(), 0);
        placed.assign(m, 0);
        edge_done.assign(m, 0);
        budget = o.max_nodes;
    }

    bool part_ok(int pv, std::uint32_t hv) const {
        if (opts.part_constraint.empty() || !host.tripartite()) return true;
        std::int8_t want = opts.part_constraint[pv];
        return want < 0 || want == host.part_of(hv);
    }

    void record() {
        std::vector<std::uint32_t> image(emap.begin(), emap.end());
        std::sort(image.begin(), image.end());
        auto it = found.find(image);
        if (it == found.end()) {
            Embedding emb{vmap, emap};
            found.emplace(std::move(image), std::move(emb));
        } else if (vmap < it->second.vertex_image) {
            it->second = Embedding{vmap, emap};  // deterministic representative
        }
        if (opts.mode == SearchMode::First) stop = true;
    }

    int select_edge() const {
        int best = -1, best_placed = -1;
        for (int i = 0; i < m; ++i) {
            if (edge_done[i]) continue;
            if (placed[i] > best_placed) {
                best = i;
                best_placed = placed[i];
            }
        }
        return best;
    }

    void bind(int pv, std::uint32_t hv) {
        vmap[pv] = hv;
        host_used[hv] = 1;
        for (int ei : pinc[pv]) ++placed[ei];
    }
    void unbind(int pv) {
        host_used[vmap[pv]] = 0;
        vmap[pv] = kUnset;
        for (int ei : pinc[pv]) --placed[ei];
    }

    void try_host_edge(int pe, std::uint32_t he, int depth) {
        ++nodes;
        if (budget && nodes > budget) {
            budget_hit = true;
            return;
        }
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const auto& hv = host.edges()[he];
        const auto& pv = pedges[pe];
        for (const auto& perm : perms) {
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                std::uint32_t target = hv[perm[i]];
                if (vmap[pv[i]] != kUnset)
                    ok = vmap[pv[i]] == target;
                else
                    ok = !host_used[target] && part_ok(pv[i], target);
            }
            if (!ok) continue;

            int bound[3];
            int nb = 0;
            for (int i = 0; i < 3; ++i) {
                if (vmap[pv[i]] == kUnset) {
                    bind(pv[i], hv[perm[i]]);
                    bound[nb++] = pv[i];
                }
            }
            emap[pe] = he;
            edge_done[pe] = 1;

            dfs(depth + 1);

            edge_done[pe] = 0;
            emap[pe] = kUnset;
            while (nb) unbind(bound[--nb]);
            if (stop || budget_hit) return;
        }
    }

    void dfs(int depth) {
        if (stop || budget_hit) return;
        if (depth == m) {
            record();
            return;
        }
        int pe = select_edge();
        const auto& pv = pedges[pe];
        std::uint32_t b[3];
        int nb = 0;
        for (int i = 0; i < 3; ++i)
            if (vmap[pv[i]] != kUnset) b[nb++] = vmap[pv[i]];

        if (nb == 3) {
            std::array<std::uint32_t, 3> t = {b[0], b[1], b[2]};
            std::sort(t.begin(), t.end());
            std::int64_t he = host.edge_with_vertices(t);
            if (he >= 0) try_host_edge(pe, static_cast<std::uint32_t>(he), depth);
        } else if (nb == 2) {
            if (const auto* lst = host.edges_with_pair(b[0], b[1])) {
                for (auto he : *lst) {
                    try_host_edge(pe, he, depth);
                    if (stop || budget_hit) return;
                }
            }
        } else if (nb == 1) {
            for (auto he : host.incident_edges(b[0])) {
                try_host_edge(pe, he, depth);
                if (stop || budget_hit) return;
            }
        } else {
            for (std::uint32_t he = 0; he < host.edges().size(); ++he) {
                try_host_edge(pe, he, depth);
                if (stop || budget_hit) return;
            }
        }
    }

    // Explores only roots that map pattern edge `root_pe` into [lo, hi).
    void run_root_range(int root_pe, std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t he = lo; he < hi && !stop && !budget_hit; ++he)
            try_host_edge(root_pe, he, 0);
    }
};

void finish_result(SearchResult& res,
                   std::map<std::vector<std::uint32_t>, Embedding>&& found,
                   SearchMode mode) {
    res.copies = found.size();
    if (mode != SearchMode::Count) {
        res.embeddings.reserve(found.size());
        for (auto& [image, emb] : found) res.embeddings.push_back(std::move(emb));
    }
}

// Pattern vertices in no edge just need enough spare room in the host.
bool isolated_fit(const HostView& host, const Pattern& f) {
    std::vector<int> deg(f.n, 0);
    for (const auto& e : f.edges)
        for (auto vtx : e) ++deg[vtx];
    int isolated = static_cast<int>(std::count(deg.begin(), deg.end(), 0));
    return host.vertex_count() >= static_cast<std::size_t>(f.n) &&
           isolated <= static_cast<int>(host.vertex_count()) - (f.n - isolated);
}

}  // namespace

SearchResult find_embeddings(const HostView& host, const Pattern& f,
                             const SearchOptions& opts) {
    f.validate();
    SearchResult res;
    if (f.edges.empty()) {
        // No edges: a single empty copy exists when the host can absorb the
        // isolated vertices.
        if (isolated_fit(host, f)) {
            res.copies = 1;
            if (opts.mode != SearchMode::Count)
                res.embeddings.push_back(
                    Embedding{std::vector<std::uint32_t>(f.n, kUnset), {}});
        }
        return res;
    }
    if (!isolated_fit(host, f)) return res;

    int threads = std::max(1, opts.threads);
    bool parallel = threads > 1 && opts.mode != SearchMode::First &&
                    host.edges().size() >= 2;

    if (!parallel) {
        Searcher s(host, f, opts);
        s.dfs(0);
        res.nodes = s.nodes;
        if (s.budget_hit) res.status = SearchStatus::BudgetExceeded;
        finish_result(res, std::move(s.found), opts.mode);
        return res;
    }

    // Parallel over root placements of the first selected pattern edge.
    // Chunk boundaries and per-chunk budgets depend only on the host and the
    // options, so the merged result is identical for every thread count.
    std::size_t n_chunks = std::min<std::size_t>(host.edges().size(), 64);
    std::vector<std::map<std::vector<std::uint32_t>, Embedding>> chunk_found(
        n_chunks);
    std::vector<std::uint64_t> chunk_nodes(n_chunks, 0);
    std::vector<std::uint8_t> chunk_budget_hit(n_chunks, 0);

    Searcher probe(host, f, opts);
    int root_pe = probe.select_edge();

    SearchOptions chunk_opts = opts;
    if (opts.max_nodes) chunk_opts.max_nodes = opts.max_nodes / n_chunks + 1;

    parallel_chunks(host.edges().size(), threads, n_chunks,
                    [&](std::size_t lo, std::size_t hi, std::size_t c) {
                        Searcher s(host, f, chunk_opts);
                        s.run_root_range(root_pe, static_cast<std::uint32_t>(lo),
                                         static_cast<std::uint32_t>(hi));
                        chunk_found[c] = std::move(s.found);
                        chunk_nodes[c] = s.nodes;
                        chunk_budget_hit[c] = s.budget_hit ? 1 : 0;
                    });

    std::map<std::vector<std::uint32_t>, Embedding> merged;
    for (std::size_t c = 0; c < n_chunks; ++c) {
        res.nodes += chunk_nodes[c];
        if (chunk_budget_hit[c]) res.status = SearchStatus::BudgetExceeded;
        for (auto& [image, emb] : chunk_found[c]) {
            auto it = merged.find(image);
            if (it == merged.end())
                merged.emplace(image, std::move(emb));
            else if (emb.vertex_image < it->second.vertex_image)
                it->second = std::move(emb);
        }
    }
    finish_result(res, std::move(merged), opts.mode);
    return res;
}

SearchResult find_embeddings(const TripartiteHypergraph& h, const Pattern& f,
                             const SearchOptions& opts) {
    return find_embeddings(HostView::of(h), f, opts);
}

bool grid_free(const TripartiteHypergraph& h, std::uint64_t max_nodes,
               int threads) {
    Pattern grid = Pattern::grid3x3();
    HostView host = HostView::of(h);

    // All 3-partitions of the grid are equivalent under its automorphisms,
    // so the search may pin pattern classes to host parts. Both unordered
    // 3-partitions are tried.
    static const std::array<std::vector<std::int8_t>, 2> constraints = {
        std::vector<std::int8_t>{0, 0, 0, 1, 1, 1, 2, 2, 2},
        std::vector<std::int8_t>{0, 1, 2, 1, 2, 0, 2, 0, 1},
    };

    bool exceeded = false;
    for (const auto& pc : constraints) {
        SearchOptions opts;
        opts.mode = SearchMode::First;
        opts.max_nodes = max_nodes;
        opts.threads = threads;
        opts.part_constraint = pc;
        SearchResult r = find_embeddings(host, grid, opts);
        if (r.found()) return false;
        if (r.status == SearchStatus::BudgetExceeded) exceeded = true;
    }
    if (exceeded)
        throw BudgetExceededError("grid search budget exhausted before a verdict");
    return true;
}

std::uint64_t triangle_count(const TripartiteHypergraph& h, int threads) {
    SearchOptions opts;
    opts.mode = SearchMode::Count;
    opts.threads = threads;
    return find_embeddings(h, Pattern::triangle(), opts).copies;
}

bool verify_embedding(const TripartiteHypergraph& h, const Pattern& f,
                      const Embedding& emb) {
    // Deliberately re-derives everything from the hypergraph itself.
    if (emb.vertex_image.size() != static_cast<std::size_t>(f.n)) return false;
    std::vector<int> deg(f.n, 0);
    for (const auto& e : f.edges)
        for (auto vtx : e) ++deg[vtx];

    std::set<std::pair<int, std::uint64_t>> used;
    auto resolve = [&](std::uint32_t id) {
        auto [part, value] = h.vertex_by_id(id);
        return std::pair<int, std::uint64_t>{static_cast<int>(part), value};
    };
    for (int v = 0; v < f.n; ++v) {
        if (deg[v] == 0) continue;
        if (emb.vertex_image[v] == kUnset) return false;
        if (emb.vertex_image[v] >= h.vertex_count()) return false;
        if (!used.insert(resolve(emb.vertex_image[v])).second) return false;
    }

    std::set<std::vector<std::pair<int, std::uint64_t>>> host_edges;
    for (const auto& e : h.edges()) {
        std::vector<std::pair<int, std::uint64_t>> key = {
            {0, e.val[0]}, {1, e.val[1]}, {2, e.val[2]}};
        std::sort(key.begin(), key.end());
        host_edges.insert(key);
    }
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        std::vector<std::pair<int, std::uint64_t>> key;
        for (auto vtx : f.edges[i]) key.push_back(resolve(emb.vertex_image[vtx]));
        std::sort(key.begin(), key.end());
        if (!host_edges.count(key)) return false;
        // When edge images are recorded they must agree with the vertex map.
        if (!emb.edge_image.empty()) {
            if (emb.edge_image.size() != f.edges.size()) return false;
            std::uint32_t he = emb.edge_image[i];
            if (he >= h.edge_count()) return false;
            const auto& hv = h.edges()[he];
            std::vector<std::pair<int, std::uint64_t>> hkey = {
                {0, hv.val[0]}, {1, hv.val[1]}, {2, hv.val[2]}};
            std::sort(hkey.begin(), hkey.end());
            if (hkey != key) return false;
        }
    }
    return true;
}

bool verify_embedding_pattern_host(const Pattern& host, const Pattern& f,
                                   const Embedding& emb) {
    if (emb.vertex_image.size() != static_cast<std::size_t>(f.n)) return false;
    std::vector<int> deg(f.n, 0);
    for (const auto& e : f.edges)
        for (auto vtx : e) ++deg[vtx];
    std::set<std::uint32_t> used;
    for (int v = 0; v < f.n; ++v) {
        if (deg[v] == 0) continue;
        if (emb.vertex_image[v] >= static_cast<std::uint32_t>(host.n)) return false;
        if (!used.insert(emb.vertex_image[v]).second) return false;
    }
    std::set<std::array<std::uint8_t, 3>> host_edges;
    for (auto e : host.edges) {
        std::sort(e.begin(), e.end());
        host_edges.insert(e);
    }
    for (const auto& e : f.edges) {
        std::array<std::uint8_t, 3> key = {
            static_cast<std::uint8_t>(emb.vertex_image[e[0]]),
            static_cast<std::uint8_t>(emb.vertex_image[e[1]]),
            static_cast<std::uint8_t>(emb.vertex_image[e[2]])};
        std::sort(key.begin(), key.end());
        if (!host_edges.count(key)) return false;
    }
    return true;
}

namespace {

// Permutation DFS for automorphisms: assign images in vertex order, checking
// degrees and every fully-mapped triple as soon as it closes.
struct AutoSearch {
    const Pattern& f;
    std::vector<int> deg;
    std::vector<std::vector<int>> inc;
    std::vector<int> image;
    std::vector<std::uint8_t> taken;
    std::set<std::array<std::uint8_t, 3>> edge_set;
    std::vector<std::vector<std::uint8_t>> out;

    explicit AutoSearch(const Pattern& pat) : f(pat) {
        deg = pattern_degrees(f);
        inc.assign(f.n, {});
        for (std::size_t i = 0; i < f.edges.size(); ++i)
            for (auto vtx : f.edges[i]) inc[vtx].push_back(static_cast<int>(i));
        image.assign(f.n, -1);
        taken.assign(f.n, 0);
        for (auto e : f.edges) {
            std::sort(e.begin(), e.end());
            edge_set.insert(e);
        }
    }

    bool closed_edges_ok(int v) {
        for (int ei : inc[v]) {
            const auto& e = f.edges[ei];
            bool complete = true;
            for (auto w : e) complete = complete && image[w] >= 0;
            if (!complete) continue;
            std::array<std::uint8_t, 3> t = {
                static_cast<std::uint8_t>(image[e[0]]),
                static_cast<std::uint8_t>(image[e[1]]),
                static_cast<std::uint8_t>(image[e[2]])};
            std::sort(t.begin(), t.end());
            if (!edge_set.count(t)) return false;
        }
        return true;
    }

    void dfs(int v) {
        if (v == f.n) {
            std::vector<std::uint8_t> perm(f.n);
            for (int i = 0; i < f.n; ++i)
                perm[i] = static_cast<std::uint8_t>(image[i]);
            out.push_back(std::move(perm));
            return;
        }
        for (int w = 0; w < f.n; ++w) {
            if (taken[w] || deg[w] != deg[v]) continue;
            image[v] = w;
            taken[w] = 1;
            if (closed_edges_ok(v)) dfs(v + 1);
            taken[w] = 0;
            image[v] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<std::uint8_t>> automorphisms(const Pattern& f) {
    if (f.n > kMaxPatternVertices)
        throw std::length_error("pattern exceeds 12 vertices");
    f.validate();
    AutoSearch s(f);
    s.dfs(0);
    return s.out;
}

std::uint64_t automorphism_group_order(const Pattern& f) {
    return automorphisms(f).size();
}

PartitionReport enumerate_3partitions(const Pattern& f) {
    f.validate();
    PartitionReport rep;
    rep.automorphism_order = automorphism_group_order(f);

    std::set<std::array<std::vector<std::uint8_t>, 3>> seen;
    std::vector<int> cls(f.n, 0);
    // Vertex 0 pinned to class 0: partitions are unordered anyway.
    std::uint64_t total = 1;
    for (int i = 1; i < f.n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int v = 1; v < f.n; ++v) {
            cls[v] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool ok = true;
        for (const auto& e : f.edges) {
            int mask = (1 << cls[e[0]]) | (1 << cls[e[1]]) | (1 << cls[e[2]]);
            if (mask != 0b111) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::array<std::vector<std::uint8_t>, 3> classes;
        for (int v = 0; v < f.n; ++v)
            classes[cls[v]].push_back(static_cast<std::uint8_t>(v));
        std::sort(classes.begin(), classes.end());
        if (seen.insert(classes).second)
            rep.partitions.push_back(ThreePartition{classes});
    }

    for (std::size_t i = 0; i < rep.partitions.size() && rep.all_equivalent; ++i)
        for (std::size_t j = i + 1; j < rep.partitions.size(); ++j)
            if (!partitions_equivalent(f, rep.partitions[i], rep.partitions[j])) {
                rep.all_equivalent = false;
                break;
            }
    return rep;
}

bool partitions_equivalent(const Pattern& f, const ThreePartition& a,
                           const ThreePartition& b) {
    auto autos = automorphisms(f);
    std::set<std::vector<std::uint8_t>> b_classes(b.classes.begin(),
                                                  b.classes.end());
    for (const auto& g : autos) {
        bool all = true;
        for (const auto& cls : a.classes) {
            std::vector<std::uint8_t> img;
            img.reserve(cls.size());
            for (auto v : cls) img.push_back(g[v]);
            std::sort(img.begin(), img.end());
            if (!b_classes.count(img)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace gridfree
