#include "gridfree/pattern.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace gridfree {

Pattern Pattern::grid3x3() {
    // Rows {i, i+3, i+6}; columns wire p_{i+1}, q_{i+2} to r_i.
    Pattern f;
    f.n = 9;
    f.edges = {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {1, 5, 6}, {2, 3, 7}, {0, 4, 8}};
    f.name = "grid3x3";
    f.validate();
    return f;
}

Pattern Pattern::triangle() {
    Pattern f;
    f.n = 6;
    f.edges = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
    f.name = "triangle";
    f.validate();
    return f;
}

void Pattern::validate() const {
    if (n < 0) throw std::invalid_argument("pattern: negative vertex count");
    std::vector<std::array<std::uint8_t, 3>> seen;
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("pattern: edge with repeated vertex");
        if (e[2] >= n)
            throw std::invalid_argument("pattern: edge vertex out of range");
        seen.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("pattern: duplicate edge");
}

bool colex_less(const std::array<std::uint8_t, 3>& s,
                const std::array<std::uint8_t, 3>& t) {
    if (s[2] != t[2]) return s[2] < t[2];
    if (s[1] != t[1]) return s[1] < t[1];
    return s[0] < t[0];
}

void sort_edges_colex(Pattern& f) {
    for (auto& e : f.edges) std::sort(e.begin(), e.end());
    std::sort(f.edges.begin(), f.edges.end(), colex_less);
}

std::vector<int> pattern_degrees(const Pattern& f) {
    std::vector<int> deg(f.n, 0);
    for (const auto& e : f.edges)
        for (auto v : e) ++deg[v];
    return deg;
}

int pattern_min_degree(const Pattern& f) {
    auto deg = pattern_degrees(f);
    return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

bool pattern_is_linear(const Pattern& f) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : f.edges) {
        pairs.emplace_back(e[0], e[1]);
        pairs.emplace_back(e[0], e[2]);
        pairs.emplace_back(e[1], e[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

Pattern relabeled(const Pattern& f, const std::vector<int>& perm) {
    Pattern g;
    g.n = f.n;
    g.name = f.name;
    g.edges.reserve(f.edges.size());
    for (const auto& e : f.edges) {
        std::array<std::uint8_t, 3> t = {static_cast<std::uint8_t>(perm[e[0]]),
                                         static_cast<std::uint8_t>(perm[e[1]]),
                                         static_cast<std::uint8_t>(perm[e[2]])};
        std::sort(t.begin(), t.end());
        g.edges.push_back(t);
    }
    std::sort(g.edges.begin(), g.edges.end(), colex_less);
    return g;
}

namespace {

using Triple = std::array<std::uint8_t, 3>;
using Seq = std::vector<Triple>;

// Labels non-isolated vertices one at a time, accumulating the relabeled edge
// list in colex order (an edge completes when its last vertex is labeled, and
// the completed triple has the current label as its maximum).
//
// Only labelings that can be colex-minimal are walked:
//   - labels are allocated edge by edge, so between two completions at most
//     two "pending" labels may exist and the pending vertices must share an
//     edge with each newly placed one;
//   - whenever some candidate completes an edge, candidates completing
//     nothing are strictly worse and are skipped.
struct CanonSearch {
    const Pattern& f;
    int n_active = 0;
    std::vector<int> active;
    std::vector<std::vector<int>> inc;     // vertex -> incident edges
    std::vector<std::uint16_t> adj;        // bitmask of co-edge vertices
    std::vector<int> label_of;             // vertex -> label or -1
    std::vector<int> orig_of;              // label -> vertex
    std::vector<int> missing;              // edge -> # unlabeled vertices
    std::vector<int> pending;              // labels placed since last completion
    Seq best;
    Seq cur;
    bool have_best = false;
    bool check_only = false;
    bool beaten = false;

    explicit CanonSearch(const Pattern& pat) : f(pat) {
        inc.assign(f.n, {});
        adj.assign(f.n, 0);
        for (std::size_t i = 0; i < f.edges.size(); ++i) {
            for (auto v : f.edges[i]) inc[v].push_back(static_cast<int>(i));
            const auto& e = f.edges[i];
            adj[e[0]] |= static_cast<std::uint16_t>((1u << e[1]) | (1u << e[2]));
            adj[e[1]] |= static_cast<std::uint16_t>((1u << e[0]) | (1u << e[2]));
            adj[e[2]] |= static_cast<std::uint16_t>((1u << e[0]) | (1u << e[1]));
        }
        for (int v = 0; v < f.n; ++v)
            if (!inc[v].empty()) active.push_back(v);
        n_active = static_cast<int>(active.size());
        label_of.assign(f.n, -1);
        orig_of.assign(f.n, -1);
        missing.assign(f.edges.size(), 3);
    }

    bool shares_edge(int a, int b) const { return (adj[a] >> b) & 1u; }

    Seq completions(int w, int label) const {
        Seq out;
        for (int ei : inc[w]) {
            if (missing[ei] != 1) continue;
            Triple t{};
            int k = 0;
            for (auto v : f.edges[ei])
                t[k++] = static_cast<std::uint8_t>(v == w ? label : label_of[v]);
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
        std::sort(out.begin(), out.end(), colex_less);
        return out;
    }

    // True iff all pending labels occur inside some completed triple.
    static bool pending_covered(const std::vector<int>& pending, const Seq& comp) {
        if (pending.empty()) return true;
        for (const auto& t : comp) {
            bool all = true;
            for (int lab : pending)
                all = all && (t[0] == lab || t[1] == lab || t[2] == lab);
            if (all) return true;
        }
        return false;
    }

    struct Cand {
        int w;
        Seq comp;
    };

    // Branch order among completing candidates: elementwise colex; when one
    // comp list is a prefix of the other, the longer one is smaller (the
    // shorter branch's next entry will carry a larger maximum label).
    static bool comp_order(const Seq& a, const Seq& b) {
        std::size_t k = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < k; ++i) {
            if (colex_less(a[i], b[i])) return true;
            if (colex_less(b[i], a[i])) return false;
        }
        return a.size() > b.size();
    }

    std::vector<Cand> candidates(int depth) {
        std::vector<Cand> out;
        bool any_completing = false;
        for (int w : active) {
            if (label_of[w] != -1) continue;
            Seq comp = completions(w, depth);
            if (comp.empty()) {
                if (pending.size() >= 2) continue;
                if (pending.size() == 1 && !shares_edge(orig_of[pending[0]], w))
                    continue;
            } else if (!pending_covered(pending, comp)) {
                continue;
            }
            out.push_back({w, std::move(comp)});
            any_completing = any_completing || !out.back().comp.empty();
        }
        if (any_completing) {
            std::erase_if(out, [](const Cand& c) { return c.comp.empty(); });
        }
        std::stable_sort(out.begin(), out.end(), [](const Cand& a, const Cand& b) {
            return comp_order(a.comp, b.comp);
        });
        return out;
    }

    // Completes the current partial labeling by always taking the first
    // candidate; used to refresh `best` as soon as a smaller prefix is found.
    void greedy_tail(int depth, Seq& out) {
        if (depth == n_active) return;
        auto cands = candidates(depth);
        if (cands.empty())
            throw std::logic_error("canonical labeling search dead-ended");
        const Cand& c = cands.front();
        int w = c.w;
        Seq comp = c.comp;
        label_of[w] = depth;
        orig_of[depth] = w;
        for (int ei : inc[w]) --missing[ei];
        auto saved_pending = pending;
        if (comp.empty())
            pending.push_back(depth);
        else
            pending.clear();
        out.insert(out.end(), comp.begin(), comp.end());
        greedy_tail(depth + 1, out);
        pending = saved_pending;
        for (int ei : inc[w]) ++missing[ei];
        label_of[w] = -1;
    }

    void dfs(int depth) {
        if (beaten) return;
        if (depth == n_active) return;
        auto cands = candidates(depth);
        for (const auto& cand : cands) {
            if (beaten) return;
            bool smaller = false, prune = false;
            std::size_t base = cur.size();
            for (std::size_t i = 0; i < cand.comp.size(); ++i) {
                if (colex_less(cand.comp[i], best[base + i])) { smaller = true; break; }
                if (colex_less(best[base + i], cand.comp[i])) { prune = true; break; }
            }
            if (prune) continue;
            if (smaller && check_only) {
                beaten = true;
                return;
            }
            label_of[cand.w] = depth;
            orig_of[depth] = cand.w;
            for (int ei : inc[cand.w]) --missing[ei];
            auto saved_pending = pending;
            if (cand.comp.empty())
                pending.push_back(depth);
            else
                pending.clear();
            cur.insert(cur.end(), cand.comp.begin(), cand.comp.end());

            if (smaller) {
                // cur is now a strictly smaller prefix; rebase best on it.
                Seq nb = cur;
                greedy_tail(depth + 1, nb);
                best = nb;
            }
            dfs(depth + 1);

            cur.resize(base);
            pending = saved_pending;
            for (int ei : inc[cand.w]) ++missing[ei];
            label_of[cand.w] = -1;
        }
    }
};

std::string encode(int n, const Seq& edges) {
    std::string s;
    s.reserve(1 + edges.size() * 3);
    s.push_back(static_cast<char>(n));
    for (const auto& e : edges) {
        s.push_back(static_cast<char>(e[0]));
        s.push_back(static_cast<char>(e[1]));
        s.push_back(static_cast<char>(e[2]));
    }
    return s;
}

void require_size(const Pattern& f) {
    if (f.n > kMaxPatternVertices)
        throw std::length_error("pattern exceeds " +
                                std::to_string(kMaxPatternVertices) + " vertices");
}

}  // namespace

std::string canonical_form(const Pattern& f) {
    require_size(f);
    f.validate();
    CanonSearch s(f);
    if (s.n_active == 0) return encode(f.n, {});
    Seq init;
    s.greedy_tail(0, init);
    s.best = std::move(init);
    s.have_best = true;
    s.dfs(0);
    return encode(f.n, s.best);
}

bool is_canonically_labeled(const Pattern& f) {
    require_size(f);
    std::vector<int> deg = pattern_degrees(f);
    int n_active = 0;
    for (int v = 0; v < f.n; ++v)
        if (deg[v] > 0) ++n_active;
    for (int v = 0; v < n_active; ++v)
        if (deg[v] == 0) return false;  // isolated vertices must sit on top

    Pattern sorted = f;
    sort_edges_colex(sorted);
    if (sorted.edges != f.edges) return false;

    CanonSearch s(f);
    if (s.n_active == 0) return true;
    s.best = f.edges;
    s.have_best = true;
    s.check_only = true;
    s.dfs(0);
    return !s.beaten;
}

std::string canonical_hex(const Pattern& f) {
    static const char* digits = "0123456789abcdef";
    std::string bytes = canonical_form(f);
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace gridfree
