#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gridfree::oracles {

std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t b = 1; b < p; ++b)
        if (static_cast<unsigned __int128>(a) * b % p == 1) return b;
    throw std::domain_error("no inverse");
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
brute_residue_classes(std::uint64_t p) {
    std::set<std::uint64_t> qr;
    for (std::uint64_t x = 1; x < p; ++x)
        qr.insert(static_cast<unsigned __int128>(x) * x % p);
    std::vector<std::uint64_t> qrs(qr.begin(), qr.end()), qnrs;
    for (std::uint64_t v = 1; v < p; ++v)
        if (!qr.count(v)) qnrs.push_back(v);
    return {qrs, qnrs};
}

namespace {

using PV = std::pair<int, std::uint64_t>;

std::array<PV, 3> edge_vertices(const TriEdge& e) {
    return {PV{0, e.val[0]}, PV{1, e.val[1]}, PV{2, e.val[2]}};
}

int intersection_size(const TriEdge& a, const TriEdge& b) {
    auto va = edge_vertices(a), vb = edge_vertices(b);
    int k = 0;
    for (const auto& x : va)
        for (const auto& y : vb) k += (x == y);
    return k;
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> brute_conflicting_pairs(
    const TripartiteHypergraph& h) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const auto& edges = h.edges();
    for (std::uint32_t i = 0; i < edges.size(); ++i)
        for (std::uint32_t j = i + 1; j < edges.size(); ++j)
            if (intersection_size(edges[i], edges[j]) == 2) out.emplace_back(i, j);
    return out;
}

std::uint64_t brute_copy_count(const TripartiteHypergraph& h, const Pattern& f) {
    const auto& edges = h.edges();
    std::size_t m = f.edges.size();
    std::string want = canonical_form(f);
    std::uint64_t count = 0;

    std::vector<std::uint32_t> chosen;
    std::vector<PV> span;

    auto span_with = [&](const TriEdge& e) {
        std::vector<PV> s = span;
        for (const auto& v : edge_vertices(e))
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        return s;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (chosen.size() == m) {
            if (span.size() != static_cast<std::size_t>(f.n)) return;
            // Relabel the chosen edges over their span and compare forms.
            std::vector<PV> sorted_span = span;
            std::sort(sorted_span.begin(), sorted_span.end());
            Pattern sub;
            sub.n = static_cast<int>(sorted_span.size());
            for (auto ei : chosen) {
                std::array<std::uint8_t, 3> t{};
                int k = 0;
                for (const auto& v : edge_vertices(edges[ei])) {
                    auto it = std::lower_bound(sorted_span.begin(),
                                               sorted_span.end(), v);
                    t[k++] = static_cast<std::uint8_t>(it - sorted_span.begin());
                }
                std::sort(t.begin(), t.end());
                sub.edges.push_back(t);
            }
            if (canonical_form(sub) == want) ++count;
            return;
        }
        for (std::size_t ei = next; ei < edges.size(); ++ei) {
            if (edges.size() - ei < m - chosen.size()) break;
            auto s = span_with(edges[ei]);
            if (s.size() > static_cast<std::size_t>(f.n)) continue;
            auto saved = span;
            span = std::move(s);
            chosen.push_back(static_cast<std::uint32_t>(ei));
            rec(ei + 1);
            chosen.pop_back();
            span = std::move(saved);
        }
    };
    rec(0);
    return count;
}

std::set<std::string> brute_v6_core_forms() {
    std::vector<std::array<std::uint8_t, 3>> triples;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                triples.push_back({static_cast<std::uint8_t>(a),
                                   static_cast<std::uint8_t>(b),
                                   static_cast<std::uint8_t>(c)});
    std::set<std::string> forms;
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits < 4 || bits > 5) continue;  // degree sum needs e >= 4; linearity forces 3e <= 15
        Pattern f;
        f.n = 6;
        for (int i = 0; i < 20; ++i)
            if (mask & (1u << i)) f.edges.push_back(triples[i]);
        if (!pattern_is_linear(f)) continue;
        auto deg = pattern_degrees(f);
        if (*std::min_element(deg.begin(), deg.end()) < 2) continue;
        forms.insert(canonical_form(f));
    }
    return forms;
}

std::set<std::string> brute_core_forms(int v) {
    std::vector<std::array<std::uint8_t, 3>> triples;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c)
                triples.push_back({static_cast<std::uint8_t>(a),
                                   static_cast<std::uint8_t>(b),
                                   static_cast<std::uint8_t>(c)});
    std::set<std::string> forms;
    std::vector<std::array<std::uint8_t, 3>> cur;
    std::vector<int> deg(v, 0);

    auto linear_with = [&](const std::array<std::uint8_t, 3>& t) {
        for (const auto& e : cur) {
            int common = 0;
            for (auto x : t)
                for (auto y : e) common += (x == y);
            if (common >= 2) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.empty() &&
            std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 2; })) {
            Pattern f;
            f.n = v;
            f.edges = cur;
            sort_edges_colex(f);
            forms.insert(canonical_form(f));
        }
        for (std::size_t i = start; i < triples.size(); ++i) {
            if (!linear_with(triples[i])) continue;
            cur.push_back(triples[i]);
            for (auto w : triples[i]) ++deg[w];
            rec(i + 1);
            for (auto w : triples[i]) --deg[w];
            cur.pop_back();
        }
    };
    rec(0);
    return forms;
}

std::uint64_t brute_automorphism_count(const Pattern& f) {
    std::set<std::array<std::uint8_t, 3>> edge_set;
    for (auto e : f.edges) {
        std::sort(e.begin(), e.end());
        edge_set.insert(e);
    }
    std::vector<int> perm(f.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const auto& e : f.edges) {
            std::array<std::uint8_t, 3> t = {
                static_cast<std::uint8_t>(perm[e[0]]),
                static_cast<std::uint8_t>(perm[e[1]]),
                static_cast<std::uint8_t>(perm[e[2]])};
            std::sort(t.begin(), t.end());
            if (!edge_set.count(t)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace gridfree::oracles
