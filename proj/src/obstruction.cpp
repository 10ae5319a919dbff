#include "gridfree/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gridfree/detect.hpp"
#include "gridfree/parallel.hpp"

namespace gridfree {

EquationKind parse_equation_kind(const std::string& name) {
    if (name == "mult-triangle") return EquationKind::MultTriangle;
    if (name == "quad-triangle") return EquationKind::QuadTriangle;
    if (name == "quad-grid") return EquationKind::QuadGrid;
    throw std::invalid_argument("unknown equation kind: " + name);
}

const char* equation_name(EquationKind k) {
    switch (k) {
        case EquationKind::MultTriangle: return "mult-triangle";
        case EquationKind::QuadTriangle: return "quad-triangle";
        case EquationKind::QuadGrid: return "quad-grid";
    }
    return "?";
}

bool witness_satisfies(EquationKind kind, std::uint64_t p,
                       const ObstructionWitness& w) {
    PrimeField f(p);
    switch (kind) {
        case EquationKind::MultTriangle: {
            auto [x, a, b, c] = w.vals;
            if (a == b || a == c || b == c) return false;
            return f.mul(f.sub(f.add(x, a), b), b) == f.mul(x, c);
        }
        case EquationKind::QuadTriangle: {
            auto [a, b, c, unused] = w.vals;
            (void)unused;
            if (a == b || a == c || b == c) return false;
            return f.add(a, f.sub(f.mul(c, c), c)) == f.mul(b, b);
        }
        case EquationKind::QuadGrid: {
            auto [x1, a, x2, unused] = w.vals;
            (void)unused;
            std::uint64_t four = f.reduce(4);
            return f.add(f.mul(four, x1), f.mul(four, a)) ==
                   f.add(f.mul(four, x2), 1);
        }
    }
    return false;
}

namespace {

struct ResolvedSets {
    std::vector<std::uint64_t> xs, as;
    std::unordered_set<std::uint64_t> x_in, a_in;
};

ResolvedSets resolve_sets(const PrimeField& field, const SetSpec& xspec,
                          const SetSpec& aspec) {
    ResolvedSets r;
    r.xs = xspec.resolve(field);
    r.as = aspec.resolve(field);
    r.x_in.insert(r.xs.begin(), r.xs.end());
    r.a_in.insert(r.as.begin(), r.as.end());
    return r;
}

// Counts solutions with the outermost variable restricted to [lo, hi) of its
// value list; witnesses are gathered in scan order up to the cap.
void count_range(EquationKind kind, const PrimeField& f, const ResolvedSets& s,
                 std::size_t lo, std::size_t hi, std::size_t witness_cap,
                 std::uint64_t& count, std::vector<ObstructionWitness>& wit) {
    auto note = [&](std::initializer_list<std::uint64_t> vals, int arity) {
        ++count;
        if (wit.size() < witness_cap) {
            ObstructionWitness w;
            int i = 0;
            for (auto v : vals) w.vals[i++] = v;
            w.arity = arity;
            wit.push_back(w);
        }
    };

    switch (kind) {
        case EquationKind::MultTriangle:
            // (x+a-b)*b = x*c with distinct a,b,c: solve for c when x != 0.
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint64_t x = s.xs[i];
                if (x == 0) {
                    // (a-b)*b = 0 forces b = 0 (a != b); c is then free.
                    if (!s.a_in.count(0)) continue;
                    for (auto a : s.as) {
                        if (a == 0) continue;
                        for (auto c : s.as)
                            if (c != 0 && c != a) note({0, a, 0, c}, 4);
                    }
                    continue;
                }
                std::uint64_t xinv = f.inv(x);
                for (auto a : s.as)
                    for (auto b : s.as) {
                        if (b == a) continue;
                        std::uint64_t c =
                            f.mul(f.mul(f.sub(f.add(x, a), b), b), xinv);
                        if (c != a && c != b && s.a_in.count(c))
                            note({x, a, b, c}, 4);
                    }
            }
            break;
        case EquationKind::QuadTriangle:
            // a = b^2 - c^2 + c with distinct a,b,c.
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint64_t b = s.as[i];
                std::uint64_t b2 = f.mul(b, b);
                for (auto c : s.as) {
                    if (c == b) continue;
                    std::uint64_t a = f.add(f.sub(b2, f.mul(c, c)), c);
                    if (a != b && a != c && s.a_in.count(a)) note({a, b, c}, 3);
                }
            }
            break;
        case EquationKind::QuadGrid:
            // x2 = x1 + a - 1/4.
            {
                std::uint64_t quarter = f.inv(f.reduce(4));
                for (std::size_t i = lo; i < hi; ++i) {
                    std::uint64_t x1 = s.xs[i];
                    for (auto a : s.as) {
                        std::uint64_t x2 = f.sub(f.add(x1, a), quarter);
                        if (s.x_in.count(x2)) note({x1, a, x2}, 3);
                    }
                }
            }
            break;
    }
}

std::size_t outer_size(EquationKind kind, const ResolvedSets& s) {
    return kind == EquationKind::QuadTriangle ? s.as.size() : s.xs.size();
}

}  // namespace

SolutionReport count_solutions(EquationKind kind, std::uint64_t p,
                               const SetSpec& xspec, const SetSpec& aspec,
                               std::size_t witness_cap, int threads) {
    PrimeField field(p);
    ResolvedSets sets = resolve_sets(field, xspec, aspec);

    SolutionReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.x_set = xspec.to_string();
    rep.a_set = aspec.to_string();
    rep.witness_cap = witness_cap;
    rep.exhaustive = true;

    std::size_t n = outer_size(kind, sets);
    if (threads <= 1) {
        count_range(kind, field, sets, 0, n, witness_cap, rep.count,
                    rep.witnesses);
    } else {
        std::size_t n_chunks = std::min<std::size_t>(n, 64);
        std::vector<std::uint64_t> counts(n_chunks, 0);
        std::vector<std::vector<ObstructionWitness>> wits(n_chunks);
        parallel_chunks(n, threads, n_chunks,
                        [&](std::size_t lo, std::size_t hi, std::size_t c) {
                            count_range(kind, field, sets, lo, hi, witness_cap,
                                        counts[c], wits[c]);
                        });
        for (std::size_t c = 0; c < n_chunks; ++c) {
            rep.count += counts[c];
            for (auto& w : wits[c])
                if (rep.witnesses.size() < witness_cap) rep.witnesses.push_back(w);
        }
    }

    for (const auto& w : rep.witnesses)
        if (!witness_satisfies(kind, p, w))
            throw std::logic_error("witness failed independent re-evaluation");
    return rep;
}

ConsistencyVerdict triangle_obstruction_consistency(std::uint64_t p,
                                                    const SetSpec& xspec,
                                                    const SetSpec& aspec) {
    ConsistencyVerdict v;
    v.equation_solutions =
        count_solutions(EquationKind::MultTriangle, p, xspec, aspec).count;
    v.triangle_copies = triangle_count(build_multiplicative(p, xspec, aspec));
    v.consistent = !(v.equation_solutions == 0 && v.triangle_copies > 0);
    return v;
}

SetSearchResult search_sets(std::uint64_t p, EquationKind kind,
                            const SetSearchOptions& opts) {
    PrimeField field(p);
    bool uses_x = kind != EquationKind::QuadTriangle;

    auto zero_solutions = [&](const std::vector<std::uint64_t>& xs,
                              const std::vector<std::uint64_t>& as) {
        if (xs.empty() || as.empty()) return true;
        SetSpec xsp = SetSpec::list(xs);
        SetSpec asp = SetSpec::list(as);
        return count_solutions(kind, p, uses_x ? xsp : SetSpec::nonzero(), asp, 0)
                   .count == 0;
    };

    std::vector<std::uint64_t> a_set;
    std::vector<std::uint64_t> x_set;
    if (uses_x && !opts.tie_x) {
        SetSpec fullx = SetSpec::full();
        x_set = fullx.resolve(field);
    }

    if (opts.candidates == CandidateOrder::Interval) {
        // Largest k with {1..k} obstruction-free.
        std::uint64_t best = 0;
        for (std::uint64_t k = 1; k < p; ++k) {
            std::vector<std::uint64_t> trial(k);
            std::iota(trial.begin(), trial.end(), 1);
            auto xs = (uses_x && opts.tie_x) ? trial : x_set;
            if (!zero_solutions(uses_x ? xs : trial, trial)) break;
            best = k;
        }
        a_set.resize(best);
        std::iota(a_set.begin(), a_set.end(), 1);
        if (uses_x && opts.tie_x) x_set = a_set;
    } else {
        std::vector<std::uint64_t> candidates;
        candidates.reserve(p - 1);
        for (std::uint64_t v = 1; v < p; ++v) candidates.push_back(v);
        if (opts.strategy == SearchStrategy::RandomizedGreedy) {
            std::mt19937_64 rng(opts.seed);
            std::shuffle(candidates.begin(), candidates.end(), rng);
        }
        for (auto cand : candidates) {
            std::vector<std::uint64_t> trial_a = a_set;
            trial_a.push_back(cand);
            std::sort(trial_a.begin(), trial_a.end());
            std::vector<std::uint64_t> trial_x =
                (uses_x && opts.tie_x) ? trial_a : x_set;
            if (zero_solutions(uses_x ? trial_x : trial_a, trial_a)) {
                a_set = trial_a;
                if (uses_x && opts.tie_x) x_set = a_set;
            }
        }
    }

    SetSearchResult out;
    out.a_set = a_set;
    out.x_set = uses_x ? x_set : std::vector<std::uint64_t>{};

    SetSpec asp = a_set.empty() ? SetSpec::list({1}) : SetSpec::list(a_set);
    SetSpec xsp = out.x_set.empty() ? asp : SetSpec::list(out.x_set);
    if (a_set.empty()) {
        // Degenerate: report an empty verification.
        out.verification.kind = kind;
        out.verification.p = p;
        out.verification.exhaustive = true;
    } else {
        out.verification = count_solutions(kind, p, xsp, asp);
        if (out.verification.count != 0)
            throw std::logic_error("search_sets returned sets with solutions");
    }
    return out;
}

DensityReport density_report(const TripartiteHypergraph& h) {
    DensityReport r;
    r.v = h.vertex_count();
    r.e = h.edge_count();
    r.linear = is_linear(h);
    if (r.v > 0) {
        double v2 = static_cast<double>(r.v) * static_cast<double>(r.v);
        r.density = static_cast<double>(r.e) / v2;
    }
    r.ratio_to_sixteenth = r.density / r.sixteenth;
    r.ratio_to_eighteenth = r.density / r.eighteenth;
    return r;
}

}  // namespace gridfree
