#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridfree/ffield.hpp"
#include "gridfree/hypergraph.hpp"

namespace gridfree {

/// A subset of F_p described symbolically and resolved against a concrete p.
/// Grammar: nonzero | full | qr | qnr | interval:LO..HI | list:v1,v2,...
struct SetSpec {
    enum class Kind { Nonzero, Full, QR, QNR, Interval, List };

    Kind kind = Kind::Nonzero;
    std::uint64_t lo = 0, hi = 0;       // Interval only, closed on both ends
    std::vector<std::uint64_t> values;  // List only

    static SetSpec nonzero() { return SetSpec{}; }
    static SetSpec full() { return SetSpec{Kind::Full, 0, 0, {}}; }
    static SetSpec qr() { return SetSpec{Kind::QR, 0, 0, {}}; }
    static SetSpec qnr() { return SetSpec{Kind::QNR, 0, 0, {}}; }
    static SetSpec interval(std::uint64_t lo, std::uint64_t hi) {
        return SetSpec{Kind::Interval, lo, hi, {}};
    }
    static SetSpec list(std::vector<std::uint64_t> vals) {
        return SetSpec{Kind::List, 0, 0, std::move(vals)};
    }

    /// Parses the grammar above; throws std::invalid_argument on bad input.
    static SetSpec parse(const std::string& text);
    std::string to_string() const;

    /// Sorted, duplicate-free subset of [0, p). Interval bounds must satisfy
    /// 1 <= lo <= hi < p; list values must already lie below p.
    std::vector<std::uint64_t> resolve(const PrimeField& field) const;
};

/// Edge (x, x+a, x*a) for every x in X, a in A.
TripartiteHypergraph build_multiplicative(std::uint64_t p, const SetSpec& xspec,
                                          const SetSpec& aspec);

/// The multiplicative construction with X the nonzero quadratic residues and
/// A the non-residues; linear by construction. Requires p >= 5.
TripartiteHypergraph build_qr(std::uint64_t p);

/// Edge (x, x+a, x+a^2) for every x in X, a in A.
TripartiteHypergraph build_quadratic(std::uint64_t p, const SetSpec& xspec,
                                     const SetSpec& aspec);

/// Edge (x, x+a, x+2a); with full sets this is the relation y = (x+z)/2.
TripartiteHypergraph build_ap(std::uint64_t p,
                              const SetSpec& xspec = SetSpec::full(),
                              const SetSpec& aspec = SetSpec::full());

/// Dispatch by name: "mult" | "qr" | "quadratic" | "ap".
TripartiteHypergraph build_construction(const std::string& name, std::uint64_t p,
                                        const SetSpec& xspec, const SetSpec& aspec);

}  // namespace gridfree
