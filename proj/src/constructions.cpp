#include "gridfree/constructions.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace gridfree {

SetSpec SetSpec::parse(const std::string& text) {
    if (text == "nonzero") return nonzero();
    if (text == "full") return full();
    if (text == "qr") return qr();
    if (text == "qnr") return qnr();
    if (text.rfind("interval:", 0) == 0) {
        std::string body = text.substr(9);
        auto dots = body.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("bad interval spec: " + text);
        try {
            std::uint64_t lo = std::stoull(body.substr(0, dots));
            std::uint64_t hi = std::stoull(body.substr(dots + 2));
            return interval(lo, hi);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad interval spec: " + text);
        }
    }
    if (text.rfind("list:", 0) == 0) {
        std::vector<std::uint64_t> vals;
        std::string body = text.substr(5);
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            std::string item = body.substr(pos, comma - pos);
            if (item.empty())
                throw std::invalid_argument("bad list spec: " + text);
            try {
                vals.push_back(std::stoull(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad list spec: " + text);
            }
            pos = comma + 1;
        }
        if (vals.empty()) throw std::invalid_argument("empty list spec");
        return list(std::move(vals));
    }
    throw std::invalid_argument("unknown set spec: " + text);
}

std::string SetSpec::to_string() const {
    switch (kind) {
        case Kind::Nonzero: return "nonzero";
        case Kind::Full: return "full";
        case Kind::QR: return "qr";
        case Kind::QNR: return "qnr";
        case Kind::Interval:
            return "interval:" + std::to_string(lo) + ".." + std::to_string(hi);
        case Kind::List: {
            std::string s = "list:";
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(values[i]);
            }
            return s;
        }
    }
    return "?";
}

std::vector<std::uint64_t> SetSpec::resolve(const PrimeField& field) const {
    const std::uint64_t p = field.modulus();
    std::vector<std::uint64_t> out;
    switch (kind) {
        case Kind::Nonzero:
            out.reserve(p - 1);
            for (std::uint64_t v = 1; v < p; ++v) out.push_back(v);
            break;
        case Kind::Full:
            out.reserve(p);
            for (std::uint64_t v = 0; v < p; ++v) out.push_back(v);
            break;
        case Kind::QR:
            out = field.residue_classes().first;
            break;
        case Kind::QNR:
            out = field.residue_classes().second;
            break;
        case Kind::Interval:
            if (lo < 1 || lo > hi || hi >= p)
                throw std::invalid_argument(
                    "interval bounds must satisfy 1 <= lo <= hi < p");
            out.reserve(hi - lo + 1);
            for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
            break;
        case Kind::List:
            out = values;
            for (auto v : out)
                if (v >= p)
                    throw std::invalid_argument("list value " + std::to_string(v) +
                                                " outside [0, p)");
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
    }
    if (out.empty()) throw std::invalid_argument("resolved set is empty");
    return out;
}

namespace {

// Generic X x A product construction: edge (x, y(x,a), z(x,a)).
template <typename FnY, typename FnZ>
TripartiteHypergraph build_product(std::uint64_t p, const SetSpec& xspec,
                                   const SetSpec& aspec, const char* name,
                                   FnY fy, FnZ fz) {
    PrimeField field(p);
    auto xs = xspec.resolve(field);
    auto as = aspec.resolve(field);
    std::vector<std::array<std::uint64_t, 3>> edges;
    edges.reserve(xs.size() * as.size());
    for (auto x : xs)
        for (auto a : as) edges.push_back({x, fy(field, x, a), fz(field, x, a)});
    Provenance prov{name, p, xspec.to_string(), aspec.to_string(), ""};
    return TripartiteHypergraph::from_edges(p, edges, std::move(prov));
}

}  // namespace

TripartiteHypergraph build_multiplicative(std::uint64_t p, const SetSpec& xspec,
                                          const SetSpec& aspec) {
    PrimeField field(p);
    auto xs = xspec.resolve(field);
    auto as = aspec.resolve(field);
    if (xs.front() == 0 || as.front() == 0)
        std::cerr << "warning: 0 in X or A collapses Z-side products to 0; "
                     "v = 3p-2 style counts assume nonzero sets\n";
    return build_product(
        p, xspec, aspec, "mult",
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, a);
        },
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.mul(x, a);
        });
}

TripartiteHypergraph build_qr(std::uint64_t p) {
    if (p < 5)
        throw std::invalid_argument("build_qr requires p >= 5");
    auto h = build_product(
        p, SetSpec::qr(), SetSpec::qnr(), "qr",
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, a);
        },
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.mul(x, a);
        });
    return h;
}

TripartiteHypergraph build_quadratic(std::uint64_t p, const SetSpec& xspec,
                                     const SetSpec& aspec) {
    return build_product(
        p, xspec, aspec, "quadratic",
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, a);
        },
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, f.mul(a, a));
        });
}

TripartiteHypergraph build_ap(std::uint64_t p, const SetSpec& xspec,
                              const SetSpec& aspec) {
    return build_product(
        p, xspec, aspec, "ap",
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, a);
        },
        [](const PrimeField& f, std::uint64_t x, std::uint64_t a) {
            return f.add(x, f.add(a, a));
        });
}

TripartiteHypergraph build_construction(const std::string& name, std::uint64_t p,
                                        const SetSpec& xspec, const SetSpec& aspec) {
    if (name == "mult") return build_multiplicative(p, xspec, aspec);
    if (name == "qr") return build_qr(p);
    if (name == "quadratic") return build_quadratic(p, xspec, aspec);
    if (name == "ap") return build_ap(p, xspec, aspec);
    throw std::invalid_argument("unknown construction: " + name);
}

}  // namespace gridfree
