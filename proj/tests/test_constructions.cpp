#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "gridfree/constructions.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/ffield.hpp"

using namespace gridfree;

TEST_CASE("set spec grammar") {
    CHECK(SetSpec::parse("nonzero").kind == SetSpec::Kind::Nonzero);
    CHECK(SetSpec::parse("full").kind == SetSpec::Kind::Full);
    CHECK(SetSpec::parse("qr").kind == SetSpec::Kind::QR);
    CHECK(SetSpec::parse("qnr").kind == SetSpec::Kind::QNR);
    auto iv = SetSpec::parse("interval:1..5");
    CHECK(iv.lo == 1);
    CHECK(iv.hi == 5);
    auto ls = SetSpec::parse("list:4,1,2");
    CHECK(ls.values == std::vector<std::uint64_t>{4, 1, 2});
    for (const char* s : {"nonzero", "full", "qr", "qnr", "interval:1..5",
                          "list:1,2,3"})
        CHECK(SetSpec::parse(s).to_string() == s);
    CHECK_THROWS_AS(SetSpec::parse("interval:5"), std::invalid_argument);
    CHECK_THROWS_AS(SetSpec::parse("list:"), std::invalid_argument);
    CHECK_THROWS_AS(SetSpec::parse("everything"), std::invalid_argument);
}

TEST_CASE("set spec resolution") {
    PrimeField f13(13);
    CHECK(SetSpec::parse("nonzero").resolve(f13).size() == 12);
    CHECK(SetSpec::parse("full").resolve(f13).size() == 13);
    CHECK(SetSpec::parse("qr").resolve(f13) ==
          std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12});
    CHECK(SetSpec::parse("interval:1..5").resolve(f13) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(SetSpec::interval(0, 5).resolve(f13), std::invalid_argument);
    CHECK_THROWS_AS(SetSpec::interval(5, 13).resolve(f13), std::invalid_argument);
    CHECK_THROWS_AS(SetSpec::list({13}).resolve(f13), std::invalid_argument);
    CHECK(SetSpec::list({0, 5}).resolve(f13) ==
          std::vector<std::uint64_t>{0, 5});  // 0 is allowed in user sets
}

TEST_CASE("multiplicative construction counts") {
    auto h5 = build_multiplicative(5, SetSpec::list({1, 2, 3, 4}),
                                   SetSpec::list({1, 2, 3, 4}));
    CHECK(h5.edge_count() == 16);
    CHECK(h5.vertex_count() == 13);  // 3p - 2

    auto single = build_multiplicative(7, SetSpec::list({1}), SetSpec::list({1}));
    CHECK(single.edge_count() == 1);
    CHECK(single.edges()[0].val == std::array<std::uint64_t, 3>{1, 2, 1});

    auto h13 = build_multiplicative(13, SetSpec::nonzero(), SetSpec::nonzero());
    CHECK(h13.edge_count() == 144);
    CHECK(h13.vertex_count() == 37);

    CHECK_THROWS_AS(build_multiplicative(4, SetSpec::nonzero(), SetSpec::nonzero()),
                    std::invalid_argument);
}

TEST_CASE("qr construction") {
    auto h = build_qr(13);
    CHECK(h.edge_count() == 36);
    CHECK(h.part(Part::X).size() == 6);
    CHECK(h.part(Part::Z).size() == 6);
    CHECK(h.vertex_count() <= 25);
    CHECK(h.part(Part::Z) == std::vector<std::uint64_t>{2, 5, 6, 7, 8, 11});
    CHECK(h.part(Part::Z) == PrimeField(13).residue_classes().second);
    CHECK(is_linear(h));

    auto big = build_qr(101);
    CHECK(big.edge_count() == 2500);
    CHECK(big.vertex_count() <= 201);
    double density = static_cast<double>(big.edge_count()) /
                     (static_cast<double>(big.vertex_count()) *
                      static_cast<double>(big.vertex_count()));
    CHECK(density >= 0.0618);

    CHECK_THROWS_AS(build_qr(3), std::invalid_argument);
}

TEST_CASE("quadratic construction") {
    auto h = build_quadratic(41, SetSpec::interval(1, 5), SetSpec::interval(1, 5));
    CHECK(h.edge_count() == 25);

    auto h17 = build_quadratic(17, SetSpec::list({1, 2}), SetSpec::list({1, 2}));
    CHECK(h17.edge_count() == 4);
    bool found = false;
    for (const auto& e : h17.edges())
        found = found || e.val == std::array<std::uint64_t, 3>{1, 3, 5};
    CHECK(found);  // (x,a) = (1,2): 1+2 = 3, 1+4 = 5

    CHECK(grid_free(h));
}

TEST_CASE("ap construction") {
    auto h = build_ap(7);
    CHECK(h.edge_count() == 49);
    CHECK(h.vertex_count() == 21);
    CHECK(is_linear(h));
    PrimeField f(7);
    for (const auto& e : h.edges()) {
        CHECK(f.add(e.val[0], e.val[2]) == f.add(e.val[1], e.val[1]));
        CHECK(e.val[1] == f.mul(f.add(e.val[0], e.val[2]), f.half()));
    }
    CHECK(build_ap(3).edge_count() == 9);
}

TEST_CASE("edge count equals |X| * |A| for every builder") {
    std::vector<std::uint64_t> primes = {5, 7, 11, 13, 17, 31};
    for (auto p : primes) {
        PrimeField f(p);
        std::vector<SetSpec> specs = {SetSpec::nonzero(), SetSpec::qr(),
                                      SetSpec::qnr(),
                                      SetSpec::interval(1, (p - 1) / 2)};
        for (const auto& xs : specs)
            for (const auto& as : specs) {
                auto nx = xs.resolve(f).size();
                auto na = as.resolve(f).size();
                CHECK(build_multiplicative(p, xs, as).edge_count() == nx * na);
                CHECK(build_quadratic(p, xs, as).edge_count() == nx * na);
                CHECK(build_ap(p, xs, as).edge_count() == nx * na);
            }
        CHECK(build_qr(p).edge_count() == (p - 1) / 2 * ((p - 1) / 2));
    }
}

TEST_CASE("qr construction stays conflict-free for 5 <= p <= 101") {
    for (std::uint64_t p = 5; p <= 101; p += 2) {
        if (!is_prime_u64(p)) continue;
        CHECK(conflicting_pairs(build_qr(p)).empty());
    }
}

TEST_CASE("multiplicative full-set conflicts pair every off-diagonal edge") {
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        auto h = build_multiplicative(p, SetSpec::nonzero(), SetSpec::nonzero());
        auto pairs = conflicting_pairs(h);
        CHECK(pairs.size() == (p - 1) * (p - 2) / 2);
        std::vector<int> uses(h.edge_count(), 0);
        PrimeField f(p);
        for (const auto& pr : pairs) {
            ++uses[pr.e];
            ++uses[pr.f];
            const auto& e = h.edges()[pr.e];
            const auto& g = h.edges()[pr.f];
            CHECK(e.val[1] == g.val[1]);
            CHECK(e.val[2] == g.val[2]);
            CHECK(g.val[0] == f.sub(e.val[1], e.val[0]));
        }
        for (int u : uses) CHECK(u <= 1);
    }
}

TEST_CASE("telescoping cubic identity over random field triples") {
    PrimeField f(10007);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> d(0, 10006);
    for (int it = 0; it < 1000; ++it) {
        std::uint64_t p1 = d(rng), p2 = d(rng), p3 = d(rng);
        if (p1 == p2 || p2 == p3 || p1 == p3) continue;
        auto sq = [&](std::uint64_t a, std::uint64_t b) { return f.mul(f.mul(a, a), b); };
        std::uint64_t lhs = f.sub(
            f.add(f.add(sq(p1, p3), sq(p2, p1)), sq(p3, p2)),
            f.add(f.add(sq(p2, p3), sq(p3, p1)), sq(p1, p2)));
        std::uint64_t rhs =
            f.mul(f.mul(f.sub(p1, p2), f.sub(p2, p3)), f.sub(p3, p1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rational identity for the quadratic construction") {
    PrimeField f(10007);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint64_t> d(0, 10006);
    int checked = 0;
    while (checked < 1000) {
        std::uint64_t v1 = d(rng), v2 = d(rng), v3 = d(rng);
        std::uint64_t den1 = f.sub(f.add(f.add(v1, v1), f.add(v3, v3)), 1);
        std::uint64_t den2 = f.sub(f.add(f.add(v2, v2), f.add(v1, v1)), 1);
        std::uint64_t den3 = f.sub(f.add(f.add(v3, v3), f.add(v2, v2)), 1);
        if (den1 == 0 || den2 == 0 || den3 == 0) continue;
        ++checked;
        auto term = [&](std::uint64_t hi, std::uint64_t lo, std::uint64_t den) {
            return f.mul(f.sub(f.mul(hi, hi), f.mul(lo, lo)), f.inv(den));
        };
        std::uint64_t lhs =
            f.add(f.add(term(v3, v1, den1), term(v1, v2, den2)),
                  term(v2, v3, den3));
        std::uint64_t num = f.mul(
            f.mul(f.sub(v3, v1), f.sub(v1, v2)), f.sub(v2, v3));
        std::uint64_t rhs = f.mul(f.neg(f.add(num, num)),
                                  f.inv(f.mul(f.mul(den1, den2), den3)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("y(x+a-y) = xa has exactly the roots y in {x, a}") {
    PrimeField f(10007);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::uint64_t> d(0, 10006);
    auto eval = [&](std::uint64_t y, std::uint64_t x, std::uint64_t a) {
        return f.sub(f.mul(y, f.sub(f.add(x, a), y)), f.mul(x, a));
    };
    for (int it = 0; it < 1000; ++it) {
        std::uint64_t x = d(rng), a = d(rng), y = d(rng);
        if (x == a) continue;
        CHECK(eval(x, x, a) == 0);
        CHECK(eval(a, x, a) == 0);
        // y(x+a-y) - xa factors as -(y-x)(y-a); nonzero off the two roots.
        CHECK(eval(y, x, a) == f.neg(f.mul(f.sub(y, x), f.sub(y, a))));
        if (y != x && y != a) CHECK(eval(y, x, a) != 0);
    }
}
