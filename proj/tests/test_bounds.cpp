#include <doctest.h>

#include <random>

#include "krtl/bounds.hpp"
#include "oracles.hpp"

using namespace krtl;

namespace {

ZonePatternSpec pat(std::size_t nz, std::set<std::size_t> nonempty) { return {nz, std::move(nonempty)}; }

std::int64_t as_int(const Bound& b) { return b.value ? *b.value : -1; }

std::set<std::size_t> random_subset(std::mt19937& rng, std::size_t nz, std::size_t limit) {
    std::set<std::size_t> out;
    const std::size_t count = rng() % (limit + 1);
    for (std::size_t i = 0; i < count; ++i) out.insert(rng() % (nz + 1));
    return out;
}

}  // namespace

TEST_CASE("zone counts") {
    CHECK(b1(pat(6, {})) == 0);
    CHECK(b1(pat(6, {0})) == 0);
    CHECK(b1(pat(6, {1, 3})) == 2);

    CHECK(b2(pat(6, {6}), 2) == 0);
    CHECK(b2(pat(4, {0}), 2) == 2);
    CHECK(b2(pat(6, {1, 3}), 3) == 1);

    CHECK(b3(pat(6, {0}), 2) == 0);
    CHECK(b3(pat(6, {5}), 2) == 2);
    CHECK(b3(pat(6, {2, 5}), 2) == 1);

    CHECK(pattern_cost(pat(6, {6}), 2) == 4);
}

TEST_CASE("cone bound examples") {
    CHECK(cone_bound(2, 6, {}).is_infinite());
    CHECK(cone_bound(2, 6, {}).to_string() == "inf");
    CHECK(as_int(cone_bound(2, 6, {6})) == 4);
    CHECK(as_int(cone_bound(2, 4, {2})) == 2);
    CHECK(as_int(cone_bound_enumerate(2, 4, {2})) == 2);
    CHECK_THROWS_AS(cone_bound(2, 4, {5}), PreconditionError);

    std::set<std::size_t> many;
    for (std::size_t i = 0; i < 30; ++i) many.insert(i);
    CHECK_THROWS_AS(cone_bound_enumerate(2, 40, many), CapExceeded);
    CHECK_FALSE(cone_bound(2, 40, many).is_infinite());
}

TEST_CASE("dynamic program matches subset enumeration") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const std::size_t nz = static_cast<std::size_t>(n) * (rng() % 6);
        const std::set<std::size_t> cands = random_subset(rng, nz, 10);
        const std::vector<std::size_t> list(cands.begin(), cands.end());
        CHECK(as_int(cone_bound(n, nz, cands)) == oracle::cone_bound_brute(n, nz, list));
        const std::size_t forced = rng() % (nz + 1);
        CHECK(as_int(cone_bound(n, nz, cands, forced)) == oracle::cone_bound_brute(n, nz, list, static_cast<long>(forced)));
        CHECK(cone_bound_enumerate(n, nz, cands, forced) == cone_bound(n, nz, cands, forced));
    }
}

TEST_CASE("cone bound is monotone and positive away from zone 0") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const std::size_t nz = static_cast<std::size_t>(n) * (1 + rng() % 5);
        std::set<std::size_t> small = random_subset(rng, nz, 6);
        std::set<std::size_t> large = small;
        for (std::size_t z : random_subset(rng, nz, 4)) large.insert(z);
        const Bound a = cone_bound(n, nz, small);
        const Bound b = cone_bound(n, nz, large);
        if (!a.is_infinite()) {
            REQUIRE_FALSE(b.is_infinite());
            CHECK(*b.value <= *a.value);
        }
        const bool beyond_zero = std::any_of(small.begin(), small.end(), [](std::size_t z) { return z != 0; });
        if (beyond_zero) CHECK(pattern_cost(pat(nz, small), n) >= 1);
        if (beyond_zero) CHECK(*a.value >= 1);
    }
}

TEST_CASE("bounds of braids") {
    std::vector<int> torus;
    for (int r = 0; r < 6; ++r) torus.insert(torus.end(), {1, 2});
    const ColoredBraid t1{3, 1, Level(2), torus};
    CHECK(as_int(bound_F(t1, find_diagonals(t1)).bound) == 6);

    const ColoredBraid t2{3, 2, Level(4), torus};
    const DiagonalDecomposition d2 = find_diagonals(t2);
    CHECK(candidate_zones(t2, d2).empty());
    CHECK(bound_F(t2, d2).bound.is_infinite());

    const ColoredBraid seven{2, 2, Level(4), std::vector<int>(7, 1)};
    const DiagonalDecomposition d7 = find_diagonals(seven);
    CHECK(candidate_zones(seven, d7) == std::set<std::size_t>{6});
    CHECK(as_int(bound_F(seven, d7).bound) == 4);
    CHECK(as_int(bound_g(seven, d7).bound) == 4);

    const ColoredBraid short_word{3, 2, Level(4), {1, 2, 1}};
    const BoundResult degenerate = bound_F(short_word, find_diagonals(short_word));
    CHECK(as_int(degenerate.bound) == 0);
    CHECK(degenerate.no_full_twist_target);

    const ColoredBraid single{2, 2, Level(4), {1}};
    CHECK(as_int(bound_g(single, find_diagonals(single)).bound) == 0);

    // last crossing diagonal: sigma_1^8 with m = 2 falls back to sigma_1^7
    const ColoredBraid eight{2, 2, Level(4), std::vector<int>(8, 1)};
    CHECK(as_int(bound_g(eight, find_diagonals(eight)).bound) == 4);

    CHECK_THROWS_AS(bound_F({2, 2, Level(4), {1, -1}}, find_diagonals({2, 2, Level(4), {1}})), PreconditionError);
    CHECK_THROWS_AS(bound_g({2, 2, Level(4), {}}, find_diagonals({2, 2, Level(4), {}})), PreconditionError);
}

TEST_CASE("bounds hold on random braids") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const ColoredBraid b{n, 2, Level(4), oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 30), true)};
        const DiagonalDecomposition d = find_diagonals(b);
        const BoundResult f = bound_F(b, d);
        const auto cands = candidate_zones(b, d);
        if (d.z > 0) CHECK(f.bound.is_infinite() == cands.empty());
        const BoundResult g = bound_g(b, d);
        CHECK_FALSE(g.bound.is_infinite());
        if (!f.bound.is_infinite() && d.zone_of.count(b.word.size())) CHECK(*g.bound.value >= *f.bound.value);
    }
}

TEST_CASE("twist projection") {
    CHECK(twist_projection_bound(2, 0) == 0);
    CHECK(twist_projection_bound(3, 5) == 5);
    CHECK(twist_projection_bound(4, 12) == 12);
    CHECK_THROWS_AS(twist_projection_bound(2, -1), PreconditionError);
}

TEST_CASE("Cauchy reports") {
    const CauchyReport two = cauchy_report({2, 1, std::nullopt, {}, {1}}, {2, 4, 6, 8});
    REQUIRE(two.rows.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(two.rows[i].y == 2 * (i + 1));
        CHECK(as_int(two.rows[i].bound_F) == static_cast<std::int64_t>(2 * (i + 1)));
    }
    CHECK(two.y_nondecreasing);
    CHECK(two.y_grows);

    const CauchyReport three = cauchy_report({3, 1, std::nullopt, {}, {1, 2}}, {6, 12});
    CHECK(three.rows[0].y == 3);
    CHECK(three.rows[1].y == 6);

    CHECK_THROWS_AS(cauchy_report({3, 1, std::nullopt, {}, {1}}, {2}), PreconditionError);
}

TEST_CASE("bound_F grows without bound along complete specs") {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 3) {
        const int n = 2 + static_cast<int>(rng() % 3);
        InfiniteBraidSpec s{n, 1, std::nullopt, oracle::random_word(rng, n, 4, true),
                            oracle::random_word(rng, n, n + static_cast<int>(rng() % 3), true)};
        if (!is_complete(s)) continue;
        ++done;
        std::vector<std::size_t> lengths;
        for (std::size_t l = 0; l <= 60; ++l) lengths.push_back(l);
        const CauchyReport r = cauchy_report(s, lengths);
        CHECK(r.y_nondecreasing);
        CHECK(r.y_grows);
        for (std::size_t i = 1; i < r.rows.size(); ++i) {
            CHECK(*r.rows[i].bound_F.value >= *r.rows[i - 1].bound_F.value);
        }
        CHECK(*r.rows.back().bound_F.value >= 60 / static_cast<std::int64_t>((n - 1) * s.tail.size()) - 1);
    }
}
