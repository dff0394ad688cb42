#include <doctest.h>

#include "krtl/shifts.hpp"

using namespace krtl;

namespace {

GradingShift tq(std::int64_t t, std::int64_t q) { return {t, q, 0}; }

}  // namespace

TEST_CASE("crossing minima") {
    CHECK(crossing_min(1, 1) == 1);
    CHECK(crossing_min(2, 5) == 2);
    CHECK(crossing_min(0, 3) == 0);
    CHECK_THROWS_AS(crossing_min(-1, 2), PreconditionError);
}

TEST_CASE("fork moves") {
    CHECK(fork_slide_shift(1, 1, 1) == tq(1, 1));
    CHECK(fork_slide_shift(2, 3, 1) == tq(1, 1));
    CHECK(fork_slide_shift(4, 7, 2, ForkSlide::T2).is_identity());
    CHECK(fork_twist_shift(1, 1, ForkTwist::T3) == tq(1, 2));
    CHECK(fork_twist_shift(1, 1, ForkTwist::T4) == tq(0, -1));
    CHECK(fork_twist_shift(2, 3, ForkTwist::T3) == tq(2, 8));
    CHECK(fork_twist_shift(2, 3, ForkTwist::T3).to_string() == "t^2q^8");
}

TEST_CASE("ladder moves") {
    CHECK(ladder_slide_shift(5, 3, 0, 4).is_identity());
    CHECK(ladder_slide_shift(1, 1, 1, 1) == tq(1, 1));
    CHECK(ladder_slide_shift(2, 3, 1, 2).is_identity());
    CHECK_THROWS_AS(ladder_slide_shift(2, 3, 4, 2), PreconditionError);

    CHECK(ladder_twist_shift(1, 1, 1) == tq(-1, -2));
    CHECK(ladder_twist_shift(2, 2, 1) == tq(0, -1));
    CHECK(ladder_twist_shift(3, 2, 1).is_identity());
    CHECK_THROWS_AS(ladder_twist_shift(2, 2, 0), PreconditionError);
    CHECK_THROWS_AS(ladder_twist_shift(2, 1, 2), PreconditionError);
}

TEST_CASE("ladder twist proof composition factors") {
    CHECK(ladder_twist_proof_composition(1, 1, 1) == tq(-1, -2));
    CHECK(ladder_twist_proof_composition(3, 2, 1).is_identity());
    // The four factors at (2,2,1): (tq)^-1, tq^2, t^-1q^-3, 1.
    CHECK(ladder_twist_proof_composition(2, 2, 1) == tq(-1, -2));
    CHECK_THROWS_AS(ladder_twist_proof_composition(1, 1, 0), PreconditionError);
}

TEST_CASE("isotopy alpha") {
    const std::vector<Crossing> some{{1, 2}, {3, 3}, {0, 4}};
    CHECK(isotopy_alpha(some, some) == 0);
    // pulling a rung of color 1 out of a color 2 region
    std::vector<Crossing> before(5, Crossing{2, 2});
    std::vector<Crossing> after{{2, 1}, {2, 1}, {2, 1}, {3, 1}, {3, 1}};
    CHECK(isotopy_alpha(before, after) == 5);
    // a rung of color 1 through a full twist on three strands
    CHECK(isotopy_alpha(std::vector<Crossing>(4, {2, 2}), std::vector<Crossing>(4, {2, 1})) == 4);
}

TEST_CASE("Reidemeister moves") {
    CHECK(reidemeister_shift(ReidemeisterMove::R2, 1, Level(2)) == tq(1, 1));
    CHECK(reidemeister_shift(ReidemeisterMove::R2, 3, std::nullopt) == tq(3, 3));
    CHECK(reidemeister_shift(ReidemeisterMove::R1pos, 1, Level(2)) == tq(0, -1));
    CHECK(reidemeister_shift(ReidemeisterMove::R1neg, 1, Level(2)) == tq(1, 2));
    CHECK_THROWS_AS(reidemeister_shift(ReidemeisterMove::R1pos, 1, std::nullopt), PreconditionError);
}

TEST_CASE("t-exponents match the crossing count of each move") {
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
            for (int k = 0; k <= 8; ++k) {
                const GradingShift slide = fork_slide_shift(i, j, k);
                CHECK(slide.t == isotopy_alpha({{i, k}, {j, k}}, {{i + j, k}}));
                CHECK(slide.t == slide.q);
                CHECK(slide.t >= 0);
                CHECK((slide.t == 0) == (std::min(i, k) + std::min(j, k) == std::min(i + j, k)));
                if (i == j && j == k && i > 0) CHECK(slide.t > 0);
                if (k >= 1 && k <= std::min(i, j)) {
                    CHECK(ladder_twist_shift(i, j, k).t == isotopy_alpha({{i - k, j - k}}, {{i, k}}));
                }
                for (int l = 0; l <= 8 && k <= j; ++l) {
                    const GradingShift s = ladder_slide_shift(i, j, k, l);
                    CHECK(s.t == isotopy_alpha({{i, l}, {j, l}}, {{i + k, l}, {j - k, l}}));
                }
            }
            CHECK(fork_twist_shift(i, j, ForkTwist::T3).t == isotopy_alpha({{i, j}}, {}));
        }
    }
}
