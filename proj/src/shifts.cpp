#include "krtl/shifts.hpp"

#include <algorithm>
#include <string>

namespace krtl {

namespace {

void require_nonneg(int value, const char* name) {
    if (value < 0) throw PreconditionError(std::string(name) + " must be >= 0");
}

void require_ladder_twist(int i, int j, int k) {
    require_nonneg(i, "i");
    require_nonneg(j, "j");
    if (k < 1 || k > std::min(i, j)) {
        throw PreconditionError("ladder twist requires 1 <= k <= min(i, j), got k=" + std::to_string(k));
    }
}

}  // namespace

int crossing_min(int i, int j) {
    require_nonneg(i, "i");
    require_nonneg(j, "j");
    return std::min(i, j);
}

GradingShift fork_slide_shift(int i, int j, int k, ForkSlide kind) {
    require_nonneg(i, "i");
    require_nonneg(j, "j");
    require_nonneg(k, "k");
    if (kind == ForkSlide::T2) return GradingShift::identity();
    return GradingShift::tq(std::min(i, k) + std::min(j, k) - std::min(i + j, k));
}

GradingShift fork_twist_shift(int i, int j, ForkTwist kind) {
    require_nonneg(i, "i");
    require_nonneg(j, "j");
    const std::int64_t ij = static_cast<std::int64_t>(i) * j;
    if (kind == ForkTwist::T4) return {0, -ij, 0};
    const int lo = std::min(i, j);
    return {lo, ij + lo, 0};
}

GradingShift ladder_slide_shift(int i, int j, int k, int l) {
    require_nonneg(i, "i");
    require_nonneg(l, "l");
    if (k < 0 || k > j) throw PreconditionError("ladder slide requires 0 <= k <= j");
    return GradingShift::tq(std::min(i, l) + std::min(j, l) - std::min(i + k, l) - std::min(j - k, l));
}

GradingShift ladder_twist_shift(int i, int j, int k) {
    require_ladder_twist(i, j, k);
    const std::int64_t e = std::min(i - k, j - k) - std::min(i, k);
    return {e, e + static_cast<std::int64_t>(i - j - k) * k, 0};
}

GradingShift ladder_twist_proof_composition(int i, int j, int k) {
    require_ladder_twist(i, j, k);
    const std::int64_t ik = static_cast<std::int64_t>(i - k) * k;
    const std::int64_t jk = static_cast<std::int64_t>(j) * k;
    const GradingShift slide_in = GradingShift::tq(std::min(i - k, j + k) - std::min(k, i - k) - std::min(j, i - k));
    const GradingShift twist_in = GradingShift::tq(std::min(i - k, k)) * GradingShift{0, ik, 0};
    const GradingShift twist_out = GradingShift::tq(-std::min(j, k)) * GradingShift{0, -jk, 0};
    const GradingShift slide_out = GradingShift::tq(std::min(j, k) + std::min(j, i - k) - std::min(i, j));
    return slide_in * twist_in * twist_out * slide_out;
}

long long isotopy_alpha(const std::vector<Crossing>& before, const std::vector<Crossing>& after) {
    long long alpha = 0;
    for (const Crossing& c : before) alpha += crossing_min(c.left, c.right);
    for (const Crossing& c : after) alpha -= crossing_min(c.left, c.right);
    return alpha;
}

GradingShift reidemeister_shift(ReidemeisterMove move, int i, const Level& N) {
    require_nonneg(i, "i");
    if (move == ReidemeisterMove::R2) return GradingShift::tq(i);
    if (!N) throw PreconditionError("R1 shifts need a finite level N");
    const std::int64_t n = *N;
    if (move == ReidemeisterMove::R1pos) return {0, i * (i - n), 0};
    return {i, i * (n - i + 1), 0};
}

}  // namespace krtl
