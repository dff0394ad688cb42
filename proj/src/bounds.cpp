#include "krtl/bounds.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "krtl/census.hpp"

namespace krtl {

namespace {

// floor(num / n) for n >= 1, clamped below at zero.
std::int64_t clamped_div(std::int64_t num, int n) {
    if (num < 0) return 0;
    return num / n;
}

std::int64_t cost(std::int64_t b1v, std::int64_t b2v, std::int64_t b3v, int n) {
    const std::int64_t c = 2 * static_cast<std::int64_t>(n - 1);
    return std::max({b1v, c * b2v, c * b3v});
}

std::vector<std::size_t> sorted_candidates(const std::set<std::size_t>& candidates, std::optional<std::size_t> forced,
                                           std::size_t nz) {
    std::set<std::size_t> all = candidates;
    if (forced) all.insert(*forced);
    for (std::size_t s : all) {
        if (s > nz) throw PreconditionError("zone index " + std::to_string(s) + " exceeds nz=" + std::to_string(nz));
    }
    return {all.begin(), all.end()};
}

}  // namespace

std::int64_t b1(const ZonePatternSpec& pattern) {
    return static_cast<std::int64_t>(pattern.nonempty.size() - pattern.nonempty.count(0));
}

std::int64_t b2(const ZonePatternSpec& pattern, int n) {
    std::int64_t total = 0;
    for (auto it = pattern.nonempty.begin(); it != pattern.nonempty.end(); ++it) {
        auto next = std::next(it);
        const std::size_t below = next == pattern.nonempty.end() ? pattern.nz : *next;
        total += clamped_div(static_cast<std::int64_t>(below) - static_cast<std::int64_t>(*it), n);
    }
    return total;
}

std::int64_t b3(const ZonePatternSpec& pattern, int n) {
    std::int64_t total = 0;
    std::size_t above = 0;
    for (std::size_t j : pattern.nonempty) {
        total += clamped_div(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(above) - 1, n);
        above = j;
    }
    return total;
}

std::int64_t pattern_cost(const ZonePatternSpec& pattern, int n) {
    return cost(b1(pattern), b2(pattern, n), b3(pattern, n), n);
}

Bound cone_bound(int n, std::size_t nz, const std::set<std::size_t>& candidates, std::optional<std::size_t> forced) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    const std::vector<std::size_t> s = sorted_candidates(candidates, forced, nz);
    const std::size_t k = s.size();
    if (k == 0) return Bound::infinite();

    // Every term of b1, b2, b3 depends only on consecutive chosen zones, and
    // the cost is monotone in each, so for a fixed last zone and (b1, b2) only
    // the smallest b3 matters.
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::vector<std::map<Key, std::int64_t>> best(k);
    auto relax = [](std::map<Key, std::int64_t>& table, Key key, std::int64_t value) {
        auto [it, inserted] = table.emplace(key, value);
        if (!inserted && value < it->second) it->second = value;
    };
    const auto f = forced;
    for (std::size_t i = 0; i < k; ++i) {
        if (f && s[i] > *f) break;
        relax(best[i], {s[i] != 0 ? 1 : 0, 0}, clamped_div(static_cast<std::int64_t>(s[i]) - 1, n));
    }
    std::optional<std::int64_t> answer;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [key, b3v] : best[i]) {
            if (!f || s[i] >= *f) {
                const std::int64_t tail = clamped_div(static_cast<std::int64_t>(nz - s[i]), n);
                const std::int64_t value = cost(key.first, key.second + tail, b3v, n);
                if (!answer || value < *answer) answer = value;
            }
            for (std::size_t j = i + 1; j < k; ++j) {
                if (f && s[i] < *f && *f < s[j]) break;
                const auto gap = static_cast<std::int64_t>(s[j] - s[i]);
                relax(best[j], {key.first + 1, key.second + clamped_div(gap, n)}, b3v + clamped_div(gap - 1, n));
            }
        }
    }
    return answer ? Bound::finite(*answer) : Bound::infinite();
}

Bound cone_bound_enumerate(int n, std::size_t nz, const std::set<std::size_t>& candidates,
                           std::optional<std::size_t> forced, std::size_t cap) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    const std::vector<std::size_t> s = sorted_candidates(candidates, forced, nz);
    if (s.size() > cap || s.size() >= 63) {
        throw CapExceeded("candidate zone count", std::to_string(s.size()), std::to_string(cap));
    }
    std::optional<std::int64_t> answer;
    for (unsigned long long mask = 1; mask < (1ULL << s.size()); ++mask) {
        ZonePatternSpec pattern{nz, {}};
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (mask & (1ULL << b)) pattern.nonempty.insert(s[b]);
        }
        if (forced && !pattern.nonempty.count(*forced)) continue;
        const std::int64_t value = pattern_cost(pattern, n);
        if (!answer || value < *answer) answer = value;
    }
    return answer ? Bound::finite(*answer) : Bound::infinite();
}

std::set<std::size_t> candidate_zones(const ColoredBraid& braid, const DiagonalDecomposition& dec) {
    std::set<std::size_t> out;
    if (crossing_complex(braid.m, braid.m, 1, braid.N).size() < 2) return out;
    for (const auto& [position, zone] : dec.zone_of) out.insert(zone);
    return out;
}

BoundResult bound_F(const ColoredBraid& braid, const DiagonalDecomposition& dec) {
    if (!braid.is_positive()) throw PreconditionError("bound_F requires a positive braid");
    if (braid.m == 1) return {Bound::finite(static_cast<std::int64_t>(dec.y)), false};
    if (dec.z == 0) return {Bound::finite(0), true};
    return {cone_bound(braid.n, dec.used_count, candidate_zones(braid, dec)), false};
}

BoundResult bound_g(const ColoredBraid& braid, const DiagonalDecomposition& dec) {
    if (!braid.is_positive()) throw PreconditionError("bound_g requires a positive braid");
    if (braid.word.empty()) throw PreconditionError("bound_g requires a nonempty word");
    const std::size_t last = braid.word.size();
    auto it = dec.zone_of.find(last);
    if (it != dec.zone_of.end()) {
        return {cone_bound(braid.n, dec.used_count, candidate_zones(braid, dec), it->second), false};
    }
    // The last crossing sits on a used diagonal; treat it as the resolved
    // crossing against the decomposition of the word without it.
    ColoredBraid shorter = braid;
    shorter.word.pop_back();
    const DiagonalDecomposition inner = find_diagonals(shorter);
    const std::size_t zone = inner.zone_for(last, braid.word.back());
    return {cone_bound(braid.n, inner.used_count, candidate_zones(shorter, inner), zone), false};
}

std::int64_t twist_projection_bound(int n, std::int64_t y) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (y < 0) throw PreconditionError("y must be >= 0");
    return y;
}

CauchyReport cauchy_report(const InfiniteBraidSpec& spec, const std::vector<std::size_t>& lengths) {
    if (!is_complete(spec)) throw PreconditionError("spec is not complete");
    if (!spec.is_positive()) throw PreconditionError("spec is not positive");
    CauchyReport report;
    for (std::size_t length : lengths) {
        const ColoredBraid braid = partial_braid(spec, length);
        const DiagonalDecomposition dec = find_diagonals(braid);
        BoundReport row;
        row.length = length;
        row.y = dec.y;
        row.z = dec.z;
        const BoundResult f = bound_F(braid, dec);
        row.bound_F = f.bound;
        row.no_full_twist_target = f.no_full_twist_target;
        row.bound_g = braid.word.empty() ? Bound::infinite() : bound_g(braid, dec).bound;
        if (!report.rows.empty() && row.y < report.rows.back().y) report.y_nondecreasing = false;
        report.rows.push_back(row);
    }
    if (report.rows.size() >= 2) report.y_grows = report.rows.back().y > report.rows.front().y;
    return report;
}

}  // namespace krtl
