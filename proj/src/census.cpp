#include "krtl/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace krtl {

Integer default_resolution_cap() {
    if (const char* env = std::getenv("KRTL_CAP")) {
        try {
            Integer cap(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        throw PreconditionError(std::string("KRTL_CAP must be a positive integer, got '") + env + "'");
    }
    return Integer(1) << 20;
}

std::vector<CrossingTerm> crossing_complex(int i, int j, int sign, const Level& N) {
    if (i < 1 || j < 1) throw PreconditionError("crossing colors must be >= 1");
    if (sign != 1 && sign != -1) throw PreconditionError("crossing sign must be +1 or -1");
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    std::vector<CrossingTerm> out;
    for (int r = 0; r <= lo; ++r) {
        if (N && hi + r > *N) continue;
        out.push_back({r, GradingShift::tq(sign > 0 ? r : lo - r)});
    }
    if (sign < 0) std::reverse(out.begin(), out.end());
    return out;
}

ConeSplit cone_split(int m, int sign, const Level& N) {
    ConeSplit out;
    for (const CrossingTerm& term : crossing_complex(m, m, sign, N)) {
        if (term.rung >= 1) out.ladder_part.push_back(term);
    }
    if (sign > 0) {
        out.resolution_part.push_back({0, GradingShift::identity()});
        out.connecting = {-1, 0, 0};
    } else {
        out.resolution_part.push_back({0, {m - 1, m, 0}});
        out.connecting = GradingShift::identity();
    }
    return out;
}

namespace {

LaurentPoly term_sum(const std::vector<CrossingTerm>& terms) {
    LaurentPoly out;
    for (const CrossingTerm& term : terms) out += term.shift.as_poly();
    return out;
}

}  // namespace

LaurentPoly census_poincare(const ColoredBraid& braid) {
    LaurentPoly out(1);
    // Crossings of one sign all have the same term list, so raise to a power.
    int positives = 0;
    int negatives = 0;
    for (int g : braid.word) (g > 0 ? positives : negatives) += 1;
    if (positives) out *= term_sum(crossing_complex(braid.m, braid.m, 1, braid.N)).pow(positives);
    if (negatives) out *= term_sum(crossing_complex(braid.m, braid.m, -1, braid.N)).pow(negatives);
    return out;
}

Integer census_object_count(const ColoredBraid& braid) {
    const Integer per = static_cast<unsigned>(crossing_complex(braid.m, braid.m, 1, braid.N).size());
    Integer out = 1;
    for (std::size_t c = 0; c < braid.word.size(); ++c) out *= per;
    return out;
}

std::map<ZonePattern, Integer> resolve_nondiagonals(const ColoredBraid& braid, const DiagonalDecomposition& dec,
                                                    const Integer& cap) {
    if (!braid.is_positive()) throw PreconditionError("resolve_nondiagonals requires a positive braid");
    const Integer per = static_cast<unsigned>(crossing_complex(braid.m, braid.m, 1, braid.N).size());

    // Per zone: resolutions with every crossing at rung 0 (exactly one) and
    // the rest, which place at least one ladder in the zone.
    std::map<std::size_t, Integer> nonempty_ways;
    Integer total = 1;
    for (const auto& [position, zone] : dec.zone_of) {
        auto [it, inserted] = nonempty_ways.emplace(zone, Integer(1));
        it->second *= per;
        total *= per;
    }
    if (total > cap) throw CapExceeded("resolution count", total.str(), cap.str());

    std::vector<std::pair<std::size_t, Integer>> zones;
    for (auto& [zone, all] : nonempty_ways) {
        if (all - 1 > 0) zones.emplace_back(zone, all - 1);
    }
    std::map<ZonePattern, Integer> out;
    const std::size_t k = zones.size();
    // total <= cap bounds 2^k, so this loop is bounded too (unless the cap was raised absurdly).
    if (k > 40) throw CapExceeded("zone pattern count", (Integer(1) << k).str(), (Integer(1) << 40).str());
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
        ZonePattern pattern;
        Integer count = 1;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask & (1ULL << b)) {
                pattern.push_back(zones[b].first);
                count *= zones[b].second;
            }
        }
        out.emplace(std::move(pattern), count);
    }
    return out;
}

}  // namespace krtl
