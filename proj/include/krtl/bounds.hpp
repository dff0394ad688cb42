// Lower bounds on the homological order of the maps between partial braid
// complexes, computed from which zones of the diagonal decomposition can
// hold a ladder.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "krtl/braid.hpp"
#include "krtl/diagonals.hpp"

namespace krtl {

/// Integer or +infinity.
struct Bound {
    std::optional<std::int64_t> value;  // nullopt = +inf

    static Bound infinite() { return {}; }
    static Bound finite(std::int64_t v) { return {v}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "inf"; }

    friend bool operator==(const Bound&, const Bound&) = default;
};

struct ZonePatternSpec {
    std::size_t nz = 0;
    std::set<std::size_t> nonempty;
};

std::int64_t b1(const ZonePatternSpec& pattern);
std::int64_t b2(const ZonePatternSpec& pattern, int n);
std::int64_t b3(const ZonePatternSpec& pattern, int n);

/// max(b1, 2(n-1) b2, 2(n-1) b3) for one pattern.
std::int64_t pattern_cost(const ZonePatternSpec& pattern, int n);

/// Minimum of pattern_cost over nonempty subsets S of `candidates` (that
/// contain `forced`, if given); +inf when no such subset exists. Exact
/// dynamic program over the sorted candidates, no cap.
Bound cone_bound(int n, std::size_t nz, const std::set<std::size_t>& candidates,
                 std::optional<std::size_t> forced = std::nullopt);

/// Same minimum by explicit subset enumeration; throws CapExceeded when there
/// are more than `cap` candidates.
Bound cone_bound_enumerate(int n, std::size_t nz, const std::set<std::size_t>& candidates,
                           std::optional<std::size_t> forced = std::nullopt, std::size_t cap = 22);

/// Zones holding a non-diagonal crossing that has at least one ladder term.
std::set<std::size_t> candidate_zones(const ColoredBraid& braid, const DiagonalDecomposition& dec);

struct BoundResult {
    Bound bound;
    bool no_full_twist_target = false;
};

BoundResult bound_F(const ColoredBraid& braid, const DiagonalDecomposition& dec);
BoundResult bound_g(const ColoredBraid& braid, const DiagonalDecomposition& dec);

std::int64_t twist_projection_bound(int n, std::int64_t y);

struct BoundReport {
    std::size_t length = 0;
    std::size_t y = 0;
    std::size_t z = 0;
    Bound bound_F;
    Bound bound_g;
    bool no_full_twist_target = false;
};

struct CauchyReport {
    std::vector<BoundReport> rows;
    bool y_nondecreasing = true;
    bool y_grows = false;  ///< last y exceeds first y
};

CauchyReport cauchy_report(const InfiniteBraidSpec& spec, const std::vector<std::size_t>& lengths);

}  // namespace krtl
