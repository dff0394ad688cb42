// Crossing complexes as graded lists of ladder webs, and censuses of the
// objects obtained by expanding every crossing of a braid.
//
// A term with rung r stands for the ladder in which r units of color cross
// from one strand to the other. A term exists only if no edge label exceeds
// N, i.e. max(i,j) + r <= N; at N = inf nothing is truncated.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "krtl/braid.hpp"
#include "krtl/diagonals.hpp"
#include "krtl/laurent.hpp"

namespace krtl {

/// Default cap on the number of resolutions enumerated; KRTL_CAP overrides it.
Integer default_resolution_cap();

struct CrossingTerm {
    int rung = 0;
    GradingShift shift;

    friend bool operator==(const CrossingTerm&, const CrossingTerm&) = default;
};

/// Terms in homological order: positive crossings by increasing r, negative
/// crossings by decreasing r (shift t^{min-r} q^{min-r}).
std::vector<CrossingTerm> crossing_complex(int i, int j, int sign, const Level& N);

struct ConeSplit {
    std::vector<CrossingTerm> resolution_part;
    std::vector<CrossingTerm> ladder_part;
    GradingShift connecting;
};

/// Unicolored crossing as a cone between its identity resolution and its
/// ladder terms.
ConeSplit cone_split(int m, int sign, const Level& N);

/// Product over crossings of the sum of their term shifts.
LaurentPoly census_poincare(const ColoredBraid& braid);

/// Number of objects in the expanded complex (exact).
Integer census_object_count(const ColoredBraid& braid);

/// Sorted list of non-empty zones.
using ZonePattern = std::vector<std::size_t>;

/// Resolutions of the non-diagonal crossings, counted by which zones receive
/// a ladder (a crossing resolved to rung >= 1). Throws CapExceeded when the
/// total number of resolutions is above `cap`.
std::map<ZonePattern, Integer> resolve_nondiagonals(const ColoredBraid& braid, const DiagonalDecomposition& dec,
                                                    const Integer& cap = default_resolution_cap());

}  // namespace krtl
