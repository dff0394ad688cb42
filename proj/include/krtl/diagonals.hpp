// Greedy diagonal decomposition of positive braid words.
//
// A diagonal is a subsequence sigma_1, sigma_2, ..., sigma_{n-1} at strictly
// increasing positions. Diagonals are collected greedily from the top of the
// word; after each one we walk back up from its sigma_{n-1} through the
// latest earlier sigma_{n-2}, ..., sigma_1, and the next diagonal starts at
// the first sigma_1 strictly below that point. Only the first n*z diagonals
// (z = floor(y/n)) are used; the rest count as ordinary crossings.

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "krtl/braid.hpp"

namespace krtl {

struct DiagonalDecomposition {
    int n = 1;
    std::size_t length = 0;
    /// Every diagonal found, each as n-1 positions (1-based).
    std::vector<std::vector<std::size_t>> diagonals;
    std::size_t y = 0;
    std::size_t z = 0;
    std::size_t used_count = 0;
    /// Positions lying in no found diagonal.
    std::set<std::size_t> skipped;
    /// Positions lying in no used diagonal, with their zone in [0, used_count].
    std::map<std::size_t, std::size_t> zone_of;

    /// Zone of a crossing at `position` on generator `g` relative to the used
    /// diagonals; valid for any position, diagonal or not.
    std::size_t zone_for(std::size_t position, int g) const;
};

DiagonalDecomposition find_diagonals(const ColoredBraid& braid);

/// Number of non-diagonal crossings in each zone 0..used_count (all zones present).
std::map<std::size_t, std::size_t> zone_census(const DiagonalDecomposition& dec);

}  // namespace krtl
