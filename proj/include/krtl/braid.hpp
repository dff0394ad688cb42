/**
 * @file braid.hpp
 * @brief Unicolored braids, eventually periodic infinite braids, and the
 *        structural facts about them (completeness, gamma sets, splitting of
 *        non-complete braids into projector blocks).
 *
 * A crossing is stored as a signed generator index: +i is sigma_i, -i its
 * inverse. Word positions reported by every module are 1-based.
 *
 * File format:
 *
 *     n=3 m=1 N=inf
 *     tail=1 2            (optional; makes the file an infinite spec)
 *     1 2 -1              (body: the finite word, or the prefix of a spec)
 *
 * A bi-infinite spec adds `back_prefix=` and `back_tail=` lines for the
 * backward direction. '#' starts a comment.
 */

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "krtl/laurent.hpp"

namespace krtl {

/// sl_N level; nullopt stands for N = infinity (the HOMFLY-PT limit).
using Level = std::optional<int>;

std::string level_to_string(const Level& level);

struct ColoredBraid {
    int n = 1;
    int m = 1;
    Level N;
    std::vector<int> word;

    std::size_t length() const { return word.size(); }
    bool is_positive() const;
    int writhe() const;
    /// Throws PreconditionError when an invariant is violated.
    void validate() const;

    friend bool operator==(const ColoredBraid&, const ColoredBraid&) = default;
};

struct InfiniteBraidSpec {
    int n = 1;
    int m = 1;
    Level N;
    std::vector<int> prefix;
    std::vector<int> tail;
    bool bi_infinite = false;
    std::vector<int> back_prefix;
    std::vector<int> back_tail;

    bool is_positive() const;
    void validate() const;

    friend bool operator==(const InfiniteBraidSpec&, const InfiniteBraidSpec&) = default;
};

/// Parsed contents of a braid file. `spec` is set iff a tail line was given,
/// in which case `braid.word` holds the prefix.
struct BraidFile {
    ColoredBraid braid;
    std::optional<InfiniteBraidSpec> spec;
    std::vector<std::string> warnings;
};

BraidFile parse_braid_file(std::string_view text);
ColoredBraid parse_braid(std::string_view text, std::vector<std::string>* warnings = nullptr);
InfiniteBraidSpec parse_spec(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string serialize_braid(const ColoredBraid& braid);
std::string serialize_spec(const InfiniteBraidSpec& spec);

/// First `length` crossings of prefix followed by the repeated tail.
ColoredBraid partial_braid(const InfiniteBraidSpec& spec, std::size_t length);

bool is_complete(const InfiniteBraidSpec& spec);

struct GammaSets {
    std::set<int> gamma;       ///< generators occurring infinitely often
    std::set<int> complement;  ///< {0..n} minus gamma; always holds 0 and n
};

GammaSets gamma_sets(const InfiniteBraidSpec& spec);

struct StructureReport {
    std::size_t r = 0;
    std::vector<int> blocks;
    std::string rendering;
};

StructureReport decompose_noncomplete(const InfiniteBraidSpec& spec);

/// (tq)^{m a} where a counts negative crossings of the prefix.
GradingShift negative_shift(const InfiniteBraidSpec& spec);

}  // namespace krtl
