/**
 * @file web.hpp
 * @brief Closed sl_N web evaluation.
 *
 * Two representations:
 *
 *  - AnnularWeb: the closure of a ladder on n strands. Strand c starts with
 *    label labels[c]; rung {c, k} with k > 0 moves k units from strand c to
 *    strand c+1, with k < 0 it moves |k| units back. Columns are 1-based.
 *    Closure of a braid resolution is exactly this shape.
 *  - WebGraph: an explicit oriented trivalent graph, used for the zero-edge
 *    normalization and a small digon/circle evaluator.
 *
 * The annular evaluator rewrites the cyclic rung word with the digon relation
 * (merging adjacent rungs) and the square switch (commuting a rung that moves
 * right past one that moves left), rotating the word when it is sorted. Every
 * closed annular web reduces to circles this way, so Irreducible is reserved
 * for runaway inputs.
 *
 * Values come in two normalizations. Balanced is the symmetric one (a circle
 * labeled 1 is q^-1 + q at N = 2). Unbalanced rescales by the power of q that
 * puts the lowest term at q^0, so circles give the Gaussian binomial
 * [N choose k] and theta webs give 1 + q^2.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "krtl/braid.hpp"
#include "krtl/laurent.hpp"
#include "krtl/quantum.hpp"

namespace krtl {

struct Rung {
    int column = 1;
    int amount = 0;

    friend bool operator==(const Rung&, const Rung&) = default;
    friend auto operator<=>(const Rung&, const Rung&) = default;
};

struct AnnularWeb {
    std::vector<int> labels;
    std::vector<Rung> rungs;

    int strands() const { return static_cast<int>(labels.size()); }
    friend bool operator==(const AnnularWeb&, const AnnularWeb&) = default;
};

struct ParsedWeb {
    AnnularWeb web;
    int N = 2;
};

/// `n=<int> m=<int> N=<int> rungs=(col:label,...)`
ParsedWeb parse_annular_web(std::string_view text);
std::string format_annular_web(const AnnularWeb& web, int N);

/// Throws PreconditionError for a negative label, a rung on a bad column or
/// a rung word whose net transfer is nonzero (the web would not close up).
void validate_closed(const AnnularWeb& web);

LaurentPoly eval_closed_web(const AnnularWeb& web, int N, Normalization norm = Normalization::Unbalanced);

/// Closure of the resolution that gives every crossing of `braid` the listed
/// rung (0 = identity). Crossing of generator i becomes rungs (+r@i)(-r@i).
AnnularWeb resolution_closure(const ColoredBraid& braid, const std::vector<int>& rungs);

/// Closure of b stacked barbells on two strands colored m.
AnnularWeb barbell_chain(int m, int b);

/// Sum over crossing resolutions of shift * closure value, at m = 1, N = 2.
/// Balanced is the default because it is the normalization in which the
/// result specializes to the Jones polynomial.
LaurentPoly sl2_bracket(const ColoredBraid& braid, Normalization norm = Normalization::Balanced, unsigned jobs = 1);

struct WebGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        int label = 0;
    };
    int vertex_count = 0;
    std::vector<Edge> edges;

    /// Labels of components that are bare circles (a loop edge on a vertex
    /// with nothing else attached).
    std::vector<int> circle_labels() const;
    std::size_t live_vertex_count() const;
};

WebGraph to_graph(const AnnularWeb& web);

/// Deletes 0-labeled edges and smooths every vertex left with one incoming
/// and one outgoing edge.
WebGraph normalize_zero_edges(const WebGraph& web);

/// Digon collapse plus circle removal on an explicit graph. Throws
/// Irreducible when neither applies and the graph is not a union of circles.
LaurentPoly eval_web_graph(const WebGraph& web, int N, Normalization norm = Normalization::Unbalanced);

}  // namespace krtl
