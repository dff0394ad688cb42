// HOMFLY-PT polynomials of braid closures through the Hecke algebra and the
// Ocneanu trace, plus a check that torus-link polynomials stabilize.
//
// Conventions: T_i - T_i^{-1} = z, the trace sends an added identity strand
// to D = (a^-1 - a)/z and an added T_{n-1} to a^-1, and
// P(closure of b) = a^{writhe(b)} tr(b). This gives
//     a^-1 P(L+) - a P(L-) = z P(L0),
// P(unknot) = 1 and P(right trefoil) = 2a^2 - a^4 + a^2z^2.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "krtl/braid.hpp"
#include "krtl/laurent.hpp"

namespace krtl {

/// One-line notation with values 0..n-1.
using Permutation = std::vector<int>;
using HeckeElement = std::map<Permutation, AzPoly>;

HeckeElement hecke_identity(int n);

/// elt * T_i (sign +1) or elt * T_i^{-1} (sign -1), i 1-based.
HeckeElement hecke_multiply(const HeckeElement& elt, int i, int sign);

/// Ocneanu trace of an element (all permutations must have the same size).
AzPoly markov_trace(const HeckeElement& elt);

AzPoly homfly_polynomial(const ColoredBraid& braid);
AzPoly homfly_of_word(int n, const std::vector<int>& word);

struct StabilityReport {
    int n = 1;
    std::vector<int> ks;
    int horizon = 0;
    std::vector<AzPoly> polynomials;
    /// z -> q - q^-1, expanded as a power series in q up to the horizon,
    /// then shifted so the lowest a and q degrees are 0 (t exponent unused).
    std::vector<LaurentPoly> normalized;
    /// For each consecutive pair: how many q-degrees from the bottom agree.
    std::vector<int> agreement;
    bool nondecreasing = true;
};

StabilityReport stability_check(int n, const std::vector<int>& ks, int horizon = 40, int max_strands = 7);

}  // namespace krtl
