// Quantum integers, factorials and binomials in the variable q.
//
// The default ("unbalanced") forms are honest polynomials in q^2:
//   [n] = 1 + q^2 + ... + q^(2n-2)
// The balanced forms are the symmetric versions q^-(n-1)[n] used by the
// web calculus; both are exposed because the two conventions coexist.

#pragma once

#include <cstdint>

#include "krtl/laurent.hpp"

namespace krtl {

enum class Normalization { Unbalanced, Balanced };

/// q^e as a polynomial.
LaurentPoly q_power(std::int64_t e);

LaurentPoly quantum_int(int n);
LaurentPoly quantum_factorial(int n);

/// Gaussian binomial in q^2; zero outside 0 <= k <= n. Built by the q-Pascal
/// recursion and memoized, so no polynomial division is ever performed.
LaurentPoly quantum_binomial(int n, int k);

/// Symmetric version, q^{-k(n-k)} times the Gaussian binomial.
LaurentPoly quantum_binomial_balanced(int n, int k);

/// Binomial with an arbitrary integer top entry.
///
/// Balanced: for x < 0, [x choose j] = (-1)^j [-x+j-1 choose j].
/// Unbalanced: q^{j(x-j)} times the balanced value, which agrees with
/// quantum_binomial for x >= 0. Zero for j < 0.
LaurentPoly quantum_binomial_general(std::int64_t x, std::int64_t j, Normalization norm);

}  // namespace krtl
