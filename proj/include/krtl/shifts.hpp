// Grading shifts produced by fork/ladder moves and Reidemeister moves.
// The same formulas hold for finite N and for the HOMFLY-PT (N = inf) limit,
// except R1 which depends on N.

#pragma once

#include <vector>

#include "krtl/braid.hpp"
#include "krtl/laurent.hpp"

namespace krtl {

struct Crossing {
    int left = 0;   // 0 means the strand is absent
    int right = 0;
};

enum class ForkTwist { T3, T4 };
enum class ForkSlide { T1, T2 };
enum class ReidemeisterMove { R1pos, R1neg, R2 };

int crossing_min(int i, int j);

/// (tq)^{min(i,k)+min(j,k)-min(i+j,k)} for T1; identity for T2.
GradingShift fork_slide_shift(int i, int j, int k, ForkSlide kind = ForkSlide::T1);

/// T3: t^{min(i,j)} q^{ij+min(i,j)}; T4: q^{-ij}.
GradingShift fork_twist_shift(int i, int j, ForkTwist kind);

/// (tq)^a, a = min(i,l)+min(j,l)-min(i+k,l)-min(j-k,l). Requires 0 <= k <= j.
GradingShift ladder_slide_shift(int i, int j, int k, int l);

/// t^e q^{e+(i-j-k)k} with e = min(i-k,j-k)-min(i,k). Requires 1 <= k <= min(i,j).
GradingShift ladder_twist_shift(int i, int j, int k);

/// Product of the two fork slides and two fork twists that realize a ladder
/// twist diagrammatically.
GradingShift ladder_twist_proof_composition(int i, int j, int k);

/// Sum of crossing minima before minus after.
long long isotopy_alpha(const std::vector<Crossing>& before, const std::vector<Crossing>& after);

/// R2: t^i q^i. R1pos: q^{i(i-N)}. R1neg: t^i q^{i(N-i+1)}. R1 needs finite N.
GradingShift reidemeister_shift(ReidemeisterMove move, int i, const Level& N);

}  // namespace krtl
