#include "krtl/quantum.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace krtl {

LaurentPoly q_power(std::int64_t e) { return LaurentPoly::monomial({0, e, 0}); }

LaurentPoly quantum_int(int n) {
    if (n < 0) throw PreconditionError("quantum_int requires n >= 0");
    LaurentPoly out;
    for (int j = 0; j < n; ++j) out += q_power(2 * j);
    return out;
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw PreconditionError("quantum_factorial requires n >= 0");
    LaurentPoly out(1);
    for (int k = 1; k <= n; ++k) out *= quantum_int(k);
    return out;
}

namespace {

std::mutex binomial_mutex;
std::map<std::pair<int, int>, LaurentPoly> binomial_memo;

LaurentPoly binomial_locked(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return LaurentPoly(1);
    auto it = binomial_memo.find({n, k});
    if (it != binomial_memo.end()) return it->second;
    // [n,k] = [n-1,k-1] + q^{2k}[n-1,k]
    LaurentPoly value = binomial_locked(n - 1, k - 1) + q_power(2 * k) * binomial_locked(n - 1, k);
    binomial_memo.emplace(std::pair{n, k}, value);
    return value;
}

}  // namespace

LaurentPoly quantum_binomial(int n, int k) {
    if (n < 0) throw PreconditionError("quantum_binomial requires n >= 0");
    std::lock_guard<std::mutex> lock(binomial_mutex);
    return binomial_locked(n, k);
}

LaurentPoly quantum_binomial_balanced(int n, int k) {
    if (k < 0 || k > n) return {};
    return quantum_binomial(n, k) * q_power(-static_cast<std::int64_t>(k) * (n - k));
}

LaurentPoly quantum_binomial_general(std::int64_t x, std::int64_t j, Normalization norm) {
    if (j < 0) return {};
    LaurentPoly balanced;
    if (x >= 0) {
        balanced = quantum_binomial_balanced(static_cast<int>(x), static_cast<int>(j));
    } else {
        balanced = quantum_binomial_balanced(static_cast<int>(-x + j - 1), static_cast<int>(j));
        if (j % 2 != 0) balanced = -balanced;
    }
    if (norm == Normalization::Balanced) return balanced;
    return balanced * q_power(detail::checked_mul(j, x - j));
}

}  // namespace krtl
