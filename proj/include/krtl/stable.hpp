// Truncations of the stable algebra A_n = Q[u_1..u_n] (x) Lambda[xi_1..xi_n]
// with deg u_k = t^{2k-2} q^{-2k} and deg xi_k = t^{2k-2} q^{4-2k} a, and the
// report identifying the low homological degrees of a positive braid closure
// with that truncation.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "krtl/braid.hpp"
#include "krtl/laurent.hpp"

namespace krtl {

struct Tridegree {
    std::int64_t t = 0;
    std::int64_t q = 0;
    std::int64_t a = 0;

    friend bool operator==(const Tridegree&, const Tridegree&) = default;
};

/// (t, a, q) lexicographic, matching polynomial output order.
struct TridegreeOrder {
    bool operator()(const Tridegree& x, const Tridegree& y) const {
        if (x.t != y.t) return x.t < y.t;
        if (x.a != y.a) return x.a < y.a;
        return x.q < y.q;
    }
};

struct TrigradedTable {
    int n = 1;
    std::int64_t y = 0;
    std::int64_t q_min = 0;
    std::map<Tridegree, Integer, TridegreeOrder> dims;

    /// Rows "t\tq\ta\tdim" with a header line.
    std::string to_tsv() const;
    LaurentPoly poincare() const;
};

struct AnGenerator {
    std::string name;
    Tridegree degree;
    bool odd = false;
};

std::vector<AnGenerator> an_generators(int n);

/// Dimensions of the span of monomials u^alpha xi^beta with
/// sum_k (2k-2)(alpha_k + beta_k) < y and q-degree >= q_min.
TrigradedTable an_truncated_dims(int n, std::int64_t y, std::int64_t q_min);

struct LinkEstimateReport {
    int n = 1;
    std::size_t y = 0;
    std::string statement;
    TrigradedTable table;
};

LinkEstimateReport link_estimate_report(const ColoredBraid& braid, std::int64_t q_min);

}  // namespace krtl
