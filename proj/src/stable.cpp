#include "krtl/stable.hpp"

#include <sstream>

#include "krtl/diagonals.hpp"

namespace krtl {

std::string TrigradedTable::to_tsv() const {
    std::ostringstream out;
    out << "t\tq\ta\tdim\n";
    for (const auto& [deg, dim] : dims) out << deg.t << '\t' << deg.q << '\t' << deg.a << '\t' << dim << '\n';
    return out.str();
}

LaurentPoly TrigradedTable::poincare() const {
    LaurentPoly out;
    for (const auto& [deg, dim] : dims) out.add_term({deg.t, deg.q, deg.a}, dim);
    return out;
}

std::vector<AnGenerator> an_generators(int n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    std::vector<AnGenerator> out;
    for (int k = 1; k <= n; ++k) {
        out.push_back({"u" + std::to_string(k), {2 * k - 2, -2 * k, 0}, false});
        out.push_back({"xi" + std::to_string(k), {2 * k - 2, 4 - 2 * k, 1}, true});
    }
    return out;
}

namespace {

struct Enumerator {
    int n;
    std::int64_t budget;  // largest allowed t-degree
    std::int64_t q_min;
    TrigradedTable* table;

    // Generators u_k, xi_k for k >= 2 first, then xi_1 and the u_1 tower,
    // whose length is limited by q_min.
    void walk(int k, std::int64_t t, std::int64_t q, std::int64_t a) {
        if (k == 1) {
            for (int xi = 0; xi <= 1; ++xi) {
                std::int64_t qq = q + 2 * xi;
                for (; qq >= q_min; qq -= 2) {
                    table->dims[{t, qq, a + xi}] += 1;
                }
            }
            return;
        }
        const std::int64_t step = 2 * k - 2;
        for (int xi = 0; xi <= 1; ++xi) {
            const std::int64_t t1 = t + step * xi;
            if (t1 > budget) break;
            const std::int64_t q1 = q + (4 - 2 * k) * xi;
            for (std::int64_t e = 0; t1 + step * e <= budget; ++e) {
                walk(k - 1, t1 + step * e, q1 - 2 * k * e, a + xi);
            }
        }
    }
};

}  // namespace

TrigradedTable an_truncated_dims(int n, std::int64_t y, std::int64_t q_min) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (y < 0) throw PreconditionError("y must be >= 0");
    TrigradedTable table;
    table.n = n;
    table.y = y;
    table.q_min = q_min;
    if (y == 0) return table;
    Enumerator{n, y - 1, q_min, &table}.walk(n, 0, 0, 0);
    return table;
}

LinkEstimateReport link_estimate_report(const ColoredBraid& braid, std::int64_t q_min) {
    braid.validate();
    if (!braid.is_positive()) throw PreconditionError("link_estimate_report requires a positive braid");
    if (braid.m != 1) throw PreconditionError("link_estimate_report requires m=1");
    const DiagonalDecomposition dec = find_diagonals(braid);
    LinkEstimateReport report;
    report.n = braid.n;
    report.y = dec.y;
    report.table = an_truncated_dims(braid.n, static_cast<std::int64_t>(dec.y), q_min);
    std::ostringstream s;
    if (dec.y == 0) {
        s << "y = 0: no homological degree is covered, the statement is vacuous";
    } else {
        s << "HHH of the closure agrees with A_" << braid.n << " in homological degrees t < " << dec.y
          << " (table truncated at q >= " << q_min << ")";
    }
    report.statement = s.str();
    return report;
}

}  // namespace krtl
