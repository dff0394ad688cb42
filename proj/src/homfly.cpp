#include "krtl/homfly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "krtl/quantum.hpp"

namespace krtl {

namespace {

AzPoly az(std::int64_t a, std::int64_t z, long long c = 1) { return AzPoly::monomial({a, z}, c); }

// Trace parameter of an extra free strand.
AzPoly unlink_factor() { return az(-1, -1) - az(1, -1); }

class TraceEngine {
public:
    AzPoly trace(const HeckeElement& elt) {
        AzPoly out;
        for (const auto& [w, c] : elt) out += c * trace_basis(w);
        return out;
    }

private:
    AzPoly trace_basis(const Permutation& w) {
        const int n = static_cast<int>(w.size());
        if (n <= 1) return AzPoly(1);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;

        AzPoly value;
        if (w.back() == n - 1) {
            value = unlink_factor() * trace_basis(Permutation(w.begin(), w.end() - 1));
        } else {
            // T_w = T_u T_{n-1} T_{n-2} ... T_p with u fixing n and p the
            // (1-based) position of n in w.
            const int p = static_cast<int>(std::find(w.begin(), w.end(), n - 1) - w.begin()) + 1;
            Permutation u = w;
            u.erase(u.begin() + (p - 1));
            HeckeElement x{{u, AzPoly(1)}};
            for (int i = n - 2; i >= p; --i) x = hecke_multiply(x, i, 1);
            value = az(-1, 0) * trace(x);
        }
        memo_.emplace(w, value);
        return value;
    }

    std::map<Permutation, AzPoly> memo_;
};

LaurentPoly q_mono(std::int64_t q, std::int64_t a = 0) { return LaurentPoly::monomial({0, q, a}); }

LaurentPoly truncate_q(const LaurentPoly& p, std::int64_t q_max) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[1] <= q_max) out.add_term(e, c);
    }
    return out;
}

struct Expanded {
    LaurentPoly poly;
    std::int64_t window = 0;  // offsets 0..window are exact
};

// z -> q - q^-1 with z^-1 -> q/(q^2 - 1) = -(q + q^3 + q^5 + ...).
Expanded expand_in_q(const AzPoly& p, int horizon) {
    if (p.is_zero()) return {LaurentPoly(), horizon};
    std::int64_t q_low = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        // z^j starts at q^-j for j >= 0 and the series for z^-j starts at q^j
        const std::int64_t low = -e[1];
        if (first || low < q_low) q_low = low;
        first = false;
    }
    const std::int64_t q_cut = q_low + horizon;
    const LaurentPoly z_q = q_mono(1) - q_mono(-1);
    LaurentPoly z_inv;
    for (std::int64_t j = 1; j <= std::max<std::int64_t>(q_cut, 1); j += 2) z_inv -= q_mono(j);

    LaurentPoly total;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::monomial({0, 0, e[0]}, c);
        if (e[1] >= 0) {
            for (std::int64_t j = 0; j < e[1]; ++j) term = truncate_q(term * z_q, q_cut + e[1]);
        } else {
            for (std::int64_t j = 0; j < -e[1]; ++j) term = truncate_q(term * z_inv, q_cut);
        }
        total += term;
    }
    total = truncate_q(total, q_cut);
    auto q_range = total.degree_range('q');
    auto a_range = total.degree_range('a');
    if (!q_range) return {LaurentPoly(), horizon};
    return {total.shifted({0, -q_range->first, -a_range->first}), q_cut - q_range->first};
}

LaurentPoly slice(const LaurentPoly& p, std::int64_t q) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[1] == q) out.add_term(e, c);
    }
    return out;
}

}  // namespace

HeckeElement hecke_identity(int n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    Permutation id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return {{id, AzPoly(1)}};
}

HeckeElement hecke_multiply(const HeckeElement& elt, int i, int sign) {
    HeckeElement out;
    auto add = [&out](const Permutation& w, const AzPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    const AzPoly z = az(0, 1);
    for (const auto& [w, c] : elt) {
        if (i < 1 || i >= static_cast<int>(w.size())) throw PreconditionError("generator index out of range");
        Permutation ws = w;
        std::swap(ws[static_cast<std::size_t>(i - 1)], ws[static_cast<std::size_t>(i)]);
        const bool longer = w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)];
        // T_w T_i
        add(ws, c);
        if (!longer) add(w, c * z);
        // T_i^{-1} = T_i - z
        if (sign < 0) add(w, -(c * z));
    }
    return out;
}

AzPoly markov_trace(const HeckeElement& elt) {
    TraceEngine engine;
    return engine.trace(elt);
}

AzPoly homfly_of_word(int n, const std::vector<int>& word) {
    HeckeElement elt = hecke_identity(n);
    int writhe = 0;
    for (int g : word) {
        elt = hecke_multiply(elt, std::abs(g), g > 0 ? 1 : -1);
        writhe += g > 0 ? 1 : -1;
    }
    return az(writhe, 0) * markov_trace(elt);
}

AzPoly homfly_polynomial(const ColoredBraid& braid) {
    braid.validate();
    if (braid.m != 1) throw PreconditionError("homfly_polynomial needs m=1");
    return homfly_of_word(braid.n, braid.word);
}

StabilityReport stability_check(int n, const std::vector<int>& ks, int horizon, int max_strands) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (n > max_strands) {
        throw CapExceeded("strand count for stability_check", std::to_string(n), std::to_string(max_strands));
    }
    if (horizon < 1) throw PreconditionError("horizon must be >= 1");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) throw PreconditionError("every k must be >= 1");
        if (i && ks[i] < ks[i - 1]) throw PreconditionError("k list must be nondecreasing");
    }
    StabilityReport report;
    report.n = n;
    report.ks = ks;
    report.horizon = horizon;
    std::vector<std::int64_t> windows;
    for (int k : ks) {
        std::vector<int> word;
        for (int rep = 0; rep < k; ++rep) {
            for (int g = 1; g < n; ++g) word.push_back(g);
        }
        report.polynomials.push_back(homfly_of_word(n, word));
        Expanded e = expand_in_q(report.polynomials.back(), horizon);
        report.normalized.push_back(e.poly);
        windows.push_back(e.window);
    }
    for (std::size_t i = 1; i < ks.size(); ++i) {
        const std::int64_t limit = std::min(windows[i - 1], windows[i]);
        int agree = 0;
        while (agree <= limit && slice(report.normalized[i - 1], agree) == slice(report.normalized[i], agree)) ++agree;
        report.agreement.push_back(agree);
        if (i >= 2 && agree < report.agreement[i - 2]) report.nondecreasing = false;
    }
    return report;
}

}  // namespace krtl
