// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "krtl/bounds.hpp"
#include "krtl/diagonals.hpp"
#include "krtl/homfly.hpp"
#include "krtl/quantum.hpp"
#include "krtl/shifts.hpp"
#include "krtl/stable.hpp"
#include "krtl/web.hpp"
#include "oracles.hpp"

using namespace krtl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }

    Outcome outcome() const {
        std::ostringstream s;
        s << checks << " checks";
        if (failures) s << ", " << failures << " failed, first: " << first;
        return {failures == 0, s.str()};
    }
};

LaurentPoly Q(const char* text) { return LaurentPoly::parse(text); }

std::vector<int> torus_word(int n, int k) {
    std::vector<int> w;
    for (int r = 0; r < k; ++r)
        for (int g = 1; g < n; ++g) w.push_back(g);
    return w;
}

Outcome quantum_suite() {
    Tally t;
    for (int n = 0; n <= 12; ++n) {
        Integer row = 0;
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly b = quantum_binomial(n, k);
            t.expect(b == quantum_binomial(n, n - k), "symmetry");
            t.expect(b == oracle::qbinom_by_division(n, k), "division oracle");
            if (n >= 1 && k >= 1 && k <= n - 1) {
                const LaurentPoly pascal =
                    quantum_binomial(n - 1, k - 1) + quantum_binomial(n - 1, k).shifted({0, 2 * k, 0});
                t.expect(b == pascal, "q-Pascal");
            }
            Integer binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            t.expect(b.specialize('q', 1) == LaurentPoly::monomial({0, 0, 0}, binom), "q=1");
        }
    }
    t.expect(quantum_binomial(4, 2) == Q("1 + q^2 + 2q^4 + q^6 + q^8"), "qbinom(4,2)");
    return t.outcome();
}

Outcome shift_constants() {
    Tally t;
    t.expect(fork_slide_shift(1, 1, 1).to_string() == "tq", "fork slide");
    t.expect(fork_twist_shift(1, 1, ForkTwist::T3).to_string() == "tq^2", "fork twist T3");
    t.expect(fork_twist_shift(1, 1, ForkTwist::T4).to_string() == "q^-1", "fork twist T4");
    return t.outcome();
}

Outcome composition_identity() {
    Tally t;
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) {
            for (int k = 1; k <= std::min(i, j); ++k) {
                const GradingShift stated = ladder_twist_shift(i, j, k);
                const GradingShift composed = ladder_twist_proof_composition(i, j, k);
                t.expect(stated == composed, "ladder twist (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                 std::to_string(k) + "): " + stated.to_string() + " vs " +
                                                 composed.to_string());
            }
        }
    }
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j)
            for (int k = 0; k <= j; ++k)
                for (int l = 0; l <= 8; ++l)
                    t.expect(ladder_slide_shift(i, j, k, l).t ==
                                 isotopy_alpha({{i, l}, {j, l}}, {{i + k, l}, {j - k, l}}),
                             "ladder slide alpha");
    return t.outcome();
}

Outcome pull_rung() {
    Tally t;
    const int m = 4;
    for (int i = 1; i <= 3; ++i) {
        const std::vector<Crossing> before(5, Crossing{m, m});
        std::vector<Crossing> after(3, Crossing{m, m - i});
        after.insert(after.end(), 2, Crossing{m + i, m - i});
        t.expect(isotopy_alpha(before, after) == 5 * i, "alpha = 5i at i=" + std::to_string(i));
    }
    return t.outcome();
}

Outcome diagonal_engine() {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= 20; ++k) {
            const DiagonalDecomposition d = find_diagonals({n, 1, Level(2), torus_word(n, k)});
            t.expect(d.y == static_cast<std::size_t>(k) && d.z == static_cast<std::size_t>(k / n) && d.skipped.empty(),
                     "torus n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    std::mt19937 rng(5);
    for (int it = 0; it < 500; ++it) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const ColoredBraid b{n, 1, Level(2), oracle::random_word(rng, n, static_cast<int>(rng() % 50), true)};
        const DiagonalDecomposition d = find_diagonals(b);
        std::set<std::size_t> seen(d.skipped.begin(), d.skipped.end());
        bool ok = true;
        for (const auto& diag : d.diagonals) {
            ok = ok && diag.size() == static_cast<std::size_t>(n - 1);
            for (std::size_t j = 0; j < diag.size() && ok; ++j) {
                ok = b.word[diag[j] - 1] == static_cast<int>(j + 1) && (j == 0 || diag[j - 1] < diag[j]) &&
                     seen.insert(diag[j]).second;
            }
        }
        ok = ok && seen.size() == b.word.size() && d.z == d.y / static_cast<std::size_t>(n);
        t.expect(ok, "structure of random word " + std::to_string(it));
    }
    return t.outcome();
}

Outcome bounds() {
    Tally t;
    const ColoredBraid seven{2, 2, Level(4), std::vector<int>(7, 1)};
    const DiagonalDecomposition d7 = find_diagonals(seven);
    t.expect(cone_bound(2, d7.used_count, candidate_zones(seven, d7)) == Bound::finite(4), "sigma_1^7 cone bound");
    std::mt19937 rng(8);
    for (int it = 0; it < 100; ++it) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const ColoredBraid b{n, 1, std::nullopt, oracle::random_word(rng, n, static_cast<int>(rng() % 40), true)};
        const DiagonalDecomposition d = find_diagonals(b);
        t.expect(bound_F(b, d).bound == Bound::finite(static_cast<std::int64_t>(d.y)), "bound_F = y");
    }
    int specs = 0;
    while (specs < 3) {
        const int n = 2 + static_cast<int>(rng() % 3);
        InfiniteBraidSpec s{n, 1, std::nullopt, oracle::random_word(rng, n, 5, true),
                            oracle::random_word(rng, n, n + static_cast<int>(rng() % 3), true)};
        if (!is_complete(s)) continue;
        ++specs;
        std::vector<std::size_t> lengths;
        for (std::size_t l = 0; l <= 60; ++l) lengths.push_back(l);
        const CauchyReport r = cauchy_report(s, lengths);
        t.expect(r.y_nondecreasing && r.y_grows && r.rows.back().y >= 5, "Cauchy growth");
    }
    return t.outcome();
}

Outcome webs() {
    Tally t;
    t.expect(eval_closed_web({{1}, {}}, 2) == Q("1 + q^2"), "circle");
    t.expect(eval_closed_web({{2, 0}, {{1, 1}, {1, -1}}}, 2) == Q("1 + q^2"), "theta");
    for (int b = 1; b <= 6; ++b) {
        for (int N = 2; N <= 5; ++N) {
            t.expect(eval_closed_web(barbell_chain(1, b), N) == Q("1 + q^2").pow(b) * oracle::qbinom_by_division(N, 2),
                     "barbell chain b=" + std::to_string(b) + " N=" + std::to_string(N));
        }
    }
    return t.outcome();
}

Outcome sl2_cross_check() {
    Tally t;
    const std::vector<int> trefoil{1, 1, 1};
    const LaurentPoly bracket = sl2_bracket({2, 1, Level(2), trefoil}).specialize('t', -1);
    t.expect(bracket == oracle::qmono(-3) * oracle::jones_unreduced(2, trefoil), "trefoil");
    return t.outcome();
}

Outcome homfly() {
    Tally t;
    t.expect(homfly_of_word(1, {}) == AzPoly(1), "unknot");
    t.expect(homfly_of_word(2, {1, 1, 1}) == AzPoly::parse("2a^2 - a^4 + a^2z^2"), "trefoil");
    const AzPoly a = AzPoly::variable('a');
    const AzPoly a_inv = AzPoly::variable('a', -1);
    const AzPoly z = AzPoly::variable('z');
    std::mt19937 rng(21);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto word = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 8), false);
        for (std::size_t x = 0; x < word.size(); ++x) {
            auto plus = word;
            auto minus = word;
            auto zero = word;
            plus[x] = std::abs(word[x]);
            minus[x] = -std::abs(word[x]);
            zero.erase(zero.begin() + static_cast<long>(x));
            t.expect(a_inv * homfly_of_word(n, plus) - a * homfly_of_word(n, minus) == z * homfly_of_word(n, zero), "skein");
        }
        const AzPoly p = homfly_of_word(n, word);
        auto stabilized = word;
        stabilized.push_back(n);
        if (n < 4) t.expect(homfly_of_word(n + 1, stabilized) == p, "stabilization");
        auto conjugated = word;
        std::rotate(conjugated.begin(), conjugated.begin() + 1, conjugated.end());
        t.expect(homfly_of_word(n, conjugated) == p, "conjugation");
    }
    return t.outcome();
}

Outcome stable() {
    Tally t;
    for (int n = 1; n <= 4; ++n)
        for (std::int64_t y = 0; y <= 10; ++y)
            t.expect(oracle::table_as_map(an_truncated_dims(n, y, -12)) == oracle::an_brute_force(n, y, -12),
                     "brute force n=" + std::to_string(n) + " y=" + std::to_string(y));
    for (int n = 1; n <= 5; ++n)
        for (std::int64_t y = 0; y <= 2 * n; ++y)
            t.expect(oracle::table_as_map(an_truncated_dims(n, y, -12)) ==
                         oracle::table_as_map(an_truncated_dims(n + 1, y, -12)),
                     "n-stability");
    const StabilityReport r = stability_check(2, {3, 5, 7, 9});
    bool growing = r.agreement.size() == 3;
    for (std::size_t i = 1; i < r.agreement.size(); ++i) growing = growing && r.agreement[i] > r.agreement[i - 1];
    t.expect(growing, "torus agreement grows");
    return t.outcome();
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "quantum binomial suite", 1, quantum_suite},
        {2, "fork shift constants", 1, shift_constants},
        {3, "ladder twist composition and ladder slide alpha", 5, composition_identity},
        {4, "rung pulling alpha = 5i", 1, pull_rung},
        {5, "diagonal engine", 5, diagonal_engine},
        {6, "homological order bounds", 10, bounds},
        {7, "closed web evaluation", 1, webs},
        {8, "sl2 bracket against the Kauffman state sum", 1, sl2_cross_check},
        {9, "HOMFLY-PT oracle", 60, homfly},
        {10, "stable algebra and torus stabilization", 120, stable},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        failed += o.pass ? 0 : 1;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << time.str()
                  << "s, limit " << c.limit_seconds << "s; " << o.detail << ")\n";
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
