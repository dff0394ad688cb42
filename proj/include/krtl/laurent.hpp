/**
 * @file laurent.hpp
 * @brief Exact sparse multivariate Laurent polynomials.
 *
 * A polynomial is a finite map from an exponent vector to a nonzero integer
 * coefficient. Zero coefficients are never stored, so two equal polynomials
 * have identical term maps. Coefficients are arbitrary precision; exponents
 * are 64-bit and overflow raises OverflowError.
 *
 * The variable set is a compile-time traits type giving the variable names
 * and the lexicographic order used for iteration and serialization:
 *
 *   TqaVars : t (homological), q (quantum), a (Hochschild); terms ordered by
 *             (t, a, q) ascending
 *   AzVars  : a, z for HOMFLY-PT polynomials; terms ordered by (z, a)
 *
 * Text form: terms joined by " + " / " - ", each term a coefficient followed
 * by variables in name order with "^e" for e != 1, for example
 * "2a^2 - a^4 + a^2z^2" or "1 + tq". The parser also accepts '*' between
 * factors and arbitrary whitespace.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "krtl/errors.hpp"

namespace krtl {

using Integer = boost::multiprecision::cpp_int;

struct TqaVars {
    static constexpr std::size_t kArity = 3;
    static constexpr std::array<char, kArity> kNames{'t', 'q', 'a'};
    /// Significance order for sorting: t, then a, then q.
    static constexpr std::array<std::size_t, kArity> kOrder{0, 2, 1};
};

struct AzVars {
    static constexpr std::size_t kArity = 2;
    static constexpr std::array<char, kArity> kNames{'a', 'z'};
    static constexpr std::array<std::size_t, kArity> kOrder{1, 0};
};

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) throw OverflowError("exponent overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("exponent overflow");
    return out;
}

}  // namespace detail

template <class Vars>
class Laurent {
public:
    static constexpr std::size_t kArity = Vars::kArity;
    using Exponents = std::array<std::int64_t, kArity>;

    struct ExponentOrder {
        bool operator()(const Exponents& x, const Exponents& y) const {
            for (std::size_t idx : Vars::kOrder) {
                if (x[idx] != y[idx]) return x[idx] < y[idx];
            }
            return false;
        }
    };

    using TermMap = std::map<Exponents, Integer, ExponentOrder>;

    Laurent() = default;

    /// Constant polynomial.
    Laurent(long long constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_.emplace(Exponents{}, Integer(constant));
    }

    static Laurent monomial(const Exponents& exps, const Integer& coefficient = 1) {
        Laurent out;
        if (coefficient != 0) out.terms_.emplace(exps, coefficient);
        return out;
    }

    /// The single variable with the given name raised to `power`.
    static Laurent variable(char name, std::int64_t power = 1) {
        Exponents exps{};
        exps[index_of(name)] = power;
        return monomial(exps);
    }

    static std::size_t index_of(char name) {
        for (std::size_t i = 0; i < kArity; ++i) {
            if (Vars::kNames[i] == name) return i;
        }
        throw PreconditionError(std::string("unknown variable '") + name + "'");
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Integer coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Exponents& exps, const Integer& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.emplace(exps, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& other) {
        for (const auto& [exps, c] : other.terms_) add_term(exps, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& other) {
        for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
        return *this;
    }

    Laurent& operator*=(const Laurent& other) {
        *this = *this * other;
        return *this;
    }

    friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
    friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }

    friend Laurent operator-(const Laurent& x) {
        Laurent out;
        for (const auto& [exps, c] : x.terms_) out.terms_.emplace(exps, -c);
        return out;
    }

    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        Laurent out;
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                Exponents sum{};
                for (std::size_t i = 0; i < kArity; ++i) sum[i] = detail::checked_add(ex[i], ey[i]);
                out.add_term(sum, cx * cy);
            }
        }
        return out;
    }

    friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }

    /// Multiplication by the monomial with exponents `shift`.
    Laurent shifted(const Exponents& shift) const {
        Laurent out;
        for (const auto& [exps, c] : terms_) {
            Exponents moved{};
            for (std::size_t i = 0; i < kArity; ++i) moved[i] = detail::checked_add(exps[i], shift[i]);
            out.terms_.emplace(moved, c);
        }
        return out;
    }

    Laurent pow(unsigned exponent) const {
        Laurent out(1);
        for (unsigned i = 0; i < exponent; ++i) out *= *this;
        return out;
    }

    /// Substitutes var -> value where value is +1 or -1 (so the result stays a
    /// Laurent polynomial with integer coefficients).
    Laurent specialize(char name, int value) const {
        if (value != 1 && value != -1) throw PreconditionError("specialize supports only +1 and -1");
        const std::size_t idx = index_of(name);
        Laurent out;
        for (const auto& [exps, c] : terms_) {
            Exponents reduced = exps;
            reduced[idx] = 0;
            const bool flip = value == -1 && (exps[idx] % 2 != 0);
            out.add_term(reduced, flip ? Integer(-c) : c);
        }
        return out;
    }

    /// Smallest and largest exponent of `name` over all terms; nullopt when zero.
    std::optional<std::pair<std::int64_t, std::int64_t>> degree_range(char name) const {
        if (terms_.empty()) return std::nullopt;
        const std::size_t idx = index_of(name);
        std::int64_t lo = terms_.begin()->first[idx];
        std::int64_t hi = lo;
        for (const auto& [exps, c] : terms_) {
            lo = std::min(lo, exps[idx]);
            hi = std::max(hi, exps[idx]);
        }
        return std::pair{lo, hi};
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [exps, c] : terms_) {
            Integer magnitude = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            const std::string vars = monomial_string(exps);
            if (vars.empty()) {
                out += magnitude.str();
            } else {
                if (magnitude != 1) out += magnitude.str();
                out += vars;
            }
        }
        return out;
    }

    /// Variables part of a term ("" for the constant monomial).
    static std::string monomial_string(const Exponents& exps) {
        std::string out;
        for (std::size_t i = 0; i < kArity; ++i) {
            if (exps[i] == 0) continue;
            out += Vars::kNames[i];
            if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
        }
        return out;
    }

    static Laurent parse(std::string_view text);

private:
    TermMap terms_;
};

template <class Vars>
Laurent<Vars> Laurent<Vars>::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& message) -> ParseError {
        return ParseError(message, 1, pos + 1);
    };
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    };
    auto is_digit = [&](std::size_t p) { return p < text.size() && text[p] >= '0' && text[p] <= '9'; };
    auto read_int = [&]() -> std::int64_t {
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (!is_digit(pos)) throw fail("expected integer");
        std::int64_t value = 0;
        while (is_digit(pos)) {
            value = detail::checked_add(detail::checked_mul(value, 10), text[pos] - '0');
            ++pos;
        }
        return negative ? -value : value;
    };

    Laurent out;
    skip_space();
    if (text.substr(pos) == "0") return out;
    bool expect_term = true;
    int sign = 1;
    while (true) {
        skip_space();
        if (pos >= text.size()) {
            if (expect_term) throw fail("expected term");
            break;
        }
        if (!expect_term) {
            if (text[pos] == '+') {
                sign = 1;
            } else if (text[pos] == '-') {
                sign = -1;
            } else {
                throw fail(std::string("unexpected '") + text[pos] + "'");
            }
            ++pos;
            expect_term = true;
            continue;
        }
        if (text[pos] == '-') {
            sign = -sign;
            ++pos;
            skip_space();
        }
        Integer coefficient = 1;
        bool have_factor = false;
        if (is_digit(pos)) {
            std::size_t start = pos;
            while (is_digit(pos)) ++pos;
            coefficient = Integer(std::string(text.substr(start, pos - start)));
            have_factor = true;
        }
        Exponents exps{};
        while (true) {
            skip_space();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_space();
            }
            if (pos >= text.size()) break;
            const char ch = text[pos];
            bool known = false;
            for (char name : Vars::kNames) known = known || name == ch;
            if (!known) break;
            ++pos;
            std::int64_t power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                power = read_int();
            }
            const std::size_t idx = index_of(ch);
            exps[idx] = detail::checked_add(exps[idx], power);
            have_factor = true;
        }
        if (!have_factor) throw fail("expected coefficient or variable");
        out.add_term(exps, sign * coefficient);
        sign = 1;
        expect_term = false;
    }
    return out;
}

using LaurentPoly = Laurent<TqaVars>;
using AzPoly = Laurent<AzVars>;

/// A monomial t^t q^q a^a; composition adds exponents.
struct GradingShift {
    std::int64_t t = 0;
    std::int64_t q = 0;
    std::int64_t a = 0;

    static GradingShift identity() { return {}; }
    /// (tq)^e
    static GradingShift tq(std::int64_t e) { return {e, e, 0}; }

    bool is_identity() const { return t == 0 && q == 0 && a == 0; }

    LaurentPoly as_poly() const { return LaurentPoly::monomial({t, q, a}); }

    /// "1" for the identity, otherwise e.g. "t^2q^8" or "t^-1q^-2".
    std::string to_string() const {
        const std::string body = LaurentPoly::monomial_string({t, q, a});
        return body.empty() ? "1" : body;
    }

    friend GradingShift operator*(const GradingShift& x, const GradingShift& y) {
        return {detail::checked_add(x.t, y.t), detail::checked_add(x.q, y.q), detail::checked_add(x.a, y.a)};
    }
    friend bool operator==(const GradingShift&, const GradingShift&) = default;
};

}  // namespace krtl
