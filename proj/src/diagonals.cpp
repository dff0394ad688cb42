#include "krtl/diagonals.hpp"

#include <algorithm>

namespace krtl {

std::size_t DiagonalDecomposition::zone_for(std::size_t position, int g) const {
    std::size_t zone = 0;
    for (std::size_t d = 0; d < used_count; ++d) {
        if (diagonals[d][static_cast<std::size_t>(g - 1)] < position) ++zone;
    }
    return zone;
}

DiagonalDecomposition find_diagonals(const ColoredBraid& braid) {
    if (!braid.is_positive()) throw PreconditionError("find_diagonals requires a positive braid");
    const int n = braid.n;
    const std::vector<int>& word = braid.word;
    const std::size_t len = word.size();

    DiagonalDecomposition dec;
    dec.n = n;
    dec.length = len;

    // next_at[g][p]: first position >= p (0-based) holding generator g, or len.
    if (n >= 2) {
        std::vector<std::vector<std::size_t>> next_at(n, std::vector<std::size_t>(len + 1, len));
        for (std::size_t p = len; p-- > 0;) {
            for (int g = 1; g < n; ++g) next_at[g][p] = next_at[g][p + 1];
            next_at[word[p]][p] = p;
        }
        std::size_t start = 0;
        while (true) {
            std::vector<std::size_t> diag;
            std::size_t pos = start;
            for (int g = 1; g < n; ++g) {
                const std::size_t hit = next_at[g][std::min(pos, len)];
                if (hit >= len) break;
                diag.push_back(hit);
                pos = hit + 1;
            }
            if (diag.size() != static_cast<std::size_t>(n - 1)) break;
            // Walk back up from sigma_{n-1}.
            std::size_t back = diag.back();
            for (int g = n - 2; g >= 1; --g) {
                std::size_t p = back;
                while (p-- > 0) {
                    if (word[p] == g) break;
                }
                back = p;  // a sigma_g before `back` exists: diag[g-1] is one
            }
            std::vector<std::size_t> one_based;
            for (std::size_t p : diag) one_based.push_back(p + 1);
            dec.diagonals.push_back(std::move(one_based));
            start = back + 1;
        }
    }

    dec.y = dec.diagonals.size();
    dec.z = dec.y / static_cast<std::size_t>(n);
    dec.used_count = dec.z * static_cast<std::size_t>(n);

    std::vector<char> in_found(len + 1, 0);
    std::vector<char> in_used(len + 1, 0);
    for (std::size_t d = 0; d < dec.diagonals.size(); ++d) {
        for (std::size_t p : dec.diagonals[d]) {
            in_found[p] = 1;
            if (d < dec.used_count) in_used[p] = 1;
        }
    }
    for (std::size_t p = 1; p <= len; ++p) {
        if (!in_found[p]) dec.skipped.insert(p);
        if (!in_used[p]) dec.zone_of[p] = dec.zone_for(p, word[p - 1]);
    }
    return dec;
}

std::map<std::size_t, std::size_t> zone_census(const DiagonalDecomposition& dec) {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t z = 0; z <= dec.used_count; ++z) out[z] = 0;
    for (const auto& [position, zone] : dec.zone_of) ++out[zone];
    return out;
}

}  // namespace krtl
