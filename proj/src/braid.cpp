#include "krtl/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace krtl {

std::string level_to_string(const Level& level) { return level ? std::to_string(*level) : "inf"; }

namespace {

void check_common(int n, int m, const Level& N) {
    if (n < 1) throw PreconditionError("strand count n must be >= 1");
    if (m < 1) throw PreconditionError("color m must be >= 1");
    if (N) {
        if (*N < 1) throw PreconditionError("level N must be >= 1");
        if (m > *N) {
            throw PreconditionError("color m=" + std::to_string(m) + " exceeds level N=" + std::to_string(*N));
        }
    }
}

void check_word(const std::vector<int>& word, int n, const char* what) {
    for (int g : word) {
        if (g == 0 || std::abs(g) > n - 1) {
            throw PreconditionError(std::string(what) + ": generator " + std::to_string(g) +
                                    " out of range for n=" + std::to_string(n));
        }
    }
}

bool all_positive(const std::vector<int>& word) {
    return std::all_of(word.begin(), word.end(), [](int g) { return g > 0; });
}

std::string join(const std::vector<int>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

std::string subscript(std::size_t value) {
    static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(value)) out += digits[c - '0'];
    return out;
}

// Line-oriented tokenizer that tracks 1-based positions for error messages.
class Reader {
public:
    explicit Reader(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            lines_.push_back(line);
            start = end + 1;
        }
    }

    std::size_t size() const { return lines_.size(); }
    std::string_view line(std::size_t i) const { return lines_[i]; }

    static bool blank(std::string_view line) {
        return line.find_first_not_of(" \t") == std::string_view::npos;
    }

private:
    std::vector<std::string_view> lines_;
};

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokens_of(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

int to_int(std::string_view text, std::size_t line, std::size_t column) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("expected integer, got '" + std::string(text) + "'", line, column);
    }
    return value;
}

std::vector<int> read_word(const std::vector<Token>& tokens, std::size_t line) {
    std::vector<int> out;
    for (const Token& tok : tokens) {
        const int g = to_int(tok.text, line, tok.column);
        if (g == 0) throw ParseError("generator index 0 is not allowed", line, tok.column);
        out.push_back(g);
    }
    return out;
}

}  // namespace

bool ColoredBraid::is_positive() const { return all_positive(word); }

int ColoredBraid::writhe() const {
    int w = 0;
    for (int g : word) w += g > 0 ? 1 : -1;
    return w;
}

void ColoredBraid::validate() const {
    check_common(n, m, N);
    check_word(word, n, "word");
}

bool InfiniteBraidSpec::is_positive() const {
    return all_positive(prefix) && all_positive(tail) && all_positive(back_prefix) && all_positive(back_tail);
}

void InfiniteBraidSpec::validate() const {
    check_common(n, m, N);
    check_word(prefix, n, "prefix");
    check_word(tail, n, "tail");
    if (tail.empty() && n > 1) throw PreconditionError("tail must be nonempty");
    if (!all_positive(tail)) throw PreconditionError("tail must contain only positive crossings");
    if (bi_infinite) {
        check_word(back_prefix, n, "back_prefix");
        check_word(back_tail, n, "back_tail");
        if (back_tail.empty() && n > 1) throw PreconditionError("back_tail must be nonempty");
        if (!all_positive(back_tail)) throw PreconditionError("back_tail must contain only positive crossings");
    }
}

BraidFile parse_braid_file(std::string_view text) {
    Reader reader(text);
    std::size_t i = 0;
    while (i < reader.size() && Reader::blank(reader.line(i))) ++i;
    if (i == reader.size()) throw ParseError("missing header line", 1, 1);

    BraidFile file;
    ColoredBraid& braid = file.braid;
    bool seen_n = false;
    bool seen_m = false;
    bool seen_N = false;
    const std::size_t header_line = i + 1;
    for (const Token& tok : tokens_of(reader.line(i))) {
        const std::size_t eq = tok.text.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected key=value in header", header_line, tok.column);
        }
        std::string_view key = tok.text.substr(0, eq);
        std::string_view value = tok.text.substr(eq + 1);
        const std::size_t value_col = tok.column + eq + 1;
        if (key == "n") {
            braid.n = to_int(value, header_line, value_col);
            seen_n = true;
        } else if (key == "m") {
            braid.m = to_int(value, header_line, value_col);
            seen_m = true;
        } else if (key == "N") {
            if (value == "inf" || value == "infinity" || value == "∞") {
                braid.N = std::nullopt;
            } else {
                braid.N = to_int(value, header_line, value_col);
            }
            seen_N = true;
        } else {
            throw ParseError("unknown header key '" + std::string(key) + "'", header_line, tok.column);
        }
    }
    if (!seen_n || !seen_m || !seen_N) throw ParseError("header must set n, m and N", header_line, 1);
    ++i;

    InfiniteBraidSpec spec;
    bool has_tail = false;
    for (; i < reader.size(); ++i) {
        std::string_view line = reader.line(i);
        if (Reader::blank(line)) continue;
        std::vector<Token> tokens = tokens_of(line);
        const std::string_view first = tokens.front().text;
        const std::size_t eq = first.find('=');
        if (eq == std::string_view::npos) {
            std::vector<int> part = read_word(tokens, i + 1);
            braid.word.insert(braid.word.end(), part.begin(), part.end());
            continue;
        }
        std::string_view key = first.substr(0, eq);
        std::vector<Token> rest = tokens;
        rest.front().text = first.substr(eq + 1);
        rest.front().column += eq + 1;
        if (rest.front().text.empty()) rest.erase(rest.begin());
        std::vector<int> part = read_word(rest, i + 1);
        if (key == "tail") {
            spec.tail = part;
            has_tail = true;
        } else if (key == "back_prefix") {
            spec.back_prefix = part;
            spec.bi_infinite = true;
        } else if (key == "back_tail") {
            spec.back_tail = part;
            spec.bi_infinite = true;
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", i + 1, tokens.front().column);
        }
    }

    braid.validate();
    if (braid.N && braid.m == *braid.N) {
        file.warnings.push_back("m = N = " + std::to_string(braid.m) + " is outside 1..N-1; accepted");
    }
    if (spec.bi_infinite && !has_tail) throw ParseError("backward data given without tail=", 1, 1);
    if (has_tail) {
        spec.n = braid.n;
        spec.m = braid.m;
        spec.N = braid.N;
        spec.prefix = braid.word;
        spec.validate();
        file.spec = spec;
    }
    return file;
}

ColoredBraid parse_braid(std::string_view text, std::vector<std::string>* warnings) {
    BraidFile file = parse_braid_file(text);
    if (file.spec) throw PreconditionError("expected a finite braid, found tail=");
    if (warnings) *warnings = file.warnings;
    return file.braid;
}

InfiniteBraidSpec parse_spec(std::string_view text, std::vector<std::string>* warnings) {
    BraidFile file = parse_braid_file(text);
    if (!file.spec) throw PreconditionError("expected an infinite spec with a tail= line");
    if (warnings) *warnings = file.warnings;
    return *file.spec;
}

std::string serialize_braid(const ColoredBraid& braid) {
    std::ostringstream out;
    out << "n=" << braid.n << " m=" << braid.m << " N=" << level_to_string(braid.N) << '\n';
    out << join(braid.word) << '\n';
    return out.str();
}

std::string serialize_spec(const InfiniteBraidSpec& spec) {
    std::ostringstream out;
    out << "n=" << spec.n << " m=" << spec.m << " N=" << level_to_string(spec.N) << '\n';
    out << "tail=" << join(spec.tail) << '\n';
    if (spec.bi_infinite) {
        out << "back_prefix=" << join(spec.back_prefix) << '\n';
        out << "back_tail=" << join(spec.back_tail) << '\n';
    }
    out << join(spec.prefix) << '\n';
    return out.str();
}

ColoredBraid partial_braid(const InfiniteBraidSpec& spec, std::size_t length) {
    ColoredBraid out{spec.n, spec.m, spec.N, {}};
    out.word.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        if (i < spec.prefix.size()) {
            out.word.push_back(spec.prefix[i]);
        } else {
            if (spec.tail.empty()) break;
            out.word.push_back(spec.tail[(i - spec.prefix.size()) % spec.tail.size()]);
        }
    }
    return out;
}

bool is_complete(const InfiniteBraidSpec& spec) {
    return gamma_sets(spec).gamma.size() == static_cast<std::size_t>(std::max(spec.n - 1, 0));
}

GammaSets gamma_sets(const InfiniteBraidSpec& spec) {
    GammaSets out;
    for (int g : spec.tail) out.gamma.insert(std::abs(g));
    for (int i = 0; i <= spec.n; ++i) {
        if (!out.gamma.count(i)) out.complement.insert(i);
    }
    return out;
}

StructureReport decompose_noncomplete(const InfiniteBraidSpec& spec) {
    if (!spec.is_positive()) throw PreconditionError("decompose_noncomplete requires a positive spec");
    const GammaSets sets = gamma_sets(spec);
    StructureReport report;
    for (std::size_t p = 0; p < spec.prefix.size(); ++p) {
        if (sets.complement.count(spec.prefix[p])) report.r = p + 1;
    }
    int previous = 0;
    for (int i : sets.complement) {
        if (i > previous) report.blocks.push_back(i - previous);
        previous = i;
    }
    std::string text;
    for (std::size_t b = 0; b < report.blocks.size(); ++b) {
        if (b) text += " ⊔ ";
        text += "P" + subscript(static_cast<std::size_t>(report.blocks[b]));
    }
    text += " ⊗ C(B" + subscript(report.r) + ")";
    report.rendering = text;
    return report;
}

GradingShift negative_shift(const InfiniteBraidSpec& spec) {
    if (!is_complete(spec)) throw PreconditionError("negative_shift requires a complete spec");
    if (!all_positive(spec.tail)) throw PreconditionError("tail must be positive");
    std::int64_t negatives = 0;
    for (int g : spec.prefix) negatives += g < 0 ? 1 : 0;
    return GradingShift::tq(detail::checked_mul(negatives, spec.m));
}

}  // namespace krtl
