#include "krtl/web.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "krtl/census.hpp"

namespace krtl {

namespace {

constexpr std::size_t kMemoBudget = 4'000'000;

LaurentPoly lowest_to_one(const LaurentPoly& value) {
    auto range = value.degree_range('q');
    if (!range) return value;
    return value * q_power(-range->first);
}

LaurentPoly finish(const LaurentPoly& balanced, Normalization norm) {
    return norm == Normalization::Balanced ? balanced : lowest_to_one(balanced);
}

void apply_rung(std::vector<int>& labels, const Rung& rung) {
    labels[rung.column - 1] -= rung.amount;
    labels[rung.column] += rung.amount;
}

bool in_range(const std::vector<int>& labels, int N) {
    return std::all_of(labels.begin(), labels.end(), [N](int x) { return x >= 0 && x <= N; });
}

class AnnularEvaluator {
public:
    explicit AnnularEvaluator(int N) : N_(N) {}

    LaurentPoly eval(std::vector<int> labels, std::vector<Rung> seq) {
        LaurentPoly factor(1);
        if (!simplify(labels, seq, factor)) return {};
        if (seq.empty()) {
            LaurentPoly out(1);
            for (int x : labels) out *= quantum_binomial_balanced(N_, x);
            return factor * out;
        }
        std::vector<int> key = labels;
        key.push_back(-1);
        for (const Rung& r : seq) {
            key.push_back(r.column);
            key.push_back(r.amount);
        }
        auto it = memo_.find(key);
        if (it != memo_.end()) return factor * it->second;
        if (memo_.size() > kMemoBudget) throw Irreducible("web evaluation exceeded its memo budget");

        LaurentPoly value = reduce(labels, seq);
        memo_.emplace(std::move(key), value);
        return factor * value;
    }

private:
    // Drops empty rungs and merges neighbours that move color the same way on
    // the same column (digon relation). Returns false for a zero web.
    bool simplify(std::vector<int>& labels, std::vector<Rung>& seq, LaurentPoly& factor) const {
        if (!in_range(labels, N_)) return false;
        std::vector<int> weight = labels;
        for (const Rung& r : seq) {
            apply_rung(weight, r);
            if (!in_range(weight, N_)) return false;
        }
        std::vector<Rung> out;
        out.reserve(seq.size());
        for (const Rung& r : seq) {
            if (r.amount == 0) continue;
            if (!out.empty() && out.back().column == r.column && (out.back().amount > 0) == (r.amount > 0)) {
                const int x = std::abs(out.back().amount);
                const int y = std::abs(r.amount);
                factor *= quantum_binomial_balanced(x + y, x);
                out.back().amount += r.amount;
                continue;
            }
            out.push_back(r);
        }
        seq = std::move(out);
        return true;
    }

    LaurentPoly reduce(const std::vector<int>& labels, const std::vector<Rung>& seq) {
        std::vector<int> weight = labels;
        for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
            const Rung& right = seq[p];
            const Rung& left = seq[p + 1];
            if (right.amount > 0 && left.amount < 0) {
                if (right.column != left.column) {
                    std::vector<Rung> swapped = seq;
                    std::swap(swapped[p], swapped[p + 1]);
                    return eval(labels, std::move(swapped));
                }
                // Square switch: moving b right then a left equals
                // sum_j [a - b + w, j] (move a-j left, then b-j right),
                // w = label difference across the column before the pair.
                const int c = right.column;
                const int b = right.amount;
                const int a = -left.amount;
                const std::int64_t w = weight[c - 1] - weight[c];
                LaurentPoly total;
                for (int j = 0; j <= std::min(a, b); ++j) {
                    LaurentPoly coefficient = quantum_binomial_general(a - b + w, j, Normalization::Balanced);
                    if (coefficient.is_zero()) continue;
                    std::vector<Rung> next = seq;
                    next[p] = {c, -(a - j)};
                    next[p + 1] = {c, b - j};
                    total += coefficient * eval(labels, std::move(next));
                }
                return total;
            }
            apply_rung(weight, right);
        }
        // Sorted: every leftward move precedes every rightward one. Rotate the
        // leftward block to the end of the cyclic word.
        std::size_t split = 0;
        std::vector<int> rotated = labels;
        while (split < seq.size() && seq[split].amount < 0) apply_rung(rotated, seq[split++]);
        if (split == 0 || split == seq.size()) {
            throw PreconditionError("rung word does not close up");
        }
        std::vector<Rung> next(seq.begin() + static_cast<std::ptrdiff_t>(split), seq.end());
        next.insert(next.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(split));
        return eval(std::move(rotated), std::move(next));
    }

    int N_;
    std::map<std::vector<int>, LaurentPoly> memo_;
};

std::string trim(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const std::size_t last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

int parse_int(const std::string& text, std::size_t column) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + text + "'", 1, column);
    }
}

}  // namespace

void validate_closed(const AnnularWeb& web) {
    const int n = web.strands();
    if (n < 1) throw PreconditionError("a web needs at least one strand");
    for (int x : web.labels) {
        if (x < 0) throw PreconditionError("negative strand label");
    }
    std::vector<long long> net(static_cast<std::size_t>(n), 0);
    for (const Rung& r : web.rungs) {
        if (r.column < 1 || r.column > n - 1) {
            throw PreconditionError("rung column " + std::to_string(r.column) + " out of range for n=" +
                                    std::to_string(n));
        }
        net[static_cast<std::size_t>(r.column - 1)] += r.amount;
    }
    for (long long x : net) {
        if (x != 0) throw PreconditionError("rung word does not close up");
    }
}

ParsedWeb parse_annular_web(std::string_view text) {
    ParsedWeb out;
    const std::size_t rung_at = text.find("rungs=");
    std::string_view head = text.substr(0, rung_at);
    int n = -1;
    int m = -1;
    bool have_N = false;
    std::vector<int> labels;
    std::size_t pos = 0;
    while (pos < head.size()) {
        while (pos < head.size() && (head[pos] == ' ' || head[pos] == '\t' || head[pos] == '\n')) ++pos;
        const std::size_t start = pos;
        while (pos < head.size() && head[pos] != ' ' && head[pos] != '\t' && head[pos] != '\n') ++pos;
        if (pos == start) break;
        const std::string token(head.substr(start, pos - start));
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", 1, start + 1);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "n") {
            n = parse_int(value, start + eq + 2);
        } else if (key == "m") {
            m = parse_int(value, start + eq + 2);
        } else if (key == "N") {
            out.N = parse_int(value, start + eq + 2);
            have_N = true;
        } else if (key == "labels") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) labels.push_back(parse_int(trim(item), start + eq + 2));
        } else {
            throw ParseError("unknown key '" + key + "'", 1, start + 1);
        }
    }
    if (n < 1 || !have_N || (m < 1 && labels.empty())) throw ParseError("web header needs n, m (or labels) and N", 1, 1);
    if (out.N < 1) throw ParseError("N must be a positive integer", 1, 1);
    if (labels.empty()) labels.assign(static_cast<std::size_t>(n), m);
    if (static_cast<int>(labels.size()) != n) throw ParseError("labels must list n values", 1, 1);
    out.web.labels = labels;

    if (rung_at != std::string_view::npos) {
        std::string body = trim(text.substr(rung_at + 6));
        if (body.empty() || body.front() != '(' || body.back() != ')') {
            throw ParseError("rungs must be written as (col:label,...)", 1, rung_at + 7);
        }
        body = body.substr(1, body.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            const std::size_t colon = item.find(':');
            if (colon == std::string::npos) throw ParseError("rung '" + item + "' lacks ':'", 1, rung_at + 7);
            out.web.rungs.push_back({parse_int(trim(item.substr(0, colon)), rung_at + 7),
                                     parse_int(trim(item.substr(colon + 1)), rung_at + 7)});
        }
    }
    validate_closed(out.web);
    return out;
}

std::string format_annular_web(const AnnularWeb& web, int N) {
    std::ostringstream out;
    out << "n=" << web.strands() << " labels=";
    for (std::size_t i = 0; i < web.labels.size(); ++i) out << (i ? "," : "") << web.labels[i];
    out << " N=" << N << " rungs=(";
    for (std::size_t i = 0; i < web.rungs.size(); ++i) {
        out << (i ? "," : "") << web.rungs[i].column << ':' << web.rungs[i].amount;
    }
    out << ')';
    return out.str();
}

LaurentPoly eval_closed_web(const AnnularWeb& web, int N, Normalization norm) {
    if (N < 1) throw PreconditionError("eval_closed_web needs a finite level N >= 1");
    validate_closed(web);
    AnnularEvaluator evaluator(N);
    return finish(evaluator.eval(web.labels, web.rungs), norm);
}

AnnularWeb resolution_closure(const ColoredBraid& braid, const std::vector<int>& rungs) {
    if (rungs.size() != braid.word.size()) throw PreconditionError("one rung per crossing expected");
    AnnularWeb web;
    web.labels.assign(static_cast<std::size_t>(braid.n), braid.m);
    for (std::size_t x = 0; x < rungs.size(); ++x) {
        if (rungs[x] == 0) continue;
        const int g = std::abs(braid.word[x]);
        web.rungs.push_back({g, rungs[x]});
        web.rungs.push_back({g, -rungs[x]});
    }
    return web;
}

AnnularWeb barbell_chain(int m, int b) {
    AnnularWeb web{{m, m}, {}};
    for (int i = 0; i < b; ++i) {
        web.rungs.push_back({1, m});
        web.rungs.push_back({1, -m});
    }
    return web;
}

LaurentPoly sl2_bracket(const ColoredBraid& braid, Normalization norm, unsigned jobs) {
    braid.validate();
    if (braid.m != 1 || braid.N != Level(2)) throw PreconditionError("sl2_bracket needs m=1 and N=2");
    const std::size_t len = braid.word.size();
    const Integer count = Integer(1) << len;
    const Integer cap = default_resolution_cap();
    if (count > cap) throw CapExceeded("resolution count", count.str(), cap.str());
    const unsigned long long total = static_cast<unsigned long long>(count);

    auto sum_range = [&](unsigned long long lo, unsigned long long hi) {
        AnnularEvaluator evaluator(2);
        LaurentPoly out;
        std::vector<int> rungs(len);
        for (unsigned long long mask = lo; mask < hi; ++mask) {
            GradingShift shift;
            for (std::size_t x = 0; x < len; ++x) {
                rungs[x] = (mask >> x) & 1ULL ? 1 : 0;
                const bool positive = braid.word[x] > 0;
                // positive: rung 1 sits at tq; negative: rung 0 does
                if ((rungs[x] == 1) == positive) shift = shift * GradingShift::tq(1);
            }
            const AnnularWeb web = resolution_closure(braid, rungs);
            out += shift.as_poly() * finish(evaluator.eval(web.labels, web.rungs), norm);
        }
        return out;
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, 64));
    if (jobs == 1 || total < 64) return sum_range(0, total);
    std::vector<LaurentPoly> parts(jobs);
    std::vector<std::thread> workers;
    const unsigned long long chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const unsigned long long lo = std::min(total, w * chunk);
        const unsigned long long hi = std::min(total, lo + chunk);
        workers.emplace_back([&, w, lo, hi] { parts[w] = sum_range(lo, hi); });
    }
    for (std::thread& t : workers) t.join();
    LaurentPoly out;
    for (const LaurentPoly& part : parts) out += part;
    return out;
}

// ---------------------------------------------------------------------------
// Explicit graphs

namespace {

struct Incidence {
    std::vector<std::vector<std::size_t>> in;
    std::vector<std::vector<std::size_t>> out;
};

Incidence incidence(const WebGraph& web) {
    Incidence inc;
    inc.in.resize(static_cast<std::size_t>(web.vertex_count));
    inc.out.resize(static_cast<std::size_t>(web.vertex_count));
    for (std::size_t e = 0; e < web.edges.size(); ++e) {
        inc.out[static_cast<std::size_t>(web.edges[e].from)].push_back(e);
        inc.in[static_cast<std::size_t>(web.edges[e].to)].push_back(e);
    }
    return inc;
}

// Smooths one arity-2 vertex; returns false when none is left.
bool smooth_once(WebGraph& web) {
    const Incidence inc = incidence(web);
    for (int v = 0; v < web.vertex_count; ++v) {
        const auto& in = inc.in[static_cast<std::size_t>(v)];
        const auto& out = inc.out[static_cast<std::size_t>(v)];
        if (in.size() != 1 || out.size() != 1 || in[0] == out[0]) continue;
        WebGraph::Edge merged{web.edges[in[0]].from, web.edges[out[0]].to, web.edges[in[0]].label};
        std::vector<WebGraph::Edge> kept;
        for (std::size_t e = 0; e < web.edges.size(); ++e) {
            if (e != in[0] && e != out[0]) kept.push_back(web.edges[e]);
        }
        kept.push_back(merged);
        web.edges = std::move(kept);
        return true;
    }
    return false;
}

// Collapses one digon: a split whose two outputs both enter the same merge.
bool collapse_digon(WebGraph& web, LaurentPoly& factor) {
    const Incidence inc = incidence(web);
    for (int u = 0; u < web.vertex_count; ++u) {
        const auto& out = inc.out[static_cast<std::size_t>(u)];
        if (out.size() != 2) continue;
        const WebGraph::Edge e1 = web.edges[out[0]];
        const WebGraph::Edge e2 = web.edges[out[1]];
        if (e1.to != e2.to || e1.to == u) continue;
        if (inc.in[static_cast<std::size_t>(e1.to)].size() != 2) continue;
        factor *= quantum_binomial_balanced(e1.label + e2.label, e1.label);
        std::vector<WebGraph::Edge> kept;
        for (std::size_t e = 0; e < web.edges.size(); ++e) {
            if (e != out[0] && e != out[1]) kept.push_back(web.edges[e]);
        }
        kept.push_back({u, e1.to, e1.label + e2.label});
        web.edges = std::move(kept);
        return true;
    }
    return false;
}

}  // namespace

std::vector<int> WebGraph::circle_labels() const {
    const Incidence inc = incidence(*this);
    std::vector<int> out;
    for (int v = 0; v < vertex_count; ++v) {
        const auto& in = inc.in[static_cast<std::size_t>(v)];
        const auto& o = inc.out[static_cast<std::size_t>(v)];
        if (in.size() == 1 && o.size() == 1 && in[0] == o[0]) out.push_back(edges[in[0]].label);
    }
    return out;
}

std::size_t WebGraph::live_vertex_count() const {
    const Incidence inc = incidence(*this);
    std::size_t count = 0;
    for (int v = 0; v < vertex_count; ++v) {
        if (!inc.in[static_cast<std::size_t>(v)].empty() || !inc.out[static_cast<std::size_t>(v)].empty()) ++count;
    }
    return count;
}

WebGraph to_graph(const AnnularWeb& web) {
    validate_closed(web);
    WebGraph graph;
    const int n = web.strands();
    // For each strand: first vertex, last vertex and the label leaving it.
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    std::vector<int> labels = web.labels;
    auto attach = [&](int strand, int vertex) {
        const auto s = static_cast<std::size_t>(strand);
        if (last[s] >= 0) {
            graph.edges.push_back({last[s], vertex, labels[s]});
        } else {
            first[s] = vertex;
        }
        last[s] = vertex;
    };
    for (const Rung& r : web.rungs) {
        const int left = r.column - 1;
        const int u = graph.vertex_count++;
        const int v = graph.vertex_count++;
        attach(left, u);
        attach(left + 1, v);
        if (r.amount >= 0) {
            graph.edges.push_back({u, v, r.amount});
        } else {
            graph.edges.push_back({v, u, -r.amount});
        }
        labels[static_cast<std::size_t>(left)] -= r.amount;
        labels[static_cast<std::size_t>(left + 1)] += r.amount;
    }
    for (int s = 0; s < n; ++s) {
        const auto i = static_cast<std::size_t>(s);
        if (last[i] < 0) {
            const int v = graph.vertex_count++;
            graph.edges.push_back({v, v, labels[i]});
        } else {
            graph.edges.push_back({last[i], first[i], labels[i]});
        }
    }
    return graph;
}

WebGraph normalize_zero_edges(const WebGraph& web) {
    WebGraph out = web;
    out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(), [](const WebGraph::Edge& e) { return e.label == 0; }),
                    out.edges.end());
    while (smooth_once(out)) {
    }
    return out;
}

LaurentPoly eval_web_graph(const WebGraph& web, int N, Normalization norm) {
    if (N < 1) throw PreconditionError("eval_web_graph needs a finite level N >= 1");
    for (const WebGraph::Edge& e : web.edges) {
        if (e.label < 0) throw PreconditionError("negative edge label");
        if (e.label > N) return {};
    }
    WebGraph current = normalize_zero_edges(web);
    LaurentPoly factor(1);
    while (collapse_digon(current, factor)) {
        while (smooth_once(current)) {
        }
    }
    const std::vector<int> circles = current.circle_labels();
    if (circles.size() != current.live_vertex_count()) {
        throw Irreducible("no digon left and the web is not a union of circles");
    }
    for (int label : circles) factor *= quantum_binomial_balanced(N, label);
    return finish(factor, norm);
}

}  // namespace krtl
