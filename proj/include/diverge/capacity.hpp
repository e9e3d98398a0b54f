#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clique.hpp"
#include "errors.hpp"
#include "graphs.hpp"

namespace diverge {

/// A permutation of [n], stored in one-line notation.
class FinitePermutation {
public:
    explicit FinitePermutation(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
        std::vector<bool> seen(entries_.size() + 1, false);
        for (auto e : entries_) {
            if (e < 1 || e > entries_.size() || seen[e])
                throw PreconditionError("not a permutation of [" + std::to_string(entries_.size()) + "]");
            seen[e] = true;
        }
    }

    static FinitePermutation identity(std::size_t n) {
        std::vector<std::uint32_t> e(n);
        std::iota(e.begin(), e.end(), 1u);
        return FinitePermutation(std::move(e));
    }

    /// "2413" for n <= 9; comma-separated otherwise.
    static FinitePermutation parse(const std::string& s) {
        std::vector<std::uint32_t> e;
        if (s.find(',') == std::string::npos) {
            for (char ch : s) {
                if (ch < '1' || ch > '9') throw ParseError("bad permutation digit in \"" + s + "\"");
                e.push_back(static_cast<std::uint32_t>(ch - '0'));
            }
        } else {
            std::size_t start = 0;
            while (start <= s.size()) {
                const auto end = std::min(s.find(',', start), s.size());
                try {
                    e.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(start, end - start))));
                } catch (const std::logic_error&) {
                    throw ParseError("bad permutation entry in \"" + s + "\"");
                }
                start = end + 1;
            }
        }
        try {
            return FinitePermutation(std::move(e));
        } catch (const PreconditionError& err) {
            throw ParseError(err.what());
        }
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    std::uint32_t operator[](std::size_t k) const { return entries_[k]; }

    std::string one_line() const {
        std::string s;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (entries_.size() > 9 && k) s += ',';
            s += std::to_string(entries_[k]);
        }
        return s;
    }

    auto operator<=>(const FinitePermutation&) const = default;

private:
    std::vector<std::uint32_t> entries_;
};

/// Some position t has p(t) ~ r(t) in g.
inline bool g_different(const FinitePermutation& p, const FinitePermutation& r, const GraphSpec& g) {
    if (p.size() != r.size()) throw PreconditionError("g_different: length mismatch");
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (adjacent(g, p[t], r[t])) return true;
    }
    return false;
}

inline constexpr std::size_t default_capacity_limit = 6;

/// For L(k): if |a - b| == k then floor((a-1)/k) and floor((b-1)/k) have
/// opposite parity, so L(k)-different permutations have different parity
/// patterns and each pattern is an independent set. For L(1) there are
/// C(n, n/2) patterns.
inline clique::Partition pattern_classes(const std::vector<FinitePermutation>& vertices, const GraphSpec& g) {
    const auto* d = std::get_if<Distance>(&g);
    if (d == nullptr || vertices.empty() || vertices.front().size() > 63) return {};
    std::vector<std::uint64_t> keys;
    for (const auto& p : vertices) {
        std::uint64_t key = 0;
        for (std::size_t t = 0; t < p.size(); ++t) key |= static_cast<std::uint64_t>(((p[t] - 1) / d->k) & 1) << t;
        keys.push_back(key);
    }
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    clique::Partition out;
    for (auto key : keys)
        out.push_back(static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), key) - distinct.begin()));
    return out;
}

/// All n! permutations of [n] in lexicographic order, joined when G-different.
struct DifferenceGraph {
    std::size_t n = 0;
    GraphSpec base = Complete{};
    std::vector<FinitePermutation> vertices;
    std::vector<clique::Bitset> adjacency;
    /// Independent-set partition handed to the clique search; empty when the
    /// base graph has none on offer.
    clique::Partition classes;

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& row : adjacency) twice += row.count();
        return twice / 2;
    }
};

inline DifferenceGraph build_difference_graph(std::size_t n, const GraphSpec& g,
                                              std::size_t limit = default_capacity_limit) {
    if (n < 1) throw PreconditionError("build_difference_graph: n must be >= 1");
    if (n > limit)
        throw ResourceError("n = " + std::to_string(n) + " exceeds capacity limit " + std::to_string(limit));
    DifferenceGraph graph{n, g, {}, {}, {}};
    std::vector<std::uint32_t> current(n);
    std::iota(current.begin(), current.end(), 1u);
    do {
        graph.vertices.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));

    const std::size_t count = graph.vertices.size();
    graph.adjacency.assign(count, clique::Bitset(count));
    for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = u + 1; v < count; ++v) {
            if (g_different(graph.vertices[u], graph.vertices[v], g)) {
                graph.adjacency[u].set(v);
                graph.adjacency[v].set(u);
            }
        }
    }
    graph.classes = pattern_classes(graph.vertices, g);
    return graph;
}

struct CapacityResult {
    std::size_t n = 0;
    std::size_t omega = 0;
    std::vector<FinitePermutation> witness;
    std::vector<std::size_t> witness_indices; // into DifferenceGraph::vertices
    double rate = 0.0;                        // log2(omega) / n
};

inline double capacity_rate(std::size_t omega, std::size_t n) {
    return omega == 0 || n == 0 ? 0.0 : std::log2(static_cast<double>(omega)) / static_cast<double>(n);
}

/// Clique number of the difference graph with a re-verified witness. Throws
/// TimeoutError when options.timeout elapses.
inline CapacityResult max_clique(const DifferenceGraph& graph, const clique::Options& options = {}) {
    clique::Solver solver(graph.adjacency, options, graph.classes);
    CapacityResult result;
    result.n = graph.n;
    result.witness_indices = solver.maximum();
    result.omega = result.witness_indices.size();
    for (auto idx : result.witness_indices) result.witness.push_back(graph.vertices[idx]);
    for (std::size_t a = 0; a < result.witness.size(); ++a) {
        for (std::size_t b = a + 1; b < result.witness.size(); ++b) {
            if (!g_different(result.witness[a], result.witness[b], graph.base))
                throw std::logic_error("clique witness is not pairwise G-different");
        }
    }
    result.rate = capacity_rate(result.omega, graph.n);
    return result;
}

inline std::uint64_t middle_binomial(std::size_t n) {
    std::uint64_t c = 1;
    const std::size_t k = n / 2;
    for (std::size_t j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

enum class RowStatus { ok, timeout };

struct OmegaRow {
    std::size_t n = 0;
    RowStatus status = RowStatus::ok;
    CapacityResult result;
    std::optional<std::uint64_t> conjecture; // only for L(1)
    std::optional<bool> match;
    double elapsed_ms = 0.0;
};

/// One row per n in [2, n_max]. Conjectured middle binomial values are
/// attached for Distance(1) only; a mismatch is data, not an error.
inline std::vector<OmegaRow> omega_table(const GraphSpec& g, std::size_t n_max, const clique::Options& options = {},
                                         std::size_t limit = default_capacity_limit) {
    if (n_max < 2) throw PreconditionError("omega_table: n_max must be >= 2");
    if (n_max > limit)
        throw ResourceError("n_max = " + std::to_string(n_max) + " exceeds capacity limit " + std::to_string(limit));
    const auto* distance = std::get_if<Distance>(&g);
    const bool line_graph = distance != nullptr && distance->k == 1;

    std::vector<OmegaRow> rows;
    for (std::size_t n = 2; n <= n_max; ++n) {
        OmegaRow row;
        row.n = n;
        const auto start = std::chrono::steady_clock::now();
        try {
            row.result = max_clique(build_difference_graph(n, g, limit), options);
        } catch (const TimeoutError&) {
            row.status = RowStatus::timeout;
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (line_graph) {
            row.conjecture = middle_binomial(n);
            if (row.status == RowStatus::ok) row.match = row.result.omega == *row.conjecture;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace diverge
