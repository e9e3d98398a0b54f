#pragma once

#include <cstdint>
#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace diverge {

/// L(k): a ~ b iff |a - b| == k.
struct Distance {
    std::uint64_t k;
    explicit Distance(std::uint64_t k_) : k(k_) {
        if (k < 1) throw PreconditionError("distance graph: k must be >= 1");
    }
    bool operator==(const Distance&) const = default;
};

struct Complete {
    bool operator==(const Complete&) const = default;
};

/// a ~ b iff a != b and a == b (mod q).
struct Residue {
    std::uint64_t q;
    explicit Residue(std::uint64_t q_) : q(q_) {
        if (q < 2) throw PreconditionError("residue graph: q must be >= 2");
    }
    bool operator==(const Residue&) const = default;
};

/// Explicit graph on vertices 1..n.
class FiniteEdges {
public:
    using Edge = std::pair<std::uint64_t, std::uint64_t>;

    FiniteEdges(std::uint64_t n, const std::vector<Edge>& edges) : n_(n), matrix_(n * n, false) {
        for (auto [a, b] : edges) {
            if (a < 1 || b < 1 || a > n || b > n)
                throw PreconditionError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") outside [1," + std::to_string(n) + "]");
            if (a == b) throw PreconditionError("self-loop at " + std::to_string(a));
            if (matrix_[index(a, b)]) continue;
            matrix_[index(a, b)] = matrix_[index(b, a)] = true;
            edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
    }

    std::uint64_t n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool contains(std::uint64_t a, std::uint64_t b) const {
        if (a < 1 || b < 1 || a > n_ || b > n_)
            throw PreconditionError("vertex outside [1," + std::to_string(n_) + "]");
        return matrix_[index(a, b)];
    }

    bool operator==(const FiniteEdges& o) const { return n_ == o.n_ && matrix_ == o.matrix_; }

private:
    std::size_t index(std::uint64_t a, std::uint64_t b) const { return (a - 1) * n_ + (b - 1); }

    std::uint64_t n_;
    std::vector<bool> matrix_;
    std::vector<Edge> edges_;
};

using GraphSpec = std::variant<Distance, Complete, Residue, FiniteEdges>;

inline bool adjacent(const GraphSpec& g, std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw PreconditionError("graph vertices are >= 1");
    struct {
        std::uint64_t a, b;
        bool operator()(const Distance& d) const { return (a > b ? a - b : b - a) == d.k; }
        bool operator()(const Complete&) const { return a != b; }
        bool operator()(const Residue& r) const { return a != b && a % r.q == b % r.q; }
        bool operator()(const FiniteEdges& f) const { return f.contains(a, b); }
    } visitor{a, b};
    return std::visit(visitor, g);
}

/// Every pair a < b <= n lies in exactly one of L(1..kmax) when b - a <= kmax
/// and in none otherwise.
inline bool distance_partition_check(std::uint64_t kmax, std::uint64_t n) {
    if (kmax < 1 || n < 2) throw PreconditionError("distance_partition_check: kmax >= 1, n >= 2");
    std::vector<GraphSpec> layers;
    for (std::uint64_t k = 1; k <= kmax; ++k) layers.emplace_back(Distance(k));
    for (std::uint64_t a = 1; a <= n; ++a) {
        for (std::uint64_t b = a + 1; b <= n; ++b) {
            unsigned hits = 0;
            for (const auto& g : layers) hits += adjacent(g, a, b);
            if (hits != (b - a <= kmax ? 1u : 0u)) return false;
        }
    }
    return true;
}

/// Text format: first line "n", then one "a b" pair per line (1-based).
/// Blank lines and lines starting with '#' are ignored.
inline FiniteEdges read_finite_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::uint64_t> n;
    std::vector<FiniteEdges::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
            continue;
        std::istringstream fields(line);
        std::string extra;
        if (!n) {
            std::uint64_t v;
            if (!(fields >> v) || (fields >> extra))
                throw ParseError("graph file line " + std::to_string(lineno) + ": expected vertex count");
            n = v;
            continue;
        }
        std::uint64_t a, b;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError("graph file line " + std::to_string(lineno) + ": expected \"a b\"");
        edges.emplace_back(a, b);
    }
    if (!n) throw ParseError("graph file: missing vertex count");
    try {
        return FiniteEdges(*n, edges);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("graph file: ") + e.what());
    }
}

inline void write_finite_graph(std::ostream& out, const FiniteEdges& g) {
    out << g.n() << '\n';
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

inline std::string to_string(const GraphSpec& g) {
    struct {
        std::string operator()(const Distance& d) const { return "distance:" + std::to_string(d.k); }
        std::string operator()(const Complete&) const { return "complete"; }
        std::string operator()(const Residue& r) const { return "residue:" + std::to_string(r.q); }
        std::string operator()(const FiniteEdges& f) const {
            return "finite:" + std::to_string(f.n()) + ":" + std::to_string(f.edges().size());
        }
    } visitor;
    return std::visit(visitor, g);
}

} // namespace diverge
