#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"

namespace diverge::clique {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Options {
    /// Deterministic mode returns the lexicographically least maximum clique.
    bool deterministic = true;
    /// Seeds the tie-breaking shuffle of the vertex order outside
    /// deterministic mode.
    std::uint64_t seed = 0;
    std::optional<std::chrono::milliseconds> timeout;
};

/// Optional partition of the vertices into independent sets: class id per
/// vertex. A clique meets each class at most once, so the number of classes
/// touching the candidate set bounds every branch.
using Partition = std::vector<std::size_t>;

/// Exact maximum clique by branch and bound: greedy sequential colouring of
/// the candidate set bounds the clique size reachable from each branch.
class Solver {
public:
    Solver(const std::vector<Bitset>& adjacency, const Options& options = {}, const Partition& partition = {})
        : n_(adjacency.size()), options_(options) {
        for (const auto& row : adjacency) {
            if (row.size() != n_) throw PreconditionError("adjacency matrix is not square");
        }
        if (options_.timeout) deadline_ = std::chrono::steady_clock::now() + *options_.timeout;

        // degeneracy order: repeatedly peel a minimum-degree vertex; peeled
        // vertices go last so the colouring sees dense cores first
        std::vector<std::size_t> tie(n_);
        std::iota(tie.begin(), tie.end(), 0);
        if (!options_.deterministic) {
            std::mt19937_64 rng(options_.seed);
            std::shuffle(tie.begin(), tie.end(), rng);
        }
        std::vector<std::size_t> degree(n_);
        for (std::size_t v = 0; v < n_; ++v) degree[v] = adjacency[v].count();
        std::vector<bool> removed(n_, false);
        std::vector<std::size_t> order(n_);
        for (std::size_t slot = n_; slot-- > 0;) {
            std::size_t pick = n_;
            for (std::size_t v : tie) {
                if (!removed[v] && (pick == n_ || degree[v] < degree[pick])) pick = v;
            }
            removed[pick] = true;
            order[slot] = pick;
            for (auto u = adjacency[pick].find_first(); u != Bitset::npos; u = adjacency[pick].find_next(u))
                if (!removed[u]) --degree[u];
        }
        to_original_ = order;
        to_internal_.assign(n_, 0);
        for (std::size_t k = 0; k < n_; ++k) to_internal_[order[k]] = k;

        adjacency_.assign(n_, Bitset(n_));
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (adjacency[u][v]) adjacency_[to_internal_[u]].set(to_internal_[v]);
            }
        }
        for (std::size_t u = 0; u < n_; ++u) {
            if (adjacency_[u][u]) throw PreconditionError("adjacency matrix has a self-loop");
            for (std::size_t v = u + 1; v < n_; ++v) {
                if (adjacency_[u][v] != adjacency_[v][u])
                    throw PreconditionError("adjacency matrix is not symmetric");
            }
        }
        if (!partition.empty()) set_partition(partition);
    }

    /// Vertices of a maximum clique in original labels, ascending.
    std::vector<std::size_t> maximum() {
        Search search(*this, 0, std::numeric_limits<std::size_t>::max());
        search.best = greedy_clique();
        search.expand(Bitset(n_).set());
        const std::size_t omega = search.best.size();
        if (!options_.deterministic || omega == 0) return sorted_original(search.best);
        return lex_least(omega);
    }

    /// A clique of exactly k vertices inside `candidates` (original labels).
    std::optional<std::vector<std::size_t>> find_of_size(const Bitset& candidates, std::size_t k) {
        if (k == 0) return std::vector<std::size_t>{};
        Bitset internal(n_);
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v))
            internal.set(to_internal_[v]);
        Search search(*this, k - 1, k);
        search.expand(internal);
        if (search.best.size() < k) return std::nullopt;
        return sorted_original(search.best);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    struct Search {
        Solver& solver;
        std::size_t floor;   // only cliques larger than this are recorded
        std::size_t stop_at; // stop once a clique this large is found
        std::vector<std::size_t> current;
        std::vector<std::size_t> best;
        bool done = false;

        Search(Solver& s, std::size_t floor_, std::size_t stop_at_) : solver(s), floor(floor_), stop_at(stop_at_) {}

        std::size_t best_size() const { return std::max(floor, best.size()); }

        void expand(Bitset candidates) {
            solver.tick();
            if (!solver.classes_.empty() && current.size() + solver.classes_touching(candidates) <= best_size()) return;
            std::vector<std::size_t> vertices;
            std::vector<std::size_t> colours;
            Bitset uncoloured = candidates;
            for (std::size_t colour = 1; uncoloured.any(); ++colour) {
                Bitset independent = uncoloured;
                for (auto v = independent.find_first(); v != Bitset::npos; v = independent.find_next(v)) {
                    uncoloured.reset(v);
                    independent -= solver.adjacency_[v];
                    vertices.push_back(v);
                    colours.push_back(colour);
                }
            }
            for (std::size_t k = vertices.size(); k-- > 0;) {
                if (current.size() + colours[k] <= best_size()) return;
                const std::size_t v = vertices[k];
                current.push_back(v);
                Bitset next = candidates & solver.adjacency_[v];
                if (next.none()) {
                    if (current.size() > best_size()) {
                        best = current;
                        if (best.size() >= stop_at) done = true;
                    }
                } else {
                    expand(std::move(next));
                }
                current.pop_back();
                if (done) return;
                candidates.reset(v);
            }
        }
    };

    void set_partition(const Partition& partition) {
        if (partition.size() != n_) throw PreconditionError("partition size differs from vertex count");
        const std::size_t count = *std::max_element(partition.begin(), partition.end()) + 1;
        classes_.assign(count, Bitset(n_));
        for (std::size_t v = 0; v < n_; ++v) classes_[partition[v]].set(to_internal_[v]);
        for (const auto& cls : classes_) {
            for (auto v = cls.find_first(); v != Bitset::npos; v = cls.find_next(v)) {
                if (cls.intersects(adjacency_[v])) throw PreconditionError("partition class is not independent");
            }
        }
        classes_.erase(std::remove_if(classes_.begin(), classes_.end(), [](const Bitset& b) { return b.none(); }),
                       classes_.end());
    }

    std::size_t classes_touching(const Bitset& candidates) const {
        std::size_t k = 0;
        for (const auto& cls : classes_) k += cls.intersects(candidates);
        return k;
    }

    // Best of n greedy cliques, one seeded at each vertex, always extending by
    // the candidate with the most neighbours among the remaining candidates.
    std::vector<std::size_t> greedy_clique() const {
        std::vector<std::size_t> best;
        for (std::size_t start = 0; start < n_; ++start) {
            std::vector<std::size_t> clique{start};
            Bitset candidates = adjacency_[start];
            while (candidates.any()) {
                std::size_t pick = Bitset::npos, pick_degree = 0;
                for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                    const std::size_t d = (candidates & adjacency_[v]).count();
                    if (pick == Bitset::npos || d > pick_degree) {
                        pick = v;
                        pick_degree = d;
                    }
                }
                clique.push_back(pick);
                candidates &= adjacency_[pick];
            }
            if (clique.size() > best.size()) best = std::move(clique);
        }
        return best;
    }

    void tick() {
        if ((++nodes_ & 1023) == 1 && deadline_ && std::chrono::steady_clock::now() >= *deadline_)
            throw TimeoutError("clique search exceeded " + std::to_string(options_.timeout->count()) + " ms");
    }

    std::vector<std::size_t> sorted_original(const std::vector<std::size_t>& internal) const {
        std::vector<std::size_t> out;
        out.reserve(internal.size());
        for (auto v : internal) out.push_back(to_original_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Greedy extension in ascending original label, keeping a vertex only if
    // the remaining clique can still be completed among larger labels.
    std::vector<std::size_t> lex_least(std::size_t omega) {
        std::vector<std::size_t> chosen;
        Bitset pool(n_);
        pool.set();
        for (std::size_t v = 0; v < n_ && chosen.size() < omega; ++v) {
            if (!pool[v]) continue;
            Bitset next = pool & original_row(v);
            for (std::size_t u = 0; u <= v; ++u) next.reset(u);
            if (find_of_size(next, omega - chosen.size() - 1)) {
                chosen.push_back(v);
                pool = std::move(next);
            }
        }
        if (chosen.size() != omega) throw std::logic_error("lexicographic clique extension failed");
        return chosen;
    }

    Bitset original_row(std::size_t v) const {
        const Bitset& row = adjacency_[to_internal_[v]];
        Bitset out(n_);
        for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) out.set(to_original_[u]);
        return out;
    }

    std::size_t n_;
    Options options_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<Bitset> adjacency_; // internal labels
    std::vector<Bitset> classes_;   // internal labels
    std::vector<std::size_t> to_original_;
    std::vector<std::size_t> to_internal_;
    std::uint64_t nodes_ = 0;
};

} // namespace diverge::clique
