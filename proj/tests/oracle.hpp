#pragma once

// Naive reference implementations used only by the tests. Each one
// materializes whole prefixes by direct simulation of the construction
// rules and never calls value_at / inverse_at.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <diverge/construction.hpp>
#include <diverge/graphs.hpp>

namespace oracle {

using diverge::Construction;

/// Plain sieve over all integers up to n.
inline std::vector<std::uint64_t> primes(std::uint64_t n) {
    std::vector<char> sieve(n + 1, 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= n; ++k) {
        if (!sieve[k]) continue;
        out.push_back(k);
        for (std::uint64_t m = k * k; m <= n; m += k) sieve[m] = 0;
    }
    return out;
}

inline std::vector<std::uint64_t> block_swapped(std::uint64_t n, std::uint64_t block) {
    const std::uint64_t padded = (n + block - 1) / block * block;
    std::vector<std::uint64_t> seq(padded);
    std::iota(seq.begin(), seq.end(), 1);
    for (std::uint64_t start = 0; start < padded; start += block)
        std::rotate(seq.begin() + start, seq.begin() + start + block / 2, seq.begin() + start + block);
    seq.resize(n);
    return seq;
}

/// Prefix of length n (index 0 = position 1).
inline std::vector<std::uint64_t> materialize(const Construction& c, std::uint64_t n) {
    std::vector<std::uint64_t> seq(n);
    if (std::holds_alternative<diverge::Identity>(c)) {
        std::iota(seq.begin(), seq.end(), 1);
    } else if (const auto* d = std::get_if<diverge::Divergent>(&c)) {
        // evens get 2ij; odds take the leftover numbers in increasing order
        std::uint64_t next = 1;
        for (std::uint64_t t = 1; t <= n; ++t) {
            if (t % 2 == 0) {
                seq[t - 1] = 2 * d->i() * (t / 2);
            } else {
                while (next % (2 * d->i()) == 0) ++next;
                seq[t - 1] = next++;
            }
        }
    } else if (const auto* col = std::get_if<diverge::Colliding>(&c)) {
        std::vector<std::uint64_t> ext(n + 2);
        std::iota(ext.begin(), ext.end(), 0);
        for (auto p : primes(n)) {
            if (p == 2) continue;
            for (unsigned j : col->support()) {
                std::uint64_t pw = 1;
                bool fits = true;
                for (unsigned e = 0; e < j && fits; ++e) {
                    if (pw > n / p) fits = false;
                    else pw *= p;
                }
                if (fits && pw <= n) std::swap(ext[pw], ext[pw + 1]);
            }
        }
        std::copy(ext.begin() + 1, ext.begin() + 1 + n, seq.begin());
    } else if (const auto* b = std::get_if<diverge::BlockSwap>(&c)) {
        seq = block_swapped(n, b->block());
    } else if (const auto* r = std::get_if<diverge::ResidueBlockSwap>(&c)) {
        const std::uint64_t q = r->q();
        const auto inner = block_swapped(n / q + 2, r->inner().block());
        for (std::uint64_t t = 1; t <= n; ++t) {
            const std::uint64_t cls = (t - 1) % q, k = (t - 1) / q; // k is 0-based class index
            seq[t - 1] = cls + 1 + (inner[k] - 1) * q;
        }
    }
    return seq;
}

inline std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

inline std::vector<std::uint64_t> diffs(const Construction& a, const Construction& b, std::uint64_t n) {
    const auto x = materialize(a, n), y = materialize(b, n);
    std::vector<std::uint64_t> out(n);
    for (std::uint64_t k = 0; k < n; ++k) out[k] = absdiff(x[k], y[k]);
    return out;
}

/// Forward scan: one past the last position whose diff is below m
/// (1 if none, n + 1 if diff(n) < m).
inline std::uint64_t first_passage(const std::vector<std::uint64_t>& d, std::uint64_t m) {
    std::uint64_t last_bad = 0;
    for (std::uint64_t k = 0; k < d.size(); ++k)
        if (d[k] < m) last_bad = k + 1;
    return last_bad + 1;
}

inline std::vector<std::uint64_t> collisions(const Construction& a, const Construction& b,
                                             const diverge::GraphSpec& g, std::uint64_t n) {
    const auto x = materialize(a, n), y = materialize(b, n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k < n; ++k)
        if (diverge::adjacent(g, x[k], y[k])) out.push_back(k + 1);
    return out;
}

inline std::optional<std::uint64_t> first_non_edge(const Construction& a, const Construction& b,
                                                   const diverge::GraphSpec& g, std::uint64_t n) {
    const auto x = materialize(a, n), y = materialize(b, n);
    for (std::uint64_t k = 0; k < n; ++k)
        if (!diverge::adjacent(g, x[k], y[k])) return k + 1;
    return std::nullopt;
}

/// Clique number by checking every vertex subset (n <= ~24).
inline std::size_t brute_force_clique(const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (adj[u][v]) rows[u] |= std::uint32_t{1} << v;
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool clique = true;
        for (std::size_t v = 0; v < n && clique; ++v) {
            if (!(mask >> v & 1)) continue;
            const std::uint32_t others = static_cast<std::uint32_t>(mask) & ~(std::uint32_t{1} << v);
            clique = (others & ~rows[v]) == 0;
        }
        if (clique) best = size;
    }
    return best;
}

/// Difference relation on S_n computed straight from the definition.
inline std::vector<std::vector<bool>> difference_relation(std::size_t n, const diverge::GraphSpec& g) {
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 1u);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<bool>> adj(perms.size(), std::vector<bool>(perms.size(), false));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b)
            for (std::size_t t = 0; t < n && a != b; ++t)
                if (diverge::adjacent(g, perms[a][t], perms[b][t])) adj[a][b] = true;
    return adj;
}

} // namespace oracle
