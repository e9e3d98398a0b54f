#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "construction.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "number_theory.hpp"

namespace diverge {

/// m-th smallest positive integer not divisible by q.
inline std::uint64_t nth_non_multiple(std::uint64_t m, std::uint64_t q) {
    if (q < 2) throw PreconditionError("nth_non_multiple: q must be >= 2");
    if (m < 1) throw PreconditionError("nth_non_multiple: m must be >= 1");
    return nt::checked_add(m, (m - 1) / (q - 1));
}

namespace detail {

inline bool is_pure_in(std::uint64_t x, const std::vector<unsigned>& exponents) {
    if ((x & 1) == 0 || x < 9) return false;
    for (unsigned j : exponents) {
        if (nt::odd_prime_root(x, j)) return true;
    }
    return false;
}

inline std::uint64_t block_swap(std::uint64_t t, std::uint64_t block) {
    const std::uint64_t half = block / 2;
    return ((t - 1) & (block - 1)) < half ? nt::checked_add(t, half) : t - half;
}

inline std::uint64_t residue_block_swap(std::uint64_t t, std::uint64_t q, std::uint64_t block) {
    const std::uint64_t cls = (t - 1) % q;
    const std::uint64_t k = block_swap((t - 1) / q + 1, block);
    return nt::checked_add(cls + 1, nt::checked_mul(k - 1, q));
}

} // namespace detail

inline Value value_at(const Construction& c, Position t) {
    if (t < 1) throw PreconditionError("positions are 1-based");
    struct {
        Position t;
        Value operator()(const Identity&) const { return t; }
        Value operator()(const Divergent& d) const {
            if (t % 2 == 0) return nt::checked_mul(d.i(), t);
            return nth_non_multiple((t + 1) / 2, 2 * d.i());
        }
        Value operator()(const Colliding& c) const {
            if (t % 2 == 1) return detail::is_pure_in(t, c.support()) ? nt::checked_add(t, 1) : t;
            return detail::is_pure_in(t - 1, c.support()) ? t - 1 : t;
        }
        Value operator()(const BlockSwap& b) const { return detail::block_swap(t, b.block()); }
        Value operator()(const ResidueBlockSwap& r) const {
            return detail::residue_block_swap(t, r.q(), r.inner().block());
        }
    } visitor{t};
    return std::visit(visitor, c);
}

/// Unique position holding v. Closed form; Colliding, BlockSwap and
/// ResidueBlockSwap are involutions.
inline Position inverse_at(const Construction& c, Value v) {
    if (v < 1) throw PreconditionError("values are >= 1");
    if (const auto* d = std::get_if<Divergent>(&c)) {
        const std::uint64_t q = 2 * d->i();
        if (v % q == 0) return v / d->i();
        const std::uint64_t m = v - v / q; // rank of v among non-multiples of q
        return nt::checked_add(m, m - 1);
    }
    return value_at(c, v);
}

/// Lazy, unbounded view of the permutation: element k is value_at(c, k + 1).
inline auto as_view(Construction c) {
    return std::views::iota(Position{1}) |
           std::views::transform([c = std::move(c)](Position t) { return value_at(c, t); });
}

inline std::vector<Value> prefix(const Construction& c, std::uint64_t n) {
    if (n < 1) throw PreconditionError("prefix: n must be >= 1");
    require_within_cap(n, "prefix length");
    std::vector<Value> out;
    out.reserve(n);
    for (Position t = 1; t <= n; ++t) out.push_back(value_at(c, t));
    return out;
}

/// p^exponent for an odd prime p and exponent >= 2.
struct PureSite {
    std::uint64_t prime;
    unsigned exponent;
    std::uint64_t value;

    std::uint64_t successor() const noexcept { return value + 1; }
    bool operator==(const PureSite&) const = default;
};

/// All pure sites with value <= limit, ascending by value; restricted to
/// `exponents` when given.
inline std::vector<PureSite> pure_sites_up_to(std::uint64_t limit,
                                              const std::optional<std::vector<unsigned>>& exponents = {}) {
    if (limit < 1) throw PreconditionError("pure_sites_up_to: limit must be >= 1");
    std::vector<PureSite> out;
    if (limit < 9) return out;
    auto wanted = [&](unsigned j) {
        return !exponents || std::find(exponents->begin(), exponents->end(), j) != exponents->end();
    };
    for (std::uint64_t p : nt::primes_up_to(nt::iroot(limit, 2))) {
        if (p == 2) continue;
        std::uint64_t power = p * p;
        for (unsigned j = 2;; ++j) {
            if (wanted(j)) out.push_back({p, j, power});
            if (power > limit / p) break;
            power *= p;
        }
    }
    std::sort(out.begin(), out.end(), [](const PureSite& a, const PureSite& b) { return a.value < b.value; });
    return out;
}

struct DuplicateWitness {
    Position first;  // earlier position holding the value
    Position repeat; // later position holding it again
    Value value;
};

/// Permutation sanity over a finite prefix of length n: values distinct,
/// and every v <= n/2 present.
struct ValidityReport {
    std::uint64_t n = 0;
    bool injective = true;
    bool coverage = true;
    std::optional<DuplicateWitness> duplicate; // smallest repeating position
    std::optional<Value> missing;              // smallest absent value <= n/2

    bool passed() const noexcept { return injective && coverage; }
};

inline ValidityReport validate_values(std::span<const Value> values) {
    ValidityReport report;
    report.n = values.size();

    std::vector<std::pair<Value, Position>> sorted;
    sorted.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) sorted.emplace_back(values[k], k + 1);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sorted[k].first != sorted[k - 1].first) continue;
        // within a run of equal values, the second entry is the first repeat
        if (k >= 2 && sorted[k - 2].first == sorted[k].first) continue;
        if (!report.duplicate || sorted[k].second < report.duplicate->repeat)
            report.duplicate = DuplicateWitness{sorted[k - 1].second, sorted[k].second, sorted[k].first};
    }
    report.injective = !report.duplicate.has_value();

    const std::uint64_t half = values.size() / 2;
    std::vector<bool> seen(half + 1, false);
    for (Value v : values) {
        if (v >= 1 && v <= half) seen[v] = true;
    }
    for (Value v = 1; v <= half; ++v) {
        if (!seen[v]) {
            report.missing = v;
            break;
        }
    }
    report.coverage = !report.missing.has_value();
    return report;
}

inline ValidityReport validate_prefix(const Construction& c, std::uint64_t n) {
    if (n < 2) throw PreconditionError("validate_prefix: n must be >= 2");
    const auto values = prefix(c, n);
    return validate_values(values);
}

} // namespace diverge
