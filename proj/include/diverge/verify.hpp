#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "construction.hpp"
#include "errors.hpp"
#include "graphs.hpp"
#include "limits.hpp"
#include "streams.hpp"

namespace diverge {

inline std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) noexcept { return a > b ? a - b : b - a; }

/// Entry t - 1 holds |c1(t) - c2(t)|.
struct DifferenceSequence {
    Construction first;
    Construction second;
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> diffs;
};

inline DifferenceSequence difference_sequence(const Construction& c1, const Construction& c2, std::uint64_t n) {
    if (n < 1) throw PreconditionError("difference_sequence: n must be >= 1");
    require_within_cap(n, "horizon");
    DifferenceSequence out{c1, c2, n, {}};
    out.diffs.reserve(n);
    for (Position t = 1; t <= n; ++t) out.diffs.push_back(abs_diff(value_at(c1, t), value_at(c2, t)));
    return out;
}

enum class PassageStatus { ok, weak, failed };

inline const char* to_string(PassageStatus s) {
    switch (s) {
    case PassageStatus::ok: return "ok";
    case PassageStatus::weak: return "weak";
    case PassageStatus::failed: return "failed";
    }
    return "?";
}

struct ThresholdPassage {
    std::uint64_t threshold = 0;
    /// Smallest T with diff(t) >= threshold for every T <= t <= horizon.
    /// horizon + 1 when even diff(horizon) is below the threshold.
    std::uint64_t first_passage = 0;
    PassageStatus status = PassageStatus::failed;
};

/// Finite evidence that |c1(t) - c2(t)| -> infinity. A passage time in the
/// last 10% of the horizon is WEAK; an empty tail is FAILED.
struct DivergenceCertificate {
    std::uint64_t horizon = 0;
    std::vector<ThresholdPassage> entries;

    bool valid() const {
        return std::none_of(entries.begin(), entries.end(),
                            [](const auto& e) { return e.status == PassageStatus::failed; });
    }
    bool has_weak() const {
        return std::any_of(entries.begin(), entries.end(),
                           [](const auto& e) { return e.status == PassageStatus::weak; });
    }
};

inline PassageStatus classify_passage(std::uint64_t first_passage, std::uint64_t horizon) {
    if (first_passage > horizon) return PassageStatus::failed;
    // T > 0.9 * horizon, in integers
    if (static_cast<unsigned __int128>(first_passage) * 10 > static_cast<unsigned __int128>(horizon) * 9)
        return PassageStatus::weak;
    return PassageStatus::ok;
}

/// One backward pass from the horizon. Thresholds must be non-decreasing and
/// none may exceed the horizon.
inline DivergenceCertificate divergence_certificate(const Construction& c1, const Construction& c2,
                                                    std::uint64_t horizon,
                                                    std::span<const std::uint64_t> thresholds) {
    if (horizon < 1) throw PreconditionError("divergence_certificate: horizon must be >= 1");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw PreconditionError("divergence_certificate: thresholds must be ascending");
    if (!thresholds.empty() && thresholds.back() > horizon)
        throw PreconditionError("divergence_certificate: horizon must be >= max threshold");
    require_within_cap(horizon, "horizon");

    DivergenceCertificate cert{horizon, {}};
    cert.entries.resize(thresholds.size());
    for (std::size_t k = 0; k < thresholds.size(); ++k) cert.entries[k] = {thresholds[k], 1, PassageStatus::ok};

    // thresholds[0, open) are still unresolved; larger ones resolve first
    std::size_t open = thresholds.size();
    for (Position t = horizon; t >= 1 && open > 0; --t) {
        const std::uint64_t d = abs_diff(value_at(c1, t), value_at(c2, t));
        while (open > 0 && thresholds[open - 1] > d) {
            cert.entries[--open].first_passage = t + 1;
        }
    }
    for (auto& e : cert.entries) e.status = classify_passage(e.first_passage, horizon);
    return cert;
}

struct CollisionReport {
    GraphSpec graph;
    std::uint64_t horizon = 0;
    std::vector<Position> positions; // ascending
};

inline CollisionReport collision_scan(const Construction& c1, const Construction& c2, const GraphSpec& g,
                                      std::uint64_t n) {
    if (n < 1) throw PreconditionError("collision_scan: n must be >= 1");
    require_within_cap(n, "horizon");
    CollisionReport report{g, n, {}};
    for (Position t = 1; t <= n; ++t) {
        if (adjacent(g, value_at(c1, t), value_at(c2, t))) report.positions.push_back(t);
    }
    return report;
}

/// Smallest position t <= n where c1(t), c2(t) are not adjacent in g, or
/// nullopt when every position is an edge.
inline std::optional<Position> completely_different_check(const Construction& c1, const Construction& c2,
                                                          const GraphSpec& g, std::uint64_t n) {
    if (n < 1) throw PreconditionError("completely_different_check: n must be >= 1");
    require_within_cap(n, "horizon");
    for (Position t = 1; t <= n; ++t) {
        if (!adjacent(g, value_at(c1, t), value_at(c2, t))) return t;
    }
    return std::nullopt;
}

/// Checks |Divergent(k)(2j) - Divergent(i)(2j)| == 2(k - i)j for j <= jmax;
/// returns the first failing j.
inline std::optional<std::uint64_t> lemma_edge_law(std::uint64_t i, std::uint64_t k, std::uint64_t jmax) {
    if (i < 1 || i >= k) throw PreconditionError("lemma_edge_law: requires 1 <= i < k");
    if (jmax < 1) throw PreconditionError("lemma_edge_law: jmax must be >= 1");
    require_within_cap(nt::checked_mul(jmax, 2), "position");
    const Construction lo = Divergent(i), hi = Divergent(k);
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        const Position t = 2 * j;
        if (abs_diff(value_at(hi, t), value_at(lo, t)) != nt::checked_mul(2 * (k - i), j)) return j;
    }
    return std::nullopt;
}

} // namespace diverge
