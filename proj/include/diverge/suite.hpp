#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "construction.hpp"
#include "graphs.hpp"
#include "streams.hpp"
#include "verify.hpp"

namespace diverge {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample on failure
    double elapsed_ms = 0.0;
};

/// The fixed matrix of constructions the invariant checks sweep over.
inline std::vector<Construction> standard_constructions() {
    std::vector<Construction> out{Identity{}};
    for (std::uint64_t i = 1; i <= 6; ++i) out.emplace_back(Divergent(i));
    for (auto s : std::vector<std::vector<unsigned>>{{2}, {3}, {2, 3}, {2, 5}, {3, 4, 6}})
        out.emplace_back(Colliding(s));
    for (unsigned i : {1u, 2u, 3u, 5u, 8u, 12u}) out.emplace_back(BlockSwap(i));
    out.emplace_back(ResidueBlockSwap(2, 1));
    out.emplace_back(ResidueBlockSwap(3, 2));
    out.emplace_back(ResidueBlockSwap(5, 3));
    out.emplace_back(ResidueBlockSwap(2, 8));
    return out;
}

namespace suite {

using Check = std::function<std::string()>; // empty string = pass

inline std::string round_trip(std::uint64_t n) {
    for (const auto& c : standard_constructions()) {
        for (Position t = 1; t <= n; ++t) {
            const auto back = inverse_at(c, value_at(c, t));
            if (back != t)
                return to_string(c) + ": inverse(value(" + std::to_string(t) + ")) = " + std::to_string(back);
        }
    }
    return {};
}

/// Largest |value_at(c, t) - t|; unbounded for Divergent(i > 1).
inline std::optional<std::uint64_t> max_displacement(const Construction& c) {
    if (const auto* b = std::get_if<BlockSwap>(&c)) return b->block() / 2;
    if (const auto* r = std::get_if<ResidueBlockSwap>(&c)) return r->q() * (r->inner().block() / 2);
    if (std::holds_alternative<Colliding>(c) || std::holds_alternative<Identity>(c)) return 1;
    return std::nullopt;
}

/// Whether a length-n prefix can cover every value <= n/2. Divergent always
/// can (value v sits at position <= 2v - 1); swaps need displacement <= n/2.
inline bool coverage_reachable(const Construction& c, std::uint64_t n) {
    const auto shift = max_displacement(c);
    return !shift || std::holds_alternative<Divergent>(c) || *shift <= n / 2;
}

inline std::string permutation_property(std::uint64_t n) {
    for (const auto& c : standard_constructions()) {
        if (!coverage_reachable(c, n)) continue;
        const auto report = validate_prefix(c, n);
        if (report.duplicate)
            return to_string(c) + ": value " + std::to_string(report.duplicate->value) + " at positions " +
                   std::to_string(report.duplicate->first) + " and " + std::to_string(report.duplicate->repeat);
        if (report.missing) return to_string(c) + ": value " + std::to_string(*report.missing) + " missing";
    }
    return {};
}

inline std::string divergent_even_law(std::uint64_t kmax, std::uint64_t jmax) {
    for (std::uint64_t i = 1; i <= kmax; ++i) {
        for (std::uint64_t k = i + 1; k <= kmax; ++k) {
            if (auto j = lemma_edge_law(i, k, jmax))
                return "divergent:" + std::to_string(i) + " vs divergent:" + std::to_string(k) + " fails at j = " +
                       std::to_string(*j);
        }
    }
    return {};
}

inline std::string pure_site_disjointness(std::uint64_t limit) {
    std::set<std::uint64_t> used;
    for (const auto& site : pure_sites_up_to(limit)) {
        if (!used.insert(site.value).second || !used.insert(site.successor()).second)
            return "overlap at " + std::to_string(site.prime) + "^" + std::to_string(site.exponent);
    }
    return {};
}

template <class Law>
std::string pointwise(const std::vector<Construction>& cs, std::uint64_t n, Law law, const char* what) {
    for (const auto& c : cs) {
        for (Position t = 1; t <= n; ++t) {
            if (!law(c, t)) return to_string(c) + ": " + what + " fails at t = " + std::to_string(t);
        }
    }
    return {};
}

inline std::string blockswap_involution(std::uint64_t n) {
    std::vector<Construction> cs;
    for (unsigned i = 1; i <= 12; ++i) cs.emplace_back(BlockSwap(i));
    return pointwise(cs, n, [](const Construction& c, Position t) { return value_at(c, value_at(c, t)) == t; },
                     "involution");
}

inline std::string residue_class_preservation(std::uint64_t n) {
    std::vector<Construction> cs;
    for (std::uint64_t q : {2, 3, 5})
        for (unsigned i = 1; i <= 8; ++i) cs.emplace_back(ResidueBlockSwap(q, i));
    return pointwise(
        cs, n,
        [](const Construction& c, Position t) {
            const auto q = std::get<ResidueBlockSwap>(c).q();
            return value_at(c, t) % q == t % q;
        },
        "class preservation");
}

inline std::string divergence_certificates(std::uint64_t kmax, std::uint64_t horizon) {
    const std::vector<std::uint64_t> thresholds{1, 2, 5, 10, 50, 100};
    for (std::uint64_t i = 1; i <= kmax; ++i) {
        for (std::uint64_t k = i + 1; k <= kmax; ++k) {
            const auto cert = divergence_certificate(Divergent(i), Divergent(k), horizon, thresholds);
            for (const auto& e : cert.entries) {
                if (e.status != PassageStatus::ok)
                    return "divergent:" + std::to_string(i) + " vs divergent:" + std::to_string(k) + " threshold " +
                           std::to_string(e.threshold) + " is " + to_string(e.status);
            }
        }
    }
    return {};
}

/// Predicted collision positions for two colliding supports: both members
/// of every pure site whose exponent lies in exactly one support.
inline std::vector<Position> predicted_collisions(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                                  std::uint64_t n) {
    std::vector<unsigned> sym;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
    std::vector<Position> out;
    for (const auto& site : pure_sites_up_to(n, sym)) {
        out.push_back(site.value);
        if (site.successor() <= n) out.push_back(site.successor());
    }
    return out;
}

inline std::string colliding_scans(std::uint64_t n) {
    std::vector<std::vector<unsigned>> supports;
    for (unsigned a = 2; a <= 6; ++a) {
        supports.push_back({a});
        for (unsigned b = a + 1; b <= 6; ++b) supports.push_back({a, b});
    }
    for (std::size_t x = 0; x < supports.size(); ++x) {
        for (std::size_t y = x + 1; y < supports.size(); ++y) {
            const Colliding c1(supports[x]), c2(supports[y]);
            const auto report = collision_scan(c1, c2, Distance(1), n);
            if (report.positions.empty() || report.positions != predicted_collisions(supports[x], supports[y], n))
                return to_string(c1) + " vs " + to_string(c2) + ": collision positions differ from prediction";
        }
    }
    return {};
}

inline std::string complete_difference(const std::vector<Construction>& family, const GraphSpec& g,
                                       std::uint64_t n) {
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            if (auto t = completely_different_check(family[a], family[b], g, n))
                return to_string(family[a]) + " vs " + to_string(family[b]) + " not adjacent at t = " +
                       std::to_string(*t);
        }
    }
    return {};
}

inline std::string blockswap_complete(std::uint64_t n) {
    std::vector<Construction> family;
    for (unsigned i = 1; i <= 12; ++i) family.emplace_back(BlockSwap(i));
    return complete_difference(family, Complete{}, n);
}

inline std::string residue_complete(std::uint64_t n) {
    for (std::uint64_t q : {2, 3, 5}) {
        std::vector<Construction> family;
        for (unsigned i = 1; i <= 8; ++i) family.emplace_back(ResidueBlockSwap(q, i));
        if (auto msg = complete_difference(family, Residue(q), n); !msg.empty()) return msg;
    }
    return {};
}

} // namespace suite

/// Streams and verify invariants at their full sizes.
inline std::vector<CheckResult> run_invariant_suite() {
    const std::vector<std::pair<std::string, suite::Check>> checks{
        {"round_trip", [] { return suite::round_trip(100'000); }},
        {"permutation_property_1e3", [] { return suite::permutation_property(1'000); }},
        {"permutation_property_1e6", [] { return suite::permutation_property(1'000'000); }},
        {"divergent_even_law", [] { return suite::divergent_even_law(10, 100'000); }},
        {"pure_site_disjointness", [] { return suite::pure_site_disjointness(10'000'000); }},
        {"blockswap_involution", [] { return suite::blockswap_involution(100'000); }},
        {"residue_class_preservation", [] { return suite::residue_class_preservation(100'000); }},
        {"divergence_certificates", [] { return suite::divergence_certificates(6, 1'000'000); }},
        {"colliding_scans", [] { return suite::colliding_scans(1'000'000); }},
        {"blockswap_complete_difference", [] { return suite::blockswap_complete(1u << 16); }},
        {"residue_complete_difference", [] { return suite::residue_complete(1u << 14); }},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, check] : checks) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r{name, false, {}, 0.0};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace diverge
