#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "capacity.hpp"
#include "construction.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "graphs.hpp"
#include "parse.hpp"
#include "streams.hpp"
#include "suite.hpp"
#include "verify.hpp"

namespace diverge::cli {

enum class Command { gen, diff, collide, verify, capacity };
enum class Format { csv, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
} // namespace exit_code

struct RunConfig {
    Command command = Command::gen;
    std::vector<std::string> constructions;
    std::optional<std::uint64_t> horizon;
    std::vector<std::uint64_t> thresholds;
    std::string graph = "distance:1";
    std::size_t n_max = 5;
    std::size_t n_limit = default_capacity_limit;
    std::optional<std::string> out;
    Format format = Format::csv;
    bool deterministic = false;
    std::uint64_t seed = 0;
    std::optional<std::chrono::milliseconds> timeout;
};

inline const char* to_string(Command c) {
    switch (c) {
    case Command::gen: return "gen";
    case Command::diff: return "diff";
    case Command::collide: return "collide";
    case Command::verify: return "verify";
    case Command::capacity: return "capacity";
    }
    return "?";
}

namespace detail {

using nlohmann::json;

inline std::vector<Construction> constructions(const RunConfig& cfg, std::size_t expected) {
    if (cfg.constructions.size() != expected)
        throw PreconditionError(std::string(to_string(cfg.command)) + " takes " + std::to_string(expected) +
                                " construction(s), got " + std::to_string(cfg.constructions.size()));
    std::vector<Construction> out;
    for (const auto& s : cfg.constructions) out.push_back(parse_construction(s));
    return out;
}

inline std::uint64_t horizon(const RunConfig& cfg) {
    if (!cfg.horizon) throw PreconditionError(std::string(to_string(cfg.command)) + " requires --n");
    if (*cfg.horizon < 1) throw PreconditionError("--n must be >= 1");
    require_within_cap(*cfg.horizon, "--n");
    return *cfg.horizon;
}

inline json certificate_json(const DivergenceCertificate& cert) {
    json entries = json::array();
    for (const auto& e : cert.entries) {
        json j{{"threshold", e.threshold}, {"status", to_string(e.status)}};
        j["first_passage"] = e.status == PassageStatus::failed ? json(nullptr) : json(e.first_passage);
        entries.push_back(std::move(j));
    }
    return {{"horizon", cert.horizon}, {"valid", cert.valid()}, {"weak", cert.has_weak()}, {"thresholds", entries}};
}

inline std::string format_rate(double rate) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << rate;
    return s.str();
}

inline int gen(const RunConfig& cfg, std::ostream& out) {
    const auto c = constructions(cfg, 1).front();
    const auto values = prefix(c, horizon(cfg));
    if (cfg.format == Format::json) {
        out << json{{"construction", to_string(c)}, {"n", values.size()}, {"values", values}}.dump() << '\n';
    } else {
        csv::write_header(out, "gen", {"position", "value"});
        for (std::size_t k = 0; k < values.size(); ++k) out << k + 1 << ',' << values[k] << '\n';
    }
    return exit_code::ok;
}

inline int diff(const RunConfig& cfg, std::ostream& out) {
    const auto cs = constructions(cfg, 2);
    const auto n = horizon(cfg);
    std::optional<DivergenceCertificate> cert;
    if (!cfg.thresholds.empty()) cert = divergence_certificate(cs[0], cs[1], n, cfg.thresholds);
    const auto seq = difference_sequence(cs[0], cs[1], n);
    if (cfg.format == Format::json) {
        json doc{{"first", to_string(cs[0])}, {"second", to_string(cs[1])}, {"horizon", n}, {"diffs", seq.diffs}};
        if (cert) doc["certificate"] = certificate_json(*cert);
        out << doc.dump() << '\n';
    } else {
        csv::write_header(out, "diff", {"position", "diff"});
        for (std::size_t k = 0; k < seq.diffs.size(); ++k) out << k + 1 << ',' << seq.diffs[k] << '\n';
        if (cert) out << "# certificate " << certificate_json(*cert).dump() << '\n';
    }
    return cert && !cert->valid() ? exit_code::check_failed : exit_code::ok;
}

inline int collide(const RunConfig& cfg, std::ostream& out) {
    const auto cs = constructions(cfg, 2);
    const auto g = parse_graph_spec(cfg.graph);
    const auto report = collision_scan(cs[0], cs[1], g, horizon(cfg));
    if (cfg.format == Format::json) {
        json rows = json::array();
        for (auto t : report.positions)
            rows.push_back({{"position", t}, {"value1", value_at(cs[0], t)}, {"value2", value_at(cs[1], t)}});
        out << json{{"first", to_string(cs[0])},
                    {"second", to_string(cs[1])},
                    {"graph", to_string(g)},
                    {"horizon", report.horizon},
                    {"collisions", rows}}
                   .dump()
            << '\n';
    } else {
        csv::write_header(out, "collide", {"position", "value1", "value2"});
        for (auto t : report.positions) out << t << ',' << value_at(cs[0], t) << ',' << value_at(cs[1], t) << '\n';
    }
    return exit_code::ok;
}

inline int verify(const RunConfig& cfg, std::ostream& out) {
    constructions(cfg, 0);
    const auto results = run_invariant_suite();
    bool all = true;
    json checks = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        json j{{"name", r.name}, {"passed", r.passed}};
        if (!r.detail.empty()) j["counterexample"] = r.detail;
        if (!cfg.deterministic) j["elapsed_ms"] = r.elapsed_ms;
        checks.push_back(std::move(j));
    }
    out << json{{"passed", all}, {"checks", checks}}.dump(2) << '\n';
    return all ? exit_code::ok : exit_code::check_failed;
}

inline int capacity(const RunConfig& cfg, std::ostream& out) {
    constructions(cfg, 0);
    const auto g = parse_graph_spec(cfg.graph);
    clique::Options opts{cfg.deterministic, cfg.seed, cfg.timeout};
    const auto rows = omega_table(g, cfg.n_max, opts, cfg.n_limit);
    bool timed_out = false;
    // wall-clock time is the one nondeterministic column
    auto elapsed = [&](const OmegaRow& r) { return cfg.deterministic ? 0.0 : r.elapsed_ms; };

    if (cfg.format == Format::json) {
        json jrows = json::array();
        for (const auto& r : rows) {
            json j{{"n", r.n}, {"status", r.status == RowStatus::ok ? "ok" : "timeout"}, {"elapsed_ms", elapsed(r)}};
            if (r.status == RowStatus::ok) {
                json witness = json::array();
                for (const auto& p : r.result.witness) witness.push_back(p.one_line());
                j["omega"] = r.result.omega;
                j["rate"] = r.result.rate;
                j["witness"] = witness;
            }
            if (r.conjecture) j["conjecture"] = *r.conjecture;
            if (r.match) j["match"] = *r.match;
            timed_out = timed_out || r.status == RowStatus::timeout;
            jrows.push_back(std::move(j));
        }
        out << json{{"graph", to_string(g)}, {"rate_log_base", 2}, {"deterministic", cfg.deterministic}, {"rows", jrows}}
                   .dump()
            << '\n';
    } else {
        csv::write_header(out, "capacity", {"n", "omega", "conjecture", "match", "rate", "elapsed_ms"});
        out << "# rate = log2(omega) / n\n";
        for (const auto& r : rows) {
            const bool ok = r.status == RowStatus::ok;
            timed_out = timed_out || !ok;
            out << r.n << ',' << (ok ? std::to_string(r.result.omega) : "timeout") << ','
                << (r.conjecture ? std::to_string(*r.conjecture) : "") << ','
                << (r.match ? (*r.match ? "true" : "false") : "") << ',' << (ok ? format_rate(r.result.rate) : "")
                << ',' << std::fixed << std::setprecision(3) << elapsed(r) << std::defaultfloat << '\n';
        }
    }
    return timed_out ? exit_code::resource : exit_code::ok;
}

} // namespace detail

/// Executes one command. Output goes to cfg.out when set, else to `out`;
/// diagnostics go to `err`. Returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        if (cfg.out) {
            file.open(*cfg.out);
            if (!file) throw PreconditionError("cannot open " + *cfg.out + " for writing");
        }
        std::ostream& sink = cfg.out ? static_cast<std::ostream&>(file) : out;
        switch (cfg.command) {
        case Command::gen: return detail::gen(cfg, sink);
        case Command::diff: return detail::diff(cfg, sink);
        case Command::collide: return detail::collide(cfg, sink);
        case Command::verify: return detail::verify(cfg, sink);
        case Command::capacity: return detail::capacity(cfg, sink);
        }
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::resource;
    }
}

} // namespace diverge::cli
