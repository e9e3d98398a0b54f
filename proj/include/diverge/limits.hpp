#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"

namespace diverge {

inline constexpr std::uint64_t default_horizon_cap = 100'000'000;
inline constexpr const char* horizon_cap_env = "DIVERGE_HORIZON_CAP";

/// Global limit on prefix lengths and scan horizons. Read once from
/// DIVERGE_HORIZON_CAP, falling back to 10^8.
inline std::uint64_t horizon_cap() {
    static const std::uint64_t cap = [] {
        const char* env = std::getenv(horizon_cap_env);
        if (env == nullptr || *env == '\0') return default_horizon_cap;
        std::uint64_t v = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec != std::errc{} || ptr != end || v == 0)
            throw PreconditionError(std::string(horizon_cap_env) + " is not a positive integer: " + env);
        return v;
    }();
    return cap;
}

inline void require_within_cap(std::uint64_t n, const char* what) {
    if (n > horizon_cap())
        throw ResourceError(std::string(what) + " " + std::to_string(n) +
                            " exceeds horizon cap " + std::to_string(horizon_cap()));
}

} // namespace diverge
