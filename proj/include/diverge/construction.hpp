#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace diverge {

/// 1-based index into an infinite permutation.
using Position = std::uint64_t;
using Value = std::uint64_t;

struct Identity {
    bool operator==(const Identity&) const = default;
};

/// Even position 2j holds 2ij; odd positions list the non-multiples of 2i
/// in increasing order. Divergent(1) is the identity.
class Divergent {
public:
    explicit Divergent(std::uint64_t i) : i_(i) {
        if (i < 1) throw PreconditionError("divergent: i must be >= 1");
        if (i > (UINT64_MAX >> 2)) throw PreconditionError("divergent: i too large");
    }
    std::uint64_t i() const noexcept { return i_; }
    bool operator==(const Divergent&) const = default;

private:
    std::uint64_t i_;
};

/// Identity with each pure number p^j (p odd prime, j in the support)
/// transposed with its successor p^j + 1.
class Colliding {
public:
    static constexpr unsigned max_exponent = 63;

    explicit Colliding(std::vector<unsigned> support) : support_(std::move(support)) {
        if (support_.empty()) throw PreconditionError("colliding: support must be nonempty");
        if (!std::is_sorted(support_.begin(), support_.end()) ||
            std::adjacent_find(support_.begin(), support_.end()) != support_.end())
            throw PreconditionError("colliding: support must be strictly ascending");
        if (support_.front() < 2) throw PreconditionError("colliding: exponents must be >= 2");
        if (support_.back() > max_exponent)
            throw PreconditionError("colliding: exponents must be <= 63");
    }
    const std::vector<unsigned>& support() const noexcept { return support_; }
    bool operator==(const Colliding&) const = default;

private:
    std::vector<unsigned> support_;
};

/// Blocks of length 2^i; within each block the two halves trade places.
class BlockSwap {
public:
    static constexpr unsigned max_i = 62;

    explicit BlockSwap(unsigned i) : i_(i) {
        if (i < 1) throw PreconditionError("blockswap: i must be >= 1");
        if (i > max_i) throw PreconditionError("blockswap: i must be <= 62");
    }
    unsigned i() const noexcept { return i_; }
    std::uint64_t block() const noexcept { return std::uint64_t{1} << i_; }
    bool operator==(const BlockSwap&) const = default;

private:
    unsigned i_;
};

/// BlockSwap(i) run separately on the positions of each residue class mod q.
class ResidueBlockSwap {
public:
    ResidueBlockSwap(std::uint64_t q, unsigned i) : q_(q), inner_(i) {
        if (q < 2) throw PreconditionError("residueswap: q must be >= 2");
    }
    std::uint64_t q() const noexcept { return q_; }
    unsigned i() const noexcept { return inner_.i(); }
    const BlockSwap& inner() const noexcept { return inner_; }
    bool operator==(const ResidueBlockSwap&) const = default;

private:
    std::uint64_t q_;
    BlockSwap inner_;
};

using Construction = std::variant<Identity, Divergent, Colliding, BlockSwap, ResidueBlockSwap>;

/// Canonical text form, the same grammar parse_construction accepts.
inline std::string to_string(const Construction& c) {
    struct {
        std::string operator()(const Identity&) const { return "identity"; }
        std::string operator()(const Divergent& d) const { return "divergent:" + std::to_string(d.i()); }
        std::string operator()(const Colliding& c) const {
            std::string s = "colliding:";
            for (std::size_t k = 0; k < c.support().size(); ++k) {
                if (k) s += ',';
                s += std::to_string(c.support()[k]);
            }
            return s;
        }
        std::string operator()(const BlockSwap& b) const { return "blockswap:" + std::to_string(b.i()); }
        std::string operator()(const ResidueBlockSwap& r) const {
            return "residueswap:" + std::to_string(r.q()) + ":" + std::to_string(r.i());
        }
    } visitor;
    return std::visit(visitor, c);
}

} // namespace diverge
