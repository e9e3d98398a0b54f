#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "construction.hpp"
#include "errors.hpp"
#include "graphs.hpp"

namespace diverge {

namespace detail {

class Cursor {
public:
    Cursor(std::string_view text, const char* what) : text_(text), what_(what) {}

    std::size_t pos() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ == text_.size(); }

    std::string_view word() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) fail("number out of range");
        if (ec != std::errc{}) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at = std::string::npos) const {
        if (at == std::string::npos) at = pos_;
        throw ParseError(std::string(what_) + " \"" + std::string(text_) + "\": " + msg + " at position " +
                             std::to_string(at),
                         at);
    }

private:
    std::string_view text_;
    const char* what_;
    std::size_t pos_ = 0;
};

template <class F>
auto semantic(std::string_view text, F&& make) {
    try {
        return make();
    } catch (const PreconditionError& e) {
        throw ParseError("\"" + std::string(text) + "\": " + e.what());
    }
}

inline unsigned small(std::uint64_t v, const char* field) {
    if (v > 1'000'000) throw PreconditionError(std::string(field) + " out of range");
    return static_cast<unsigned>(v);
}

} // namespace detail

/// identity | divergent:<i> | colliding:<j1,j2,...> | blockswap:<i> | residueswap:<q>:<i>
inline Construction parse_construction(std::string_view text) {
    detail::Cursor in(text, "construction");
    const auto kind = in.word();
    if (kind == "identity") {
        in.expect_end();
        return Identity{};
    }
    if (kind == "divergent") {
        in.expect(':');
        const auto i = in.number();
        in.expect_end();
        return detail::semantic(text, [&] { return Construction(Divergent(i)); });
    }
    if (kind == "colliding") {
        in.expect(':');
        std::vector<std::uint64_t> raw{in.number()};
        while (in.accept(',')) raw.push_back(in.number());
        in.expect_end();
        return detail::semantic(text, [&] {
            std::vector<unsigned> support;
            for (auto j : raw) {
                if (j < 2) throw PreconditionError("colliding exponent must be >= 2");
                support.push_back(detail::small(j, "colliding exponent"));
            }
            std::sort(support.begin(), support.end());
            if (std::adjacent_find(support.begin(), support.end()) != support.end())
                throw PreconditionError("colliding exponents must be distinct");
            return Construction(Colliding(std::move(support)));
        });
    }
    if (kind == "blockswap") {
        in.expect(':');
        const auto i = in.number();
        in.expect_end();
        return detail::semantic(text, [&] { return Construction(BlockSwap(detail::small(i, "blockswap i"))); });
    }
    if (kind == "residueswap") {
        in.expect(':');
        const auto q = in.number();
        in.expect(':');
        const auto i = in.number();
        in.expect_end();
        return detail::semantic(text,
                                [&] { return Construction(ResidueBlockSwap(q, detail::small(i, "residueswap i"))); });
    }
    in.fail("unknown construction kind", 0);
}

/// distance:<k> | complete | residue:<q> | file:<path>
inline GraphSpec parse_graph_spec(std::string_view text) {
    if (text.rfind("file:", 0) == 0) {
        const std::string path(text.substr(5));
        if (path.empty()) throw ParseError("graph \"file:\": missing path", 5);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open graph file " + path);
        return read_finite_graph(in);
    }
    detail::Cursor in(text, "graph");
    const auto kind = in.word();
    if (kind == "complete") {
        in.expect_end();
        return Complete{};
    }
    if (kind == "distance") {
        in.expect(':');
        const auto k = in.number();
        in.expect_end();
        return detail::semantic(text, [&] { return GraphSpec(Distance(k)); });
    }
    if (kind == "residue") {
        in.expect(':');
        const auto q = in.number();
        in.expect_end();
        return detail::semantic(text, [&] { return GraphSpec(Residue(q)); });
    }
    in.fail("unknown graph kind", 0);
}

/// "a,b,c" -> ascending list.
inline std::vector<std::uint64_t> parse_thresholds(std::string_view text) {
    detail::Cursor in(text, "thresholds");
    std::vector<std::uint64_t> out{in.number()};
    while (in.accept(',')) out.push_back(in.number());
    in.expect_end();
    if (!std::is_sorted(out.begin(), out.end()))
        throw ParseError("thresholds \"" + std::string(text) + "\": must be ascending");
    return out;
}

} // namespace diverge
