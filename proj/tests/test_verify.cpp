#include <catch2/catch_amalgamated.hpp>

#include <diverge/suite.hpp>
#include <diverge/verify.hpp>

#include "oracle.hpp"

using namespace diverge;

TEST_CASE("difference_sequence examples") {
    CHECK(difference_sequence(Divergent(1), Divergent(2), 6).diffs == std::vector<std::uint64_t>{0, 2, 1, 4, 2, 6});
    CHECK(difference_sequence(BlockSwap(3), BlockSwap(3), 5).diffs == std::vector<std::uint64_t>(5, 0));
    const auto d = difference_sequence(Divergent(2), Divergent(3), 6).diffs;
    CHECK(std::vector<std::uint64_t>{d[1], d[3], d[5]} == std::vector<std::uint64_t>{2, 4, 6});
    CHECK_THROWS_AS(difference_sequence(Identity{}, Identity{}, 0), PreconditionError);
}

TEST_CASE("divergence_certificate examples") {
    const std::vector<std::uint64_t> five{5};
    const auto a = divergence_certificate(Divergent(1), Divergent(2), 10'000, five);
    REQUIRE(a.entries.size() == 1);
    CHECK(a.entries[0].first_passage == oracle::first_passage(oracle::diffs(Divergent(1), Divergent(2), 10'000), 5));
    CHECK(a.entries[0].first_passage == 14);
    CHECK(a.entries[0].status == PassageStatus::ok);
    CHECK(a.valid());

    const std::vector<std::uint64_t> one{1};
    const auto b = divergence_certificate(Identity{}, Identity{}, 100, one);
    CHECK(b.entries[0].status == PassageStatus::failed);
    CHECK_FALSE(b.valid());

    const std::vector<std::uint64_t> hundred{100};
    const auto c = divergence_certificate(Divergent(2), Divergent(3), 1'000'000, hundred);
    CHECK(c.valid());
    CHECK(c.entries[0].first_passage < 1'000'000);
}

TEST_CASE("divergence_certificate preconditions and weak flag") {
    const std::vector<std::uint64_t> unsorted{5, 2};
    CHECK_THROWS_AS(divergence_certificate(Identity{}, Divergent(2), 100, unsorted), PreconditionError);
    const std::vector<std::uint64_t> big{101};
    CHECK_THROWS_AS(divergence_certificate(Identity{}, Divergent(2), 100, big), PreconditionError);

    // diff(t) grows roughly like t/3, so 30 is first reached for good near t = 90 of 100
    const std::vector<std::uint64_t> thirty{30};
    const auto cert = divergence_certificate(Divergent(1), Divergent(2), 100, thirty);
    const auto expected = oracle::first_passage(oracle::diffs(Divergent(1), Divergent(2), 100), 30);
    CHECK(cert.entries[0].first_passage == expected);
    CHECK(cert.entries[0].status == (expected * 10 > 900 ? PassageStatus::weak : PassageStatus::ok));

    CHECK(classify_passage(90, 100) == PassageStatus::ok);
    CHECK(classify_passage(91, 100) == PassageStatus::weak);
    CHECK(classify_passage(101, 100) == PassageStatus::failed);
}

TEST_CASE("passage times are non-decreasing in the threshold") {
    const std::vector<std::uint64_t> thresholds{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (std::uint64_t i = 1; i <= 4; ++i) {
        const auto cert = divergence_certificate(Divergent(i), Divergent(i + 2), 5000, thresholds);
        for (std::size_t k = 1; k < cert.entries.size(); ++k)
            REQUIRE(cert.entries[k - 1].first_passage <= cert.entries[k].first_passage);
    }
}

TEST_CASE("collision_scan examples") {
    const auto r = collision_scan(Colliding({2}), Colliding({3}), Distance(1), 130);
    CHECK(r.positions == std::vector<Position>{9, 10, 25, 26, 27, 28, 49, 50, 121, 122, 125, 126});
    CHECK(collision_scan(Identity{}, Identity{}, Distance(1), 100).positions.empty());

    const std::uint64_t n = 50'000;
    std::size_t odd_prime_squares = 0;
    for (auto p : oracle::primes(n))
        if (p > 2 && p * p <= n) ++odd_prime_squares;
    CHECK(collision_scan(Colliding({2}), Identity{}, Distance(1), n).positions.size() == 2 * odd_prime_squares);
}

TEST_CASE("completely_different_check examples") {
    CHECK_FALSE(completely_different_check(BlockSwap(1), BlockSwap(2), Complete{}, 1u << 16));
    CHECK(completely_different_check(BlockSwap(1), BlockSwap(1), Complete{}, 8) == 1);
    CHECK_FALSE(completely_different_check(ResidueBlockSwap(2, 1), ResidueBlockSwap(2, 3), Residue(2), 1u << 12));
    // Divergent(1) and Divergent(2) agree at position 1
    CHECK(completely_different_check(Divergent(1), Divergent(2), Complete{}, 100) == 1);
}

TEST_CASE("lemma_edge_law examples") {
    CHECK_FALSE(lemma_edge_law(2, 3, 100'000));
    CHECK_FALSE(lemma_edge_law(1, 2, 1));
    CHECK_THROWS_AS(lemma_edge_law(3, 3, 10), PreconditionError);
    CHECK_THROWS_AS(lemma_edge_law(0, 3, 10), PreconditionError);
}

TEST_CASE("even-position differences are distinct across j") {
    for (std::uint64_t i = 1; i <= 10; ++i) {
        for (std::uint64_t k = i + 1; k <= 10; ++k) {
            REQUIRE_FALSE(lemma_edge_law(i, k, 100'000));
            const auto d = difference_sequence(Divergent(i), Divergent(k), 2000).diffs;
            for (std::size_t t = 3; t < d.size(); t += 2) REQUIRE(d[t] > d[t - 2]);
        }
    }
}

TEST_CASE("predicted collisions for distinct colliding supports") {
    CHECK(suite::predicted_collisions({2}, {3}, 130) ==
          std::vector<Position>{9, 10, 25, 26, 27, 28, 49, 50, 121, 122, 125, 126});
    // exponent shared by both supports produces no collisions
    const auto r = collision_scan(Colliding({2, 3}), Colliding({2}), Distance(1), 100'000);
    CHECK(r.positions == suite::predicted_collisions({2, 3}, {2}, 100'000));
    for (auto t : r.positions) REQUIRE(nt::odd_prime_root(t % 2 ? t : t - 1, 3));
}

TEST_CASE("verify operations agree with the materialize-and-scan oracle") {
    const std::vector<std::pair<Construction, Construction>> pairs{
        {Divergent(1), Divergent(2)},
        {Divergent(2), Divergent(3)},
        {Divergent(3), Divergent(7)},
        {Identity{}, Colliding({2})},
        {Colliding({2}), Colliding({3})},
        {Colliding({2, 4}), Colliding({3, 4})},
        {BlockSwap(1), BlockSwap(2)},
        {BlockSwap(3), BlockSwap(9)},
        {ResidueBlockSwap(2, 1), ResidueBlockSwap(2, 3)},
        {ResidueBlockSwap(3, 2), Divergent(2)},
    };
    const std::vector<GraphSpec> graphs{Distance(1), Distance(4), Complete{}, Residue(2), Residue(3)};
    const std::vector<std::uint64_t> thresholds{1, 3, 10, 40};
    const std::uint64_t n = 4000;
    for (const auto& [a, b] : pairs) {
        INFO(to_string(a) << " vs " << to_string(b));
        const auto d = oracle::diffs(a, b, n);
        REQUIRE(difference_sequence(a, b, n).diffs == d);
        const auto cert = divergence_certificate(a, b, n, thresholds);
        for (std::size_t k = 0; k < thresholds.size(); ++k)
            REQUIRE(cert.entries[k].first_passage == oracle::first_passage(d, thresholds[k]));
        for (const auto& g : graphs) {
            REQUIRE(collision_scan(a, b, g, n).positions == oracle::collisions(a, b, g, n));
            REQUIRE(completely_different_check(a, b, g, n) == oracle::first_non_edge(a, b, g, n));
        }
    }
}
