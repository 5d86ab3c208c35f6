#include <doctest.h>

#include <random>

#include "alexpara/enumeration.hpp"
#include "alexpara/poset.hpp"
#include "support.hpp"

using namespace alexpara;
using namespace alexpara::test;

namespace {
constexpr std::uint64_t kSeed = 0x5eed2026;
}

TEST_CASE("down_set/up_set duality through the opposite order") {
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 40; ++t) {
        auto p = random_poset(rng, 1 + t % 9);
        auto op = opposite(p);
        for (const auto& e : p.elements()) {
            CHECK(down_set(p, {e}) == up_set(op, {e}));
            CHECK(up_set(p, {e}) == down_set(op, {e}));
        }
    }
}

TEST_CASE("covers then closure reproduces the poset") {
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < 60; ++t) {
        auto p = random_poset(rng, 1 + t % 10);
        auto g = covers(p);
        std::vector<std::pair<std::string, std::string>> pairs;
        for (auto [lo, hi] : g.edges) pairs.emplace_back(g.nodes[lo], g.nodes[hi]);
        auto q = FinitePoset::from_cover_pairs(p.elements(), pairs);
        CHECK(q.same_order_as(p));
    }
}

TEST_CASE("opposite is an involution preserving width and height") {
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 40; ++t) {
        auto p = random_poset(rng, 1 + t % 9);
        auto op = opposite(p);
        CHECK(opposite(op).same_order_as(p));
        CHECK(width(p) == width(op));
        CHECK(height(p) == height(op));
    }
}

TEST_CASE("Dilworth consistency, exhaustive on small carriers") {
    // Matching-based width vs. both the brute-force antichain oracle and the
    // chain-cover dual, over every labeled poset with at most 5 elements.
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_labeled_posets(n)) {
            const std::size_t w = width(p);
            CHECK(w == brute_max_antichain(p));
            CHECK(w == min_chain_cover(p).size());
            auto witness = max_antichain(p);
            CHECK(witness.size() == w);
            CHECK(is_antichain(p, witness));
        }
    }
}

TEST_CASE("Dilworth consistency, exhaustive at 6 elements") {
    const std::vector<std::string> labels{"0", "1", "2", "3", "4", "5"};
    for_each_labeled_poset_key(6, [&](std::uint64_t key) {
        auto p = poset_from_key(key, labels);
        const std::size_t w = width(p);
        CHECK(w == brute_max_antichain(p));
        CHECK(w == min_chain_cover(p).size());
    });
}

TEST_CASE("Dilworth consistency on sampled 7-element posets") {
    std::mt19937_64 rng(kSeed + 3);
    for (int t = 0; t < 1500; ++t) {
        auto p = random_poset(rng, 7, 0.35);
        const std::size_t w = width(p);
        CHECK(w == brute_max_antichain(p));
        CHECK(w == min_chain_cover(p).size());
        auto witness = max_antichain(p);
        CHECK(witness.size() == w);
        CHECK(is_antichain(p, witness));
    }
}

TEST_CASE("maximal antichain through x is maximum among those containing x") {
    std::mt19937_64 rng(kSeed + 4);
    for (int t = 0; t < 150; ++t) {
        auto p = random_poset(rng, 2 + t % 7);
        const auto& x = p.elements()[t % p.size()];
        auto a = maximal_antichain_through(p, x);
        CHECK(is_antichain(p, a));
        CHECK(std::find(a.begin(), a.end(), x) != a.end());
        CHECK(a.size() == brute_max_antichain_through(p, x));
    }
}

TEST_CASE("directed implies ultraconnected, exhaustively for posets up to 6 elements") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_labeled_posets(n))
            if (is_directed(p)) CHECK(is_ultraconnected(p));
    std::size_t checked = 0, directed = 0, violations = 0;
    const std::vector<std::string> labels{"0", "1", "2", "3", "4", "5"};
    for_each_labeled_poset_key(6, [&](std::uint64_t key) {
        ++checked;
        auto p = poset_from_key(key, labels);
        if (!is_directed(p)) return;
        ++directed;
        if (!is_ultraconnected(p)) ++violations;
    });
    CHECK(checked == 130023);
    CHECK(directed > 0);
    CHECK(violations == 0);
}

TEST_CASE("core is idempotent and preserves the euler characteristic") {
    std::mt19937_64 rng(kSeed + 5);
    for (int t = 0; t < 60; ++t) {
        auto p = random_poset(rng, 1 + t % 9);
        auto c = core(p);
        CHECK(core(c).same_order_as(c));
        CHECK(euler_characteristic(c) == euler_characteristic(p));
    }
}

TEST_CASE("join associativity up to isomorphism and height additivity") {
    std::mt19937_64 rng(kSeed + 6);
    for (int t = 0; t < 25; ++t) {
        auto p = random_poset(rng, 1 + t % 4);
        auto q = random_poset(rng, 1 + (t + 1) % 4);
        auto r = random_poset(rng, 1 + (t + 2) % 4);
        CHECK(is_isomorphic(join(join(p, q), r), join(p, join(q, r))));
        CHECK(height(join(p, q)) == height(p) + height(q) + 1);
    }
}
