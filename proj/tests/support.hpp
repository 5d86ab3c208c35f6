#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alexpara/poset.hpp"

namespace alexpara::test {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline FinitePoset chain(std::size_t n) {
    std::vector<std::string> els;
    Pairs covers;
    for (std::size_t i = 0; i < n; ++i) {
        els.push_back("c" + std::to_string(i));
        if (i) covers.emplace_back("c" + std::to_string(i - 1), "c" + std::to_string(i));
    }
    return FinitePoset::from_cover_pairs(els, covers);
}

inline FinitePoset antichain(std::size_t n) {
    std::vector<std::string> els;
    for (std::size_t i = 0; i < n; ++i) els.push_back("a" + std::to_string(i));
    return FinitePoset::from_cover_pairs(els, {});
}

inline FinitePoset diamond() {
    return FinitePoset::from_cover_pairs({"a", "b", "c", "d"},
                                         {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// Minimal finite model of the circle: two levels of 2-antichains.
inline FinitePoset circle4() {
    return FinitePoset::from_cover_pairs({"a", "b", "c", "d"},
                                         {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// Independent oracle: maximum antichain by exhaustive subset scan (n <= 20).
inline std::size_t brute_max_antichain(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::size_t count = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask & (std::uint64_t(1) << i))) continue;
            ++count;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask & (std::uint64_t(1) << j)) && p.comparable(i, j)) ok = false;
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

// As above but the antichain must contain `x`.
inline std::size_t brute_max_antichain_through(const FinitePoset& p, const std::string& x) {
    const std::size_t xi = p.index_of(x);
    std::vector<std::size_t> incomp;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!p.comparable(xi, j)) incomp.push_back(j);
    return 1 + brute_max_antichain(p.restrict(incomp));
}

inline bool is_antichain(const FinitePoset& p, const std::vector<std::string>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (p.comparable(p.index_of(set[i]), p.index_of(set[j]))) return false;
    return true;
}

// Random labeled poset: closure of a random acyclic cover relation.
inline FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double edge_prob = 0.3) {
    std::vector<std::string> els;
    for (std::size_t i = 0; i < n; ++i) els.push_back("r" + std::to_string(i));
    Pairs covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < edge_prob)
                covers.emplace_back(els[i], els[j]);
    return FinitePoset::from_cover_pairs(els, covers);
}

}  // namespace alexpara::test
