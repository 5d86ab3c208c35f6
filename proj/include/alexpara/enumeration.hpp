#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alexpara/poset.hpp"

namespace alexpara {

/// Finite group given by an explicit multiplication table (verified at load:
/// Latin square, associativity, identity, inverses).
struct GroupTable {
    std::string name;
    std::size_t order = 0;
    std::vector<std::size_t> table;  // row-major, table[i*order+j] = i*j
    std::vector<std::string> element_names;
    std::size_t identity = 0;

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i * order + j]; }
    std::size_t inv(std::size_t i) const;
};

/// The 8 groups of order <= 6: C1..C6, V4, S3.
const std::vector<GroupTable>& embedded_groups();

/// Labeled posets on {0..n-1} encoded as n*n relation bit masks
/// (bit i*n+j set iff i <= j). Keys are emitted in ascending order.
void for_each_labeled_poset_key(std::size_t n, const std::function<void(std::uint64_t)>& fn);
std::size_t count_labeled_posets(std::size_t n);

/// Materialized stream with labels "0".."n-1". Throws SizeLimitExceeded for
/// n > 6.
std::vector<FinitePoset> enumerate_labeled_posets(std::size_t n);

FinitePoset poset_from_key(std::uint64_t key, const std::vector<std::string>& labels);
std::uint64_t poset_key(const FinitePoset& p);

/// All labeled posets on the group's carrier for which every left and right
/// translation is order-preserving (optionally also inversion).
std::vector<FinitePoset> monotone_orders(const GroupTable& g, bool require_inversion = false);

struct EnumerationReport {
    std::string group;
    std::size_t order = 0;
    std::size_t posets_examined = 0;
    std::size_t monotone_orders_found = 0;
    std::vector<std::string> non_discrete_survivors;  // cover-pair dumps, expected empty
    std::size_t connected_survivors = 0;
    bool topological = false;
    double runtime_ms = 0.0;

    bool theorem_confirmed() const { return non_discrete_survivors.empty(); }
};

/// Runs monotone_orders over every embedded group of order <= max_order.
std::vector<EnumerationReport> verify_discreteness_theorem(std::size_t max_order);
/// Same but additionally requires inversion monotone; the only connected
/// survivor across all groups must be the one-point space.
std::vector<EnumerationReport> verify_topgroup_triviality(std::size_t max_order);

std::string reports_to_json(const std::vector<EnumerationReport>& reports, int indent = -1);

}  // namespace alexpara
