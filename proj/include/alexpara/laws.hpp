#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alexpara/catalog.hpp"
#include "alexpara/check.hpp"
#include "alexpara/oracle.hpp"

namespace alexpara {

struct RadiusResult {
    CoversAbove::Kind kind = CoversAbove::Kind::unsupported;
    std::size_t value = 0;  // |covers_above(1)| when finite, else 0
};

/// r(X) = number of upper covers of the identity.
RadiusResult radius(const GroupOracle& o);

/// Lower covers of x, derived by translating the identity's upper covers:
/// y covers-below x iff x * c^{-1} for some upper cover c of 1.
std::vector<std::string> covers_below_of(const GroupOracle& o, const std::string& x);

/// Window elements whose full (upper and lower) cover sets lie in the window.
std::vector<std::string> interior_elements(const Window& w);

/// Family of identity neighborhoods, each downward closed and containing 1.
struct SubordinatedFamily {
    std::vector<SubsetSpec> neighborhoods;
    bool countable = true;
};

/// U_1 = { u | u <= 1 } as a subset spec (named "U_1").
SubsetSpec identity_down_set_spec(OraclePtr o);
/// F_1 = { u | u >= 1 }, the standard negative control for subordination.
SubsetSpec identity_up_set_spec(OraclePtr o);

// --- individual laws -------------------------------------------------------

CheckResult law_inverse_flip(const OraclePtr& o, const std::vector<std::string>& sample,
                             std::uint64_t seed);
CheckResult law_opposite_identity_neighborhoods(const OraclePtr& o, const Window& w,
                                                std::uint64_t seed);
CheckResult law_open_inverse_closed(const OraclePtr& o, const Window& w, const Budget& budget,
                                    std::uint64_t seed);
CheckResult law_no_torsion_near_identity(const OraclePtr& o, const Window& w,
                                         std::size_t max_power, std::uint64_t seed);
CheckResult law_translation_homogeneity(const OraclePtr& o, const Window& w,
                                        const std::string& x, std::uint64_t seed);
CheckResult law_beat_dichotomy(const OraclePtr& o, const Window& w, std::uint64_t seed);
CheckResult law_directed_iff_hyperconnected(
    const OraclePtr& o, const std::vector<std::pair<std::string, std::string>>& pairs,
    const Budget& budget, std::uint64_t seed);
CheckResult law_2_pseudocompact(const OraclePtr& o,
                                const std::vector<std::string>& descending_chain,
                                std::uint64_t seed);
CheckResult feebly_bounded_check(const OraclePtr& o, const SubsetSpec& B,
                                 const std::vector<std::string>& sample, const Budget& budget,
                                 std::uint64_t seed);
CheckResult law_product_feebly_bounded(const std::vector<OraclePtr>& oracles,
                                       const std::vector<SubsetSpec>& specs,
                                       std::size_t sample_count, const Budget& budget,
                                       std::uint64_t seed);
CheckResult law_product_set_feebly_bounded(const OraclePtr& o, const SubsetSpec& A,
                                           const SubsetSpec& B,
                                           const std::vector<std::string>& sample,
                                           std::uint64_t seed);
CheckResult law_subordinated(const OraclePtr& o, const SubordinatedFamily& gamma,
                             const SubsetSpec& U, const std::vector<std::string>& xs,
                             const std::vector<std::string>& universe, std::uint64_t seed);
CheckResult law_omega_narrow(const OraclePtr& o, const SubsetSpec& A, bool countable,
                             const std::vector<std::string>& sample, const Budget& budget,
                             std::uint64_t seed);
CheckResult law_totally_omega_narrow(const OraclePtr& o, std::uint64_t seed);
CheckResult law_unbounded_height(const OraclePtr& o, const std::string& g, std::size_t k,
                                 std::uint64_t seed);
CheckResult law_radius_relations(const OraclePtr& o, const CatalogEntry* entry,
                                 const Window& w, const std::vector<std::string>& sample,
                                 std::uint64_t seed);
CheckResult law_classification(const OraclePtr& o, const CatalogEntry* entry, const Window& w,
                               std::uint64_t seed);

// --- registry ---------------------------------------------------------------

constexpr std::uint64_t kDefaultSeed = 20260810;

struct LawContext {
    CatalogEntry entry;
    int depth = 3;
    std::uint64_t seed = kDefaultSeed;
    Budget budget;
    std::string subset;  // empty -> entry.default_subset
};

std::vector<std::string> law_ids();
/// Resolves aliases ("hyperconnected"); throws BadParameter for unknown ids.
std::string canonical_law_id(const std::string& id);
CheckResult run_law(const std::string& id, const LawContext& ctx);

/// Declared expectation for a law on an example ("law@subset" overrides "law";
/// anything undeclared is expected to pass).
CheckStatus expected_law_status(const CatalogEntry& e, const std::string& law_id,
                                const std::string& subset);

}  // namespace alexpara
