#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alexpara/check.hpp"
#include "alexpara/poset.hpp"

namespace alexpara {

enum class Cardinality { finite, countable, continuum };

std::string to_string(Cardinality c);

/// Upper covers of an element: an explicit finite list, "dense" (no covers
/// exist, as in Q-based chains), or "unsupported" (enumeration unreasonable).
struct CoversAbove {
    enum class Kind { finite, dense, unsupported };
    Kind kind = Kind::unsupported;
    std::vector<std::string> elems;

    static CoversAbove finite(std::vector<std::string> e) {
        return {Kind::finite, std::move(e)};
    }
    static CoversAbove dense() { return {Kind::dense, {}}; }
    static CoversAbove unsupported() { return {Kind::unsupported, {}}; }
};

/// Definitive answer of an oracle-side bound finder. "none_exists" is a
/// claim of nonexistence (e.g. across disjoint components); "unknown" defers
/// to ball search.
struct BoundAnswer {
    enum class Kind { found, none_exists, unknown };
    Kind kind = Kind::unknown;
    std::string witness;
};

/// Symbolic (possibly infinite) paratopological group. Elements are
/// canonical strings; all members are pure functions.
struct GroupOracle {
    std::string name;
    std::string identity;
    std::function<std::string(const std::string&, const std::string&)> mul;
    std::function<std::string(const std::string&)> inv;
    std::function<bool(const std::string&, const std::string&)> leq;
    std::function<CoversAbove(const std::string&)> covers_above;
    std::vector<std::string> generators;
    Cardinality cardinality = Cardinality::countable;
    bool abelian = false;

    /// Parses any accepted spelling back to the canonical one.
    std::function<std::string(const std::string&)> decode;
    /// Seeded pseudo-random element.
    std::function<std::string(std::mt19937_64&)> sample;

    /// Optional definitive common-bound finders; null means "search".
    std::function<BoundAnswer(const std::string&, const std::string&)> lower_bound_hint;
    std::function<BoundAnswer(const std::string&, const std::string&)> upper_bound_hint;

    std::string encode(const std::string& canonical) const { return canonical; }
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

/// Search and sampling caps. ALEXPARA_BUDGET / --budget override ball_cap.
struct Budget {
    int ball_depth = 3;
    int search_depth = 4;
    std::size_t ball_cap = 100000;
    std::size_t ideal_cap = 4096;
    std::size_t random_samples = 200;
};

/// Subset description: membership plus optional witness maps. When
/// lower_witness is present, a nullopt return is a definitive claim that no
/// member of the subset lies below the argument (dually for upper_witness).
struct SubsetSpec {
    std::string name;
    std::function<bool(const std::string&)> member;
    std::function<std::optional<std::string>(const std::string&)> lower_witness;
    std::function<std::optional<std::string>(const std::string&)> upper_witness;
    /// Nonempty marks the subset as exactly this finite set.
    std::vector<std::string> finite_elements;
};

/// Finite fragment of an oracle with the induced order.
struct Window {
    OraclePtr oracle;
    FinitePoset poset;

    const std::vector<std::string>& elements() const { return poset.elements(); }
    std::size_t size() const { return poset.size(); }
};

/// All products of at most `depth` generator/inverse-generator factors.
/// Deterministic discovery order. Throws ExplosionLimit above `cap`.
std::vector<std::string> ball(const GroupOracle& o, int depth, std::size_t cap = 100000);

/// Induced poset on the (deduplicated) element set.
Window make_window(OraclePtr o, std::vector<std::string> elems);

/// Re-checks every pair of the window against the raw oracle.
bool verify_window_order(const Window& w);

/// ball(depth) plus `extra_random` sampled elements, deduplicated.
std::vector<std::string> default_sample(const GroupOracle& o, int depth,
                                        std::size_t extra_random, std::uint64_t seed,
                                        std::size_t cap = 100000);

/// Comparable pairs (a, b) with a <= b drawn from the sample set.
std::vector<std::pair<std::string, std::string>> comparable_pairs(
    const GroupOracle& o, const std::vector<std::string>& sample, std::size_t limit);

struct SearchOutcome {
    enum class Kind { found, none_exists, exhausted };
    Kind kind = Kind::exhausted;
    std::string witness;
};

SearchOutcome find_common_lower(const GroupOracle& o, const std::string& x,
                                const std::string& y, const Budget& budget);
SearchOutcome find_common_upper(const GroupOracle& o, const std::string& x,
                                const std::string& y, const Budget& budget);

/// Componentwise product with '|'-joined encodings (flat, not nestable).
OraclePtr product_oracle(const std::vector<OraclePtr>& factors);
SubsetSpec product_subset(const std::vector<OraclePtr>& factors,
                          const std::vector<SubsetSpec>& specs);

CheckResult check_group_axioms(const GroupOracle& o, const std::vector<std::string>& sample,
                               std::uint64_t seed);
CheckResult check_translations_monotone(
    const GroupOracle& o, const std::vector<std::pair<std::string, std::string>>& sample,
    const std::vector<std::string>& translators, std::uint64_t seed);
CheckResult check_inversion_monotone(
    const GroupOracle& o, const std::vector<std::pair<std::string, std::string>>& sample,
    std::uint64_t seed);
CheckResult check_homomorphism(
    const std::function<std::string(const std::string&)>& f, const GroupOracle& src,
    const GroupOracle& dst, const std::vector<std::string>& sample, std::uint64_t seed);

/// Re-executes a witness trace against the raw oracle; members are resolved
/// through `subsets` for "member:<name>" steps.
bool replay_witness(const GroupOracle& o, const std::vector<TraceStep>& steps,
                    const std::vector<SubsetSpec>& subsets = {});

}  // namespace alexpara
