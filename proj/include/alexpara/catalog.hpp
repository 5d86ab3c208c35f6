#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alexpara/check.hpp"
#include "alexpara/oracle.hpp"

namespace alexpara {

/// Invariants known in advance for a catalog space, used to drive the
/// invariants command and to declare expected-fail negative controls.
struct ExpectedInvariants {
    CoversAbove::Kind radius_kind = CoversAbove::Kind::finite;
    long radius = 0;  // meaningful when finite; dense is reported as 0
    std::optional<long> width;  // nullopt = infinite
    bool connected = true;
    bool hyperconnected = true;
    bool abelian = true;
    bool has_beat_points = false;
    Cardinality cardinality = Cardinality::countable;
    /// Per-law expected status; anything absent defaults to pass.
    std::map<std::string, CheckStatus> law_status;
};

struct CatalogEntry {
    std::string name;
    std::map<std::string, long> params;
    OraclePtr oracle;
    ExpectedInvariants expected;
    /// Structured window around the identity (boxes, full levels, grids).
    std::function<std::vector<std::string>(int depth)> window_elems;
    /// A fixed element strictly above the identity.
    std::string chain_generator;
    std::map<std::string, SubsetSpec> subsets;
    std::string default_subset;
    /// Countable set A with an upper witness, for the X = A*U_1 factoring.
    SubsetSpec omega_narrow_set;

    std::string display() const;
    const SubsetSpec& subset(const std::string& name) const;
};

/// Names: int_chain, rat_chain, int_vectors (k), sym_loewner (n), gl_det (n),
/// width_join (n), disjoint_chains_int (n), disjoint_chains_rat (n).
CatalogEntry catalog_build(const std::string& name,
                           const std::map<std::string, long>& params = {});
std::vector<std::string> catalog_names();

/// `count` distinct determinant-1 rational matrices including the identity.
std::vector<std::string> sl_antichain_sample(std::size_t n, std::size_t count);

/// Trivial one-point group, handy as the degenerate control.
OraclePtr trivial_oracle();

}  // namespace alexpara
