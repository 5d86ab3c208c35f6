#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace alexpara {

/// Finite partial order: a list of labels plus a dense reflexive,
/// antisymmetric, transitive boolean relation matrix.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Order is the reflexive-transitive closure of the cover pairs.
    /// Throws CycleDetected if the closure violates antisymmetry and
    /// UnknownLabel if a pair references a label not in `elements`.
    static FinitePoset from_cover_pairs(
        std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

    /// Wraps an explicit relation matrix (row-major, leq[i*n+j] means i <= j).
    /// Validates the partial-order axioms.
    static FinitePoset from_leq_matrix(std::vector<std::string> elements,
                                       std::vector<uint8_t> leq);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& label(std::size_t i) const { return elements_[i]; }

    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
    bool leq(const std::string& a, const std::string& b) const {
        return leq(index_of(a), index_of(b));
    }
    bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    /// Throws UnknownLabel.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    /// Induced subposet on the given node indices (kept in ascending order).
    FinitePoset restrict(const std::vector<std::size_t>& nodes) const;

    bool same_order_as(const FinitePoset& other) const;

private:
    std::vector<std::string> elements_;
    std::vector<uint8_t> leq_;  // n*n, row-major
    std::unordered_map<std::string, std::size_t> index_;

    void rebuild_index();
    friend FinitePoset opposite(const FinitePoset&);
    friend FinitePoset join(const FinitePoset&, const FinitePoset&);
};

/// Transitive reduction of the strict order (the Hasse diagram).
struct CoverGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper)
};

/// U_S = { y | y <= s for some s in S }.
std::vector<std::string> down_set(const FinitePoset& p, const std::vector<std::string>& s);
/// F_S = { y | y >= s for some s in S }.
std::vector<std::string> up_set(const FinitePoset& p, const std::vector<std::string>& s);

CoverGraph covers(const FinitePoset& p);

/// Maximum antichain, computed via Koenig's theorem on the comparability
/// bipartite graph; the witness is reconstructed from a minimum vertex cover.
std::vector<std::string> max_antichain(const FinitePoset& p);
std::size_t width(const FinitePoset& p);

/// Minimum chain cover from the same matching (Dilworth duality).
std::vector<std::vector<std::string>> min_chain_cover(const FinitePoset& p);

/// Longest chain length minus one; 0 for the empty poset.
std::size_t height(const FinitePoset& p);
/// Height of U_x.
std::size_t height_of(const FinitePoset& p, const std::string& x);
/// Height level of every node.
std::vector<std::size_t> height_levels(const FinitePoset& p);

/// Maximum-size antichain constrained to contain x.
std::vector<std::string> maximal_antichain_through(const FinitePoset& p, const std::string& x);

bool is_connected(const FinitePoset& p);
bool is_hyperconnected(const FinitePoset& p);
bool is_ultraconnected(const FinitePoset& p);
bool is_directed(const FinitePoset& p);

/// Connected components of the comparability graph, each sorted by node index.
std::vector<std::vector<std::size_t>> connected_components(const FinitePoset& p);

FinitePoset opposite(const FinitePoset& p);

/// Disjoint union with every p-element below every q-element.
/// Clashing q labels are suffixed with ' until unique.
FinitePoset join(const FinitePoset& p, const FinitePoset& q);

enum class BeatKind { up, down };

struct BeatPoint {
    std::string element;
    BeatKind kind;
};

/// x is a down (up) beat point when U_x \ {x} has a maximum (F_x \ {x} has a
/// minimum). An element can appear once per kind.
std::vector<BeatPoint> beat_points(const FinitePoset& p);

/// Removes the lowest-index beat point until none remain.
FinitePoset core(const FinitePoset& p);

/// Euler characteristic of the order complex: sum over k of
/// (-1)^k * (number of (k+1)-element chains).
long long euler_characteristic(const FinitePoset& p);

/// Some(n) iff every height level is an n-element antichain and each element
/// covers exactly the full level beneath it.
std::optional<std::size_t> is_iterated_antichain_join(const FinitePoset& p);

/// Backtracking order-isomorphism search with degree/height pruning.
/// Throws SizeLimitExceeded above 40 elements.
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

}  // namespace alexpara
