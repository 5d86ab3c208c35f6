#include "alexpara/laws.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "alexpara/errors.hpp"

namespace alexpara {

namespace {

void step(CheckResult& r, std::string op, std::vector<std::string> args, std::string result) {
    r.witness.push_back({std::move(op), std::move(args), std::move(result)});
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool window_has(const Window& w, const std::string& x) { return w.poset.contains(x); }

}  // namespace

RadiusResult radius(const GroupOracle& o) {
    CoversAbove c = o.covers_above(o.identity);
    RadiusResult r;
    r.kind = c.kind;
    if (c.kind == CoversAbove::Kind::finite) r.value = c.elems.size();
    return r;
}

std::vector<std::string> covers_below_of(const GroupOracle& o, const std::string& x) {
    CoversAbove c = o.covers_above(o.identity);
    if (c.kind != CoversAbove::Kind::finite)
        throw BadParameter("covers_below_of needs finite identity covers");
    std::vector<std::string> out;
    out.reserve(c.elems.size());
    for (const auto& cov : c.elems) out.push_back(o.mul(x, o.inv(cov)));
    return out;
}

std::vector<std::string> interior_elements(const Window& w) {
    const GroupOracle& o = *w.oracle;
    if (o.covers_above(o.identity).kind != CoversAbove::Kind::finite) return {};
    std::vector<std::string> out;
    for (const auto& x : w.elements()) {
        CoversAbove ups = o.covers_above(x);
        if (ups.kind != CoversAbove::Kind::finite) return {};
        bool ok = true;
        for (const auto& u : ups.elems)
            if (!window_has(w, u)) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& d : covers_below_of(o, x))
                if (!window_has(w, d)) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(x);
    }
    return out;
}

SubsetSpec identity_down_set_spec(OraclePtr o) {
    SubsetSpec s;
    s.name = "U_1";
    s.member = [o](const std::string& x) { return o->leq(x, o->identity); };
    s.lower_witness = [o](const std::string& x) -> std::optional<std::string> {
        if (o->leq(x, o->identity)) return x;
        if (o->leq(o->identity, x)) return o->identity;
        return std::nullopt;
    };
    return s;
}

SubsetSpec identity_up_set_spec(OraclePtr o) {
    SubsetSpec s;
    s.name = "F_1";
    s.member = [o](const std::string& x) { return o->leq(o->identity, x); };
    return s;
}

CheckResult law_inverse_flip(const OraclePtr& o, const std::vector<std::string>& sample,
                             std::uint64_t seed) {
    CheckResult r = make_result("inverse_flip", CheckStatus::pass, seed, 0);
    for (const auto& x : sample) {
        if (x == o->identity || !o->leq(o->identity, x)) continue;
        ++r.samples_used;
        const std::string ix = o->inv(x);
        if (!o->leq(ix, o->identity)) {
            r.status = CheckStatus::fail;
            step(r, "leq", {o->identity, x}, "true");
            step(r, "inv", {x}, ix);
            step(r, "leq", {ix, o->identity}, "false");
            r.note = "x >= 1 but x^-1 is not <= 1 at x = " + x;
            return r;
        }
    }
    if (r.samples_used == 0) {
        r.status = CheckStatus::inapplicable;
        r.note = "F_1 meets the sample only at the identity";
    }
    return r;
}

CheckResult law_opposite_identity_neighborhoods(const OraclePtr& o, const Window& w,
                                                std::uint64_t seed) {
    CheckResult r = make_result("opposite_identity", CheckStatus::pass, seed, w.size());
    for (const auto& x : w.elements()) {
        const bool in_u1 = o->leq(x, o->identity);
        const std::string ix = o->inv(x);
        const bool inv_in_f1 = o->leq(o->identity, ix);
        if (in_u1 != inv_in_f1) {
            r.status = CheckStatus::fail;
            step(r, "leq", {x, o->identity}, bool_str(in_u1));
            step(r, "inv", {x}, ix);
            step(r, "leq", {o->identity, ix}, bool_str(inv_in_f1));
            r.note = "U_1^op = F_1 breaks at " + x;
            return r;
        }
    }
    return r;
}

namespace {

// Order ideals (down-sets) of the poset, capped. Deterministic order.
std::vector<std::vector<std::size_t>> order_ideals(const FinitePoset& p, std::size_t cap) {
    const std::size_t n = p.size();
    std::vector<std::size_t> topo(n);
    {
        std::vector<std::size_t> below(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p.lt(j, i)) ++below[i];
        for (std::size_t i = 0; i < n; ++i) topo[i] = i;
        std::stable_sort(topo.begin(), topo.end(),
                         [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    }
    std::vector<std::vector<char>> ideals{std::vector<char>(n, 0)};
    for (auto e : topo) {
        const std::size_t count = ideals.size();
        for (std::size_t i = 0; i < count && ideals.size() < cap; ++i) {
            bool closed = true;
            for (std::size_t j = 0; j < n && closed; ++j)
                if (p.lt(j, e) && !ideals[i][j]) closed = false;
            if (!closed) continue;
            auto ext = ideals[i];
            ext[e] = 1;
            ideals.push_back(std::move(ext));
        }
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(ideals.size());
    for (const auto& mask : ideals) {
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) set.push_back(i);
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace

CheckResult law_open_inverse_closed(const OraclePtr& o, const Window& w, const Budget& budget,
                                    std::uint64_t seed) {
    CheckResult r = make_result("open_inverse_closed", CheckStatus::pass, seed, 0);
    // Work inside the inversion-closed core of the window.
    std::vector<std::size_t> core_nodes;
    std::vector<std::string> inv_of;  // per window node
    inv_of.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        inv_of[i] = o->inv(w.elements()[i]);
        if (window_has(w, inv_of[i])) core_nodes.push_back(i);
    }
    if (core_nodes.size() < 2) {
        r.status = CheckStatus::inapplicable;
        r.note = "inversion-closed core of the window is too small";
        return r;
    }
    FinitePoset p = w.poset.restrict(core_nodes);
    std::vector<std::size_t> inv_node(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv_node[i] = p.index_of(inv_of[w.poset.index_of(p.label(i))]);

    auto ideals = order_ideals(p, budget.ideal_cap);
    r.samples_used = ideals.size();
    std::vector<char> in_set(p.size());
    for (const auto& ideal : ideals) {
        // U^-1 must be up-closed, and dually (W' \ U)^-1 must be down-closed.
        std::fill(in_set.begin(), in_set.end(), 0);
        for (auto u : ideal) in_set[inv_node[u]] = 1;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (!in_set[v]) continue;
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (!p.leq(v, y)) continue;
                if (!in_set[y]) {
                    r.status = CheckStatus::fail;
                    step(r, "leq", {p.label(v), p.label(y)}, "true");
                    step(r, "inv", {p.label(y)}, p.label(inv_node[y]));
                    r.note = "inverse of a down-set is not upward closed at " + p.label(y);
                    return r;
                }
            }
        }
        std::fill(in_set.begin(), in_set.end(), 0);
        std::vector<char> in_ideal(p.size(), 0);
        for (auto u : ideal) in_ideal[u] = 1;
        for (std::size_t u = 0; u < p.size(); ++u)
            if (!in_ideal[u]) in_set[inv_node[u]] = 1;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (!in_set[v]) continue;
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (!p.leq(y, v)) continue;
                if (!in_set[y]) {
                    r.status = CheckStatus::fail;
                    step(r, "leq", {p.label(y), p.label(v)}, "true");
                    step(r, "inv", {p.label(y)}, p.label(inv_node[y]));
                    r.note = "inverse of an up-set is not downward closed at " + p.label(y);
                    return r;
                }
            }
        }
    }
    r.note = "checked " + std::to_string(ideals.size()) + " down-sets (and dual up-sets)";
    return r;
}

CheckResult law_no_torsion_near_identity(const OraclePtr& o, const Window& w,
                                         std::size_t max_power, std::uint64_t seed) {
    CheckResult r = make_result("no_torsion", CheckStatus::pass, seed, 0);
    std::size_t torsion_seen = 0;
    for (const auto& x : w.elements()) {
        if (x == o->identity) continue;
        ++r.samples_used;
        const bool comparable = o->leq(o->identity, x) || o->leq(x, o->identity);
        std::string p = x;
        for (std::size_t k = 2; k <= max_power; ++k) {
            p = o->mul(p, x);
            if (p == o->identity) {
                if (comparable) {
                    r.status = CheckStatus::fail;
                    step(r, "leq", {o->identity, x}, bool_str(o->leq(o->identity, x)));
                    step(r, "leq", {x, o->identity}, bool_str(o->leq(x, o->identity)));
                    r.note = x + " is comparable to 1 yet has order " + std::to_string(k);
                    return r;
                }
                ++torsion_seen;
                break;
            }
        }
    }
    if (torsion_seen)
        r.note = std::to_string(torsion_seen) +
                 " finite-order elements found, all incomparable to the identity";
    return r;
}

CheckResult law_translation_homogeneity(const OraclePtr& o, const Window& w,
                                        const std::string& x, std::uint64_t seed) {
    CheckResult r = make_result("translation_homogeneity", CheckStatus::pass, seed, 0);
    if (!window_has(w, o->identity)) {
        r.status = CheckStatus::inapplicable;
        r.note = "window does not contain the identity";
        return r;
    }
    auto check_side = [&](const std::vector<std::string>& part) -> bool {
        if (part.size() < 2) return true;
        std::vector<std::string> image;
        image.reserve(part.size());
        for (const auto& a : part) image.push_back(o->mul(x, a));
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = 0; j < part.size(); ++j) {
                const bool before = o->leq(part[i], part[j]);
                const bool after = o->leq(image[i], image[j]);
                if (before != after) {
                    r.status = CheckStatus::fail;
                    step(r, "leq", {part[i], part[j]}, bool_str(before));
                    step(r, "mul", {x, part[i]}, image[i]);
                    step(r, "mul", {x, part[j]}, image[j]);
                    step(r, "leq", {image[i], image[j]}, bool_str(after));
                    r.note = "left translation by " + x + " is not an order isomorphism";
                    return false;
                }
            }
        r.samples_used += part.size();
        if (part.size() <= 40) {
            Window img = make_window(o, image);
            FinitePoset sub = w.poset;
            std::vector<std::size_t> idx;
            for (const auto& a : part) idx.push_back(w.poset.index_of(a));
            if (!is_isomorphic(sub.restrict(idx), img.poset)) {
                r.status = CheckStatus::fail;
                r.note = "translated neighborhood is not isomorphic to the original";
                return false;
            }
        }
        return true;
    };
    auto u1 = down_set(w.poset, {o->identity});
    auto f1 = up_set(w.poset, {o->identity});
    if (u1.size() < 2 && f1.size() < 2) {
        r.status = CheckStatus::inapplicable;
        r.note = "window too small around the identity";
        return r;
    }
    if (!check_side(u1)) return r;
    if (!check_side(f1)) return r;
    return r;
}

namespace {

// Trace that m is the maximum of the strictly-below set of x (or minimum of
// the strictly-above set), to make beat-point failures replayable.
void trace_beat(CheckResult& r, const OraclePtr& o, const Window& w, const std::string& x) {
    const auto& p = w.poset;
    const std::size_t xi = p.index_of(x);
    std::vector<std::size_t> below, above;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.lt(j, xi)) below.push_back(j);
        if (p.lt(xi, j)) above.push_back(j);
    }
    auto emit = [&](const std::vector<std::size_t>& side, bool down) {
        for (auto m : side) {
            bool extremal = true;
            for (auto j : side)
                if (down ? !p.leq(j, m) : !p.leq(m, j)) {
                    extremal = false;
                    break;
                }
            if (extremal) {
                std::size_t emitted = 0;
                for (auto j : side) {
                    if (j == m || emitted >= 3) break;
                    step(r, "leq",
                         down ? std::vector<std::string>{p.label(j), p.label(m)}
                              : std::vector<std::string>{p.label(m), p.label(j)},
                         "true");
                    ++emitted;
                }
                step(r, "leq",
                     down ? std::vector<std::string>{p.label(m), x}
                          : std::vector<std::string>{x, p.label(m)},
                     "true");
                return;
            }
        }
    };
    (void)o;
    emit(below, true);
    emit(above, false);
}

}  // namespace

CheckResult law_beat_dichotomy(const OraclePtr& o, const Window& w, std::uint64_t seed) {
    CheckResult r = make_result("beat_dichotomy", CheckStatus::inapplicable, seed, 0);
    if (o->covers_above(o->identity).kind != CoversAbove::Kind::finite) {
        r.note = "identity covers are dense or unsupported";
        return r;
    }
    if (!window_has(w, o->identity)) {
        r.note = "window does not contain the identity";
        return r;
    }
    auto interior = interior_elements(w);
    if (interior.empty()) {
        r.note = "window interior is empty";
        return r;
    }
    std::set<std::string> interior_set(interior.begin(), interior.end());
    if (!interior_set.count(o->identity)) {
        r.note = "identity is not interior to the window";
        return r;
    }
    r.samples_used = interior.size();
    std::set<std::string> beats;
    for (const auto& b : beat_points(w.poset)) beats.insert(b.element);

    std::vector<std::size_t> idx;
    for (const auto& e : interior) idx.push_back(w.poset.index_of(e));
    FinitePoset inner = w.poset.restrict(idx);

    if (beats.count(o->identity)) {
        // Identity is a beat point: every interior component must be a chain.
        for (const auto& comp : connected_components(inner))
            for (std::size_t a = 0; a < comp.size(); ++a)
                for (std::size_t b = a + 1; b < comp.size(); ++b)
                    if (!inner.comparable(comp[a], comp[b])) {
                        r.status = CheckStatus::fail;
                        step(r, "leq", {inner.label(comp[a]), inner.label(comp[b])}, "false");
                        step(r, "leq", {inner.label(comp[b]), inner.label(comp[a])}, "false");
                        r.note = "identity is a beat point but the interior is not a chain";
                        return r;
                    }
        r.status = CheckStatus::pass;
        r.note = "identity beat point; interior is a disjoint union of " +
                 std::to_string(connected_components(inner).size()) + " chain(s)";
        return r;
    }
    for (const auto& x : interior) {
        if (beats.count(x)) {
            r.status = CheckStatus::fail;
            trace_beat(r, o, w, x);
            r.note = "identity is not a beat point yet interior point " + x + " is";
            return r;
        }
    }
    r.status = CheckStatus::pass;
    r.note = "no interior beat points";
    return r;
}

CheckResult law_directed_iff_hyperconnected(
    const OraclePtr& o, const std::vector<std::pair<std::string, std::string>>& pairs,
    const Budget& budget, std::uint64_t seed) {
    CheckResult r = make_result("directed_hyperconnected", CheckStatus::pass, seed, pairs.size());
    bool exhausted = false;
    for (const auto& [x, y] : pairs) {
        SearchOutcome lower = find_common_lower(*o, x, y, budget);
        SearchOutcome upper = find_common_upper(*o, x, y, budget);
        const bool lower_no = lower.kind == SearchOutcome::Kind::none_exists;
        const bool upper_no = upper.kind == SearchOutcome::Kind::none_exists;
        if (lower_no || upper_no) {
            // Consistency of the biconditional: a definitive no on one side
            // must not coexist with a witness on the other.
            if ((lower_no && upper.kind == SearchOutcome::Kind::found) ||
                (upper_no && lower.kind == SearchOutcome::Kind::found)) {
                r.status = CheckStatus::fail;
                if (upper.kind == SearchOutcome::Kind::found) {
                    step(r, "leq", {x, upper.witness}, "true");
                    step(r, "leq", {y, upper.witness}, "true");
                }
                if (lower.kind == SearchOutcome::Kind::found) {
                    step(r, "leq", {lower.witness, x}, "true");
                    step(r, "leq", {lower.witness, y}, "true");
                }
                r.note = "directed <=> hyperconnected violated at (" + x + ", " + y + ")";
                return r;
            }
            r.status = CheckStatus::fail;
            step(r, "leq", {x, y}, bool_str(o->leq(x, y)));
            step(r, "leq", {y, x}, bool_str(o->leq(y, x)));
            r.note = "no common " + std::string(lower_no ? "lower" : "upper") +
                     " bound for (" + x + ", " + y + ")";
            return r;
        }
        if (lower.kind == SearchOutcome::Kind::exhausted ||
            upper.kind == SearchOutcome::Kind::exhausted) {
            exhausted = true;
            continue;
        }
        step(r, "leq", {lower.witness, x}, "true");
        step(r, "leq", {lower.witness, y}, "true");
        step(r, "leq", {x, upper.witness}, "true");
        step(r, "leq", {y, upper.witness}, "true");
        if (r.witness.size() > 12) r.witness.resize(12);
    }
    if (exhausted) {
        r.status = CheckStatus::inapplicable;
        r.note = "search budget exhausted before finding all witnesses";
    }
    return r;
}

CheckResult law_2_pseudocompact(const OraclePtr& o,
                                const std::vector<std::string>& descending_chain,
                                std::uint64_t seed) {
    if (descending_chain.empty()) throw BadChain("empty chain");
    for (std::size_t i = 0; i + 1 < descending_chain.size(); ++i) {
        const auto &hi = descending_chain[i], &lo = descending_chain[i + 1];
        if (hi == lo || !o->leq(lo, hi))
            throw BadChain("chain is not strictly descending at position " + std::to_string(i));
    }
    CheckResult r =
        make_result("two_pseudocompact", CheckStatus::pass, seed, descending_chain.size());
    const std::string& last = descending_chain.back();
    const std::string common = o->inv(last);
    step(r, "inv", {last}, common);
    for (const auto& x : descending_chain) {
        if (!o->leq(last, x)) {
            r.status = CheckStatus::fail;
            step(r, "leq", {last, x}, "false");
            r.note = "chain bottom escapes U_" + x;
            return r;
        }
        step(r, "leq", {last, x}, "true");
    }
    r.note = common + " lies in every U_i^-1 of the chain";
    return r;
}

CheckResult feebly_bounded_check(const OraclePtr& o, const SubsetSpec& B,
                                 const std::vector<std::string>& sample, const Budget& budget,
                                 std::uint64_t seed) {
    CheckResult r = make_result("feebly_bounded", CheckStatus::pass, seed, 0);
    if (!B.finite_elements.empty()) {
        // Finite subsets are never feebly bounded: escape below a minimal
        // member along any g < 1.
        std::string minimal = B.finite_elements.front();
        for (const auto& b : B.finite_elements)
            if (b != minimal && o->leq(b, minimal)) minimal = b;
        std::string g;
        CoversAbove c = o->covers_above(o->identity);
        if (c.kind == CoversAbove::Kind::finite && !c.elems.empty()) {
            g = o->inv(c.elems.front());
        } else {
            for (const auto& z : ball(*o, budget.search_depth, budget.ball_cap))
                if (z != o->identity && o->leq(z, o->identity)) {
                    g = z;
                    break;
                }
        }
        if (g.empty() || !o->leq(g, o->identity) || g == o->identity) {
            r.status = CheckStatus::inapplicable;
            r.note = "no element strictly below the identity was found";
            return r;
        }
        const std::string y = o->mul(minimal, g);
        r.status = CheckStatus::fail;
        step(r, "leq", {g, o->identity}, "true");
        step(r, "mul", {minimal, g}, y);
        for (const auto& b : B.finite_elements) {
            if (o->leq(b, y)) {
                // Should be impossible for a genuinely minimal member.
                r.status = CheckStatus::inapplicable;
                r.note = "escape construction failed; subset metadata inconsistent";
                return r;
            }
            step(r, "leq", {b, y}, "false");
        }
        r.note = "finite subset " + B.name + " misses U_" + y + " (constructed escape)";
        r.samples_used = B.finite_elements.size();
        return r;
    }
    bool exhausted = false;
    for (const auto& x : sample) {
        ++r.samples_used;
        std::optional<std::string> witness;
        if (B.lower_witness) {
            witness = B.lower_witness(x);
            if (!witness) {
                r.status = CheckStatus::fail;
                // Probe a few candidates below x so the verdict is replayable.
                std::size_t probes = 0;
                for (const auto& z : ball(*o, 2, budget.ball_cap)) {
                    const std::string zx = o->mul(x, z);
                    if (!o->leq(zx, x) || probes >= 5) continue;
                    step(r, "member:" + B.name, {zx}, bool_str(B.member(zx)));
                    ++probes;
                }
                r.note = B.name + " has no member in U_" + x;
                return r;
            }
        } else {
            for (const auto& z : ball(*o, budget.search_depth, budget.ball_cap)) {
                const std::string cand = o->mul(x, z);
                if (o->leq(cand, x) && B.member(cand)) {
                    witness = cand;
                    break;
                }
            }
            if (!witness) {
                exhausted = true;
                continue;
            }
        }
        if (!B.member(*witness) || !o->leq(*witness, x)) {
            r.status = CheckStatus::fail;
            step(r, "member:" + B.name, {*witness}, bool_str(B.member(*witness)));
            step(r, "leq", {*witness, x}, bool_str(o->leq(*witness, x)));
            r.note = "witness for " + x + " does not verify";
            return r;
        }
        if (r.witness.size() < 6) {
            step(r, "member:" + B.name, {*witness}, "true");
            step(r, "leq", {*witness, x}, "true");
        }
    }
    if (exhausted) {
        r.status = CheckStatus::inapplicable;
        r.note = "search budget exhausted before finding all witnesses";
    }
    return r;
}

CheckResult law_product_feebly_bounded(const std::vector<OraclePtr>& oracles,
                                       const std::vector<SubsetSpec>& specs,
                                       std::size_t sample_count, const Budget& budget,
                                       std::uint64_t seed) {
    OraclePtr prod = product_oracle(oracles);
    SubsetSpec pspec = product_subset(oracles, specs);
    if (!pspec.lower_witness) {
        CheckResult r = make_result("product_feebly_bounded", CheckStatus::inapplicable, seed, 0);
        r.note = "a factor subset lacks a lower witness";
        return r;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::string> sample;
    sample.reserve(sample_count);
    for (std::size_t i = 0; i < sample_count; ++i) sample.push_back(prod->sample(rng));
    CheckResult r = feebly_bounded_check(prod, pspec, sample, budget, seed);
    r.law_id = "product_feebly_bounded";
    r.note = "product of " + std::to_string(oracles.size()) + " factors: " + r.note;
    return r;
}

CheckResult law_product_set_feebly_bounded(const OraclePtr& o, const SubsetSpec& A,
                                           const SubsetSpec& B,
                                           const std::vector<std::string>& sample,
                                           std::uint64_t seed) {
    CheckResult r = make_result("product_set_feebly_bounded", CheckStatus::pass, seed, 0);
    if (!A.lower_witness || !B.lower_witness) {
        r.status = CheckStatus::inapplicable;
        r.note = "both subsets need lower witnesses";
        return r;
    }
    for (const auto& x : sample) {
        ++r.samples_used;
        auto a = A.lower_witness(x);
        if (!a) {
            r.status = CheckStatus::fail;
            r.note = A.name + " has no member below " + x;
            step(r, "member:" + A.name, {x}, bool_str(A.member(x)));
            return r;
        }
        const std::string y = o->mul(o->inv(*a), x);
        auto b = B.lower_witness(y);
        if (!b) {
            r.status = CheckStatus::fail;
            r.note = B.name + " has no member below " + y;
            step(r, "mul", {o->inv(*a), x}, y);
            return r;
        }
        const std::string c = o->mul(*a, *b);
        const bool ok = A.member(*a) && B.member(*b) && o->leq(*a, x) && o->leq(*b, y) &&
                        o->leq(c, x);
        if (!ok) {
            r.status = CheckStatus::fail;
            step(r, "member:" + A.name, {*a}, bool_str(A.member(*a)));
            step(r, "leq", {*a, x}, bool_str(o->leq(*a, x)));
            step(r, "inv", {*a}, o->inv(*a));
            step(r, "mul", {o->inv(*a), x}, y);
            step(r, "member:" + B.name, {*b}, bool_str(B.member(*b)));
            step(r, "leq", {*b, y}, bool_str(o->leq(*b, y)));
            step(r, "mul", {*a, *b}, c);
            step(r, "leq", {c, x}, bool_str(o->leq(c, x)));
            r.note = "constructed product witness fails at x = " + x;
            return r;
        }
        if (r.witness.empty()) {
            step(r, "member:" + A.name, {*a}, "true");
            step(r, "mul", {o->inv(*a), x}, y);
            step(r, "member:" + B.name, {*b}, "true");
            step(r, "mul", {*a, *b}, c);
            step(r, "leq", {c, x}, "true");
        }
    }
    return r;
}

CheckResult law_subordinated(const OraclePtr& o, const SubordinatedFamily& gamma,
                             const SubsetSpec& U, const std::vector<std::string>& xs,
                             const std::vector<std::string>& universe, std::uint64_t seed) {
    CheckResult r = make_result("subordinated", CheckStatus::pass, seed, 0);
    if (gamma.neighborhoods.empty()) {
        r.status = CheckStatus::inapplicable;
        r.note = "empty family";
        return r;
    }
    std::vector<std::vector<std::string>> v_elems;
    for (const auto& V : gamma.neighborhoods) {
        std::vector<std::string> elems;
        for (const auto& e : universe) {
            if (elems.size() >= 60) break;
            if (V.member(e)) elems.push_back(e);
        }
        v_elems.push_back(std::move(elems));
    }
    if (std::all_of(v_elems.begin(), v_elems.end(),
                    [](const auto& v) { return v.empty(); })) {
        r.status = CheckStatus::inapplicable;
        r.note = "no family member has sampled elements";
        return r;
    }
    for (const auto& x : xs) {
        ++r.samples_used;
        const std::string ix = o->inv(x);
        bool some_v_works = false;
        std::string bad_v, bad_conj;
        for (std::size_t vi = 0; vi < v_elems.size() && !some_v_works; ++vi) {
            if (v_elems[vi].empty()) continue;  // cannot certify an unsampled neighborhood
            bool all_ok = true;
            for (const auto& v : v_elems[vi]) {
                const std::string conj = o->mul(o->mul(x, v), ix);
                if (!U.member(conj)) {
                    all_ok = false;
                    bad_v = v;
                    bad_conj = conj;
                    break;
                }
            }
            if (all_ok) some_v_works = true;
        }
        if (!some_v_works) {
            r.status = CheckStatus::fail;
            step(r, "inv", {x}, ix);
            step(r, "mul", {x, bad_v}, o->mul(x, bad_v));
            step(r, "mul", {o->mul(x, bad_v), ix}, bad_conj);
            step(r, "member:" + U.name, {bad_conj}, "false");
            r.note = "no member of the family conjugates into " + U.name + " at x = " + x;
            return r;
        }
    }
    r.note = gamma.countable ? "countable family subordinated to " + U.name
                             : "family (not marked countable) subordinated to " + U.name;
    return r;
}

CheckResult law_omega_narrow(const OraclePtr& o, const SubsetSpec& A, bool countable,
                             const std::vector<std::string>& sample, const Budget& budget,
                             std::uint64_t seed) {
    CheckResult r = make_result("omega_narrow", CheckStatus::pass, seed, 0);
    bool exhausted = false;
    for (const auto& x : sample) {
        ++r.samples_used;
        std::optional<std::string> a;
        if (A.upper_witness) {
            a = A.upper_witness(x);
        } else {
            for (const auto& z : ball(*o, budget.search_depth, budget.ball_cap)) {
                const std::string cand = o->mul(x, z);
                if (A.member(cand) && o->leq(o->mul(o->inv(cand), x), o->identity)) {
                    a = cand;
                    break;
                }
            }
            if (!a) {
                exhausted = true;
                continue;
            }
        }
        if (!a) {
            r.status = CheckStatus::fail;
            r.note = "A offers no factorization for " + x;
            return r;
        }
        const std::string u = o->mul(o->inv(*a), x);
        const bool ok = A.member(*a) && o->leq(u, o->identity);
        if (!ok) {
            r.status = CheckStatus::fail;
            step(r, "member:" + A.name, {*a}, bool_str(A.member(*a)));
            step(r, "inv", {*a}, o->inv(*a));
            step(r, "mul", {o->inv(*a), x}, u);
            step(r, "leq", {u, o->identity}, bool_str(o->leq(u, o->identity)));
            r.note = "factorization x = a*u with u <= 1 fails at x = " + x;
            return r;
        }
        if (r.witness.empty()) {
            step(r, "mul", {o->inv(*a), x}, u);
            step(r, "leq", {u, o->identity}, "true");
        }
    }
    if (exhausted) {
        r.status = CheckStatus::inapplicable;
        r.note = "search budget exhausted before finding all factorizations";
        return r;
    }
    if (!countable) r.note = "factoring set not marked countable";
    return r;
}

CheckResult law_totally_omega_narrow(const OraclePtr& o, std::uint64_t seed) {
    CheckResult r = make_result("totally_omega_narrow", CheckStatus::pass, seed, 0);
    if (o->cardinality == Cardinality::continuum) {
        r.status = CheckStatus::fail;
        r.note = "cardinality tag 'continuum': the associated (discrete) group is not "
                 "omega-narrow";
    } else {
        r.note = "cardinality tag '" + to_string(o->cardinality) + "'";
    }
    return r;
}

CheckResult law_unbounded_height(const OraclePtr& o, const std::string& g, std::size_t k,
                                 std::uint64_t seed) {
    if (g == o->identity || !o->leq(o->identity, g))
        throw BadParameter("need 1 < g for the monotone-power chain");
    CheckResult r = make_result("unbounded_height", CheckStatus::pass, seed, k);
    std::vector<std::string> chain{o->identity};
    std::string p = o->identity;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::string next = o->mul(p, g);
        if (next == p || !o->leq(p, next)) {
            r.status = CheckStatus::fail;
            step(r, "mul", {p, g}, next);
            step(r, "leq", {p, next}, bool_str(o->leq(p, next)));
            r.note = "power chain stalls at step " + std::to_string(i);
            return r;
        }
        chain.push_back(next);
        p = next;
    }
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (chain[i] == chain[j]) {
                r.status = CheckStatus::fail;
                step(r, "eq", {chain[i], chain[j]}, "true");
                r.note = "powers repeat: g^" + std::to_string(i) + " = g^" + std::to_string(j);
                return r;
            }
    step(r, "leq", {chain[0], chain[1]}, "true");
    step(r, "leq", {chain[k - 1], chain[k]}, "true");
    r.note = "strict chain of length " + std::to_string(k + 1) + " through the identity";
    return r;
}

CheckResult law_radius_relations(const OraclePtr& o, const CatalogEntry* entry,
                                 const Window& w, const std::vector<std::string>& sample,
                                 std::uint64_t seed) {
    CheckResult r = make_result("radius_relations", CheckStatus::pass, seed, 0);
    RadiusResult rad = radius(*o);
    if (rad.kind == CoversAbove::Kind::unsupported) {
        r.status = CheckStatus::inapplicable;
        r.note = "cover enumeration unsupported";
        return r;
    }
    if (rad.kind == CoversAbove::Kind::dense) {
        for (const auto& x : sample) {
            if (r.samples_used >= 50) break;
            ++r.samples_used;
            if (o->covers_above(x).kind != CoversAbove::Kind::dense) {
                r.status = CheckStatus::fail;
                r.note = "covers at " + x + " are not dense while covers at 1 are";
                return r;
            }
        }
        r.note = "dense covers; radius reported as 0; r <= width holds trivially";
        return r;
    }
    const std::size_t n = rad.value;
    for (const auto& x : sample) {
        if (r.samples_used >= 50) break;
        ++r.samples_used;
        CoversAbove c = o->covers_above(x);
        if (c.kind != CoversAbove::Kind::finite || c.elems.size() != n) {
            r.status = CheckStatus::fail;
            r.note = "|r(" + x + ")| != |r(1)|";
            return r;
        }
        for (const auto& cov : c.elems)
            if (cov == x || !o->leq(x, cov)) {
                r.status = CheckStatus::fail;
                step(r, "leq", {x, cov}, bool_str(o->leq(x, cov)));
                r.note = "reported cover is not strictly above " + x;
                return r;
            }
    }
    if (!r.witness.empty()) r.witness.clear();
    const std::size_t wp = width(w.poset);
    if (window_has(w, o->identity)) {
        auto through = maximal_antichain_through(w.poset, o->identity);
        if (through.size() != wp) {
            r.status = CheckStatus::fail;
            r.note = "window width " + std::to_string(wp) +
                     " is not achieved by an antichain through the identity (got " +
                     std::to_string(through.size()) + ")";
            return r;
        }
    }
    if (entry && entry->expected.width.has_value()) {
        const long we = *entry->expected.width;
        if (static_cast<long>(n) > we || static_cast<long>(wp) != we) {
            r.status = CheckStatus::fail;
            r.note = "r(X) <= width(X) bookkeeping failed: radius " + std::to_string(n) +
                     ", expected width " + std::to_string(we) + ", window width " +
                     std::to_string(wp);
            return r;
        }
    } else if (n > wp) {
        r.status = CheckStatus::fail;
        r.note = "radius " + std::to_string(n) + " exceeds window width " + std::to_string(wp);
        return r;
    }
    {
        OraclePtr prod = product_oracle({o, o});
        RadiusResult pr = radius(*prod);
        if (pr.kind == CoversAbove::Kind::finite && pr.value > 2 * n * n) {
            r.status = CheckStatus::fail;
            r.note = "r(X x X) = " + std::to_string(pr.value) + " exceeds 2 r(X)^2";
            return r;
        }
    }
    r.note = "radius " + std::to_string(n) + "; window width " + std::to_string(wp) +
             "; antichain through 1 attains it; product bound holds";
    return r;
}

CheckResult law_classification(const OraclePtr& o, const CatalogEntry* entry, const Window& w,
                               std::uint64_t seed) {
    CheckResult r = make_result("classification", CheckStatus::inapplicable, seed, 0);
    RadiusResult rad = radius(*o);
    if (rad.kind != CoversAbove::Kind::finite) {
        r.note = "radius is dense or unsupported";
        return r;
    }
    auto interior = interior_elements(w);
    if (interior.size() < 2) {
        r.note = "window interior too small";
        return r;
    }
    std::vector<std::size_t> idx;
    for (const auto& e : interior) idx.push_back(w.poset.index_of(e));
    FinitePoset inner = w.poset.restrict(idx);
    const std::size_t w_int = width(inner);
    r.samples_used = interior.size();
    // The hypothesis r(X) = width(X) concerns the space; a small window can
    // understate the width, so defer to the declared value when one exists.
    bool width_matches_radius = rad.value == w_int;
    if (entry) {
        width_matches_radius = entry->expected.width.has_value() &&
                               static_cast<long>(rad.value) == *entry->expected.width &&
                               rad.value == w_int;
    }
    bool applicable = false;
    if (width_matches_radius) {
        applicable = true;
        auto res = is_iterated_antichain_join(inner);
        if (!res || *res != rad.value) {
            r.status = CheckStatus::fail;
            r.note = "radius equals width (" + std::to_string(rad.value) +
                     ") but the interior is not an iterated antichain join";
            return r;
        }
        r.note = "interior is an iterated join of " + std::to_string(*res) + "-antichains";
    }
    if (rad.value == 1) {
        applicable = true;
        auto comps = connected_components(inner);
        for (const auto& comp : comps)
            for (std::size_t a = 0; a < comp.size(); ++a)
                for (std::size_t b = a + 1; b < comp.size(); ++b)
                    if (!inner.comparable(comp[a], comp[b])) {
                        r.status = CheckStatus::fail;
                        step(r, "leq", {inner.label(comp[a]), inner.label(comp[b])}, "false");
                        step(r, "leq", {inner.label(comp[b]), inner.label(comp[a])}, "false");
                        r.note = "radius 1 but a component of the interior is not a chain";
                        return r;
                    }
        if (comps.size() != w_int) {
            r.status = CheckStatus::fail;
            r.note = "radius 1: expected width(X) = " + std::to_string(w_int) +
                     " chains, found " + std::to_string(comps.size());
            return r;
        }
        if (r.note.empty())
            r.note = "interior decomposes into " + std::to_string(comps.size()) +
                     " disjoint chain(s)";
    }
    if (!applicable) {
        r.note = "radius is neither 1 nor equal to the interior width";
        return r;
    }
    r.status = CheckStatus::pass;
    return r;
}

// --- registry ---------------------------------------------------------------

namespace {

struct SamplePack {
    Window window;
    std::vector<std::string> sample;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> translators;
};

SamplePack make_pack(const LawContext& ctx) {
    SamplePack p{make_window(ctx.entry.oracle, ctx.entry.window_elems(ctx.depth)), {}, {}, {}};
    const GroupOracle& o = *ctx.entry.oracle;
    p.sample = default_sample(o, std::min(ctx.depth, 3), ctx.budget.random_samples, ctx.seed,
                              ctx.budget.ball_cap);
    p.pairs = comparable_pairs(o, p.sample, 300);
    for (std::size_t i = 0; i < p.sample.size() && p.translators.size() < 25; ++i)
        p.translators.push_back(p.sample[i]);
    return p;
}

const SubsetSpec& pick_subset(const LawContext& ctx) {
    const std::string name = ctx.subset.empty() ? ctx.entry.default_subset : ctx.subset;
    return ctx.entry.subset(name);
}

std::vector<std::pair<std::string, std::string>> any_pairs(
    const std::vector<std::string>& sample, std::size_t limit) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < sample.size() && out.size() < limit; ++i)
        for (std::size_t j = i + 1; j < sample.size() && out.size() < limit; ++j)
            out.emplace_back(sample[i], sample[j]);
    return out;
}

}  // namespace

std::vector<std::string> law_ids() {
    return {"group_axioms",
            "translations_monotone",
            "inversion_monotone",
            "inverse_flip",
            "opposite_identity",
            "open_inverse_closed",
            "no_torsion",
            "translation_homogeneity",
            "beat_dichotomy",
            "directed_hyperconnected",
            "two_pseudocompact",
            "feebly_bounded",
            "product_feebly_bounded",
            "product_set_feebly_bounded",
            "subordinated",
            "omega_narrow",
            "totally_omega_narrow",
            "unbounded_height",
            "radius_relations",
            "classification"};
}

std::string canonical_law_id(const std::string& id) {
    if (id == "hyperconnected") return "directed_hyperconnected";
    auto ids = law_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw BadParameter("unknown law: " + id);
    return id;
}

CheckResult run_law(const std::string& raw_id, const LawContext& ctx) {
    const std::string id = canonical_law_id(raw_id);
    const OraclePtr& o = ctx.entry.oracle;

    if (id == "totally_omega_narrow") return law_totally_omega_narrow(o, ctx.seed);
    if (id == "two_pseudocompact") {
        const std::string& g = ctx.entry.chain_generator;
        std::vector<std::string> chain;
        std::string p = o->identity;
        for (int i = 0; i < 3; ++i) p = o->mul(p, g);
        chain.push_back(p);                              // g^3
        chain.push_back(o->mul(o->inv(g), p));           // g^2
        chain.push_back(o->mul(o->inv(g), o->mul(o->inv(g), p)));  // g
        return law_2_pseudocompact(o, chain, ctx.seed);
    }
    if (id == "unbounded_height")
        return law_unbounded_height(o, ctx.entry.chain_generator, 8, ctx.seed);

    SamplePack pack = make_pack(ctx);
    if (id == "group_axioms") {
        std::vector<std::string> s(pack.sample.begin(),
                                   pack.sample.begin() +
                                       std::min<std::size_t>(pack.sample.size(), 60));
        return check_group_axioms(*o, s, ctx.seed);
    }
    if (id == "translations_monotone")
        return check_translations_monotone(*o, pack.pairs, pack.translators, ctx.seed);
    if (id == "inversion_monotone") return check_inversion_monotone(*o, pack.pairs, ctx.seed);
    if (id == "inverse_flip") {
        std::vector<std::string> probe = pack.window.elements();
        probe.insert(probe.end(), pack.sample.begin(), pack.sample.end());
        return law_inverse_flip(o, probe, ctx.seed);
    }
    if (id == "opposite_identity")
        return law_opposite_identity_neighborhoods(o, pack.window, ctx.seed);
    if (id == "open_inverse_closed")
        return law_open_inverse_closed(o, pack.window, ctx.budget, ctx.seed);
    if (id == "no_torsion")
        return law_no_torsion_near_identity(o, pack.window, 20, ctx.seed);
    if (id == "translation_homogeneity")
        return law_translation_homogeneity(o, pack.window, ctx.entry.chain_generator, ctx.seed);
    if (id == "beat_dichotomy") return law_beat_dichotomy(o, pack.window, ctx.seed);
    if (id == "directed_hyperconnected") {
        auto pairs = any_pairs(pack.sample, 120);
        return law_directed_iff_hyperconnected(o, pairs, ctx.budget, ctx.seed);
    }
    if (id == "feebly_bounded")
        return feebly_bounded_check(o, pick_subset(ctx), pack.sample, ctx.budget, ctx.seed);
    if (id == "product_feebly_bounded") {
        const SubsetSpec& B = pick_subset(ctx);
        return law_product_feebly_bounded({o, o}, {B, B}, 200, ctx.budget, ctx.seed);
    }
    if (id == "product_set_feebly_bounded") {
        const SubsetSpec& B = pick_subset(ctx);
        return law_product_set_feebly_bounded(o, B, B, pack.sample, ctx.seed);
    }
    if (id == "subordinated") {
        SubordinatedFamily gamma;
        gamma.neighborhoods.push_back(identity_down_set_spec(o));
        gamma.countable = true;
        std::vector<std::string> universe = pack.window.elements();
        universe.insert(universe.end(), pack.sample.begin(), pack.sample.end());
        std::vector<std::string> xs(pack.sample.begin(),
                                    pack.sample.begin() +
                                        std::min<std::size_t>(pack.sample.size(), 60));
        return law_subordinated(o, gamma, identity_down_set_spec(o), xs, universe, ctx.seed);
    }
    if (id == "omega_narrow")
        return law_omega_narrow(o, ctx.entry.omega_narrow_set, true, pack.sample, ctx.budget,
                                ctx.seed);
    if (id == "radius_relations")
        return law_radius_relations(o, &ctx.entry, pack.window, pack.sample, ctx.seed);
    if (id == "classification")
        return law_classification(o, &ctx.entry, pack.window, ctx.seed);
    throw BadParameter("unknown law: " + id);
}

CheckStatus expected_law_status(const CatalogEntry& e, const std::string& law_id,
                                const std::string& subset) {
    const std::string id = canonical_law_id(law_id);
    if (!subset.empty()) {
        auto it = e.expected.law_status.find(id + "@" + subset);
        if (it != e.expected.law_status.end()) return it->second;
    }
    auto it = e.expected.law_status.find(id);
    if (it != e.expected.law_status.end()) return it->second;
    return CheckStatus::pass;
}

}  // namespace alexpara
