#include "alexpara/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "alexpara/errors.hpp"

namespace alexpara {

std::size_t GroupTable::inv(std::size_t i) const {
    for (std::size_t j = 0; j < order; ++j)
        if (mul(i, j) == identity) return j;
    throw Error("group table has no inverse for element " + std::to_string(i));
}

namespace {

void verify_group_table(const GroupTable& g) {
    const std::size_t n = g.order;
    if (g.table.size() != n * n || g.element_names.size() != n)
        throw Error("group " + g.name + ": malformed table");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (g.mul(i, j) >= n || g.mul(j, i) >= n)
                throw Error("group " + g.name + ": entry out of range");
            row[g.mul(i, j)] = 1;
            col[g.mul(j, i)] = 1;
        }
        if (std::count(row.begin(), row.end(), 1) != static_cast<long>(n) ||
            std::count(col.begin(), col.end(), 1) != static_cast<long>(n))
            throw Error("group " + g.name + ": not a Latin square");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i)
            throw Error("group " + g.name + ": identity law fails");
    for (std::size_t i = 0; i < n; ++i) g.inv(i);  // throws when missing
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw Error("group " + g.name + ": associativity fails");
}

GroupTable cyclic(std::size_t n, const std::string& name) {
    GroupTable g;
    g.name = name;
    g.order = n;
    g.table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
    for (std::size_t i = 0; i < n; ++i)
        g.element_names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    return g;
}

std::vector<GroupTable> build_groups() {
    std::vector<GroupTable> out;
    out.push_back(cyclic(1, "C1"));
    out.push_back(cyclic(2, "C2"));
    out.push_back(cyclic(3, "C3"));
    out.push_back(cyclic(4, "C4"));
    {
        GroupTable v4;
        v4.name = "V4";
        v4.order = 4;
        v4.table = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
        v4.element_names = {"e", "a", "b", "ab"};
        out.push_back(v4);
    }
    out.push_back(cyclic(5, "C5"));
    out.push_back(cyclic(6, "C6"));
    {
        // Permutations of {0,1,2}: id, (12), (01), (012), (021), (02),
        // composed left-to-right as (fg)(x) = f(g(x)).
        GroupTable s3;
        s3.name = "S3";
        s3.order = 6;
        s3.table = {0, 1, 2, 3, 4, 5,  //
                    1, 0, 4, 5, 2, 3,  //
                    2, 3, 0, 1, 5, 4,  //
                    3, 2, 5, 4, 0, 1,  //
                    4, 5, 1, 0, 3, 2,  //
                    5, 4, 3, 2, 1, 0};
        s3.element_names = {"id", "(12)", "(01)", "(012)", "(021)", "(02)"};
        out.push_back(s3);
    }
    for (const auto& g : out) verify_group_table(g);
    return out;
}

std::uint64_t reflexive_mask(std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m |= std::uint64_t(1) << (i * n + i);
    return m;
}

}  // namespace

const std::vector<GroupTable>& embedded_groups() {
    static const std::vector<GroupTable> groups = build_groups();
    return groups;
}

void for_each_labeled_poset_key(std::size_t n, const std::function<void(std::uint64_t)>& fn) {
    if (n == 0 || n > 6) throw SizeLimitExceeded("labeled poset enumeration limited to n <= 6");
    // Strict transitive relations inside the upper triangle (every poset has
    // a linear extension), then all label permutations, deduplicated.
    std::vector<std::pair<std::size_t, std::size_t>> upper;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) upper.emplace_back(i, j);
    const std::size_t bits = upper.size();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint64_t refl = reflexive_mask(n);
    std::set<std::uint64_t> keys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
        bool strict[6][6] = {};
        for (std::size_t b = 0; b < bits; ++b)
            if (mask & (std::uint64_t(1) << b)) strict[upper[b].first][upper[b].second] = true;
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            for (std::size_t j = i + 1; j < n && transitive; ++j)
                for (std::size_t k = j + 1; k < n && transitive; ++k)
                    if (strict[i][j] && strict[j][k] && !strict[i][k]) transitive = false;
        if (!transitive) continue;
        for (const auto& p : perms) {
            std::uint64_t key = refl;
            for (std::size_t b = 0; b < bits; ++b)
                if (mask & (std::uint64_t(1) << b))
                    key |= std::uint64_t(1) << (p[upper[b].first] * n + p[upper[b].second]);
            keys.insert(key);
        }
    }
    for (auto k : keys) fn(k);
}

std::size_t count_labeled_posets(std::size_t n) {
    std::size_t c = 0;
    for_each_labeled_poset_key(n, [&](std::uint64_t) { ++c; });
    return c;
}

FinitePoset poset_from_key(std::uint64_t key, const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    std::vector<uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i * n + j] = (key >> (i * n + j)) & 1;
    return FinitePoset::from_leq_matrix(labels, std::move(leq));
}

std::uint64_t poset_key(const FinitePoset& p) {
    const std::size_t n = p.size();
    if (n > 6) throw SizeLimitExceeded("poset keys limited to n <= 6");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.leq(i, j)) key |= std::uint64_t(1) << (i * n + j);
    return key;
}

std::vector<FinitePoset> enumerate_labeled_posets(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<FinitePoset> out;
    for_each_labeled_poset_key(n, [&](std::uint64_t key) {
        out.push_back(poset_from_key(key, labels));
    });
    return out;
}

namespace {

bool key_monotone(std::uint64_t key, const GroupTable& g, bool require_inversion) {
    const std::size_t n = g.order;
    auto rel = [&](std::size_t i, std::size_t j) {
        return (key >> (i * n + j)) & 1;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y || !rel(x, y)) continue;
            for (std::size_t t = 0; t < n; ++t) {
                if (!rel(g.mul(t, x), g.mul(t, y))) return false;
                if (!rel(g.mul(x, t), g.mul(y, t))) return false;
            }
            if (require_inversion && !rel(g.inv(x), g.inv(y))) return false;
        }
    return true;
}

bool key_connected(std::uint64_t key, std::size_t n) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v]) continue;
            if (((key >> (u * n + v)) & 1) || ((key >> (v * n + u)) & 1)) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::string key_cover_dump(std::uint64_t key, const GroupTable& g) {
    FinitePoset p = poset_from_key(key, g.element_names);
    auto cg = covers(p);
    std::string s;
    for (auto [lo, hi] : cg.edges) {
        if (!s.empty()) s += ";";
        s += p.label(lo) + "<" + p.label(hi);
    }
    return s.empty() ? "(discrete)" : s;
}

std::vector<EnumerationReport> run_enumeration(std::size_t max_order, bool topological) {
    if (max_order < 1 || max_order > 6)
        throw SizeLimitExceeded("group enumeration limited to orders 1..6");
    std::vector<EnumerationReport> reports;
    // Poset keys per carrier size, generated once and shared across groups.
    std::vector<std::vector<std::uint64_t>> keys_by_n(7);
    for (const auto& g : embedded_groups()) {
        if (g.order > max_order) continue;
        if (keys_by_n[g.order].empty())
            for_each_labeled_poset_key(g.order,
                                       [&](std::uint64_t k) { keys_by_n[g.order].push_back(k); });
        const auto t0 = std::chrono::steady_clock::now();
        EnumerationReport rep;
        rep.group = g.name;
        rep.order = g.order;
        rep.topological = topological;
        const std::uint64_t discrete = reflexive_mask(g.order);
        std::vector<std::uint64_t> survivors;
        for (std::uint64_t key : keys_by_n[g.order]) {
            ++rep.posets_examined;
            if (!key_monotone(key, g, topological)) continue;
            survivors.push_back(key);
        }
        std::sort(survivors.begin(), survivors.end());
        rep.monotone_orders_found = survivors.size();
        for (std::uint64_t key : survivors) {
            if (key != discrete) rep.non_discrete_survivors.push_back(key_cover_dump(key, g));
            if (key_connected(key, g.order)) ++rep.connected_survivors;
        }
        rep.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace

std::vector<FinitePoset> monotone_orders(const GroupTable& g, bool require_inversion) {
    std::vector<FinitePoset> out;
    for_each_labeled_poset_key(g.order, [&](std::uint64_t key) {
        if (key_monotone(key, g, require_inversion))
            out.push_back(poset_from_key(key, g.element_names));
    });
    return out;
}

std::vector<EnumerationReport> verify_discreteness_theorem(std::size_t max_order) {
    return run_enumeration(max_order, false);
}

std::vector<EnumerationReport> verify_topgroup_triviality(std::size_t max_order) {
    return run_enumeration(max_order, true);
}

std::string reports_to_json(const std::vector<EnumerationReport>& reports, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["group"] = r.group;
        j["order"] = r.order;
        j["posets_examined"] = r.posets_examined;
        j["monotone_orders_found"] = r.monotone_orders_found;
        j["non_discrete_survivors"] = r.non_discrete_survivors;
        j["connected_survivors"] = r.connected_survivors;
        j["topological"] = r.topological;
        j["runtime_ms"] = r.runtime_ms;
        arr.push_back(j);
    }
    return arr.dump(indent);
}

}  // namespace alexpara
