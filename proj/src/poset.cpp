#include "alexpara/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "alexpara/errors.hpp"

namespace alexpara {

namespace {

// Indices sorted so that j < i (strict order) implies j comes first.
std::vector<std::size_t> topo_order(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.lt(j, i)) ++below[i];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return order;
}

std::vector<std::size_t> to_indices(const FinitePoset& p, const std::vector<std::string>& labels) {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(p.index_of(l));
    return out;
}

std::vector<std::string> to_labels(const FinitePoset& p, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(p.label(i));
    return out;
}

// Hopcroft-Karp on the comparability bipartite graph (left i -- right j
// whenever i < j strictly). Returns match_left/match_right with -1 for free.
struct Matching {
    std::vector<int> left;   // left i -> right j
    std::vector<int> right;  // right j -> left i
    std::size_t size = 0;
};

Matching comparability_matching(const FinitePoset& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.lt(i, j)) adj[i].push_back(j);

    Matching m;
    m.left.assign(n, -1);
    m.right.assign(n, -1);
    std::vector<int> dist(n);
    const int INF = std::numeric_limits<int>::max();

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int i = 0; i < n; ++i) {
            if (m.left[i] == -1) {
                dist[i] = 0;
                q.push(i);
            } else {
                dist[i] = INF;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = m.right[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = m.right[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                m.left[u] = v;
                m.right[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };
    while (bfs())
        for (int i = 0; i < n; ++i)
            if (m.left[i] == -1 && dfs(i)) ++m.size;
    return m;
}

// Vertices reachable from free left vertices by alternating paths.
void alternating_reach(const FinitePoset& p, const Matching& m,
                       std::vector<char>& z_left, std::vector<char>& z_right) {
    const int n = static_cast<int>(p.size());
    z_left.assign(n, 0);
    z_right.assign(n, 0);
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (m.left[i] == -1) {
            z_left[i] = 1;
            q.push(i);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (!p.lt(u, v) || z_right[v] || m.left[u] == v) continue;
            z_right[v] = 1;
            int w = m.right[v];
            if (w != -1 && !z_left[w]) {
                z_left[w] = 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

void FinitePoset::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second)
            throw BadParameter("duplicate label: " + elements_[i]);
    }
}

std::size_t FinitePoset::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownLabel(label);
    return it->second;
}

FinitePoset FinitePoset::from_cover_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    FinitePoset p;
    p.elements_ = std::move(elements);
    p.rebuild_index();
    const std::size_t n = p.elements_.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : covers) p.leq_[p.index_of(lo) * n + p.index_of(hi)] = 1;
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw CycleDetected("cycle through " + p.elements_[i] + " and " + p.elements_[j]);
    return p;
}

FinitePoset FinitePoset::from_leq_matrix(std::vector<std::string> elements,
                                         std::vector<uint8_t> leq) {
    FinitePoset p;
    p.elements_ = std::move(elements);
    p.rebuild_index();
    const std::size_t n = p.elements_.size();
    if (leq.size() != n * n) throw BadParameter("relation matrix size mismatch");
    p.leq_ = std::move(leq);
    for (std::size_t i = 0; i < n; ++i)
        if (!p.leq_[i * n + i]) throw Error("relation not reflexive at " + p.elements_[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw CycleDetected("antisymmetry violated by " + p.elements_[i] + " and " +
                                    p.elements_[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (p.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j] && !p.leq_[i * n + j])
                        throw Error("relation not transitive via " + p.elements_[k]);
    return p;
}

FinitePoset FinitePoset::restrict(const std::vector<std::size_t>& nodes) const {
    std::vector<std::size_t> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    FinitePoset q;
    const std::size_t m = sorted.size();
    q.elements_.reserve(m);
    for (auto i : sorted) q.elements_.push_back(elements_[i]);
    q.rebuild_index();
    q.leq_.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            q.leq_[a * m + b] = leq(sorted[a], sorted[b]) ? 1 : 0;
    return q;
}

bool FinitePoset::same_order_as(const FinitePoset& other) const {
    return elements_ == other.elements_ && leq_ == other.leq_;
}

std::vector<std::string> down_set(const FinitePoset& p, const std::vector<std::string>& s) {
    auto idx = to_indices(p, s);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (auto i : idx)
            if (p.leq(j, i)) {
                out.push_back(j);
                break;
            }
    return to_labels(p, std::move(out));
}

std::vector<std::string> up_set(const FinitePoset& p, const std::vector<std::string>& s) {
    auto idx = to_indices(p, s);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (auto i : idx)
            if (p.leq(i, j)) {
                out.push_back(j);
                break;
            }
    return to_labels(p, std::move(out));
}

CoverGraph covers(const FinitePoset& p) {
    CoverGraph g;
    g.nodes = p.elements();
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.lt(i, j)) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (p.lt(i, k) && p.lt(k, j)) direct = false;
            if (direct) g.edges.emplace_back(i, j);
        }
    return g;
}

std::vector<std::string> max_antichain(const FinitePoset& p) {
    if (p.empty()) return {};
    Matching m = comparability_matching(p);
    std::vector<char> zl, zr;
    alternating_reach(p, m, zl, zr);
    // Koenig cover is (L \ Z) + (R & Z); the antichain is everything outside.
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (zl[i] && !zr[i]) out.push_back(i);
    return to_labels(p, std::move(out));
}

std::size_t width(const FinitePoset& p) {
    if (p.empty()) return 0;
    return p.size() - comparability_matching(p).size;
}

std::vector<std::vector<std::string>> min_chain_cover(const FinitePoset& p) {
    const int n = static_cast<int>(p.size());
    Matching m = comparability_matching(p);
    std::vector<std::vector<std::string>> chains;
    std::vector<char> is_start(n, 1);
    for (int i = 0; i < n; ++i)
        if (m.left[i] != -1) is_start[m.left[i]] = 0;
    for (int i = 0; i < n; ++i) {
        if (!is_start[i]) continue;
        std::vector<std::string> chain;
        for (int cur = i; cur != -1; cur = m.left[cur]) chain.push_back(p.label(cur));
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<std::size_t> height_levels(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> level(n, 0);
    for (auto i : topo_order(p))
        for (std::size_t j = 0; j < n; ++j)
            if (p.lt(j, i)) level[i] = std::max(level[i], level[j] + 1);
    return level;
}

std::size_t height(const FinitePoset& p) {
    std::size_t h = 0;
    for (auto l : height_levels(p)) h = std::max(h, l);
    return h;
}

std::size_t height_of(const FinitePoset& p, const std::string& x) {
    return height_levels(p)[p.index_of(x)];
}

std::vector<std::string> maximal_antichain_through(const FinitePoset& p, const std::string& x) {
    const std::size_t xi = p.index_of(x);
    std::vector<std::size_t> incomp;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!p.comparable(xi, j)) incomp.push_back(j);
    FinitePoset sub = p.restrict(incomp);
    auto chain = max_antichain(sub);
    chain.push_back(x);
    std::vector<std::size_t> idx;
    for (const auto& l : chain) idx.push_back(p.index_of(l));
    return to_labels(p, std::move(idx));
}

std::vector<std::vector<std::size_t>> connected_components(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = next;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (comp[v] == -1 && u != v && p.comparable(u, v)) {
                    comp[v] = next;
                    q.push(v);
                }
        }
        ++next;
    }
    std::vector<std::vector<std::size_t>> out(next);
    for (std::size_t i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

bool is_connected(const FinitePoset& p) { return connected_components(p).size() <= 1; }

bool is_hyperconnected(const FinitePoset& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool meet = false;
            for (std::size_t z = 0; z < n && !meet; ++z)
                if (p.leq(z, i) && p.leq(z, j)) meet = true;
            if (!meet) return false;
        }
    return true;
}

bool is_ultraconnected(const FinitePoset& p) { return is_hyperconnected(opposite(p)); }

bool is_directed(const FinitePoset& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool bound = false;
            for (std::size_t z = 0; z < n && !bound; ++z)
                if (p.leq(i, z) && p.leq(j, z)) bound = true;
            if (!bound) return false;
        }
    return true;
}

FinitePoset opposite(const FinitePoset& p) {
    FinitePoset q;
    q.elements_ = p.elements_;
    q.index_ = p.index_;
    const std::size_t n = p.size();
    q.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q.leq_[i * n + j] = p.leq_[j * n + i];
    return q;
}

FinitePoset join(const FinitePoset& p, const FinitePoset& q) {
    FinitePoset r;
    r.elements_ = p.elements_;
    for (auto label : q.elements_) {
        while (std::find(r.elements_.begin(), r.elements_.end(), label) != r.elements_.end())
            label += "'";
        r.elements_.push_back(label);
    }
    r.rebuild_index();
    const std::size_t np = p.size(), nq = q.size(), n = np + nq;
    r.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) r.leq_[i * n + j] = p.leq_[i * np + j];
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < nq; ++j) r.leq_[(np + i) * n + (np + j)] = q.leq_[i * nq + j];
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nq; ++j) r.leq_[i * n + (np + j)] = 1;
    return r;
}

std::vector<BeatPoint> beat_points(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<BeatPoint> out;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::size_t> below, above;
        for (std::size_t j = 0; j < n; ++j) {
            if (p.lt(j, x)) below.push_back(j);
            if (p.lt(x, j)) above.push_back(j);
        }
        auto has_extremum = [&](const std::vector<std::size_t>& set, bool want_max) {
            for (auto m : set) {
                bool ok = true;
                for (auto j : set)
                    if (want_max ? !p.leq(j, m) : !p.leq(m, j)) {
                        ok = false;
                        break;
                    }
                if (ok) return true;
            }
            return false;
        };
        if (!below.empty() && has_extremum(below, true))
            out.push_back({p.label(x), BeatKind::down});
        if (!above.empty() && has_extremum(above, false))
            out.push_back({p.label(x), BeatKind::up});
    }
    return out;
}

FinitePoset core(const FinitePoset& p) {
    FinitePoset cur = p;
    for (;;) {
        auto beats = beat_points(cur);
        if (beats.empty()) return cur;
        const std::size_t victim = cur.index_of(beats.front().element);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (i != victim) keep.push_back(i);
        cur = cur.restrict(keep);
    }
}

long long euler_characteristic(const FinitePoset& p) {
    // s(x) = alternating count of chains ending at x; chi = sum of s.
    const std::size_t n = p.size();
    std::vector<long long> s(n, 0);
    long long chi = 0;
    for (auto i : topo_order(p)) {
        long long v = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (p.lt(j, i)) v -= s[j];
        s[i] = v;
        chi += v;
    }
    return chi;
}

std::optional<std::size_t> is_iterated_antichain_join(const FinitePoset& p) {
    if (p.empty()) return std::nullopt;
    auto level = height_levels(p);
    const std::size_t h = height(p);
    std::vector<std::vector<std::size_t>> layers(h + 1);
    for (std::size_t i = 0; i < p.size(); ++i) layers[level[i]].push_back(i);
    const std::size_t n = layers[0].size();
    for (const auto& layer : layers) {
        if (layer.size() != n) return std::nullopt;
        for (std::size_t a = 0; a < layer.size(); ++a)
            for (std::size_t b = a + 1; b < layer.size(); ++b)
                if (p.comparable(layer[a], layer[b])) return std::nullopt;
    }
    CoverGraph g = covers(p);
    std::vector<std::vector<std::size_t>> lower(p.size());
    for (auto [lo, hi] : g.edges) lower[hi].push_back(lo);
    for (std::size_t l = 1; l <= h; ++l)
        for (auto x : layers[l]) {
            auto want = layers[l - 1];
            auto got = lower[x];
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got) return std::nullopt;
        }
    return n;
}

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    if (p.size() > 40 || q.size() > 40)
        throw SizeLimitExceeded("isomorphism search limited to 40 elements");
    if (p.size() != q.size()) return false;
    const std::size_t n = p.size();
    if (n == 0) return true;

    auto signature = [](const FinitePoset& r) {
        auto level = height_levels(r);
        CoverGraph g = covers(r);
        std::vector<std::array<std::size_t, 5>> sig(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) sig[i] = {level[i], 0, 0, 0, 0};
        for (auto [lo, hi] : g.edges) {
            ++sig[lo][2];  // out-degree
            ++sig[hi][1];  // in-degree
        }
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (r.leq(j, i)) ++sig[i][3];
                if (r.leq(i, j)) ++sig[i][4];
            }
        return sig;
    };
    auto sp = signature(p), sq = signature(q);
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    std::vector<std::vector<std::size_t>> cand(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sp[i] == sq[j]) cand[i].push_back(j);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cand[a].size() < cand[b].size(); });

    std::vector<int> map_pq(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == n) return true;
        const std::size_t i = order[k];
        for (auto j : cand[i]) {
            if (used[j]) continue;
            bool ok = true;
            for (std::size_t k2 = 0; k2 < k && ok; ++k2) {
                const std::size_t i2 = order[k2];
                const std::size_t j2 = static_cast<std::size_t>(map_pq[i2]);
                if (p.leq(i, i2) != q.leq(j, j2) || p.leq(i2, i) != q.leq(j2, j)) ok = false;
            }
            if (!ok) continue;
            map_pq[i] = static_cast<int>(j);
            used[j] = 1;
            if (place(k + 1)) return true;
            map_pq[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    return place(0);
}

}  // namespace alexpara
