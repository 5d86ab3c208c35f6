#include "alexpara/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "alexpara/errors.hpp"
#include "alexpara/ratmat.hpp"

namespace alexpara {

namespace {

std::string pair_str(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

std::vector<std::string> tuple_parse(const std::string& s, std::size_t arity) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("bad tuple: " + s);
    auto parts = split_top_level(s.substr(1, s.size() - 2));
    if (parts.size() != arity) throw ParseError("bad tuple arity: " + s);
    return parts;
}

std::string vec_encode(const std::vector<mpz_class>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::vector<mpz_class> vec_parse(const std::string& s, std::size_t k) {
    auto parts = tuple_parse(s, k);
    std::vector<mpz_class> v;
    v.reserve(k);
    for (const auto& p : parts) v.push_back(parse_integer(p));
    return v;
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

long get_param(const std::map<std::string, long>& params, const std::string& key,
               long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const std::map<std::string, long>& params,
                           const std::vector<std::string>& known) {
    for (const auto& [k, v] : params)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw BadParameter("unknown parameter '" + k + "'");
}

SubsetSpec whole_group_subset() {
    SubsetSpec s;
    s.name = "all";
    s.member = [](const std::string&) { return true; };
    s.lower_witness = [](const std::string& x) -> std::optional<std::string> { return x; };
    s.upper_witness = [](const std::string& x) -> std::optional<std::string> { return x; };
    return s;
}

mpq_class row_sum_bound(const RatMatrix& m) {
    mpq_class best = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        mpq_class row = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) row += abs(m.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

mpq_class ceil_q(const mpq_class& q) {
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t(),
                q.get_den().get_mpz_t());
    if (rem != 0) quot += 1;
    return mpq_class(quot);
}

// ---------------------------------------------------------------- int_chain

CatalogEntry build_int_chain() {
    auto o = std::make_shared<GroupOracle>();
    o->name = "int_chain";
    o->identity = "0";
    o->mul = [](const std::string& a, const std::string& b) {
        return mpz_class(parse_integer(a) + parse_integer(b)).get_str();
    };
    o->inv = [](const std::string& a) { return mpz_class(-parse_integer(a)).get_str(); };
    o->leq = [](const std::string& a, const std::string& b) {
        return parse_integer(a) <= parse_integer(b);
    };
    o->covers_above = [](const std::string& a) {
        return CoversAbove::finite({mpz_class(parse_integer(a) + 1).get_str()});
    };
    o->generators = {"1"};
    o->cardinality = Cardinality::countable;
    o->abelian = true;
    o->decode = [](const std::string& s) { return parse_integer(s).get_str(); };
    o->sample = [](std::mt19937_64& rng) {
        return mpz_class(rand_range(rng, -1000, 1000)).get_str();
    };
    o->lower_bound_hint = [](const std::string& a, const std::string& b) {
        mpz_class m = std::min(parse_integer(a), parse_integer(b));
        return BoundAnswer{BoundAnswer::Kind::found, m.get_str()};
    };
    o->upper_bound_hint = [](const std::string& a, const std::string& b) {
        mpz_class m = std::max(parse_integer(a), parse_integer(b));
        return BoundAnswer{BoundAnswer::Kind::found, m.get_str()};
    };

    CatalogEntry e;
    e.name = "int_chain";
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::finite;
    e.expected.radius = 1;
    e.expected.width = 1;
    e.expected.has_beat_points = true;
    e.expected.cardinality = Cardinality::countable;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail}};
    e.window_elems = [](int d) {
        std::vector<std::string> v;
        for (long k = -d; k <= d; ++k) v.push_back(mpz_class(k).get_str());
        return v;
    };
    e.chain_generator = "1";
    e.subsets["all"] = whole_group_subset();
    {
        SubsetSpec evens;
        evens.name = "evens";
        evens.member = [](const std::string& x) { return parse_integer(x) % 2 == 0; };
        evens.lower_witness = [](const std::string& x) -> std::optional<std::string> {
            mpz_class z = parse_integer(x);
            if (z % 2 != 0) z -= 1;
            return z.get_str();
        };
        evens.upper_witness = [](const std::string& x) -> std::optional<std::string> {
            mpz_class z = parse_integer(x);
            if (z % 2 != 0) z += 1;
            return z.get_str();
        };
        e.subsets["evens"] = evens;
    }
    e.default_subset = "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    return e;
}

// ---------------------------------------------------------------- rat_chain

CatalogEntry build_rat_chain() {
    auto o = std::make_shared<GroupOracle>();
    o->name = "rat_chain";
    o->identity = "0";
    o->mul = [](const std::string& a, const std::string& b) {
        return format_rational(parse_rational(a) + parse_rational(b));
    };
    o->inv = [](const std::string& a) { return format_rational(-parse_rational(a)); };
    o->leq = [](const std::string& a, const std::string& b) {
        return parse_rational(a) <= parse_rational(b);
    };
    o->covers_above = [](const std::string&) { return CoversAbove::dense(); };
    o->generators = {"1", "1/2"};
    o->cardinality = Cardinality::countable;
    o->abelian = true;
    o->decode = [](const std::string& s) { return format_rational(parse_rational(s)); };
    o->sample = [](std::mt19937_64& rng) {
        long num = rand_range(rng, -1000, 1000);
        long den = rand_range(rng, 1, 60);
        return format_rational(mpq_class(num, den));
    };
    o->lower_bound_hint = [](const std::string& a, const std::string& b) {
        mpq_class m = std::min(parse_rational(a), parse_rational(b));
        return BoundAnswer{BoundAnswer::Kind::found, format_rational(m)};
    };
    o->upper_bound_hint = [](const std::string& a, const std::string& b) {
        mpq_class m = std::max(parse_rational(a), parse_rational(b));
        return BoundAnswer{BoundAnswer::Kind::found, format_rational(m)};
    };

    CatalogEntry e;
    e.name = "rat_chain";
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::dense;
    e.expected.radius = 0;
    e.expected.width = 1;
    e.expected.cardinality = Cardinality::countable;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail},
                             {"beat_dichotomy", CheckStatus::inapplicable},
                             {"classification", CheckStatus::inapplicable}};
    e.window_elems = [](int d) {
        std::vector<std::string> v;
        for (long k = -2 * d; k <= 2 * d; ++k) v.push_back(format_rational(mpq_class(k, 2)));
        return v;
    };
    e.chain_generator = "1";
    e.subsets["all"] = whole_group_subset();
    e.default_subset = "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    return e;
}

// -------------------------------------------------------------- int_vectors

CatalogEntry build_int_vectors(long k) {
    if (k < 1) throw BadParameter("int_vectors needs k >= 1");
    if (k > 8) throw BadParameter("int_vectors limited to k <= 8");
    const auto K = static_cast<std::size_t>(k);
    auto o = std::make_shared<GroupOracle>();
    o->name = "int_vectors";
    {
        std::vector<mpz_class> zero(K, 0);
        o->identity = vec_encode(zero);
    }
    o->mul = [K](const std::string& a, const std::string& b) {
        auto va = vec_parse(a, K), vb = vec_parse(b, K);
        for (std::size_t i = 0; i < K; ++i) va[i] += vb[i];
        return vec_encode(va);
    };
    o->inv = [K](const std::string& a) {
        auto v = vec_parse(a, K);
        for (auto& c : v) c = -c;
        return vec_encode(v);
    };
    o->leq = [K](const std::string& a, const std::string& b) {
        auto va = vec_parse(a, K), vb = vec_parse(b, K);
        for (std::size_t i = 0; i < K; ++i)
            if (va[i] > vb[i]) return false;
        return true;
    };
    o->covers_above = [K](const std::string& a) {
        auto v = vec_parse(a, K);
        std::vector<std::string> ups;
        for (std::size_t i = 0; i < K; ++i) {
            auto w = v;
            w[i] += 1;
            ups.push_back(vec_encode(w));
        }
        return CoversAbove::finite(std::move(ups));
    };
    for (std::size_t i = 0; i < K; ++i) {
        std::vector<mpz_class> g(K, 0);
        g[i] = 1;
        o->generators.push_back(vec_encode(g));
    }
    o->cardinality = Cardinality::countable;
    o->abelian = true;
    o->decode = [K](const std::string& s) { return vec_encode(vec_parse(s, K)); };
    o->sample = [K](std::mt19937_64& rng) {
        std::vector<mpz_class> v(K);
        for (auto& c : v) c = rand_range(rng, -50, 50);
        return vec_encode(v);
    };
    o->lower_bound_hint = [K](const std::string& a, const std::string& b) {
        auto va = vec_parse(a, K), vb = vec_parse(b, K);
        for (std::size_t i = 0; i < K; ++i) va[i] = std::min(va[i], vb[i]);
        return BoundAnswer{BoundAnswer::Kind::found, vec_encode(va)};
    };
    o->upper_bound_hint = [K](const std::string& a, const std::string& b) {
        auto va = vec_parse(a, K), vb = vec_parse(b, K);
        for (std::size_t i = 0; i < K; ++i) va[i] = std::max(va[i], vb[i]);
        return BoundAnswer{BoundAnswer::Kind::found, vec_encode(va)};
    };

    CatalogEntry e;
    e.name = "int_vectors";
    e.params = {{"k", k}};
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::finite;
    e.expected.radius = k;
    if (k == 1) {
        e.expected.width = 1;
        e.expected.has_beat_points = true;
    } else {
        e.expected.width = std::nullopt;
    }
    e.expected.cardinality = Cardinality::countable;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail},
                             {"feebly_bounded@quadrant", CheckStatus::fail},
                             {"feebly_bounded@origin", CheckStatus::fail}};
    if (k >= 2) e.expected.law_status["classification"] = CheckStatus::inapplicable;
    e.window_elems = [K, o](int d) {
        long r = std::max(1, d);
        auto count = [&](long rr) {
            double c = 1;
            for (std::size_t i = 0; i < K; ++i) c *= 2 * rr + 1;
            return c;
        };
        while (r > 1 && count(r) > 1000) --r;
        if (count(r) > 1000) return ball(*o, std::min(d, 2));  // high dimension
        std::vector<std::string> out;
        std::vector<mpz_class> v(K, -r);
        for (;;) {
            out.push_back(vec_encode(v));
            std::size_t i = 0;
            while (i < K) {
                v[i] += 1;
                if (v[i] <= r) break;
                v[i] = -r;
                ++i;
            }
            if (i == K) break;
        }
        return out;
    };
    {
        std::vector<mpz_class> g(K, 1);
        e.chain_generator = vec_encode(g);
    }
    e.subsets["all"] = whole_group_subset();
    {
        SubsetSpec diag;
        diag.name = "diagonal";
        diag.member = [K](const std::string& x) {
            auto v = vec_parse(x, K);
            for (std::size_t i = 1; i < K; ++i)
                if (v[i] != v[0]) return false;
            return true;
        };
        diag.lower_witness = [K](const std::string& x) -> std::optional<std::string> {
            auto v = vec_parse(x, K);
            mpz_class m = v[0];
            for (const auto& c : v) m = std::min(m, c);
            return vec_encode(std::vector<mpz_class>(K, m));
        };
        diag.upper_witness = [K](const std::string& x) -> std::optional<std::string> {
            auto v = vec_parse(x, K);
            mpz_class m = v[0];
            for (const auto& c : v) m = std::max(m, c);
            return vec_encode(std::vector<mpz_class>(K, m));
        };
        e.subsets["diagonal"] = diag;

        SubsetSpec quad;
        quad.name = "quadrant";
        quad.member = [K](const std::string& x) {
            for (const auto& c : vec_parse(x, K))
                if (c < 0) return false;
            return true;
        };
        quad.lower_witness = [K, quad_member = quad.member](
                                 const std::string& x) -> std::optional<std::string> {
            // No member of the nonnegative quadrant lies below a point with a
            // negative coordinate.
            if (!quad_member(x)) return std::nullopt;
            return x;
        };
        quad.upper_witness = [K](const std::string& x) -> std::optional<std::string> {
            auto v = vec_parse(x, K);
            for (auto& c : v)
                if (c < 0) c = 0;
            return vec_encode(v);
        };
        e.subsets["quadrant"] = quad;

        SubsetSpec origin;
        origin.name = "origin";
        const std::string id = o->identity;
        origin.member = [id](const std::string& x) { return x == id; };
        origin.finite_elements = {id};
        origin.lower_witness = [K, id](const std::string& x) -> std::optional<std::string> {
            for (const auto& c : vec_parse(x, K))
                if (c < 0) return std::nullopt;
            return id;
        };
        e.subsets["origin"] = origin;
    }
    e.default_subset = "diagonal";
    e.omega_narrow_set = e.subsets["diagonal"];
    e.omega_narrow_set.name = "A";
    return e;
}

// -------------------------------------------------------------- sym_loewner

CatalogEntry build_sym_loewner(long n) {
    if (n < 1) throw BadParameter("sym_loewner needs n >= 1");
    if (n > 5) throw BadParameter("sym_loewner limited to n <= 5 (exact minor test)");
    const auto N = static_cast<std::size_t>(n);
    auto parse_sym = [N](const std::string& s) {
        RatMatrix m = RatMatrix::parse(s);
        if (m.dim() != N) throw ParseError("expected a " + std::to_string(N) + "x" +
                                           std::to_string(N) + " matrix: " + s);
        if (!m.is_symmetric()) throw NotSymmetric("not symmetric: " + s);
        return m;
    };
    auto o = std::make_shared<GroupOracle>();
    o->name = "sym_loewner";
    o->identity = RatMatrix(N).encode();
    o->mul = [parse_sym](const std::string& a, const std::string& b) {
        return (parse_sym(a) + parse_sym(b)).encode();
    };
    o->inv = [parse_sym](const std::string& a) { return parse_sym(a).negated().encode(); };
    o->leq = [parse_sym](const std::string& a, const std::string& b) {
        return psd_check(parse_sym(b) - parse_sym(a));
    };
    o->covers_above = [](const std::string&) { return CoversAbove::dense(); };
    for (std::size_t i = 0; i < N; ++i) {
        RatMatrix g(N);
        g.at(i, i) = 1;
        o->generators.push_back(g.encode());
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            RatMatrix g(N);
            g.at(i, j) = 1;
            g.at(j, i) = 1;
            o->generators.push_back(g.encode());
        }
    o->cardinality = Cardinality::continuum;
    o->abelian = true;
    o->decode = [parse_sym](const std::string& s) { return parse_sym(s).encode(); };
    o->sample = [N](std::mt19937_64& rng) {
        RatMatrix m(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                mpq_class v(rand_range(rng, -3, 3), rand_range(rng, 1, 2));
                v.canonicalize();
                m.at(i, j) = v;
                m.at(j, i) = v;
            }
        return m.encode();
    };
    auto shifted = [parse_sym, N](const std::string& a, const std::string& b, int sign) {
        RatMatrix ma = parse_sym(a), mb = parse_sym(b);
        mpq_class lam = ceil_q(row_sum_bound(ma) + row_sum_bound(mb)) + 1;
        RatMatrix out(N);
        for (std::size_t i = 0; i < N; ++i) out.at(i, i) = sign * lam;
        return out.encode();
    };
    o->lower_bound_hint = [shifted](const std::string& a, const std::string& b) {
        return BoundAnswer{BoundAnswer::Kind::found, shifted(a, b, -1)};
    };
    o->upper_bound_hint = [shifted](const std::string& a, const std::string& b) {
        return BoundAnswer{BoundAnswer::Kind::found, shifted(a, b, +1)};
    };

    CatalogEntry e;
    e.name = "sym_loewner";
    e.params = {{"n", n}};
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::dense;
    e.expected.radius = 0;
    e.expected.width = (n == 1) ? std::optional<long>(1) : std::nullopt;
    e.expected.cardinality = Cardinality::continuum;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail},
                             {"totally_omega_narrow", CheckStatus::fail},
                             {"beat_dichotomy", CheckStatus::inapplicable},
                             {"classification", CheckStatus::inapplicable}};
    e.window_elems = [N](int d) {
        std::vector<std::string> out;
        if (N <= 2) {
            long diag = std::min<long>(d, 2), off = std::min<long>(d, 1);
            if (N == 1) {
                for (long a = -2 * d; a <= 2 * d; ++a) {
                    RatMatrix m(1);
                    m.at(0, 0) = mpq_class(a, 2);
                    m.at(0, 0).canonicalize();
                    out.push_back(m.encode());
                }
                return out;
            }
            for (long a = -diag; a <= diag; ++a)
                for (long c = -diag; c <= diag; ++c)
                    for (long b = -off; b <= off; ++b) {
                        RatMatrix m(2);
                        m.at(0, 0) = a;
                        m.at(1, 1) = c;
                        m.at(0, 1) = b;
                        m.at(1, 0) = b;
                        out.push_back(m.encode());
                    }
            return out;
        }
        // Larger sizes: diagonal matrices with small entries.
        std::vector<long> v(N, -1);
        for (;;) {
            RatMatrix m(N);
            for (std::size_t i = 0; i < N; ++i) m.at(i, i) = v[i];
            out.push_back(m.encode());
            std::size_t i = 0;
            while (i < N) {
                v[i] += 1;
                if (v[i] <= 1) break;
                v[i] = -1;
                ++i;
            }
            if (i == N) break;
        }
        return out;
    };
    e.chain_generator = RatMatrix::identity(N).encode();
    e.subsets["all"] = whole_group_subset();
    e.default_subset = "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    e.omega_narrow_set.upper_witness =
        [parse_sym, N](const std::string& x) -> std::optional<std::string> {
        RatMatrix m = parse_sym(x);
        mpq_class lam = ceil_q(row_sum_bound(m)) + 1;
        for (std::size_t i = 0; i < N; ++i) m.at(i, i) += lam;
        return m.encode();
    };
    return e;
}

// ------------------------------------------------------------------ gl_det

CatalogEntry build_gl_det(long n) {
    if (n < 1) throw BadParameter("gl_det needs n >= 1");
    if (n > 6) throw BadParameter("gl_det limited to n <= 6");
    const auto N = static_cast<std::size_t>(n);
    auto parse_gl = [N](const std::string& s) {
        RatMatrix m = RatMatrix::parse(s);
        if (m.dim() != N) throw ParseError("expected a " + std::to_string(N) + "x" +
                                           std::to_string(N) + " matrix: " + s);
        if (m.det() == 0) throw BadParameter("singular matrix is not in GL: " + s);
        return m;
    };
    auto scale = [N](const mpq_class& q) {
        RatMatrix m = RatMatrix::identity(N);
        m.at(0, 0) = q;
        return m;
    };
    auto o = std::make_shared<GroupOracle>();
    o->name = "gl_det";
    o->identity = RatMatrix::identity(N).encode();
    o->mul = [parse_gl](const std::string& a, const std::string& b) {
        return (parse_gl(a) * parse_gl(b)).encode();
    };
    o->inv = [parse_gl](const std::string& a) { return parse_gl(a).inverse().encode(); };
    o->leq = [parse_gl](const std::string& a, const std::string& b) {
        if (a == b) return true;
        return abs(parse_gl(a).det()) < abs(parse_gl(b).det());
    };
    o->covers_above = [](const std::string&) { return CoversAbove::unsupported(); };
    o->generators.push_back(scale(2).encode());
    if (N >= 2) {
        RatMatrix shear = RatMatrix::identity(N);
        shear.at(0, 1) = 1;
        o->generators.push_back(shear.encode());
        RatMatrix perm(N);
        for (std::size_t i = 0; i < N; ++i) perm.at((i + 1) % N, i) = 1;
        o->generators.push_back(perm.encode());
    }
    o->cardinality = Cardinality::continuum;
    o->abelian = false;
    o->decode = [parse_gl](const std::string& s) { return parse_gl(s).encode(); };
    o->sample = [N](std::mt19937_64& rng) {
        for (int tries = 0; tries < 100; ++tries) {
            RatMatrix m(N);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    mpq_class v(rand_range(rng, -3, 3), rand_range(rng, 1, 2));
                    v.canonicalize();
                    m.at(i, j) = v;
                }
            if (m.det() != 0) return m.encode();
        }
        RatMatrix m = RatMatrix::identity(N);
        m.at(0, 0) = mpq_class(rand_range(rng, 1, 64));
        return m.encode();
    };
    o->lower_bound_hint = [parse_gl, scale](const std::string& a, const std::string& b) {
        if (a == b) return BoundAnswer{BoundAnswer::Kind::found, a};
        mpq_class da = abs(parse_gl(a).det()), db = abs(parse_gl(b).det());
        mpq_class q = std::min(da, db) / 2;
        return BoundAnswer{BoundAnswer::Kind::found, scale(q).encode()};
    };
    o->upper_bound_hint = [parse_gl, scale](const std::string& a, const std::string& b) {
        mpq_class da = abs(parse_gl(a).det()), db = abs(parse_gl(b).det());
        mpq_class q = std::max(da, db) * 2;
        return BoundAnswer{BoundAnswer::Kind::found, scale(q).encode()};
    };

    CatalogEntry e;
    e.name = "gl_det";
    e.params = {{"n", n}};
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::unsupported;
    e.expected.radius = 0;
    e.expected.width = (n == 1) ? std::optional<long>(2) : std::nullopt;
    e.expected.abelian = (n == 1);
    e.expected.cardinality = Cardinality::continuum;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail},
                             {"totally_omega_narrow", CheckStatus::fail},
                             {"beat_dichotomy", CheckStatus::inapplicable},
                             {"classification", CheckStatus::inapplicable},
                             {"radius_relations", CheckStatus::inapplicable}};
    e.window_elems = [N, scale](int d) {
        std::vector<std::string> out;
        out.push_back(RatMatrix::identity(N).encode());
        for (long k = 2; k <= d + 1; ++k) {
            out.push_back(scale(k).encode());
            out.push_back(scale(-k).encode());
            mpq_class inv_k(1, k);
            out.push_back(scale(inv_k).encode());
            out.push_back(scale(-inv_k).encode());
        }
        out.push_back(scale(-1).encode());
        if (N >= 2) {
            for (long k = -d; k <= d; ++k) {
                if (k == 0) continue;
                RatMatrix s1 = RatMatrix::identity(N), s2 = RatMatrix::identity(N);
                s1.at(0, 1) = k;
                s2.at(1, 0) = k;
                out.push_back(s1.encode());
                out.push_back(s2.encode());
            }
            RatMatrix perm(N);
            for (std::size_t i = 0; i < N; ++i) perm.at((i + 1) % N, i) = 1;
            out.push_back(perm.encode());
            out.push_back(perm.inverse().encode());
        }
        return out;
    };
    e.chain_generator = scale(2).encode();
    e.subsets["all"] = whole_group_subset();
    e.default_subset = "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    e.omega_narrow_set.upper_witness =
        [parse_gl, scale](const std::string& x) -> std::optional<std::string> {
        return (parse_gl(x) * scale(2)).encode();
    };
    return e;
}

// ------------------------------------------------- Z + Z_n family (shared)

struct ZxZnOps {
    long n;
    std::pair<mpz_class, long> parse(const std::string& s) const {
        auto parts = tuple_parse(s, 2);
        mpz_class a = parse_integer(parts[0]);
        mpz_class b = parse_integer(parts[1]);
        if (b < 0 || b >= n) throw ParseError("torsion coordinate out of range: " + s);
        return {a, b.get_si()};
    }
    std::string enc(const mpz_class& a, long b) const {
        return pair_str(a.get_str(), std::to_string(b));
    }
};

CatalogEntry build_zxzn(const std::string& name, long n, bool level_order) {
    // level_order: (a,b) <= (c,d) iff a < c or (a,b) == (c,d)   [width_join]
    // otherwise:   (a,b) <= (c,d) iff a <= c and b == d         [disjoint chains]
    if (n < 1) throw BadParameter(name + " needs n >= 1");
    if (n > 64) throw BadParameter(name + " limited to n <= 64");
    ZxZnOps ops{n};
    auto o = std::make_shared<GroupOracle>();
    o->name = name;
    o->identity = ops.enc(0, 0);
    o->mul = [ops](const std::string& x, const std::string& y) {
        auto [a, b] = ops.parse(x);
        auto [c, d] = ops.parse(y);
        return ops.enc(a + c, (b + d) % ops.n);
    };
    o->inv = [ops](const std::string& x) {
        auto [a, b] = ops.parse(x);
        return ops.enc(-a, (ops.n - b) % ops.n);
    };
    if (level_order) {
        o->leq = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            return a < c || (a == c && b == d);
        };
        o->covers_above = [ops](const std::string& x) {
            auto [a, b] = ops.parse(x);
            std::vector<std::string> ups;
            for (long t = 0; t < ops.n; ++t) ups.push_back(ops.enc(a + 1, t));
            return CoversAbove::finite(std::move(ups));
        };
        o->lower_bound_hint = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            return BoundAnswer{BoundAnswer::Kind::found, ops.enc(std::min(a, c) - 1, 0)};
        };
        o->upper_bound_hint = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            return BoundAnswer{BoundAnswer::Kind::found, ops.enc(std::max(a, c) + 1, 0)};
        };
    } else {
        o->leq = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            return b == d && a <= c;
        };
        o->covers_above = [ops](const std::string& x) {
            auto [a, b] = ops.parse(x);
            return CoversAbove::finite({ops.enc(a + 1, b)});
        };
        o->lower_bound_hint = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            if (b != d) return BoundAnswer{BoundAnswer::Kind::none_exists, {}};
            return BoundAnswer{BoundAnswer::Kind::found, ops.enc(std::min(a, c), b)};
        };
        o->upper_bound_hint = [ops](const std::string& x, const std::string& y) {
            auto [a, b] = ops.parse(x);
            auto [c, d] = ops.parse(y);
            if (b != d) return BoundAnswer{BoundAnswer::Kind::none_exists, {}};
            return BoundAnswer{BoundAnswer::Kind::found, ops.enc(std::max(a, c), b)};
        };
    }
    o->generators.push_back(ops.enc(1, 0));
    if (n > 1) o->generators.push_back(ops.enc(0, 1));
    o->cardinality = Cardinality::countable;
    o->abelian = true;
    o->decode = [ops](const std::string& s) {
        auto [a, b] = ops.parse(s);
        return ops.enc(a, b);
    };
    o->sample = [ops](std::mt19937_64& rng) {
        return ops.enc(rand_range(rng, -50, 50), rand_range(rng, 0, ops.n - 1));
    };

    CatalogEntry e;
    e.name = name;
    e.params = {{"n", n}};
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::finite;
    e.expected.radius = level_order ? n : 1;
    e.expected.width = n;
    e.expected.connected = level_order || n == 1;
    e.expected.hyperconnected = e.expected.connected;
    e.expected.has_beat_points = !level_order || n == 1;
    e.expected.cardinality = Cardinality::countable;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail}};
    if (!e.expected.connected)
        e.expected.law_status["directed_hyperconnected"] = CheckStatus::fail;
    e.window_elems = [ops](int d) {
        std::vector<std::string> out;
        for (long a = -d; a <= d; ++a)
            for (long t = 0; t < ops.n; ++t) out.push_back(ops.enc(a, t));
        return out;
    };
    e.chain_generator = ops.enc(1, 0);
    e.subsets["all"] = whole_group_subset();
    {
        SubsetSpec base;
        base.name = "base_chain";
        base.member = [ops](const std::string& x) { return ops.parse(x).second == 0; };
        base.lower_witness = [ops, level_order](const std::string& x)
            -> std::optional<std::string> {
            auto [a, b] = ops.parse(x);
            if (b == 0) return ops.enc(a, 0);
            if (!level_order) return std::nullopt;  // other chains never dip into this one
            return ops.enc(a - 1, 0);
        };
        base.upper_witness = [ops, level_order](const std::string& x)
            -> std::optional<std::string> {
            auto [a, b] = ops.parse(x);
            if (b == 0) return ops.enc(a, 0);
            if (!level_order) return std::nullopt;
            return ops.enc(a + 1, 0);
        };
        e.subsets["base_chain"] = base;
    }
    e.default_subset = level_order ? "base_chain" : "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    return e;
}

// ------------------------------------------------------ disjoint_chains_rat

CatalogEntry build_disjoint_chains_rat(long n) {
    if (n < 1) throw BadParameter("disjoint_chains_rat needs n >= 1");
    if (n > 64) throw BadParameter("disjoint_chains_rat limited to n <= 64");
    auto parse = [n](const std::string& s) {
        auto parts = tuple_parse(s, 2);
        mpq_class q = parse_rational(parts[0]);
        mpz_class b = parse_integer(parts[1]);
        if (b < 0 || b >= n) throw ParseError("torsion coordinate out of range: " + s);
        return std::make_pair(q, b.get_si());
    };
    auto enc = [](const mpq_class& q, long b) {
        return pair_str(format_rational(q), std::to_string(b));
    };
    auto o = std::make_shared<GroupOracle>();
    o->name = "disjoint_chains_rat";
    o->identity = enc(0, 0);
    o->mul = [parse, enc, n](const std::string& x, const std::string& y) {
        auto [a, b] = parse(x);
        auto [c, d] = parse(y);
        return enc(a + c, (b + d) % n);
    };
    o->inv = [parse, enc, n](const std::string& x) {
        auto [a, b] = parse(x);
        return enc(-a, (n - b) % n);
    };
    o->leq = [parse](const std::string& x, const std::string& y) {
        auto [a, b] = parse(x);
        auto [c, d] = parse(y);
        return b == d && a <= c;
    };
    o->covers_above = [](const std::string&) { return CoversAbove::dense(); };
    o->generators.push_back(enc(1, 0));
    o->generators.push_back(enc(mpq_class(1, 2), 0));
    if (n > 1) o->generators.push_back(enc(0, 1));
    o->cardinality = Cardinality::countable;
    o->abelian = true;
    o->decode = [parse, enc](const std::string& s) {
        auto [a, b] = parse(s);
        return enc(a, b);
    };
    o->sample = [enc, n](std::mt19937_64& rng) {
        mpq_class q(rand_range(rng, -200, 200), rand_range(rng, 1, 12));
        q.canonicalize();
        return enc(q, rand_range(rng, 0, n - 1));
    };
    o->lower_bound_hint = [parse, enc](const std::string& x, const std::string& y) {
        auto [a, b] = parse(x);
        auto [c, d] = parse(y);
        if (b != d) return BoundAnswer{BoundAnswer::Kind::none_exists, {}};
        return BoundAnswer{BoundAnswer::Kind::found, enc(std::min(a, c), b)};
    };
    o->upper_bound_hint = [parse, enc](const std::string& x, const std::string& y) {
        auto [a, b] = parse(x);
        auto [c, d] = parse(y);
        if (b != d) return BoundAnswer{BoundAnswer::Kind::none_exists, {}};
        return BoundAnswer{BoundAnswer::Kind::found, enc(std::max(a, c), b)};
    };

    CatalogEntry e;
    e.name = "disjoint_chains_rat";
    e.params = {{"n", n}};
    e.oracle = o;
    e.expected.radius_kind = CoversAbove::Kind::dense;
    e.expected.radius = 0;
    e.expected.width = n;
    e.expected.connected = (n == 1);
    e.expected.hyperconnected = (n == 1);
    e.expected.cardinality = Cardinality::countable;
    e.expected.law_status = {{"inversion_monotone", CheckStatus::fail},
                             {"beat_dichotomy", CheckStatus::inapplicable},
                             {"classification", CheckStatus::inapplicable}};
    if (n > 1) e.expected.law_status["directed_hyperconnected"] = CheckStatus::fail;
    e.window_elems = [enc, n](int d) {
        std::vector<std::string> out;
        for (long k = -2 * d; k <= 2 * d; ++k)
            for (long t = 0; t < n; ++t) {
                mpq_class q(k, 2);
                q.canonicalize();
                out.push_back(enc(q, t));
            }
        return out;
    };
    e.chain_generator = enc(1, 0);
    e.subsets["all"] = whole_group_subset();
    e.default_subset = "all";
    e.omega_narrow_set = whole_group_subset();
    e.omega_narrow_set.name = "A";
    return e;
}

}  // namespace

std::string CatalogEntry::display() const {
    if (params.empty()) return name;
    std::string s = name + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ",";
        first = false;
        s += k + "=" + std::to_string(v);
    }
    return s + ")";
}

const SubsetSpec& CatalogEntry::subset(const std::string& sname) const {
    auto it = subsets.find(sname);
    if (it == subsets.end())
        throw BadParameter("example " + name + " has no subset '" + sname + "'");
    return it->second;
}

std::vector<std::string> catalog_names() {
    return {"int_chain",   "rat_chain",           "int_vectors",
            "sym_loewner", "gl_det",              "width_join",
            "disjoint_chains_int",                "disjoint_chains_rat"};
}

CatalogEntry catalog_build(const std::string& name, const std::map<std::string, long>& params) {
    if (name == "int_chain") {
        reject_unknown_params(params, {});
        return build_int_chain();
    }
    if (name == "rat_chain") {
        reject_unknown_params(params, {});
        return build_rat_chain();
    }
    if (name == "int_vectors") {
        reject_unknown_params(params, {"k"});
        return build_int_vectors(get_param(params, "k", 2));
    }
    if (name == "sym_loewner") {
        reject_unknown_params(params, {"n"});
        return build_sym_loewner(get_param(params, "n", 2));
    }
    if (name == "gl_det") {
        reject_unknown_params(params, {"n"});
        return build_gl_det(get_param(params, "n", 2));
    }
    if (name == "width_join") {
        reject_unknown_params(params, {"n"});
        return build_zxzn("width_join", get_param(params, "n", 2), true);
    }
    if (name == "disjoint_chains_int") {
        reject_unknown_params(params, {"n"});
        return build_zxzn("disjoint_chains_int", get_param(params, "n", 2), false);
    }
    if (name == "disjoint_chains_rat") {
        reject_unknown_params(params, {"n"});
        return build_disjoint_chains_rat(get_param(params, "n", 2));
    }
    throw UnknownExample(name);
}

std::vector<std::string> sl_antichain_sample(std::size_t n, std::size_t count) {
    if (n < 2) throw BadParameter("sl_antichain_sample needs n >= 2");
    if (count < 1) throw BadParameter("sl_antichain_sample needs count >= 1");
    std::vector<std::string> out;
    out.push_back(RatMatrix::identity(n).encode());
    for (long k = 1; out.size() < count; ++k) {
        for (std::size_t i = 0; i < n && out.size() < count; ++i)
            for (std::size_t j = 0; j < n && out.size() < count; ++j) {
                if (i == j) continue;
                RatMatrix m = RatMatrix::identity(n);
                m.at(i, j) = k;
                out.push_back(m.encode());
            }
    }
    return out;
}

OraclePtr trivial_oracle() {
    auto o = std::make_shared<GroupOracle>();
    o->name = "trivial";
    o->identity = "e";
    o->mul = [](const std::string&, const std::string&) { return std::string("e"); };
    o->inv = [](const std::string&) { return std::string("e"); };
    o->leq = [](const std::string& a, const std::string& b) { return a == b; };
    o->covers_above = [](const std::string&) { return CoversAbove::finite({}); };
    o->generators = {};
    o->cardinality = Cardinality::finite;
    o->abelian = true;
    o->decode = [](const std::string& s) {
        if (s != "e") throw ParseError("bad element: " + s);
        return s;
    };
    o->sample = [](std::mt19937_64&) { return std::string("e"); };
    o->lower_bound_hint = [](const std::string&, const std::string&) {
        return BoundAnswer{BoundAnswer::Kind::found, "e"};
    };
    o->upper_bound_hint = [](const std::string&, const std::string&) {
        return BoundAnswer{BoundAnswer::Kind::found, "e"};
    };
    return o;
}

}  // namespace alexpara
