#include "alexpara/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "alexpara/errors.hpp"

namespace alexpara {

std::string to_string(Cardinality c) {
    switch (c) {
        case Cardinality::finite: return "finite";
        case Cardinality::countable: return "countable";
        case Cardinality::continuum: return "continuum";
    }
    return "?";
}

std::vector<std::string> ball(const GroupOracle& o, int depth, std::size_t cap) {
    std::vector<std::string> steps;
    for (const auto& g : o.generators) {
        steps.push_back(g);
        steps.push_back(o.inv(g));
    }
    std::vector<std::string> frontier{o.identity};
    std::vector<std::string> out{o.identity};
    std::unordered_set<std::string> seen{o.identity};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        for (const auto& x : frontier)
            for (const auto& s : steps) {
                std::string y = o.mul(x, s);
                if (!seen.insert(y).second) continue;
                if (seen.size() > cap)
                    throw ExplosionLimit("ball exceeded cap of " + std::to_string(cap));
                next.push_back(y);
                out.push_back(y);
            }
        frontier = std::move(next);
    }
    return out;
}

Window make_window(OraclePtr o, std::vector<std::string> elems) {
    std::vector<std::string> uniq;
    std::unordered_set<std::string> seen;
    for (auto& e : elems)
        if (seen.insert(e).second) uniq.push_back(std::move(e));
    const std::size_t n = uniq.size();
    std::vector<uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i * n + j] = o->leq(uniq[i], uniq[j]) ? 1 : 0;
    Window w;
    w.oracle = std::move(o);
    w.poset = FinitePoset::from_leq_matrix(std::move(uniq), std::move(leq));
    if (!verify_window_order(w)) throw Error("window order failed post-construction re-check");
    return w;
}

bool verify_window_order(const Window& w) {
    const auto& els = w.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j)
            if (w.poset.leq(i, j) != w.oracle->leq(els[i], els[j])) return false;
    return true;
}

std::vector<std::string> default_sample(const GroupOracle& o, int depth,
                                        std::size_t extra_random, std::uint64_t seed,
                                        std::size_t cap) {
    std::vector<std::string> out = ball(o, depth, cap);
    std::unordered_set<std::string> seen(out.begin(), out.end());
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < extra_random; ++i) {
        std::string x = o.sample(rng);
        if (seen.insert(x).second) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> comparable_pairs(
    const GroupOracle& o, const std::vector<std::string>& sample, std::size_t limit) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < sample.size() && out.size() < limit; ++i)
        for (std::size_t j = 0; j < sample.size() && out.size() < limit; ++j) {
            if (i == j) continue;
            if (o.leq(sample[i], sample[j])) out.emplace_back(sample[i], sample[j]);
        }
    return out;
}

namespace {

SearchOutcome find_common_bound(const GroupOracle& o, const std::string& x,
                                const std::string& y, const Budget& budget, bool lower) {
    const auto& hint = lower ? o.lower_bound_hint : o.upper_bound_hint;
    auto fits = [&](const std::string& z) {
        return lower ? (o.leq(z, x) && o.leq(z, y)) : (o.leq(x, z) && o.leq(y, z));
    };
    if (hint) {
        BoundAnswer a = hint(x, y);
        if (a.kind == BoundAnswer::Kind::found) {
            if (!fits(a.witness)) throw Error("oracle bound hint produced a non-bound");
            return {SearchOutcome::Kind::found, a.witness};
        }
        if (a.kind == BoundAnswer::Kind::none_exists)
            return {SearchOutcome::Kind::none_exists, {}};
    }
    // Expanding search around the identity and both endpoints.
    std::unordered_set<std::string> seen;
    for (int d = 1; d <= budget.search_depth; ++d) {
        std::vector<std::string> base = ball(o, d, budget.ball_cap);
        std::vector<std::string> candidates;
        candidates.reserve(base.size() * 3);
        for (const auto& b : base) {
            candidates.push_back(b);
            candidates.push_back(o.mul(x, b));
            candidates.push_back(o.mul(y, b));
        }
        for (const auto& z : candidates) {
            if (!seen.insert(z).second) continue;
            if (fits(z)) return {SearchOutcome::Kind::found, z};
        }
    }
    return {SearchOutcome::Kind::exhausted, {}};
}

}  // namespace

SearchOutcome find_common_lower(const GroupOracle& o, const std::string& x,
                                const std::string& y, const Budget& budget) {
    return find_common_bound(o, x, y, budget, true);
}

SearchOutcome find_common_upper(const GroupOracle& o, const std::string& x,
                                const std::string& y, const Budget& budget) {
    return find_common_bound(o, x, y, budget, false);
}

namespace {

std::vector<std::string> split_product(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string join_product(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].find('|') != std::string::npos)
            throw BadParameter("product components must not contain '|'");
        if (i) out += '|';
        out += parts[i];
    }
    return out;
}

}  // namespace

OraclePtr product_oracle(const std::vector<OraclePtr>& factors) {
    if (factors.empty()) throw BadParameter("product needs at least one factor");
    if (factors.size() > 8) throw BadParameter("product limited to 8 factors");
    auto o = std::make_shared<GroupOracle>();
    std::vector<std::string> ids;
    o->name = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        ids.push_back(factors[i]->identity);
        if (i) o->name += ",";
        o->name += factors[i]->name;
    }
    o->name += ")";
    o->identity = join_product(ids);
    const auto fs = factors;  // captured copy
    o->mul = [fs](const std::string& a, const std::string& b) {
        auto pa = split_product(a), pb = split_product(b);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fs[i]->mul(pa[i], pb[i]));
        return join_product(out);
    };
    o->inv = [fs](const std::string& a) {
        auto pa = split_product(a);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fs[i]->inv(pa[i]));
        return join_product(out);
    };
    o->leq = [fs](const std::string& a, const std::string& b) {
        auto pa = split_product(a), pb = split_product(b);
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (!fs[i]->leq(pa[i], pb[i])) return false;
        return true;
    };
    o->covers_above = [fs](const std::string& a) {
        auto pa = split_product(a);
        bool all_dense = true;
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CoversAbove c = fs[i]->covers_above(pa[i]);
            if (c.kind == CoversAbove::Kind::unsupported) return CoversAbove::unsupported();
            if (c.kind == CoversAbove::Kind::dense) continue;
            all_dense = false;
            for (const auto& e : c.elems) {
                auto parts = pa;
                parts[i] = e;
                elems.push_back(join_product(parts));
            }
        }
        if (all_dense) return CoversAbove::dense();
        return CoversAbove::finite(std::move(elems));
    };
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const auto& g : fs[i]->generators) {
            auto parts = ids;
            parts[i] = g;
            o->generators.push_back(join_product(parts));
        }
    o->cardinality = Cardinality::finite;
    o->abelian = true;
    for (const auto& f : fs) {
        if (static_cast<int>(f->cardinality) > static_cast<int>(o->cardinality))
            o->cardinality = f->cardinality;
        if (!f->abelian) o->abelian = false;
    }
    o->decode = [fs](const std::string& s) {
        auto parts = split_product(s);
        if (parts.size() != fs.size()) throw ParseError("bad product element: " + s);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fs[i]->decode(parts[i]));
        return join_product(out);
    };
    o->sample = [fs](std::mt19937_64& rng) {
        std::vector<std::string> out;
        for (const auto& f : fs) out.push_back(f->sample(rng));
        return join_product(out);
    };
    auto lift_hint = [fs](bool lower) {
        return [fs, lower](const std::string& a, const std::string& b) {
            auto pa = split_product(a), pb = split_product(b);
            std::vector<std::string> out;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const auto& hint = lower ? fs[i]->lower_bound_hint : fs[i]->upper_bound_hint;
                if (!hint) return BoundAnswer{BoundAnswer::Kind::unknown, {}};
                BoundAnswer h = hint(pa[i], pb[i]);
                if (h.kind != BoundAnswer::Kind::found) return BoundAnswer{h.kind, {}};
                out.push_back(h.witness);
            }
            return BoundAnswer{BoundAnswer::Kind::found, join_product(out)};
        };
    };
    o->lower_bound_hint = lift_hint(true);
    o->upper_bound_hint = lift_hint(false);
    return o;
}

SubsetSpec product_subset(const std::vector<OraclePtr>& factors,
                          const std::vector<SubsetSpec>& specs) {
    if (factors.size() != specs.size()) throw BadParameter("factor/subset count mismatch");
    SubsetSpec s;
    s.name = "product(";
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (i) s.name += ",";
        s.name += specs[i].name;
    }
    s.name += ")";
    const auto sp = specs;
    s.member = [sp](const std::string& x) {
        auto parts = split_product(x);
        if (parts.size() != sp.size()) return false;
        for (std::size_t i = 0; i < sp.size(); ++i)
            if (!sp[i].member(parts[i])) return false;
        return true;
    };
    bool all_lower = true;
    for (const auto& spec : specs)
        if (!spec.lower_witness) all_lower = false;
    if (all_lower) {
        s.lower_witness = [sp](const std::string& x) -> std::optional<std::string> {
            auto parts = split_product(x);
            std::vector<std::string> out;
            for (std::size_t i = 0; i < sp.size(); ++i) {
                auto w = sp[i].lower_witness(parts[i]);
                if (!w) return std::nullopt;
                out.push_back(*w);
            }
            return join_product(out);
        };
    }
    return s;
}

namespace {

void push_step(std::vector<TraceStep>& t, std::string op, std::vector<std::string> args,
               std::string result) {
    t.push_back({std::move(op), std::move(args), std::move(result)});
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

CheckResult check_group_axioms(const GroupOracle& o, const std::vector<std::string>& sample,
                               std::uint64_t seed) {
    CheckResult r = make_result("group_axioms", CheckStatus::pass, seed, sample.size());
    auto fail = [&](std::vector<TraceStep> steps, const std::string& note) {
        r.status = CheckStatus::fail;
        r.witness = std::move(steps);
        r.note = note;
        return r;
    };
    for (const auto& a : sample) {
        if (o.mul(o.identity, a) != a || o.mul(a, o.identity) != a) {
            std::vector<TraceStep> t;
            push_step(t, "mul", {o.identity, a}, o.mul(o.identity, a));
            push_step(t, "mul", {a, o.identity}, o.mul(a, o.identity));
            return fail(std::move(t), "identity law violated at " + a);
        }
        const std::string ai = o.inv(a);
        if (o.mul(a, ai) != o.identity || o.mul(ai, a) != o.identity) {
            std::vector<TraceStep> t;
            push_step(t, "inv", {a}, ai);
            push_step(t, "mul", {a, ai}, o.mul(a, ai));
            return fail(std::move(t), "inverse law violated at " + a);
        }
    }
    const std::size_t n = sample.size();
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const auto &a = sample[i], &b = sample[(i + 1) % n], &c = sample[(i + 2) % n];
        const std::string ab_c = o.mul(o.mul(a, b), c);
        const std::string a_bc = o.mul(a, o.mul(b, c));
        if (ab_c != a_bc) {
            std::vector<TraceStep> t;
            push_step(t, "mul", {a, b}, o.mul(a, b));
            push_step(t, "mul", {o.mul(a, b), c}, ab_c);
            push_step(t, "mul", {b, c}, o.mul(b, c));
            push_step(t, "mul", {a, o.mul(b, c)}, a_bc);
            return fail(std::move(t), "associativity violated");
        }
    }
    return r;
}

CheckResult check_translations_monotone(
    const GroupOracle& o, const std::vector<std::pair<std::string, std::string>>& sample,
    const std::vector<std::string>& translators, std::uint64_t seed) {
    CheckResult r = make_result("translations_monotone", CheckStatus::pass, seed,
                                sample.size() * translators.size());
    for (const auto& [a, b] : sample) {
        if (!o.leq(a, b)) continue;
        for (const auto& g : translators) {
            const std::string ga = o.mul(g, a), gb = o.mul(g, b);
            const std::string ag = o.mul(a, g), bg = o.mul(b, g);
            if (!o.leq(ga, gb) || !o.leq(ag, bg)) {
                r.status = CheckStatus::fail;
                push_step(r.witness, "leq", {a, b}, "true");
                if (!o.leq(ga, gb)) {
                    push_step(r.witness, "mul", {g, a}, ga);
                    push_step(r.witness, "mul", {g, b}, gb);
                    push_step(r.witness, "leq", {ga, gb}, "false");
                    r.note = "left translation by " + g + " breaks " + a + " <= " + b;
                } else {
                    push_step(r.witness, "mul", {a, g}, ag);
                    push_step(r.witness, "mul", {b, g}, bg);
                    push_step(r.witness, "leq", {ag, bg}, "false");
                    r.note = "right translation by " + g + " breaks " + a + " <= " + b;
                }
                return r;
            }
        }
    }
    return r;
}

CheckResult check_inversion_monotone(
    const GroupOracle& o, const std::vector<std::pair<std::string, std::string>>& sample,
    std::uint64_t seed) {
    CheckResult r = make_result("inversion_monotone", CheckStatus::pass, seed, sample.size());
    for (const auto& [a, b] : sample) {
        if (!o.leq(a, b)) continue;
        const std::string ia = o.inv(a), ib = o.inv(b);
        if (!o.leq(ia, ib)) {
            r.status = CheckStatus::fail;
            push_step(r.witness, "leq", {a, b}, "true");
            push_step(r.witness, "inv", {a}, ia);
            push_step(r.witness, "inv", {b}, ib);
            push_step(r.witness, "leq", {ia, ib}, "false");
            r.note = "inversion reverses " + a + " <= " + b;
            return r;
        }
    }
    return r;
}

CheckResult check_homomorphism(
    const std::function<std::string(const std::string&)>& f, const GroupOracle& src,
    const GroupOracle& dst, const std::vector<std::string>& sample, std::uint64_t seed) {
    CheckResult r = make_result("homomorphism", CheckStatus::pass, seed, sample.size());
    const std::size_t n = sample.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto &a = sample[i], &b = sample[(i + 1) % n];
        const std::string lhs = f(src.mul(a, b));
        const std::string rhs = dst.mul(f(a), f(b));
        if (lhs != rhs) {
            r.status = CheckStatus::fail;
            push_step(r.witness, "mul", {a, b}, src.mul(a, b));
            push_step(r.witness, "map", {src.mul(a, b)}, lhs);
            push_step(r.witness, "map", {a}, f(a));
            push_step(r.witness, "map", {b}, f(b));
            push_step(r.witness, "mul", {f(a), f(b)}, rhs);
            r.note = "not multiplicative at (" + a + ", " + b + ")";
            return r;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto &a = sample[i], &b = sample[j];
            if (!src.leq(a, b)) continue;
            if (!dst.leq(f(a), f(b))) {
                r.status = CheckStatus::fail;
                push_step(r.witness, "leq", {a, b}, "true");
                push_step(r.witness, "map", {a}, f(a));
                push_step(r.witness, "map", {b}, f(b));
                push_step(r.witness, "leq", {f(a), f(b)}, "false");
                r.note = "monotonicity fails at " + a + " <= " + b;
                return r;
            }
        }
    return r;
}

bool replay_witness(const GroupOracle& o, const std::vector<TraceStep>& steps,
                    const std::vector<SubsetSpec>& subsets) {
    for (const auto& s : steps) {
        if (s.op == "leq") {
            if (s.args.size() != 2 || bool_str(o.leq(s.args[0], s.args[1])) != s.result)
                return false;
        } else if (s.op == "mul") {
            if (s.args.size() != 2 || o.mul(s.args[0], s.args[1]) != s.result) return false;
        } else if (s.op == "inv") {
            if (s.args.size() != 1 || o.inv(s.args[0]) != s.result) return false;
        } else if (s.op == "eq") {
            if (s.args.size() != 2 || bool_str(s.args[0] == s.args[1]) != s.result) return false;
        } else if (s.op.rfind("member:", 0) == 0) {
            const std::string name = s.op.substr(7);
            const SubsetSpec* spec = nullptr;
            for (const auto& sub : subsets)
                if (sub.name == name) spec = &sub;
            if (!spec || s.args.size() != 1) return false;
            if (bool_str(spec->member(s.args[0])) != s.result) return false;
        } else if (s.op == "map") {
            continue;  // homomorphism images are not oracle-replayable
        } else {
            return false;
        }
    }
    return true;
}

}  // namespace alexpara
