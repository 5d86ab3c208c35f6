#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "alexpara/catalog.hpp"
#include "alexpara/errors.hpp"
#include "alexpara/laws.hpp"
#include "alexpara/ratmat.hpp"

using namespace alexpara;

TEST_CASE("catalog surface") {
    CHECK(catalog_names().size() == 8);
    CHECK_THROWS_AS(catalog_build("nosuch"), UnknownExample);
    CHECK_THROWS_AS(catalog_build("int_vectors", {{"k", 0}}), BadParameter);
    CHECK_THROWS_AS(catalog_build("sym_loewner", {{"n", 6}}), BadParameter);
    CHECK_THROWS_AS(catalog_build("width_join", {{"n", -2}}), BadParameter);
    CHECK_THROWS_AS(catalog_build("int_chain", {{"k", 1}}), BadParameter);
    CHECK(catalog_build("int_vectors", {{"k", 2}}).display() == "int_vectors(k=2)");
}

TEST_CASE("radius tags and values match the expected tables") {
    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        auto r = radius(*e.oracle);
        INFO(e.display());
        CHECK(r.kind == e.expected.radius_kind);
        if (r.kind == CoversAbove::Kind::finite)
            CHECK(static_cast<long>(r.value) == e.expected.radius);
    }
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto c = zz.oracle->covers_above("(0,0)");
    REQUIRE(c.kind == CoversAbove::Kind::finite);
    CHECK(std::set<std::string>(c.elems.begin(), c.elems.end()) ==
          std::set<std::string>{"(1,0)", "(0,1)"});
    CHECK(catalog_build("width_join", {{"n", 3}}).expected.radius == 3);
    CHECK(catalog_build("disjoint_chains_int", {{"n", 4}}).expected.radius == 1);
}

TEST_CASE("window widths reproduce the paper values") {
    auto wj = catalog_build("width_join", {{"n", 2}});
    auto w = make_window(wj.oracle, wj.window_elems(2));
    CHECK(width(w.poset) == 2);
    CHECK(is_iterated_antichain_join(w.poset) == std::size_t{2});

    auto q3 = catalog_build("disjoint_chains_rat", {{"n", 3}});
    CHECK(width(make_window(q3.oracle, q3.window_elems(2)).poset) == 3);

    auto zz = catalog_build("int_vectors", {{"k", 2}});
    for (int d = 1; d <= 3; ++d) {
        auto box = make_window(zz.oracle, zz.window_elems(d));
        CHECK(width(box.poset) == static_cast<std::size_t>(2 * d + 1));
    }

    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        if (!e.expected.width) continue;
        auto win = make_window(e.oracle, e.window_elems(2));
        INFO(e.display());
        CHECK(width(win.poset) == static_cast<std::size_t>(*e.expected.width));
    }
}

TEST_CASE("connectivity of default windows matches the expected tables") {
    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        auto w = make_window(e.oracle, e.window_elems(2));
        INFO(e.display());
        CHECK(is_connected(w.poset) == e.expected.connected);
    }
    for (const auto& name : {"disjoint_chains_int", "disjoint_chains_rat"}) {
        for (long n : {2L, 3L}) {
            auto dc = catalog_build(name, {{"n", n}});
            for (int depth : {2, 3}) {
                auto b = make_window(dc.oracle, ball(*dc.oracle, depth));
                INFO(dc.display() << " ball depth " << depth);
                CHECK(connected_components(b.poset).size() == static_cast<std::size_t>(n));
            }
        }
    }
}

TEST_CASE("down-set of the origin in the Z+Z grid window") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto w = make_window(zz.oracle, zz.window_elems(2));
    auto u = down_set(w.poset, {"(0,0)"});
    CHECK(u.size() == 9);
    for (const auto& s : u) {
        CHECK(zz.oracle->leq(s, "(0,0)"));
    }
}

TEST_CASE("beat points of the grid are boundary artifacts only") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto w = make_window(zz.oracle, zz.window_elems(2));
    // Restrict to C_{(0,0)} = U_{(0,0)} union F_{(0,0)}.
    auto d = down_set(w.poset, {"(0,0)"});
    auto u = up_set(w.poset, {"(0,0)"});
    std::set<std::string> c(d.begin(), d.end());
    c.insert(u.begin(), u.end());
    std::vector<std::size_t> idx;
    for (const auto& s : c) idx.push_back(w.poset.index_of(s));
    auto cone = w.poset.restrict(idx);
    CHECK(cone.size() == 17);
    auto beats = beat_points(cone);
    CHECK(!beats.empty());  // truncation artifacts
    for (const auto& b : beats) CHECK(b.element != "(0,0)");

    // On the full box the artifacts all touch the boundary.
    for (const auto& b : beat_points(w.poset)) {
        CHECK(b.element != "(0,0)");
        CHECK(b.element.find('2') != std::string::npos);
    }
}

TEST_CASE("maximal antichain through the origin in the 5x5 grid") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto w = make_window(zz.oracle, zz.window_elems(2));
    auto a = maximal_antichain_through(w.poset, "(0,0)");
    CHECK(a.size() == 5);
    std::set<std::string> got(a.begin(), a.end());
    CHECK(got == std::set<std::string>{"(-2,2)", "(-1,1)", "(0,0)", "(1,-1)", "(2,-2)"});
}

TEST_CASE("translated neighborhoods are isomorphic (Z+Z)") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto w = make_window(zz.oracle, zz.window_elems(2));
    auto u0 = down_set(w.poset, {"(0,0)"});
    std::vector<std::string> u1;
    for (const auto& s : u0) u1.push_back(zz.oracle->mul("(1,1)", s));
    std::vector<std::size_t> idx;
    for (const auto& s : u0) idx.push_back(w.poset.index_of(s));
    auto p0 = w.poset.restrict(idx);
    auto p1 = make_window(zz.oracle, u1).poset;
    CHECK(is_isomorphic(p0, p1));
}

TEST_CASE("psd_check on exact rationals") {
    CHECK(psd_check(RatMatrix(2)));
    CHECK_FALSE(psd_check(RatMatrix::parse("[[1,0],[0,-1]]")));
    CHECK(psd_check(RatMatrix::parse("[[2,1],[1,2]]")));  // minors 2, 2, 3
    CHECK_THROWS_AS(psd_check(RatMatrix::parse("[[1,2],[0,1]]")), NotSymmetric);
    CHECK_THROWS_AS(psd_check(RatMatrix(6)), SizeLimitExceeded);
}

TEST_CASE("sl_antichain_sample yields pairwise incomparable unimodular matrices") {
    CHECK_THROWS_AS(sl_antichain_sample(1, 3), BadParameter);
    CHECK(sl_antichain_sample(2, 1) == std::vector<std::string>{"[[1,0],[0,1]]"});
    auto s = sl_antichain_sample(2, 3);
    CHECK(s == std::vector<std::string>{"[[1,0],[0,1]]", "[[1,1],[0,1]]", "[[1,0],[1,1]]"});
    auto gl = catalog_build("gl_det", {{"n", 2}}).oracle;
    auto many = sl_antichain_sample(2, 7);
    for (std::size_t i = 0; i < many.size(); ++i) {
        CHECK(RatMatrix::parse(many[i]).det() == 1);
        for (std::size_t j = i + 1; j < many.size(); ++j) {
            CHECK_FALSE(gl->leq(many[i], many[j]));
            CHECK_FALSE(gl->leq(many[j], many[i]));
        }
    }
}

TEST_CASE("GL multiplication is monotone case by case") {
    // The three cases of the determinant-order proof: equal/strictly-less in
    // each coordinate of the pair.
    std::mt19937_64 rng(31);
    auto gl = catalog_build("gl_det", {{"n", 2}}).oracle;
    auto sample_pair_lt = [&](std::string& lo, std::string& hi) {
        for (;;) {
            std::string a = gl->sample(rng), b = gl->sample(rng);
            if (gl->leq(a, b) && a != b) {
                lo = a;
                hi = b;
                return;
            }
            if (gl->leq(b, a) && a != b) {
                lo = b;
                hi = a;
                return;
            }
        }
    };
    for (int t = 0; t < 40; ++t) {
        std::string a, c, b, d;
        sample_pair_lt(a, c);
        sample_pair_lt(b, d);
        std::string fixed = gl->sample(rng);
        // (i) both equal
        CHECK(gl->leq(gl->mul(a, b), gl->mul(a, b)));
        // (ii) first equal, second strictly increasing
        CHECK(gl->leq(gl->mul(fixed, b), gl->mul(fixed, d)));
        // (iii) second equal, first strictly increasing
        CHECK(gl->leq(gl->mul(a, fixed), gl->mul(c, fixed)));
    }
}

TEST_CASE("abelian flags") {
    std::mt19937_64 rng(37);
    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        if (!e.expected.abelian) continue;
        INFO(e.display());
        for (int t = 0; t < 20; ++t) {
            std::string a = e.oracle->sample(rng), b = e.oracle->sample(rng);
            CHECK(e.oracle->mul(a, b) == e.oracle->mul(b, a));
        }
    }
    auto gl = catalog_build("gl_det", {{"n", 2}});
    CHECK_FALSE(gl.expected.abelian);
    CHECK(gl.oracle->mul("[[1,1],[0,1]]", "[[1,0],[1,1]]") !=
          gl.oracle->mul("[[1,0],[1,1]]", "[[1,1],[0,1]]"));
}

TEST_CASE("cardinality tags") {
    CHECK(catalog_build("int_chain").oracle->cardinality == Cardinality::countable);
    CHECK(catalog_build("rat_chain").oracle->cardinality == Cardinality::countable);
    CHECK(catalog_build("sym_loewner").oracle->cardinality == Cardinality::continuum);
    CHECK(catalog_build("gl_det").oracle->cardinality == Cardinality::continuum);
}

TEST_CASE("chain generators sit strictly above the identity") {
    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        INFO(e.display());
        CHECK(e.chain_generator != e.oracle->identity);
        CHECK(e.oracle->leq(e.oracle->identity, e.chain_generator));
    }
}

TEST_CASE("default windows contain the identity and are inversion-closed") {
    for (const auto& name : catalog_names()) {
        auto e = catalog_build(name);
        auto elems = e.window_elems(2);
        auto w = make_window(e.oracle, elems);
        INFO(e.display());
        CHECK(w.poset.contains(e.oracle->identity));
        for (const auto& x : w.elements()) CHECK(w.poset.contains(e.oracle->inv(x)));
    }
}
