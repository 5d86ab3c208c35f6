#include <doctest.h>

#include <algorithm>
#include <set>

#include "alexpara/catalog.hpp"
#include "alexpara/errors.hpp"
#include "alexpara/laws.hpp"
#include "support_oracles.hpp"

using namespace alexpara;
using namespace alexpara::test;

namespace {

LawContext ctx_for(const std::string& name, std::map<std::string, long> params = {},
                   int depth = 3) {
    LawContext ctx;
    ctx.entry = catalog_build(name, params);
    ctx.depth = depth;
    return ctx;
}

Window default_window(const CatalogEntry& e, int depth = 3) {
    return make_window(e.oracle, e.window_elems(depth));
}

}  // namespace

TEST_CASE("inverse flip (x in F_1 implies x^-1 in U_1)") {
    auto z = catalog_build("int_chain");
    auto r = law_inverse_flip(z.oracle, {"3", "0", "7"}, 1);
    CHECK(r.status == CheckStatus::pass);

    auto zz = catalog_build("int_vectors", {{"k", 2}});
    CHECK(law_inverse_flip(zz.oracle, {"(1,2)"}, 1).status == CheckStatus::pass);

    auto lo = catalog_build("sym_loewner", {{"n", 2}});
    CHECK(law_inverse_flip(lo.oracle, {"[[2,1],[1,2]]"}, 1).status == CheckStatus::pass);

    auto broken = broken_nonneg_oracle();
    auto fail = law_inverse_flip(broken, {"5"}, 1);
    CHECK(fail.status == CheckStatus::fail);
    CHECK(replay_witness(*broken, fail.witness));

    CHECK(law_inverse_flip(z.oracle, {"0", "-4"}, 1).status == CheckStatus::inapplicable);
}

TEST_CASE("opposite identity neighborhoods (U_1^op = F_1)") {
    auto z = catalog_build("int_chain");
    CHECK(law_opposite_identity_neighborhoods(z.oracle, default_window(z), 1).status ==
          CheckStatus::pass);
    auto wj = catalog_build("width_join", {{"n", 2}});
    CHECK(law_opposite_identity_neighborhoods(wj.oracle, default_window(wj), 1).status ==
          CheckStatus::pass);

    auto broken = broken_nonneg_oracle();
    auto w = make_window(broken, {"-2", "-1", "0", "1", "2"});
    auto fail = law_opposite_identity_neighborhoods(broken, w, 1);
    CHECK(fail.status == CheckStatus::fail);
    CHECK(replay_witness(*broken, fail.witness));
}

TEST_CASE("open sets have closed inverses, across the catalog") {
    for (const auto& name : catalog_names()) {
        auto ctx = ctx_for(name, {}, 2);
        auto r = run_law("open_inverse_closed", ctx);
        INFO(name << ": " << r.note);
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.samples_used > 1);
    }
}

TEST_CASE("no torsion near the identity") {
    auto z = ctx_for("int_chain");
    CHECK(run_law("no_torsion", z).status == CheckStatus::pass);

    auto wj = ctx_for("width_join", {{"n", 2}});
    auto r = run_law("no_torsion", wj);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.note.find("incomparable") != std::string::npos);  // y_0 has order 2

    // A permutation matrix has finite order but is incomparable to I.
    auto gl = catalog_build("gl_det", {{"n", 2}});
    const std::string perm = "[[0,1],[1,0]]";
    CHECK(gl.oracle->mul(perm, perm) == gl.oracle->identity);
    auto w = make_window(gl.oracle, {gl.oracle->identity, perm, "[[2,0],[0,1]]"});
    auto gr = law_no_torsion_near_identity(gl.oracle, w, 10, 1);
    CHECK(gr.status == CheckStatus::pass);
    CHECK(gr.note.find("incomparable") != std::string::npos);
}

TEST_CASE("translation homogeneity") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto w = default_window(zz, 2);
    CHECK(law_translation_homogeneity(zz.oracle, w, "(1,1)", 1).status == CheckStatus::pass);
    CHECK(law_translation_homogeneity(zz.oracle, w, zz.oracle->identity, 1).status ==
          CheckStatus::pass);

    auto wj = catalog_build("width_join", {{"n", 2}});
    CHECK(law_translation_homogeneity(wj.oracle, default_window(wj), "(1,1)", 1).status ==
          CheckStatus::pass);

    auto broken = broken_parity_oracle();
    auto bw = make_window(broken, {"-2", "-1", "0", "1", "2"});
    CHECK(law_translation_homogeneity(broken, bw, "1", 1).status == CheckStatus::fail);
}

TEST_CASE("beat dichotomy") {
    auto z = ctx_for("int_chain");
    auto zr = run_law("beat_dichotomy", z);
    CHECK(zr.status == CheckStatus::pass);
    CHECK(zr.note.find("chain") != std::string::npos);

    CHECK(run_law("beat_dichotomy", ctx_for("int_vectors", {{"k", 2}})).status ==
          CheckStatus::pass);
    CHECK(run_law("beat_dichotomy", ctx_for("width_join", {{"n", 3}})).status ==
          CheckStatus::pass);
    CHECK(run_law("beat_dichotomy", ctx_for("disjoint_chains_int", {{"n", 2}})).status ==
          CheckStatus::pass);
    CHECK(run_law("beat_dichotomy", ctx_for("rat_chain")).status == CheckStatus::inapplicable);
    CHECK(run_law("beat_dichotomy", ctx_for("gl_det")).status == CheckStatus::inapplicable);
}

TEST_CASE("directed iff hyperconnected") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    Budget b;
    auto r = law_directed_iff_hyperconnected(zz.oracle, {{"(2,-1)", "(-1,2)"}}, b, 1);
    CHECK(r.status == CheckStatus::pass);
    CHECK(replay_witness(*zz.oracle, r.witness));

    auto z = ctx_for("int_chain");
    CHECK(run_law("directed_hyperconnected", z).status == CheckStatus::pass);
    CHECK(run_law("hyperconnected", z).status == CheckStatus::pass);  // alias

    auto dc = catalog_build("disjoint_chains_int", {{"n", 2}});
    auto fail = law_directed_iff_hyperconnected(dc.oracle, {{"(0,0)", "(0,1)"}}, b, 1);
    CHECK(fail.status == CheckStatus::fail);

    // Search path without oracle hints still finds witnesses.
    auto stripped = std::make_shared<GroupOracle>(*zz.oracle);
    stripped->lower_bound_hint = nullptr;
    stripped->upper_bound_hint = nullptr;
    auto sr = law_directed_iff_hyperconnected(
        std::const_pointer_cast<const GroupOracle>(stripped), {{"(2,-1)", "(-1,2)"}}, b, 1);
    CHECK(sr.status == CheckStatus::pass);
}

TEST_CASE("2-pseudocompactness by proof replay") {
    auto z = catalog_build("int_chain");
    auto r = law_2_pseudocompact(z.oracle, {"3", "2", "1"}, 1);
    CHECK(r.status == CheckStatus::pass);
    REQUIRE(!r.witness.empty());
    CHECK(r.witness.front().op == "inv");
    CHECK(r.witness.front().result == "-1");
    CHECK(replay_witness(*z.oracle, r.witness));

    CHECK(law_2_pseudocompact(z.oracle, {"5"}, 1).status == CheckStatus::pass);

    auto zz = catalog_build("int_vectors", {{"k", 2}});
    CHECK(law_2_pseudocompact(zz.oracle, {"(2,2)", "(1,1)", "(0,0)"}, 1).status ==
          CheckStatus::pass);

    CHECK_THROWS_AS(law_2_pseudocompact(z.oracle, {"1", "3"}, 1), BadChain);
    CHECK_THROWS_AS(law_2_pseudocompact(z.oracle, {}, 1), BadChain);
}

TEST_CASE("feebly bounded: the three grid verdicts") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    Budget b;
    std::vector<std::string> sample = {"(2,3)", "(-1,-1)", "(0,0)", "(5,-7)", "(-3,4)"};

    auto diag = feebly_bounded_check(zz.oracle, zz.subset("diagonal"), sample, b, 1);
    CHECK(diag.status == CheckStatus::pass);
    CHECK(replay_witness(*zz.oracle, diag.witness, {zz.subset("diagonal")}));

    auto quad = feebly_bounded_check(zz.oracle, zz.subset("quadrant"), sample, b, 1);
    CHECK(quad.status == CheckStatus::fail);
    CHECK(quad.note.find("(-1,-1)") != std::string::npos);
    CHECK(replay_witness(*zz.oracle, quad.witness, {zz.subset("quadrant")}));

    auto orig = feebly_bounded_check(zz.oracle, zz.subset("origin"), sample, b, 1);
    CHECK(orig.status == CheckStatus::fail);
    CHECK(orig.note.find("escape") != std::string::npos);
    CHECK(replay_witness(*zz.oracle, orig.witness, {zz.subset("origin")}));

    // Any explicit finite subset fails with a constructed escape point.
    SubsetSpec finite;
    finite.name = "finite_pair";
    finite.finite_elements = {"(1,2)", "(-3,4)"};
    std::set<std::string> members(finite.finite_elements.begin(),
                                  finite.finite_elements.end());
    finite.member = [members](const std::string& x) { return members.count(x) != 0; };
    auto fin = feebly_bounded_check(zz.oracle, finite, sample, b, 1);
    CHECK(fin.status == CheckStatus::fail);
    CHECK(replay_witness(*zz.oracle, fin.witness, {finite}));

    // Search path (no lower witness): the diagonal still passes near zero.
    SubsetSpec diag_search = zz.subset("diagonal");
    diag_search.lower_witness = nullptr;
    auto ds = feebly_bounded_check(zz.oracle, diag_search, {"(1,2)", "(0,0)"}, b, 1);
    CHECK(ds.status == CheckStatus::pass);
}

TEST_CASE("finite subsets of a dense chain also fail via an escape point") {
    // Covers are dense here, so the escape generator comes from a ball scan.
    auto rat = catalog_build("rat_chain");
    SubsetSpec finite;
    finite.name = "half";
    finite.finite_elements = {"1/2"};
    finite.member = [](const std::string& x) { return x == "1/2"; };
    Budget b;
    auto res = feebly_bounded_check(rat.oracle, finite, {"0", "3"}, b, 1);
    CHECK(res.status == CheckStatus::fail);
    CHECK(replay_witness(*rat.oracle, res.witness, {finite}));
}

TEST_CASE("omega narrow search fallback without an upper witness") {
    auto z = catalog_build("int_chain");
    SubsetSpec bare;
    bare.name = "A";
    bare.member = [](const std::string&) { return true; };
    Budget b;
    auto res = law_omega_narrow(z.oracle, bare, true, {"2", "-5", "0"}, b, 1);
    CHECK(res.status == CheckStatus::pass);
}

TEST_CASE("products of feebly bounded sets stay feebly bounded") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    Budget b;
    auto two = law_product_feebly_bounded({zz.oracle, zz.oracle},
                                          {zz.subset("diagonal"), zz.subset("diagonal")}, 100,
                                          b, 5);
    CHECK(two.status == CheckStatus::pass);

    auto z = catalog_build("int_chain");
    auto one = law_product_feebly_bounded({z.oracle}, {z.subset("all")}, 50, b, 5);
    CHECK(one.status == CheckStatus::pass);

    std::vector<OraclePtr> four(4, z.oracle);
    std::vector<SubsetSpec> specs(4, z.subset("all"));
    CHECK(law_product_feebly_bounded(four, specs, 50, b, 5).status == CheckStatus::pass);

    SubsetSpec bare;
    bare.name = "bare";
    bare.member = [](const std::string&) { return true; };
    CHECK(law_product_feebly_bounded({z.oracle, z.oracle}, {z.subset("all"), bare}, 20, b, 5)
              .status == CheckStatus::inapplicable);
}

TEST_CASE("AB stays feebly bounded, constructive witness") {
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    auto diag = zz.subset("diagonal");
    auto r = law_product_set_feebly_bounded(zz.oracle, diag, diag, {"(2,3)"}, 9);
    CHECK(r.status == CheckStatus::pass);
    REQUIRE(r.witness.size() >= 5);
    // a = (2,2), y = a^-1 x = (0,1), b = (0,0), c = ab = (2,2) <= (2,3)
    CHECK(r.witness[0].args[0] == "(2,2)");
    CHECK(r.witness[1].result == "(0,1)");
    CHECK(r.witness[2].args[0] == "(0,0)");
    CHECK(r.witness[3].result == "(2,2)");
    CHECK(replay_witness(*zz.oracle, r.witness, {diag}));

    // Degenerate A = {1}: reduces to the B check on points above the identity.
    SubsetSpec one;
    one.name = "identity_only";
    one.member = [id = zz.oracle->identity](const std::string& x) { return x == id; };
    one.lower_witness = [o = zz.oracle](const std::string& x) -> std::optional<std::string> {
        if (o->leq(o->identity, x)) return o->identity;
        return std::nullopt;
    };
    auto dr = law_product_set_feebly_bounded(zz.oracle, one, diag, {"(3,1)", "(0,0)"}, 9);
    CHECK(dr.status == CheckStatus::pass);

    SubsetSpec no_witness;
    no_witness.name = "bare";
    no_witness.member = [](const std::string&) { return true; };
    CHECK(law_product_set_feebly_bounded(zz.oracle, no_witness, diag, {"(0,0)"}, 9).status ==
          CheckStatus::inapplicable);
}

TEST_CASE("subordination of {U_1}") {
    for (const auto& name : catalog_names()) {
        auto ctx = ctx_for(name);
        auto r = run_law("subordinated", ctx);
        INFO(name);
        CHECK(r.status == CheckStatus::pass);
    }
    // Negative control: {F_1} is not subordinated to U_1 on Z.
    auto z = catalog_build("int_chain");
    SubordinatedFamily gamma;
    gamma.neighborhoods.push_back(identity_up_set_spec(z.oracle));
    auto fail = law_subordinated(z.oracle, gamma, identity_down_set_spec(z.oracle),
                                 {"0", "4"}, {"0", "1", "2", "-1"}, 3);
    CHECK(fail.status == CheckStatus::fail);
    CHECK(replay_witness(*z.oracle, fail.witness,
                         {identity_down_set_spec(z.oracle), identity_up_set_spec(z.oracle)}));
}

TEST_CASE("omega narrow factoring and the cardinality tag predicate") {
    for (const auto& name : catalog_names()) {
        auto ctx = ctx_for(name);
        auto r = run_law("omega_narrow", ctx);
        INFO(name << ": " << r.note);
        CHECK(r.status == CheckStatus::pass);
    }
    CHECK(run_law("totally_omega_narrow", ctx_for("int_chain")).status == CheckStatus::pass);
    CHECK(run_law("totally_omega_narrow", ctx_for("rat_chain")).status == CheckStatus::pass);
    CHECK(run_law("totally_omega_narrow", ctx_for("sym_loewner")).status == CheckStatus::fail);
    CHECK(run_law("totally_omega_narrow", ctx_for("gl_det")).status == CheckStatus::fail);
}

TEST_CASE("unbounded height via monotone powers") {
    auto z = catalog_build("int_chain");
    auto r = law_unbounded_height(z.oracle, "1", 10, 1);
    CHECK(r.status == CheckStatus::pass);

    auto zz = catalog_build("int_vectors", {{"k", 2}});
    CHECK(law_unbounded_height(zz.oracle, "(1,1)", 5, 1).status == CheckStatus::pass);

    auto lo = catalog_build("sym_loewner", {{"n", 2}});
    CHECK(law_unbounded_height(lo.oracle, "[[1,0],[0,1]]", 5, 1).status == CheckStatus::pass);

    CHECK_THROWS_AS(law_unbounded_height(z.oracle, "0", 5, 1), BadParameter);
    CHECK_THROWS_AS(law_unbounded_height(z.oracle, "-2", 5, 1), BadParameter);
}

TEST_CASE("radius relations") {
    auto zz = ctx_for("int_vectors", {{"k", 2}});
    auto r = run_law("radius_relations", zz);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.note.find("radius 2") != std::string::npos);

    CHECK(run_law("radius_relations", ctx_for("rat_chain")).status == CheckStatus::pass);
    CHECK(run_law("radius_relations", ctx_for("gl_det")).status == CheckStatus::inapplicable);
    CHECK(run_law("radius_relations", ctx_for("width_join", {{"n", 3}})).status ==
          CheckStatus::pass);
    CHECK(run_law("radius_relations", ctx_for("disjoint_chains_int", {{"n", 3}})).status ==
          CheckStatus::pass);

    // r(X x Y) <= 2 r(X) r(Y) on the pairwise product of integer chains.
    auto z = catalog_build("int_chain");
    auto prod = product_oracle({z.oracle, z.oracle});
    auto pr = radius(*prod);
    REQUIRE(pr.kind == CoversAbove::Kind::finite);
    CHECK(pr.value == 2);
    CHECK(pr.value <= 2 * 1 * 1);  // r(X x Y) <= 2 r(X) r(Y)
}

TEST_CASE("classification of radius-versus-width") {
    for (long n = 1; n <= 4; ++n) {
        auto ctx = ctx_for("width_join", {{"n", n}}, 3);
        auto r = run_law("classification", ctx);
        INFO("width_join n=" << n << ": " << r.note);
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.note.find("antichain") != std::string::npos);
    }
    auto dc = run_law("classification", ctx_for("disjoint_chains_int", {{"n", 3}}));
    CHECK(dc.status == CheckStatus::pass);
    CHECK(dc.note.find("3 disjoint chain") != std::string::npos);

    CHECK(run_law("classification", ctx_for("int_vectors", {{"k", 2}})).status ==
          CheckStatus::inapplicable);
    CHECK(run_law("classification", ctx_for("rat_chain")).status == CheckStatus::inapplicable);
}

TEST_CASE("the union of C_x over a maximal antichain through 1 covers the window") {
    for (const auto& name : {"int_vectors", "width_join", "int_chain"}) {
        auto e = catalog_build(name);
        auto w = default_window(e, 2);
        auto a = maximal_antichain_through(w.poset, e.oracle->identity);
        std::set<std::string> covered;
        for (const auto& x : a) {
            for (const auto& s : down_set(w.poset, {x})) covered.insert(s);
            for (const auto& s : up_set(w.poset, {x})) covered.insert(s);
        }
        INFO(name);
        CHECK(covered.size() == w.size());
    }
}

TEST_CASE("law registry") {
    CHECK(law_ids().size() == 20);
    CHECK(canonical_law_id("hyperconnected") == "directed_hyperconnected");
    CHECK_THROWS_AS(canonical_law_id("nosuch_law"), BadParameter);

    auto e = catalog_build("int_chain");
    CHECK(expected_law_status(e, "inversion_monotone", "") == CheckStatus::fail);
    CHECK(expected_law_status(e, "inverse_flip", "") == CheckStatus::pass);
    auto zz = catalog_build("int_vectors", {{"k", 2}});
    CHECK(expected_law_status(zz, "feebly_bounded", "quadrant") == CheckStatus::fail);
    CHECK(expected_law_status(zz, "feebly_bounded", "diagonal") == CheckStatus::pass);
}

TEST_CASE("negative controls fail exactly as declared") {
    for (const auto& name : catalog_names()) {
        auto ctx = ctx_for(name, {}, 2);
        auto inv = run_law("inversion_monotone", ctx);
        INFO(name);
        CHECK(inv.status == CheckStatus::fail);
        CHECK(replay_witness(*ctx.entry.oracle, inv.witness));
    }
    CHECK(run_law("directed_hyperconnected", ctx_for("disjoint_chains_int", {{"n", 2}}))
              .status == CheckStatus::fail);
    CHECK(run_law("directed_hyperconnected", ctx_for("disjoint_chains_rat", {{"n", 2}}))
              .status == CheckStatus::fail);
}
