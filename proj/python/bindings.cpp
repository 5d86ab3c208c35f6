#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "alexpara/catalog.hpp"
#include "alexpara/enumeration.hpp"
#include "alexpara/errors.hpp"
#include "alexpara/laws.hpp"
#include "alexpara/poset_io.hpp"
#include "alexpara/ratmat.hpp"

namespace py = pybind11;
using namespace alexpara;

namespace {

std::map<std::string, long> to_params(const py::dict& d) {
    std::map<std::string, long> params;
    for (auto item : d) params[py::cast<std::string>(item.first)] = py::cast<long>(item.second);
    return params;
}

py::dict result_to_dict(const CheckResult& r) {
    py::dict d;
    d["law"] = r.law_id;
    d["status"] = to_string(r.status);
    d["seed"] = r.seed;
    d["samples_used"] = r.samples_used;
    d["note"] = r.note;
    py::list steps;
    for (const auto& s : r.witness) {
        py::dict step;
        step["op"] = s.op;
        step["args"] = s.args;
        step["result"] = s.result;
        steps.append(step);
    }
    d["witness"] = steps;
    return d;
}

py::dict report_to_dict(const EnumerationReport& r) {
    py::dict d;
    d["group"] = r.group;
    d["order"] = r.order;
    d["posets_examined"] = r.posets_examined;
    d["monotone_orders_found"] = r.monotone_orders_found;
    d["non_discrete_survivors"] = r.non_discrete_survivors;
    d["connected_survivors"] = r.connected_survivors;
    d["topological"] = r.topological;
    d["runtime_ms"] = r.runtime_ms;
    return d;
}

std::string radius_str(const RadiusResult& r) {
    switch (r.kind) {
        case CoversAbove::Kind::finite: return std::to_string(r.value);
        case CoversAbove::Kind::dense: return "dense";
        case CoversAbove::Kind::unsupported: return "unsupported";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_alexpara, m) {
    m.doc() = "Finite-poset algorithms and symbolic oracles for Alexandroff "
              "paratopological groups";

    py::register_exception<Error>(m, "AlexparaError");

    py::class_<FinitePoset>(m, "Poset")
        .def_static(
            "from_cover_pairs",
            [](std::vector<std::string> elements,
               std::vector<std::pair<std::string, std::string>> covers) {
                return FinitePoset::from_cover_pairs(std::move(elements), covers);
            },
            py::arg("elements"), py::arg("covers"))
        .def_static("from_json", &poset_from_json, py::arg("text"))
        .def("__len__", &FinitePoset::size)
        .def_property_readonly("elements",
                               [](const FinitePoset& p) { return p.elements(); })
        .def("leq",
             [](const FinitePoset& p, const std::string& a, const std::string& b) {
                 return p.leq(a, b);
             })
        .def("covers",
             [](const FinitePoset& p) {
                 std::vector<std::pair<std::string, std::string>> out;
                 auto g = covers(p);
                 for (auto [lo, hi] : g.edges) out.emplace_back(g.nodes[lo], g.nodes[hi]);
                 return out;
             })
        .def("down_set",
             [](const FinitePoset& p, std::vector<std::string> s) { return down_set(p, s); })
        .def("up_set",
             [](const FinitePoset& p, std::vector<std::string> s) { return up_set(p, s); })
        .def("width", [](const FinitePoset& p) { return width(p); })
        .def("max_antichain", [](const FinitePoset& p) { return max_antichain(p); })
        .def("maximal_antichain_through",
             [](const FinitePoset& p, const std::string& x) {
                 return maximal_antichain_through(p, x);
             })
        .def("min_chain_cover", [](const FinitePoset& p) { return min_chain_cover(p); })
        .def("height", [](const FinitePoset& p) { return height(p); })
        .def("height_of",
             [](const FinitePoset& p, const std::string& x) { return height_of(p, x); })
        .def("is_connected", [](const FinitePoset& p) { return is_connected(p); })
        .def("is_hyperconnected", [](const FinitePoset& p) { return is_hyperconnected(p); })
        .def("is_ultraconnected", [](const FinitePoset& p) { return is_ultraconnected(p); })
        .def("is_directed", [](const FinitePoset& p) { return is_directed(p); })
        .def("opposite", [](const FinitePoset& p) { return opposite(p); })
        .def("join", [](const FinitePoset& p, const FinitePoset& q) { return join(p, q); })
        .def("beat_points",
             [](const FinitePoset& p) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& b : beat_points(p))
                     out.emplace_back(b.element, b.kind == BeatKind::up ? "up" : "down");
                 return out;
             })
        .def("core", [](const FinitePoset& p) { return core(p); })
        .def("euler_characteristic",
             [](const FinitePoset& p) { return euler_characteristic(p); })
        .def("is_iterated_antichain_join",
             [](const FinitePoset& p) -> py::object {
                 auto r = is_iterated_antichain_join(p);
                 if (!r) return py::none();
                 return py::cast(*r);
             })
        .def("is_isomorphic",
             [](const FinitePoset& p, const FinitePoset& q) { return is_isomorphic(p, q); })
        .def("to_json", [](const FinitePoset& p) { return poset_to_json(p, 2); })
        .def(
            "to_dot",
            [](const FinitePoset& p, std::optional<std::string> highlight) {
                return poset_to_dot(p, highlight);
            },
            py::arg("highlight") = std::nullopt);

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_property_readonly("name", [](const CatalogEntry& e) { return e.name; })
        .def_property_readonly("display", [](const CatalogEntry& e) { return e.display(); })
        .def_property_readonly("identity",
                               [](const CatalogEntry& e) { return e.oracle->identity; })
        .def_property_readonly("generators",
                               [](const CatalogEntry& e) { return e.oracle->generators; })
        .def_property_readonly(
            "cardinality",
            [](const CatalogEntry& e) { return to_string(e.oracle->cardinality); })
        .def_property_readonly("chain_generator",
                               [](const CatalogEntry& e) { return e.chain_generator; })
        .def_property_readonly("subsets",
                               [](const CatalogEntry& e) {
                                   std::vector<std::string> out;
                                   for (const auto& [k, v] : e.subsets) out.push_back(k);
                                   return out;
                               })
        .def_property_readonly(
            "radius", [](const CatalogEntry& e) { return radius_str(radius(*e.oracle)); })
        .def("mul",
             [](const CatalogEntry& e, const std::string& a, const std::string& b) {
                 return e.oracle->mul(a, b);
             })
        .def("inv",
             [](const CatalogEntry& e, const std::string& a) { return e.oracle->inv(a); })
        .def("leq",
             [](const CatalogEntry& e, const std::string& a, const std::string& b) {
                 return e.oracle->leq(a, b);
             })
        .def("covers_above",
             [](const CatalogEntry& e, const std::string& x) -> py::object {
                 CoversAbove c = e.oracle->covers_above(x);
                 if (c.kind == CoversAbove::Kind::finite) return py::cast(c.elems);
                 return py::cast(c.kind == CoversAbove::Kind::dense ? "dense" : "unsupported");
             })
        .def(
            "sample",
            [](const CatalogEntry& e, std::uint64_t seed, std::size_t count) {
                std::mt19937_64 rng(seed);
                std::vector<std::string> out;
                for (std::size_t i = 0; i < count; ++i) out.push_back(e.oracle->sample(rng));
                return out;
            },
            py::arg("seed") = kDefaultSeed, py::arg("count") = 10)
        .def(
            "ball", [](const CatalogEntry& e, int depth) { return ball(*e.oracle, depth); },
            py::arg("depth") = 2)
        .def(
            "window",
            [](const CatalogEntry& e, int depth) {
                return make_window(e.oracle, e.window_elems(depth)).poset;
            },
            py::arg("depth") = 2)
        .def(
            "ball_window",
            [](const CatalogEntry& e, int depth) {
                return make_window(e.oracle, ball(*e.oracle, depth)).poset;
            },
            py::arg("depth") = 2);

    m.def("catalog_names", &catalog_names);
    m.def(
        "catalog_build",
        [](const std::string& name, const py::dict& params) {
            return catalog_build(name, to_params(params));
        },
        py::arg("name"), py::arg("params") = py::dict());

    m.def("law_ids", &law_ids);
    m.def(
        "run_law",
        [](const std::string& law, const std::string& example, const py::dict& params,
           int depth, std::uint64_t seed, const std::string& subset) {
            LawContext ctx;
            ctx.entry = catalog_build(example, to_params(params));
            ctx.depth = depth;
            ctx.seed = seed;
            ctx.subset = subset;
            CheckResult r = run_law(law, ctx);
            py::dict d = result_to_dict(r);
            d["expected"] = to_string(expected_law_status(ctx.entry, law, subset));
            return d;
        },
        py::arg("law"), py::arg("example"), py::arg("params") = py::dict(),
        py::arg("depth") = 3, py::arg("seed") = kDefaultSeed, py::arg("subset") = "");

    m.def("count_labeled_posets", &count_labeled_posets, py::arg("n"));
    m.def(
        "verify_discreteness",
        [](std::size_t max_order) {
            py::list out;
            for (const auto& r : verify_discreteness_theorem(max_order))
                out.append(report_to_dict(r));
            return out;
        },
        py::arg("max_order") = 6);
    m.def(
        "verify_topgroup_triviality",
        [](std::size_t max_order) {
            py::list out;
            for (const auto& r : verify_topgroup_triviality(max_order))
                out.append(report_to_dict(r));
            return out;
        },
        py::arg("max_order") = 6);

    m.def(
        "psd_check",
        [](const std::string& matrix) { return psd_check(RatMatrix::parse(matrix)); },
        py::arg("matrix"));
    m.def("sl_antichain_sample", &sl_antichain_sample, py::arg("n"), py::arg("count"));

    m.attr("__version__") = "0.1.0";
}
