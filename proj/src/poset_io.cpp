#include "alexpara/poset_io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "alexpara/errors.hpp"

namespace alexpara {

using ordered_json = nlohmann::ordered_json;

std::string poset_to_json(const FinitePoset& p, int indent) {
    ordered_json j;
    j["elements"] = p.elements();
    auto g = covers(p);
    auto edges = ordered_json::array();
    for (auto [lo, hi] : g.edges) edges.push_back({p.label(lo), p.label(hi)});
    j["covers"] = edges;
    return j.dump(indent);
}

FinitePoset poset_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad poset JSON: ") + e.what());
    }
    if (!j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset JSON needs an \"elements\" array");
    std::vector<std::string> elements = j["elements"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("covers")) {
        for (const auto& e : j["covers"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each cover must be a [lower, upper] pair");
            pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return FinitePoset::from_cover_pairs(std::move(elements), pairs);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string poset_to_dot(const FinitePoset& p, const std::optional<std::string>& highlight,
                         const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& e : p.elements()) {
        os << "  \"" << dot_escape(e) << "\"";
        if (highlight && *highlight == e) os << " [style=filled, fillcolor=lightblue]";
        os << ";\n";
    }
    auto levels = height_levels(p);
    std::map<std::size_t, std::vector<std::size_t>> by_level;
    for (std::size_t i = 0; i < p.size(); ++i) by_level[levels[i]].push_back(i);
    for (const auto& [lvl, nodes] : by_level) {
        os << "  { rank=same;";
        for (auto i : nodes) os << " \"" << dot_escape(p.label(i)) << "\";";
        os << " }\n";
    }
    for (auto [lo, hi] : covers(p).edges)
        os << "  \"" << dot_escape(p.label(lo)) << "\" -> \"" << dot_escape(p.label(hi))
           << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace alexpara
