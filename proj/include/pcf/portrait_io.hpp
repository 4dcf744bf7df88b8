#pragma once

#include "pcf/certify.hpp"

#include <json.hpp>

#include <string>

namespace pcf {

inline std::string label_text(const Rational& q) { return to_string(q); }
inline std::string label_text(const QuadExtElem& e) { return e.str(); }

/// Graphviz form of a critical portrait. Nodes are labeled with exact point
/// values; critical points are drawn as double circles. Output is byte-stable:
/// node order is orbit discovery order.
template <typename A>
std::string portrait_to_dot(const Portrait<A>& g) {
    std::string out = "digraph critical_portrait {\n  rankdir=LR;\n  node [shape=circle];\n";
    auto is_critical = [&](std::size_t i) {
        for (std::size_t c : g.critical)
            if (c == i) return true;
        return false;
    };
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + label_text(g.nodes[i]) + "\"";
        if (is_critical(i)) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(g.next[i]) + ";\n";
    return out + "}\n";
}

template <typename A>
nlohmann::json portrait_to_json(const Portrait<A>& g) {
    nlohmann::json j;
    j["schema"] = 1;
    j["points"] = nlohmann::json::array();
    for (const A& p : g.nodes) j["points"].push_back(label_text(p));
    j["critical"] = g.critical;
    j["edges"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.next.size(); ++i)
        j["edges"].push_back(nlohmann::json::array({i, g.next[i]}));
    j["summaries"] = nlohmann::json::array();
    for (std::size_t k = 0; k < g.critical.size(); ++k) {
        j["summaries"].push_back({{"point", g.critical[k]},
                                  {"tail", g.tails_periods[k].first},
                                  {"period", g.tails_periods[k].second}});
    }
    return j;
}

inline std::string portrait_to_dot(const AnyPortrait& p) {
    return std::visit([](const auto& g) { return portrait_to_dot(g); }, p);
}

inline nlohmann::json portrait_to_json(const AnyPortrait& p) {
    return std::visit([](const auto& g) { return portrait_to_json(g); }, p);
}

}  // namespace pcf
