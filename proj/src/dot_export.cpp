#include "ordcomplete/dot_export.hpp"

#include <algorithm>

namespace ordcomplete {

namespace {

std::string quoted(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

std::string hasse_dot(const std::vector<std::string>& node_order,
                      std::vector<std::pair<std::string, std::string>> edges) {
    std::sort(edges.begin(), edges.end());
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& n : node_order) out += "  " + quoted(n) + ";\n";
    for (const auto& [lo, hi] : edges) {
        out += "  " + quoted(lo) + " -> " + quoted(hi) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

std::string poset_to_dot(const FinitePoset& p) {
    std::vector<std::string> nodes = p.labels();
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : p.cover_pairs()) edges.emplace_back(p.label(a), p.label(b));
    return hasse_dot(nodes, std::move(edges));
}

std::string completion_to_dot(const CompletionLattice& l) {
    std::vector<std::string> nodes;
    nodes.reserve(l.cut_count());
    for (const auto& c : l.cuts()) nodes.push_back(l.cut_label(c));
    std::vector<std::pair<std::string, std::string>> edges;
    const FinitePoset& lp = l.as_poset();
    for (const auto& [a, b] : lp.cover_pairs()) edges.emplace_back(lp.label(a), lp.label(b));
    return hasse_dot(nodes, std::move(edges));
}

}  // namespace ordcomplete
