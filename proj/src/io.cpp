#include "ssg/io.hpp"

#include <sstream>

#include <json.hpp>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw MalformedInputError("invalid JSON");
    return doc;
}

std::pair<int, std::vector<std::pair<int, int>>> graph_fields(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw MalformedInputError("graph document needs \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer()) throw MalformedInputError("\"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (!doc["edges"].is_array()) throw MalformedInputError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw MalformedInputError("each edge must be a pair of integers");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return {n, std::move(edges)};
}

json edges_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    return edges;
}

} // namespace

std::string graph_to_json(const Graph& g) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = edges_json(g);
    return doc.dump();
}

Graph graph_from_json(std::string_view text) {
    auto [n, edges] = graph_fields(parse_json(text));
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        throw MalformedInputError(std::string("bad graph document: ") + e.what());
    }
}

std::string coloring_to_json(const Graph& g, const EdgeColoring& c) {
    if (c.edge_count() != g.edge_count())
        throw InvalidParametersError("coloring size does not match the graph");
    json doc;
    doc["format"] = "ss-coloring/1";
    doc["n"] = g.vertex_count();
    doc["edges"] = edges_json(g);
    doc["k"] = c.palette();
    json colors = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (c.assigned(e))
            colors.push_back(c.color(e));
        else
            colors.push_back(nullptr);
    }
    doc["colors"] = colors;
    return doc.dump();
}

ColoringDocument coloring_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object() || doc.value("format", "") != "ss-coloring/1")
        throw MalformedInputError("expected a \"ss-coloring/1\" document");
    auto [n, edge_pairs] = graph_fields(doc);
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw MalformedInputError("\"k\" must be an integer");
    int k = doc["k"].get<int>();
    if (!doc.contains("colors") || !doc["colors"].is_array())
        throw MalformedInputError("\"colors\" must be an array");
    const auto& colors = doc["colors"];
    if (colors.size() != edge_pairs.size())
        throw MalformedInputError("\"colors\" must align with \"edges\"");

    Graph g = [&] {
        try {
            return Graph(n, edge_pairs);
        } catch (const Error& e) {
            throw MalformedInputError(std::string("bad graph document: ") + e.what());
        }
    }();

    // Edge ids are canonical (sorted pairs); map document positions to ids.
    EdgeColoring c(g.edge_count(), k);
    for (size_t i = 0; i < edge_pairs.size(); ++i) {
        if (colors[i].is_null()) continue;
        if (!colors[i].is_number_integer())
            throw MalformedInputError("colors must be integers or null");
        int color = colors[i].get<int>();
        EdgeId e = g.require_edge(edge_pairs[i].first, edge_pairs[i].second);
        try {
            c.assign(e, color);
        } catch (const Error& err) {
            throw MalformedInputError(std::string("bad color entry: ") + err.what());
        }
    }
    return ColoringDocument{std::move(g), std::move(c)};
}

std::string graph_to_dot(const Graph& g, const EdgeColoring* coloring) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edges()[e].u << " -- " << g.edges()[e].v;
        if (coloring && coloring->assigned(e)) out << " [label=\"" << coloring->color(e) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace ssg
