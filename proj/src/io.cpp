#include "sdmap/io.hpp"

#include <sstream>

#include "json.hpp"
#include "sdmap/error.hpp"

namespace sdmap {

using ordered_json = nlohmann::ordered_json;

namespace {

Perm read_perm(const ordered_json& node, const char* key, int darts) {
    if (!node.contains(key)) fail(Errc::ParseError, std::string("missing key '") + key + "'");
    const auto& array = node[key];
    if (!array.is_array()) fail(Errc::ParseError, std::string("'") + key + "' must be an array");
    Perm perm;
    perm.reserve(array.size());
    for (const auto& value : array) {
        if (!value.is_number_integer())
            fail(Errc::ParseError, std::string("'") + key + "' must hold integers");
        perm.push_back(value.get<int>());
    }
    if (static_cast<int>(perm.size()) != darts)
        fail(Errc::ValidationError, std::string("'") + key + "' length differs from darts");
    for (Dart d : perm)
        if (d < 0 || d >= darts)
            fail(Errc::ValidationError, std::string("'") + key + "' entry out of range");
    if (!is_permutation(perm))
        fail(Errc::ValidationError, std::string("'") + key + "' is not a permutation");
    return perm;
}

} // namespace

MapDocument parse_map_document(const std::string& text, bool allow_nonspherical) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("bad JSON at byte ") + std::to_string(e.byte) + ": " +
                                   e.what());
    }
    if (!root.is_object()) fail(Errc::ParseError, "document must be a JSON object");

    MapDocument doc;
    if (!root.contains("format_version") || !root["format_version"].is_string())
        fail(Errc::ParseError, "missing string key 'format_version'");
    doc.format_version = root["format_version"].get<std::string>();
    if (doc.format_version != "1")
        fail(Errc::ParseError, "unsupported format_version '" + doc.format_version + "'");

    if (!root.contains("darts") || !root["darts"].is_number_integer())
        fail(Errc::ParseError, "missing integer key 'darts'");
    const int darts = root["darts"].get<int>();
    if (darts <= 0) fail(Errc::ValidationError, "darts must be positive");
    if (darts % 2 != 0) fail(Errc::ValidationError, "darts must be even");

    Perm alpha = read_perm(root, "alpha", darts);
    Perm sigma = read_perm(root, "sigma", darts);
    doc.map = CombinatorialMap::build(std::move(alpha), std::move(sigma), allow_nonspherical);

    if (root.contains("vertex_labels")) {
        const auto& labels = root["vertex_labels"];
        if (!labels.is_array()) fail(Errc::ParseError, "'vertex_labels' must be an array");
        std::vector<std::string> out;
        for (const auto& value : labels) {
            if (!value.is_string()) fail(Errc::ParseError, "'vertex_labels' must hold strings");
            out.push_back(value.get<std::string>());
        }
        if (static_cast<int>(out.size()) != doc.map.vertex_count())
            fail(Errc::ValidationError, "'vertex_labels' length differs from vertex count");
        doc.vertex_labels = std::move(out);
    }
    if (root.contains("metadata")) {
        if (!root["metadata"].is_object()) fail(Errc::ParseError, "'metadata' must be an object");
        doc.metadata_json = root["metadata"].dump();
    }
    return doc;
}

CombinatorialMap parse_map(const std::string& text, bool allow_nonspherical) {
    return parse_map_document(text, allow_nonspherical).map;
}

std::string serialize_map_document(const MapDocument& doc) {
    ordered_json root;
    root["format_version"] = doc.format_version;
    root["darts"] = doc.map.dart_count();
    root["alpha"] = doc.map.alpha();
    root["sigma"] = doc.map.sigma();
    if (doc.vertex_labels) root["vertex_labels"] = *doc.vertex_labels;
    if (!doc.metadata_json.empty()) root["metadata"] = ordered_json::parse(doc.metadata_json);
    return root.dump(2) + "\n";
}

std::string serialize_map(const CombinatorialMap& m) {
    MapDocument doc;
    doc.map = m;
    return serialize_map_document(doc);
}

std::vector<std::string> provenance_labels(const DerivedMap& derived) {
    std::vector<std::string> labels;
    labels.reserve(derived.vertex_origin.size());
    for (const ElementRef& origin : derived.vertex_origin) {
        char prefix = '?';
        switch (origin.kind) {
            case ElementKind::Vertex: prefix = 'v'; break;
            case ElementKind::Edge: prefix = 'e'; break;
            case ElementKind::Face: prefix = 'f'; break;
        }
        labels.push_back(prefix + std::to_string(origin.index));
    }
    return labels;
}

namespace {

std::string dot_body(const CombinatorialMap& m, const std::vector<std::string>& names,
                     const std::vector<int>& fill_black, const std::string& graph_name) {
    std::ostringstream out;
    out << "graph \"" << graph_name << "\" {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < m.vertex_count(); ++v) {
        out << "  \"" << names[v] << "\"";
        if (!fill_black.empty()) {
            out << (fill_black[v] ? " [style=filled, fillcolor=black, fontcolor=white]"
                                  : " [style=filled, fillcolor=white]");
        }
        out << ";\n";
    }
    for (int e = 0; e < m.edge_count(); ++e) {
        const Dart d = m.edge_darts(e).front();
        out << "  \"" << names[m.vertex_of(d)] << "\" -- \"" << names[m.vertex_of(m.alpha(d))]
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const CombinatorialMap& m, const std::string& graph_name) {
    std::vector<std::string> names;
    for (int v = 0; v < m.vertex_count(); ++v) names.push_back("n" + std::to_string(v));
    return dot_body(m, names, {}, graph_name);
}

std::string to_dot(const DerivedMap& derived, const std::string& graph_name) {
    const std::vector<std::string> names = provenance_labels(derived);
    std::vector<int> fill;
    if (derived.kind == DerivedKind::Incidence) {
        fill.resize(derived.map.vertex_count());
        for (int v = 0; v < derived.map.vertex_count(); ++v)
            fill[v] = derived.incidence_black(v) ? 1 : 0;
    }
    return dot_body(derived.map, names, fill, graph_name);
}

} // namespace sdmap
