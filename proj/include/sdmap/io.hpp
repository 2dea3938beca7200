#ifndef SDMAP_IO_HPP
#define SDMAP_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdmap/derived.hpp"
#include "sdmap/map.hpp"

namespace sdmap {

// JSON map document:
//   {"format_version": "1", "darts": N, "alpha": [...], "sigma": [...],
//    "vertex_labels": [...]?, "metadata": {...}?}
// Keys are emitted in exactly this order; arrays hold integers only.
struct MapDocument {
    std::string format_version = "1";
    CombinatorialMap map;
    std::optional<std::vector<std::string>> vertex_labels;
    std::string metadata_json; // raw object text, "" when absent
};

// Throws ParseError (with byte offset) on malformed JSON or schema breaks,
// ValidationError on non-permutation tables, and the build_map error codes
// for structurally bad maps.
MapDocument parse_map_document(const std::string& text, bool allow_nonspherical = false);
CombinatorialMap parse_map(const std::string& text, bool allow_nonspherical = false);

std::string serialize_map(const CombinatorialMap& m);
std::string serialize_map_document(const MapDocument& doc);

// Labels suitable for a derived map's vertices: v#/e#/f# by provenance.
std::vector<std::string> provenance_labels(const DerivedMap& derived);

// DOT export.  Incidence-derived maps color the black class filled black and
// the white class white; other maps emit plain nodes.
std::string to_dot(const CombinatorialMap& m, const std::string& graph_name = "map");
std::string to_dot(const DerivedMap& derived, const std::string& graph_name = "map");

} // namespace sdmap

#endif
