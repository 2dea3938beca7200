#ifndef SDMAP_MORPHISM_HPP
#define SDMAP_MORPHISM_HPP

#include <optional>
#include <vector>

#include "sdmap/map.hpp"

namespace sdmap {

enum class Orientation { Preserving, Reversing };
enum class OrientationFilter { Both, Preserving, Reversing };
enum class MorphismKind { Automorphism, Isomorphism, Duality };

const char* orientation_name(Orientation o);

// A dart bijection psi : source -> target with
//   psi . alpha_src = alpha_tgt . psi                     (always)
//   psi . sigma_src = sigma_tgt . psi                     (preserving)
//   psi . sigma_src = sigma_tgt^-1 . psi                  (reversing)
//
// On degenerate maps (all vertex degrees <= 2) the same dart map can satisfy
// both relations; it is stored once with orientation Preserving.
struct MapMorphism {
    CombinatorialMap source;
    CombinatorialMap target;
    Perm dart_map;
    Orientation orientation = Orientation::Preserving;
    MorphismKind kind = MorphismKind::Isomorphism;
};

bool satisfies_orientation(const MapMorphism& mor, Orientation o);
bool is_valid_morphism(const MapMorphism& mor);
void require_valid_morphism(const MapMorphism& mor); // throws InvalidMorphism

MapMorphism identity_morphism(const CombinatorialMap& m);

// Complete, duplicate-free list of embedding-respecting isomorphisms m -> n.
// Anchors dart 0 of m to every (dart of n, orientation) pair and propagates
// through sigma/alpha words; a candidate is kept iff globally consistent.
// Results are sorted by dart map, so the order is deterministic.
std::vector<MapMorphism> enumerate_isomorphisms(const CombinatorialMap& m,
                                                const CombinatorialMap& n,
                                                OrientationFilter filter = OrientationFilter::Both);

std::vector<MapMorphism> enumerate_automorphisms(const CombinatorialMap& m,
                                                 OrientationFilter filter = OrientationFilter::Both);

// Induced action on element orbits, indexed by source orbit ids, with values
// in target orbit ids.  Faces of a reversing morphism are chased through
// alpha on the target side (the image of a "face on the right" dart set is a
// "face on the left" dart set).
struct ElementAction {
    std::vector<int> vertex_image;
    std::vector<int> edge_image;
    std::vector<int> face_image;
};

ElementAction element_action(const MapMorphism& mor);

// g after f; requires f.target == g.source (structurally).
MapMorphism compose(const MapMorphism& g, const MapMorphism& f);
MapMorphism inverse_morphism(const MapMorphism& mor);

bool same_dart_map(const MapMorphism& a, const MapMorphism& b);

} // namespace sdmap

#endif
