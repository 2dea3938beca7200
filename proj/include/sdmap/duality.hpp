#ifndef SDMAP_DUALITY_HPP
#define SDMAP_DUALITY_HPP

#include <optional>
#include <vector>

#include "sdmap/derived.hpp"
#include "sdmap/morphism.hpp"

namespace sdmap {

// A duality isomorphism m -> dual(m) together with its action on the
// elements of m: sigma sends vertices to faces, faces to vertices and edges
// to edges.
//
//   involutive           sigma^2 = id on vertices and faces
//   strongly_involutive  involutive and no vertex v lies on the boundary
//                        walk of the face sigma(v)
struct DualityWitness {
    MapMorphism morphism; // kind Duality, target = dual(source).map
    std::vector<int> vertex_to_face;
    std::vector<int> face_to_vertex;
    std::vector<int> edge_to_edge;
    bool involutive = false;
    bool strongly_involutive = false;
};

// All duality isomorphisms of m, both orientation classes, sorted by dart
// map.  Empty iff m is not self-dual.
std::vector<DualityWitness> enumerate_dualities(const CombinatorialMap& m);

bool is_self_dual(const CombinatorialMap& m);

bool is_involutive(const DualityWitness& witness);

struct StrongInvolutivityResult {
    bool strongly_involutive = false;
    std::optional<DualityWitness> witness;
};

StrongInvolutivityResult is_strongly_involutive(const CombinatorialMap& m);

// Composing two dualities of m yields an automorphism of m.
MapMorphism compose_dualities(const DualityWitness& second, const DualityWitness& first);

// True when vertex v appears on the boundary walk of face f.
bool vertex_on_face(const CombinatorialMap& m, int v, int f);

} // namespace sdmap

#endif
