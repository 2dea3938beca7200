#ifndef SDMAP_ANTIPODAL_HPP
#define SDMAP_ANTIPODAL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sdmap/derived.hpp"
#include "sdmap/duality.hpp"

namespace sdmap {

// Action of an automorphism of H on the vertices of H's squares graph,
// which split into V(H), E(H) and F(H).  A V_V vertex is fixed iff the
// vertex of H is fixed; a V_E vertex iff the edge is preserved as a set
// (endpoints kept or swapped); a V_F vertex iff the face is preserved as a
// set, regardless of how its boundary is rotated or reflected.
struct SquareExtension {
    MapMorphism base; // automorphism of H
    ElementAction action;
    bool element_involutive = false;
    std::vector<ElementRef> fixed; // fixed elements of H, typed
};

SquareExtension square_extension(const CombinatorialMap& host, const MapMorphism& aut);

// Label assignment on the vertices of a squares graph encoding an
// involution: paired orbits {a, b} get labels {+i} / {-i}; fixed elements
// get the paired label {+i, -i} and are listed in fixed_vertices.
struct InvolutiveLabeling {
    DerivedMap host_square;            // square(H)
    std::vector<std::vector<int>> labels; // per square(H) vertex; +i / -i, i >= 1
    std::vector<int> fixed_vertices;      // square(H) vertex indices
};

// Requires base^2 = id on the elements of the host (else NotInvolution).
InvolutiveLabeling labeling_from_involution(const SquareExtension& ext);

struct LabelingCheck {
    bool valid = true;
    int violated_condition = 0; // 1..4 per the involutive-labeling conditions
    std::string detail;
};

LabelingCheck verify_involutive_labeling(const DerivedMap& host_square,
                                         const std::vector<std::vector<int>>& labels);

// Recover the vertex involution encoded by a labeling (UnknownVertex /
// ValidationError on malformed input).
std::vector<int> involution_from_labeling(const DerivedMap& host_square,
                                          const std::vector<std::vector<int>>& labels);

enum class AntipodalVerdict { Antipodal, SelfDualNotAntipodal, NotSelfDual };

const char* antipodal_verdict_name(AntipodalVerdict verdict);

struct RejectedDuality {
    int duality_index = 0;        // position in enumerate_dualities order
    bool involutive = false;
    std::optional<ElementRef> first_fixed; // a fixed I(m)-element of sigma_I
};

struct AntipodalityResult {
    AntipodalVerdict verdict = AntipodalVerdict::NotSelfDual;
    std::optional<DualityWitness> witness;
    std::optional<MapMorphism> incidence_automorphism; // sigma_I of the witness
    std::optional<InvolutiveLabeling> labeling;        // on I(m)^square
    int dualities_total = 0;
    int involutive_dualities = 0;
    std::vector<RejectedDuality> rejections; // when not antipodal
};

// Decides antipodal self-duality: searches for an involutive duality whose
// induced color-swapping automorphism of I(m) extends to the squares graph
// I(m)^square without fixed vertices.
AntipodalityResult is_antipodally_self_dual(const CombinatorialMap& m);

struct ObstructionResult {
    bool self_dual = false;   // verdict is vacuous when false
    bool obstructed = false;
    int witness_vertex = -1;              // black vertex of I(m), as a vertex of m
    std::vector<int> corner_counts;       // per face, for the witness vertex
};

// True iff some vertex of m meets every face an odd number of times
// (counted with corner multiplicity in I(m)).
ObstructionResult odd_edge_obstruction(const CombinatorialMap& m);

// Exhaustive oracle for small maps: searches all fixed-point-free
// involutions of the vertex set of I(m)^square that swap the black and
// white classes and preserve skeleton adjacency both ways.  Returns nullopt
// when |V(I(m)^square)| exceeds max_square_vertices.
std::optional<bool> raw_labeling_antipodality_oracle(const CombinatorialMap& m,
                                                     int max_square_vertices = 24);

} // namespace sdmap

#endif
