#ifndef SDMAP_SYMMETRY_HPP
#define SDMAP_SYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sdmap/map.hpp"
#include "sdmap/morphism.hpp"

namespace sdmap {

// A cycle is a closed simple walk given by darts d_0, ..., d_{k-1}:
// consecutive darts chain through distinct vertices and use distinct edges.
// Validation throws NotACycle / NotSimple.
void require_simple_cycle(const CombinatorialMap& host, const std::vector<Dart>& cycle);

// Sides of a simple cycle on the sphere.  Faces cluster into exactly two
// components by adjacency across non-cycle edges; vertices and edges off
// the cycle inherit the side of their incident faces.  Side 0 (interior)
// is the side containing the smaller face index; cycle elements get -1.
struct SideSplit {
    std::vector<int> vertex_side;
    std::vector<int> edge_side;
    std::vector<int> face_side;
    // counts[side][kind]: kind 0 = vertices, 1 = edges, 2 = faces
    int counts[2][3] = {{0, 0, 0}, {0, 0, 0}};
};

SideSplit cycle_sides(const CombinatorialMap& host, const std::vector<Dart>& cycle);

// Which automorphisms may witness a symmetric cycle.
//
//   AnyAutomorphism     the literal definition: any automorphism stabilizing
//                       the cycle and exchanging its sides.  This is what
//                       the figure-level certificates use, but it admits
//                       half-turn witnesses (involutions with fixed cells).
//   AntipodalInvolution element involutions whose squares-graph extension is
//                       fixed-point-free, i.e. witnesses realizable as the
//                       antipodal map.  The odd-length law (every length
//                       = 2 mod 4 on incidence graphs of antipodally
//                       self-dual maps) holds for exactly this class: the
//                       cube, as I(tetrahedron), carries a Hamiltonian
//                       8-cycle exchanged by a half-turn, so the law fails
//                       for the looser class.
enum class CycleWitnessPolicy { AnyAutomorphism, AntipodalInvolution };

struct SymmetricCycleCheck {
    bool symmetric = false;
    std::optional<MapMorphism> witness;
};

// True iff some admissible automorphism (either orientation) stabilizes the
// cycle's edge set and exchanges the two sides.
SymmetricCycleCheck is_symmetric_cycle(const CombinatorialMap& host,
                                       const std::vector<Dart>& cycle,
                                       CycleWitnessPolicy policy =
                                           CycleWitnessPolicy::AnyAutomorphism);

struct SymmetricCycleWitness {
    std::vector<Dart> cycle;        // dart walk
    std::vector<int> edges;         // sorted edge ids
    MapMorphism automorphism;
    SideSplit sides;
};

struct SymmetricCycleEnumeration {
    std::vector<SymmetricCycleWitness> witnesses; // sorted by (length, edges)
    bool budget_exceeded = false;
    std::int64_t extensions = 0;
};

// Complete enumeration of symmetric cycles up to max_len (0 = unbounded).
// Automorphisms are enumerated first; cycles invariant under each are then
// grown by a DFS that keeps the orbit closure of the chosen edges degree-
// compatible.  Each automorphism's search is capped by budget partial
// extensions; hitting the cap sets budget_exceeded instead of silently
// truncating.
SymmetricCycleEnumeration enumerate_symmetric_cycles(const CombinatorialMap& host,
                                                     int max_len = 0,
                                                     std::int64_t budget = 1000000,
                                                     CycleWitnessPolicy policy =
                                                         CycleWitnessPolicy::AnyAutomorphism);

struct SymmetricCycleLawReport {
    bool input_antipodally_self_dual = false;
    // Antipodal-witness reading (the class the odd-length law governs).
    bool has_symmetric_cycle = false;
    std::vector<int> lengths; // distinct, sorted
    bool consistent = false;  // >= 1 cycle and every length = 2 mod 4
    // Literal reading, for figure-level certificates.
    std::vector<int> any_witness_lengths;
    bool has_bad_any_witness_length = false; // some length = 0 mod 4
    bool budget_exceeded = false;
};

// Symmetric-cycle summary of I(m).  For antipodally self-dual m the report
// must come out consistent; otherwise the report is informational (absence
// of antipodal-witness cycles, or a literal-reading length divisible by 4,
// certifies non-antipodality).
SymmetricCycleLawReport symmetric_cycle_law_report(const CombinatorialMap& m, int max_len = 0,
                                      std::int64_t budget = 1000000);

struct AntipodalSymmetryResult {
    bool antipodally_symmetric = false;
    std::optional<MapMorphism> witness; // orientation-reversing involution
};

// True iff the map admits an involutive automorphism whose squares-graph
// extension is fixed-point-free.
AntipodalSymmetryResult is_antipodally_symmetric(const CombinatorialMap& host);

} // namespace sdmap

#endif
