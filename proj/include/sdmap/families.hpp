#ifndef SDMAP_FAMILIES_HPP
#define SDMAP_FAMILIES_HPP

#include <random>
#include <string>
#include <vector>

#include "sdmap/map.hpp"

namespace sdmap {

// Hub-and-rim wheel: an n-cycle plus a center joined to every rim vertex.
CombinatorialMap wheel(int n);

// n-cycle with an ear vertex inside each cycle edge and a center joined to
// every ear.
CombinatorialMap ear(int n);

// layers concentric n-cycles with radial spokes down to a single hub;
// pancake(n, 1) == wheel(n).
CombinatorialMap pancake(int n, int layers);

// Plain n-cycle map (2 faces); small test subject.
CombinatorialMap cycle_map(int n);

// A vertex-face incidence occurrence, realized by the dart whose corner it
// is: vertex = vertex_of(dart), face = face_of(dart).
struct Corner {
    int vertex;
    int face;
    Dart dart;
};

Corner corner_at(const CombinatorialMap& m, Dart d);
std::vector<Corner> corners(const CombinatorialMap& m);

// One-point union: identifies vertex_of(a) in m1 with vertex_of(b) in m2,
// splicing m2's rotation into the corner wedge of a.  Darts of m2 are
// shifted by m1.dart_count().
CombinatorialMap one_point_splice(const CombinatorialMap& m1, Dart a,
                                  const CombinatorialMap& m2, Dart b);

// Glues m with its dual at the corner's vertex-face pair; always self-dual
// and antipodally self-dual.
CombinatorialMap adhesion(const CombinatorialMap& m, const Corner& corner);
CombinatorialMap adhesion(const CombinatorialMap& m, Dart corner_dart);

// Diagnostic gluing at arbitrary wedges of m and dual(m); wrong pairs can
// break self-duality.
CombinatorialMap adhesion_diagnostic(const CombinatorialMap& m, Dart corner_on_map,
                                     Dart corner_on_dual);

// Hand-encoded rotation systems; each re-verifies its advertised properties
// at load and throws FixtureSelfCheckFailed on mismatch.
//   fig3_not_antipodal        self-dual, involutive duality exists, not
//                             antipodally self-dual, I has a symmetric 8-cycle
//   fig4_antipodal_not_strong antipodally self-dual, not strongly involutive
//   fig6_odd_obstruction      self-dual with the odd-edge obstruction
CombinatorialMap fixture(const std::string& name);

std::vector<std::string> fixture_names();

// Raw alpha/sigma tables of a fixture (for serialization without re-checking).
std::pair<Perm, Perm> fixture_tables(const std::string& name);

// Random connected sphere map with the requested edge count: random rotation
// on a fixed pairing, retried until connected with Euler characteristic 2.
CombinatorialMap random_sphere_map(std::mt19937& rng, int edge_count);

} // namespace sdmap

#endif
