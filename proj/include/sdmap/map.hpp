#ifndef SDMAP_MAP_HPP
#define SDMAP_MAP_HPP

#include <memory>
#include <utility>
#include <vector>

#include "sdmap/perm.hpp"

namespace sdmap {

// A map on the sphere is stored as a rotation system on darts (half-edges):
//
//   alpha : dart -> dart   fixed-point-free involution pairing the two darts
//                          of each edge,
//   sigma : dart -> dart   counterclockwise successor around the dart's
//                          origin vertex,
//   phi   = sigma . alpha  face-tracing permutation.
//
// Orbit conventions used throughout the library:
//   vertices = orbits of sigma, edges = orbits of alpha, faces = orbits of phi.
//
// With sigma counterclockwise, the phi-orbit of a dart d traces the face
// lying to the RIGHT of d.  The corner (vertex-face incidence occurrence)
// attached to dart d is the wedge at vertex(d) between sigma^-1(d) and d;
// it lies on face(d).  Corners are therefore in bijection with darts, which
// is what every derived construction (dual, medial, incidence, squares)
// relies on.

enum class ElementKind { Vertex, Edge, Face };

const char* element_kind_name(ElementKind kind);

struct MapData;

struct ElementRef {
    ElementKind kind;
    int index;
    const MapData* owner;

    friend bool operator==(const ElementRef& a, const ElementRef& b) {
        return a.kind == b.kind && a.index == b.index && a.owner == b.owner;
    }
    friend bool operator!=(const ElementRef& a, const ElementRef& b) { return !(a == b); }
};

struct MapData {
    Perm alpha;
    Perm sigma;
    Perm phi;
    Perm sigma_inv;
    Perm phi_inv;
    std::vector<int> vertex_of;
    std::vector<int> edge_of;
    std::vector<int> face_of;
    std::vector<std::vector<Dart>> vertex_orbits; // follow sigma from min dart
    std::vector<std::vector<Dart>> edge_orbits;   // {d, alpha(d)}, d < alpha(d)
    std::vector<std::vector<Dart>> face_orbits;   // follow phi from min dart
    int euler = 0;
};

class CombinatorialMap {
public:
    CombinatorialMap() = default;

    // Validates and builds. Throws Error with code
    //   ValidationError : size mismatch, empty dart set, sigma not a permutation
    //   NotInvolution   : alpha not a fixed-point-free involution
    //   Disconnected    : <sigma, alpha> not transitive on darts
    //   NotSphere       : V - E + F != 2 and allow_nonspherical unset
    static CombinatorialMap build(Perm alpha, Perm sigma, bool allow_nonspherical = false);

    bool valid() const { return data_ != nullptr; }
    int dart_count() const { return static_cast<int>(data_->alpha.size()); }

    const Perm& alpha() const { return data_->alpha; }
    const Perm& sigma() const { return data_->sigma; }
    const Perm& phi() const { return data_->phi; }
    const Perm& sigma_inv() const { return data_->sigma_inv; }
    const Perm& phi_inv() const { return data_->phi_inv; }

    Dart alpha(Dart d) const { return data_->alpha[d]; }
    Dart sigma(Dart d) const { return data_->sigma[d]; }
    Dart phi(Dart d) const { return data_->phi[d]; }
    Dart sigma_inv(Dart d) const { return data_->sigma_inv[d]; }
    Dart phi_inv(Dart d) const { return data_->phi_inv[d]; }

    int vertex_count() const { return static_cast<int>(data_->vertex_orbits.size()); }
    int edge_count() const { return static_cast<int>(data_->edge_orbits.size()); }
    int face_count() const { return static_cast<int>(data_->face_orbits.size()); }

    int vertex_of(Dart d) const { return data_->vertex_of[d]; }
    int edge_of(Dart d) const { return data_->edge_of[d]; }
    int face_of(Dart d) const { return data_->face_of[d]; }

    const std::vector<Dart>& vertex_darts(int v) const { return data_->vertex_orbits[v]; }
    const std::vector<Dart>& edge_darts(int e) const { return data_->edge_orbits[e]; }
    const std::vector<Dart>& face_darts(int f) const { return data_->face_orbits[f]; }

    ElementRef vertex_ref(int v) const;
    ElementRef edge_ref(int e) const;
    ElementRef face_ref(int f) const;
    ElementRef element_ref(ElementKind kind, int index) const;
    int element_count(ElementKind kind) const;

    int euler_characteristic() const { return data_->euler; }

    const MapData* identity() const { return data_.get(); }

    // Structural equality: identical dart labels and permutations.
    friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->alpha == b.data_->alpha && a.data_->sigma == b.data_->sigma;
    }
    friend bool operator!=(const CombinatorialMap& a, const CombinatorialMap& b) { return !(a == b); }

    // Canonical relabeling key: the lexicographically smallest (sigma, alpha)
    // image over breadth-first relabelings rooted at every dart.  Invariant
    // under dart relabeling, so it serves as map equality up to relabeling.
    std::pair<Perm, Perm> canonical_form() const;

private:
    explicit CombinatorialMap(std::shared_ptr<const MapData> data) : data_(std::move(data)) {}

    std::shared_ptr<const MapData> data_;
};

// Conjugated copy: alpha' = p.alpha.p^-1, sigma' = p.sigma.p^-1.
CombinatorialMap relabel(const CombinatorialMap& m, const Perm& p);

// Equality up to dart relabeling (canonical forms compare equal).
bool isomorphic_by_relabeling(const CombinatorialMap& a, const CombinatorialMap& b);

int euler_characteristic(const CombinatorialMap& m);

} // namespace sdmap

#endif
