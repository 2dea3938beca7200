#include "sdmap/map.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sdmap/error.hpp"

namespace sdmap {

const char* element_kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::Vertex: return "vertex";
        case ElementKind::Edge: return "edge";
        case ElementKind::Face: return "face";
    }
    return "?";
}

namespace {

void index_orbits(const Perm& p, std::vector<int>& of, std::vector<std::vector<Dart>>& orbits) {
    const int n = static_cast<int>(p.size());
    of.assign(n, -1);
    orbits.clear();
    for (int i = 0; i < n; ++i) {
        if (of[i] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        std::vector<Dart> orbit;
        for (Dart x = i; of[x] < 0; x = p[x]) {
            of[x] = id;
            orbit.push_back(x);
        }
        orbits.push_back(std::move(orbit));
    }
}

} // namespace

CombinatorialMap CombinatorialMap::build(Perm alpha, Perm sigma, bool allow_nonspherical) {
    if (alpha.empty()) fail(Errc::ValidationError, "empty dart set");
    if (alpha.size() != sigma.size())
        fail(Errc::ValidationError, "alpha and sigma act on different dart sets");
    const int n = static_cast<int>(alpha.size());
    if (n % 2 != 0) fail(Errc::NotInvolution, "odd dart count cannot carry a fixed-point-free involution");
    if (!is_permutation(alpha)) fail(Errc::ValidationError, "alpha is not a permutation");
    if (!is_permutation(sigma)) fail(Errc::ValidationError, "sigma is not a permutation");
    for (int d = 0; d < n; ++d) {
        if (alpha[d] == d) fail(Errc::NotInvolution, "alpha fixes dart " + std::to_string(d));
        if (alpha[alpha[d]] != d) fail(Errc::NotInvolution, "alpha squared is not the identity");
    }

    // Connectivity: <sigma, alpha> must act transitively on darts.
    {
        std::vector<char> seen(n, 0);
        std::queue<Dart> queue;
        queue.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            const Dart d = queue.front();
            queue.pop();
            for (Dart next : {alpha[d], sigma[d]}) {
                if (!seen[next]) {
                    seen[next] = 1;
                    ++reached;
                    queue.push(next);
                }
            }
        }
        if (reached != n) fail(Errc::Disconnected, "map is not connected");
    }

    auto data = std::make_shared<MapData>();
    data->alpha = std::move(alpha);
    data->sigma = std::move(sigma);
    data->phi = compose_perm(data->sigma, data->alpha);
    data->sigma_inv = inverse_perm(data->sigma);
    data->phi_inv = inverse_perm(data->phi);
    index_orbits(data->sigma, data->vertex_of, data->vertex_orbits);
    index_orbits(data->alpha, data->edge_of, data->edge_orbits);
    index_orbits(data->phi, data->face_of, data->face_orbits);
    data->euler = static_cast<int>(data->vertex_orbits.size()) -
                  static_cast<int>(data->edge_orbits.size()) +
                  static_cast<int>(data->face_orbits.size());

    if (data->euler != 2 && !allow_nonspherical)
        fail(Errc::NotSphere,
             "Euler characteristic is " + std::to_string(data->euler) + ", expected 2");

    return CombinatorialMap(std::move(data));
}

ElementRef CombinatorialMap::vertex_ref(int v) const { return element_ref(ElementKind::Vertex, v); }
ElementRef CombinatorialMap::edge_ref(int e) const { return element_ref(ElementKind::Edge, e); }
ElementRef CombinatorialMap::face_ref(int f) const { return element_ref(ElementKind::Face, f); }

ElementRef CombinatorialMap::element_ref(ElementKind kind, int index) const {
    if (index < 0 || index >= element_count(kind))
        fail(Errc::ValidationError, std::string(element_kind_name(kind)) + " index out of range");
    return ElementRef{kind, index, data_.get()};
}

int CombinatorialMap::element_count(ElementKind kind) const {
    switch (kind) {
        case ElementKind::Vertex: return vertex_count();
        case ElementKind::Edge: return edge_count();
        case ElementKind::Face: return face_count();
    }
    return 0;
}

std::pair<Perm, Perm> CombinatorialMap::canonical_form() const {
    const int n = dart_count();
    std::pair<Perm, Perm> best;
    bool have_best = false;
    std::vector<Dart> new_id(n);
    std::vector<Dart> order(n);
    for (Dart root = 0; root < n; ++root) {
        std::fill(new_id.begin(), new_id.end(), -1);
        new_id[root] = 0;
        order[0] = root;
        int assigned = 1;
        for (int k = 0; k < n; ++k) {
            const Dart d = order[k];
            for (Dart next : {data_->alpha[d], data_->sigma[d]}) {
                if (new_id[next] < 0) {
                    new_id[next] = assigned;
                    order[assigned] = next;
                    ++assigned;
                }
            }
        }
        std::pair<Perm, Perm> key{Perm(n), Perm(n)};
        for (Dart d = 0; d < n; ++d) {
            key.first[new_id[d]] = new_id[data_->sigma[d]];
            key.second[new_id[d]] = new_id[data_->alpha[d]];
        }
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
    }
    return best;
}

CombinatorialMap relabel(const CombinatorialMap& m, const Perm& p) {
    if (!is_permutation(p) || static_cast<int>(p.size()) != m.dart_count())
        fail(Errc::BadParameter, "relabeling is not a permutation of the dart set");
    const int n = m.dart_count();
    Perm alpha(n), sigma(n);
    for (Dart d = 0; d < n; ++d) {
        alpha[p[d]] = p[m.alpha(d)];
        sigma[p[d]] = p[m.sigma(d)];
    }
    return CombinatorialMap::build(std::move(alpha), std::move(sigma),
                                   m.euler_characteristic() != 2);
}

bool isomorphic_by_relabeling(const CombinatorialMap& a, const CombinatorialMap& b) {
    if (a.dart_count() != b.dart_count()) return false;
    return a.canonical_form() == b.canonical_form();
}

int euler_characteristic(const CombinatorialMap& m) { return m.euler_characteristic(); }

} // namespace sdmap
