#include "sdmap/perm.hpp"

#include <numeric>

namespace sdmap {

bool is_permutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (Dart x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
    return q;
}

Perm compose_perm(const Perm& f, const Perm& g) {
    Perm h(g.size());
    for (int i = 0; i < static_cast<int>(g.size()); ++i) h[i] = f[g[i]];
    return h;
}

int orbit_count(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        for (Dart x = i; !seen[x]; x = p[x]) seen[x] = 1;
    }
    return count;
}

std::vector<std::vector<Dart>> perm_orbits(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Dart>> result;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<Dart> orbit;
        for (Dart x = i; !seen[x]; x = p[x]) {
            seen[x] = 1;
            orbit.push_back(x);
        }
        result.push_back(std::move(orbit));
    }
    return result;
}

} // namespace sdmap
