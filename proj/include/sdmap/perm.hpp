#ifndef SDMAP_PERM_HPP
#define SDMAP_PERM_HPP

#include <cstdint>
#include <vector>

namespace sdmap {

using Dart = std::int32_t;

// A permutation on {0, ..., n-1} stored as an image table.
using Perm = std::vector<Dart>;

bool is_permutation(const Perm& p);

Perm identity_perm(int n);
bool is_identity(const Perm& p);

Perm inverse_perm(const Perm& p);

// (f after g): x -> f[g[x]].
Perm compose_perm(const Perm& f, const Perm& g);

int orbit_count(const Perm& p);

// Each orbit is listed starting from its smallest element and follows p;
// orbits are ordered by their smallest element.
std::vector<std::vector<Dart>> perm_orbits(const Perm& p);

} // namespace sdmap

#endif
