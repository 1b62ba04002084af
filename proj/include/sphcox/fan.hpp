// Colored-fan construction for a spherical embedding given by rays, and the
// lifted fan living over it, plus the machine checks that they really are
// smooth fans (every cone smooth, every pairwise intersection a common face).
#ifndef SPHCOX_FAN_HPP
#define SPHCOX_FAN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sphcox/cone.hpp"
#include "sphcox/datum.hpp"

namespace sphcox {

// One choice of omitted color index per block (0-based); the cone over a ray
// uses all block basis vectors except the omitted ones.  For r = 0 there is
// exactly one (empty) choice.
std::vector<std::vector<int>> enumerate_omissions(const std::vector<int>& dims);

// Block-diagonal embedding Z^(r+m) -> Z^(s_1+...+s_r+m): the i-th coordinate
// is broadcast to the s_i slots of block i, the torus part is kept.
Vec iota_embed(const SphericalDatum& d, const Vec& u);

// Lattice Z^(s_1+...+s_r+m) with labels v[i,j], w[k].
FreeLattice big_lattice(const SphericalDatum& d);
// Same plus one extra coordinate e[l] per ray.
FreeLattice hat_lattice(const SphericalDatum& d, std::size_t n);

// cone( iota(u) , v[i,j] for j != omit[i] ) in the big lattice
Cone sigma_cone(const SphericalDatum& d, const Vec& u, const std::vector<int>& omit);
// cone( e[l] , v[i,j] for j != omit[i] ) in the hat lattice
Cone sigma_hat_cone(const SphericalDatum& d, std::size_t ray_index, std::size_t n,
                    const std::vector<int>& omit);

struct Fan {
    FreeLattice ambient;
    std::vector<Cone> max_cones;
    std::vector<std::string> labels;  // parallel to max_cones, for reports
};

// All sigma(l, omit) over rays x omission choices; empty fan when there are
// no rays.
Fan fan_of_embedding(const SphericalDatum& d, const std::vector<Vec>& rays);
Fan lifted_fan(const SphericalDatum& d, const std::vector<Vec>& rays);

struct FanCheckReport {
    std::size_t cone_count = 0;
    int cone_dim = -1;  // common dimension of the maximal cones, -1 if mixed
    std::vector<std::size_t> non_smooth;                       // cone indices
    std::vector<std::pair<std::size_t, std::size_t>> bad_pairs;  // i < j
    bool ok() const { return non_smooth.empty() && bad_pairs.empty(); }
};

// Smoothness of every maximal cone and the pairwise face condition.  The
// parallel path distributes cones/pairs over OpenMP threads and is
// result-identical to the serial one (independent exact subproblems written
// to preallocated slots).
FanCheckReport verify_fan(const Fan& fan, bool parallel = true);

} // namespace sphcox

#endif
