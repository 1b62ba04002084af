// Descent between a space with nontrivial class group and its canonical
// lift with trivial one: the torus-weight identification, pushforward /
// pullback of (co)valuations, lifting of rays, and descending the valuation
// cone, with exact round-trip verification.
#ifndef SPHCOX_DESCENT_HPP
#define SPHCOX_DESCENT_HPP

#include <vector>

#include "sphcox/classgroup.hpp"
#include "sphcox/cone.hpp"
#include "sphcox/datum.hpp"

namespace sphcox {

struct DescentMaps {
    Mat gamma_columns;                    // (rbar+xc) x mbar, column j = gamma(mu_j)
    std::vector<Vec> torus_weight_basis;  // b_k: canonical basis of the column lattice
    Mat transition;                       // Gamma (mbar x mbar, unimodular): B * Gamma = C
    Mat pullback;                         // (rbar+mbar) x mbar: mu |-> (d(mu); Gamma mu)
    Mat pushforward;                      // mbar x (rbar+mbar): transpose of pullback
};

// gamma(mu) = -sum_i d_i(mu) eta_i + mu|_C, expressed in the canonical basis
// of its image lattice.  Throws MathError when the image lattice has rank
// below mbar (then the lift torus is too small and Gamma cannot be
// unimodular).
DescentMaps descent_maps(const BoldDatum& b);

// Covaluation lattice of the bold space, labels nbar1..., and its dual
// labels mubar1...
FreeLattice bold_covaluation_lattice(const BoldDatum& b);
FreeLattice bold_weight_lattice(const BoldDatum& b);

// Rays of the bold embedding lifted into the covaluation lattice of the
// lift: zero on the block part, (Gamma^T)^{-1} ubar on the torus part.
std::vector<Vec> lift_rays(const BoldDatum& b, const DescentMaps& m,
                           const std::vector<Vec>& bold_rays);

// Image of the valuation cone under the pushforward, with the exact
// round-trip check pushforward^{-1}(image) == cone.
Cone descend_cone(const BoldDatum& b, const DescentMaps& m, const Cone& vcone);

// Every monomial of every relation must have the same torus weight
// Theta(monomial) = sum_S e * eta_i + sum_T e * b_k; otherwise the relations
// cannot descend and the bold datum is inconsistent with the space.
void validate_relation_weights(const SphericalDatum& d, const BoldDatum& b,
                               const DescentMaps& m);

} // namespace sphcox

#endif
