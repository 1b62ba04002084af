// Valuation cone of a spherical datum with a principal defining ideal,
// computed as the tropical hypersurface of the generator intersected with
// the dual of the weight lattice.
//
// A covector u lies in the cone iff the minimum of <u, weight> over the
// monomials of the generator is attained by at least two distinct exponent
// vectors.  Exponents are grouped into classes by their weight-lattice
// image; the locus is the union of
//   - one piece per class with >= 2 distinct exponents (min attained inside),
//   - one piece per unordered pair of classes (min attained as a tie).
// The union is certified to be convex: its conical hull is computed, and for
// every singleton class a the part of the hull where a is minimal must lie
// inside some tie hyperplane {<.,w_a> = <.,w_b>} — otherwise the hull would
// contain covectors whose minimum is attained only once, and the input is
// rejected instead of silently over-approximated.
#ifndef SPHCOX_TROPICAL_HPP
#define SPHCOX_TROPICAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sphcox/cone.hpp"
#include "sphcox/datum.hpp"

namespace sphcox {

struct WeightClass {
    Vec weight;                // image in M
    std::size_t multiplicity;  // number of distinct exponent vectors
};

struct TropicalPiece {
    Cone cone;
    std::size_t class_a, class_b;  // a == b for interior pieces, a < b for ties
};

struct ValuationCone {
    Cone cone;              // in the covaluation lattice
    std::vector<Vec> roots; // primitive outward facet normals in M; empty iff full
    bool horospherical = false;  // cone is all of N_Q
    std::vector<WeightClass> classes;
    std::vector<TropicalPiece> pieces;
};

// (exponent vector, weight-lattice image) per monomial of f.
std::vector<std::pair<Vec, Vec>> monomial_weights(const SphericalDatum& d,
                                                  const LaurentPoly& f);

// f must be a nonzero space polynomial with at least two exponent classes or
// one class of multiplicity >= 2; a single monomial has empty tropical locus
// and is rejected (MathError).
ValuationCone valuation_cone(const SphericalDatum& d, const LaurentPoly& f,
                             bool parallel = true);

// The horospherical case: all of N_Q, no roots (used when the datum has no
// relations).
ValuationCone full_valuation_cone(const SphericalDatum& d);

bool ray_in_valuation_cone(const ValuationCone& vc, const Vec& u);

} // namespace sphcox

#endif
