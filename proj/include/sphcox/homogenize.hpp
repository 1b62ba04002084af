// The homogenization operator: a relation of the homogeneous space is turned
// into a relation of the Cox ring of an embedding by padding each monomial
// with boundary-divisor variables according to the order of vanishing along
// each ray, then setting the invertible torus variables to 1.
#ifndef SPHCOX_HOMOGENIZE_HPP
#define SPHCOX_HOMOGENIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sphcox/classgroup.hpp"
#include "sphcox/datum.hpp"
#include "sphcox/poly.hpp"

namespace sphcox {

// min over the monomials of f of <u, weight(monomial)>.
Int ord_along(const SphericalDatum& d, const LaurentPoly& f, const Vec& u);

// S/T/W table with one W per ray.
VarTablePtr alpha_table(const SphericalDatum& d, std::size_t n);
// S/W table (the Cox ring of the embedding).
VarTablePtr cox_table(const SphericalDatum& d, std::size_t n);

// f |-> sum_mu f_mu * prod_l W_l^(<u_l, mu> - ord_l); multiplicative, and
// setting every W_l to 1 retracts to f.
LaurentPoly alpha_homogenize(const SphericalDatum& d, const LaurentPoly& f,
                             const std::vector<Vec>& rays);
// T_k -> 1 on an S/T/W polynomial.
LaurentPoly beta_collapse(const SphericalDatum& d, const LaurentPoly& g, std::size_t n);
// beta after alpha; the result has no T variables and no negative exponents.
LaurentPoly homogenize(const SphericalDatum& d, const LaurentPoly& f,
                       const std::vector<Vec>& rays);

struct CoxPresentation {
    VarTablePtr ring;                    // S and W variables
    std::vector<LaurentPoly> relations;  // homogenized relations in `ring`
    ClassGroupData class_group;
    std::vector<ClassElement> degrees;   // per ring variable
    bool factorial = false;
    bool generating_guaranteed = true;   // false when the input ideal is not principal
    std::vector<std::string> warnings;
};

struct CoxOptions {
    bool allow_outside_valuation_cone = false;
    bool parallel = true;
};

// Assembles the presentation: valuation-cone membership of every ray (hard
// error unless allowed), homogenized relations, grading by the class group
// (of the bold datum when given, of the plain datum otherwise), verification
// that every relation is homogeneous for that grading.
CoxPresentation cox_presentation(const SphericalDatum& d, const std::vector<Vec>& rays,
                                 const std::optional<BoldDatum>& bold,
                                 const std::vector<Vec>& bold_rays,
                                 const CoxOptions& opts = {});

} // namespace sphcox

#endif
