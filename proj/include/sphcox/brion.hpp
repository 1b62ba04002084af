// Comparison presentation: the Cox ring of an embedding as the Cox ring of
// the wonderful compactification tensored over the boundary sections, with
// one relation  z_i - prod_l W_l^(-<u_l, root_i>)  per spherical root.
#ifndef SPHCOX_BRION_HPP
#define SPHCOX_BRION_HPP

#include <string>
#include <vector>

#include "sphcox/datum.hpp"
#include "sphcox/homogenize.hpp"
#include "sphcox/poly.hpp"

namespace sphcox {

struct WonderfulPresentation {
    VarTablePtr ring;                     // the user-declared section variables
    std::vector<LaurentPoly> z_sections;  // one per spherical root, in `ring`
    std::vector<Vec> roots;               // in M, parallel to z_sections
    std::vector<LaurentPoly> relations;   // relations of the wonderful Cox ring
};

WonderfulPresentation make_wonderful(const std::vector<std::string>& var_names,
                                     const std::vector<std::string>& z_section_strings,
                                     std::vector<Vec> roots,
                                     const std::vector<std::string>& relation_strings,
                                     int weight_rank);

// W-exponent vectors of the boundary monomials: e_{i,l} = -<u_l, root_i>.
// Throws MathError when some exponent is negative (a ray outside the
// valuation cone).
std::vector<Vec> z_substitution(const std::vector<Vec>& roots, const std::vector<Vec>& rays);

// Ring = wonderful variables + W[1..n]; relations = wonderful relations plus
// z_i - W^{e_i}.  The result carries no grading.
struct TensorPresentation {
    VarTablePtr ring;
    std::vector<LaurentPoly> relations;
};
TensorPresentation tensor_presentation(const WonderfulPresentation& w,
                                       const std::vector<Vec>& rays);

// Positional correspondence: k-th non-W variable of the Cox ring maps to the
// k-th wonderful variable, W[l] to W[l].  True iff the relation multisets
// become equal as canonical polynomials under that renaming.
bool presentations_agree(const CoxPresentation& cox, const TensorPresentation& tensor,
                         std::string* detail = nullptr);

} // namespace sphcox

#endif
