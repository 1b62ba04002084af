// Divisor class groups of spherical embeddings as explicit cokernels, with
// canonical coordinates so that variable degrees can be compared and summed.
#ifndef SPHCOX_CLASSGROUP_HPP
#define SPHCOX_CLASSGROUP_HPP

#include <string>
#include <vector>

#include "sphcox/datum.hpp"
#include "sphcox/lattice.hpp"

namespace sphcox {

// Descent data of a space with possibly nontrivial class group, presented by
// the pairing of its colors with the characters (d_matrix), plus the
// restriction of those characters to the connected center factor.
struct BoldDatum {
    int rbar = 0;     // number of color classes
    int mbar = 0;     // character lattice rank
    int xc_rank = 0;  // rank of the character group of the center factor
    Mat d_matrix;        // rbar x mbar
    Mat mu_restriction;  // xc_rank x mbar
};

BoldDatum make_bold_datum(int rbar, int mbar, int xc_rank, Mat d_matrix, Mat mu_restriction);
void validate_bold_rays(const BoldDatum& b, const std::vector<Vec>& bold_rays);

// An element written in the canonical coordinates of a ClassGroupData:
// free coordinates first, then one residue per torsion invariant.
struct ClassElement {
    Vec free_part;
    std::vector<Int> torsion_part;
    bool operator==(const ClassElement& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
};

class ClassGroupData {
  public:
    ClassGroupData() = default;
    // presentation: quotient of Z^ambient_rank by the column lattice of `a`
    ClassGroupData(Mat a, std::size_t ambient_rank);

    const AbelianGroup& shape() const { return shape_; }
    std::size_t ambient_rank() const { return ambient_; }

    ClassElement class_of(const Vec& v) const;
    ClassElement class_of_basis(std::size_t idx) const;
    ClassElement zero_element() const;
    ClassElement add(const ClassElement& a, const ClassElement& b) const;
    ClassElement scale(const Int& k, const ClassElement& a) const;

    std::string element_string(const ClassElement& e) const;  // "(1, 0)", "(1 mod 2)", "0"

  private:
    AbelianGroup shape_;
    std::size_t ambient_ = 0;
    Mat u_;                       // SNF row transform
    std::vector<Int> invariants_; // nonzero diagonal of D (unit entries included)
    int rank_ = 0;
};

// Cl of the embedding of the datum itself (trivial-class-group space):
// cokernel of  mu |-> ((mu_i)_i, (<u_l, mu>)_l)  in Z^(r+n).
ClassGroupData class_group_plain(const SphericalDatum& d, const std::vector<Vec>& rays);

// Cl of the embedding of the bold space: cokernel of
// mu |-> ((d_i(mu))_i, (<ubar_l, mu>)_l)  in Z^(rbar+n).
ClassGroupData class_group_bold(const BoldDatum& b, const std::vector<Vec>& bold_rays);

// The equivariant Picard group of the bold homogeneous space: cokernel of
// mu |-> sum_i d_i(mu) eta_i - mu|_C.  Throws MathError when that map is not
// injective (the presentation degenerates).
AbelianGroup pic_g_group(const BoldDatum& b);

} // namespace sphcox

#endif
