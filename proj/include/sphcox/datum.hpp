// The combinatorial description of a spherical homogeneous space:
// r blocks of section variables with sizes dims[i], m invertible torus
// variables, defining relations among them, and the user's assertion on
// connectedness of the isotropy group (drives the factoriality flag).
#ifndef SPHCOX_DATUM_HPP
#define SPHCOX_DATUM_HPP

#include <string>
#include <vector>

#include "sphcox/lattice.hpp"
#include "sphcox/poly.hpp"

namespace sphcox {

struct SphericalDatum {
    int r = 0;
    std::vector<int> dims;  // size r, each >= 1
    int m = 0;
    bool h_connected = true;
    VarTablePtr space_table;  // S[i,j] blockwise, then T[1..m]
    std::vector<LaurentPoly> relations;

    int weight_rank() const { return r + m; }
    bool principal() const { return relations.size() == 1; }
    int total_block_size() const;
};

// Builds the table, parses and validates the relations: nonzero, S-exponents
// nonnegative (only T may be inverted).
SphericalDatum make_spherical_datum(int r, std::vector<int> dims, int m, bool h_connected,
                                    const std::vector<std::string>& relation_strings);

// Weight lattice M = Z^(r+m), labels v1*..vr*, w1*..wm*.
FreeLattice weight_lattice(const SphericalDatum& d);
// Its dual (valuations), labels v1..vr, w1..wm.
FreeLattice covaluation_lattice(const SphericalDatum& d);

// Image in M of a monomial: block multidegrees plus T-exponents.
Vec monomial_weight(const SphericalDatum& d, const Vec& exps);

// Rays of an embedding: vectors in the dual lattice, primitive, pairwise
// distinct.  Throws InputError otherwise.
void validate_rays(const SphericalDatum& d, const std::vector<Vec>& rays);

} // namespace sphcox

#endif
