// Rational polyhedral cones with exact dual descriptions.
//
// Every cone keeps both descriptions in canonical form:
//   C = cone(rays) + span(lineality)
//     = { x : <f, x> >= 0 for f in facets, <e, x> = 0 for e in span_eqs }
// rays are primitive extreme rays (lex-sorted), lineality and span_eqs are
// Hermite-reduced saturated bases, facets are primitive inner normals
// (lex-sorted, one per facet).  Two cones are equal iff their canonical
// fields compare equal.
#ifndef SPHCOX_CONE_HPP
#define SPHCOX_CONE_HPP

#include <utility>
#include <vector>

#include "sphcox/lattice.hpp"
#include "sphcox/numeric.hpp"

namespace sphcox {

struct Cone {
    FreeLattice ambient;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
    std::vector<Vec> facets;
    std::vector<Vec> span_eqs;

    int ambient_dim() const { return ambient.rank; }
    int dim() const { return ambient.rank - static_cast<int>(span_eqs.size()); }
    bool is_pointed() const { return lineality.empty(); }
    bool is_full_dimensional() const { return span_eqs.empty(); }
    bool is_zero() const { return rays.empty() && lineality.empty(); }

    bool contains(const Vec& x) const;
    bool operator==(const Cone& o) const {
        return rays == o.rays && lineality == o.lineality;
    }
};

// Build from generators (V-description).  `lineality_gens` may be empty.
Cone cone_from_rays(const FreeLattice& ambient, const std::vector<Vec>& ray_gens,
                    const std::vector<Vec>& lineality_gens = {});

// Build from constraints (H-description): <a,x> >= 0 per inequality row,
// <b,x> = 0 per equation row.
Cone cone_from_inequalities(const FreeLattice& ambient, const std::vector<Vec>& ineqs,
                            const std::vector<Vec>& eqs = {});

// All of ambient space.
Cone cone_full(const FreeLattice& ambient);

Cone intersect(const Cone& a, const Cone& b);

// The face C ∩ {<normal, x> = 0}; `normal` must be valid on C (<normal,.> >= 0).
Cone face_cut(const Cone& c, const Vec& normal);

// F is a face of C: walk down through facets.  F = C counts as a face.
bool is_face(const Cone& f, const Cone& c);

// The fan compatibility predicate: the intersection is a face of both.
std::pair<bool, Cone> intersect_is_face(const Cone& a, const Cone& b);

// Generated by part of a Z-basis of the ambient lattice (hence pointed,
// simplicial, and saturated).
bool is_smooth_cone(const Cone& c);

// Primitive inner facet normals together with the span equations; the cone
// is exactly { x : <n, x> >= 0 for all normals, <e, x> = 0 for all eqs }.
struct HalfspaceDescription {
    std::vector<Vec> inner_normals;
    std::vector<Vec> span_eqs;
};
HalfspaceDescription dual_halfspaces(const Cone& c);

} // namespace sphcox

#endif
