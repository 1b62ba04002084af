#include "sphcox/tropical.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "sphcox/errors.hpp"

namespace sphcox {

std::vector<std::pair<Vec, Vec>> monomial_weights(const SphericalDatum& d,
                                                  const LaurentPoly& f) {
    std::vector<std::pair<Vec, Vec>> out;
    for (const auto& [e, c] : f.terms()) out.emplace_back(e, monomial_weight(d, e));
    return out;
}

namespace {

// inequalities saying "class a attains the minimum": <u, w_c - w_a> >= 0
std::vector<Vec> min_at_inequalities(const std::vector<WeightClass>& classes, std::size_t a) {
    std::vector<Vec> ineqs;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (c == a) continue;
        ineqs.push_back(sub_vec(classes[c].weight, classes[a].weight));
    }
    return ineqs;
}

} // namespace

ValuationCone full_valuation_cone(const SphericalDatum& d) {
    ValuationCone vc;
    vc.cone = cone_full(covaluation_lattice(d));
    vc.horospherical = true;
    return vc;
}

ValuationCone valuation_cone(const SphericalDatum& d, const LaurentPoly& f, bool parallel) {
    if (f.is_zero()) throw InputError("valuation cone: zero polynomial");
    const FreeLattice amb = covaluation_lattice(d);

    // group distinct exponents by weight-lattice image
    std::map<Vec, std::size_t> counts;
    for (const auto& [e, c] : f.terms()) counts[monomial_weight(d, e)] += 1;

    ValuationCone vc;
    for (const auto& [w, k] : counts) vc.classes.push_back(WeightClass{w, k});
    const std::vector<WeightClass>& cls = vc.classes;

    if (cls.size() == 1) {
        if (cls[0].multiplicity < 2)
            throw MathError("valuation cone: generator is a single monomial, "
                            "its zero locus misses the open orbit");
        vc.cone = cone_full(amb);
        vc.horospherical = true;
        vc.pieces.push_back(TropicalPiece{vc.cone, 0, 0});
        return vc;
    }

    // enumerate the pieces: interior pieces for classes with multiplicity
    // >= 2, tie pieces for unordered pairs of classes
    struct PieceSpec {
        std::size_t a, b;
    };
    std::vector<PieceSpec> specs;
    for (std::size_t a = 0; a < cls.size(); ++a)
        if (cls[a].multiplicity >= 2) specs.push_back({a, a});
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) specs.push_back({a, b});

    std::vector<TropicalPiece> pieces(specs.size());
    std::atomic<bool> internal_error{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k = 0; k < static_cast<long long>(specs.size()); ++k) {
        try {
            const auto [a, b] = specs[k];
            std::vector<Vec> ineqs = min_at_inequalities(cls, a);
            std::vector<Vec> eqs;
            if (a != b) eqs.push_back(sub_vec(cls[a].weight, cls[b].weight));
            pieces[k] = TropicalPiece{cone_from_inequalities(amb, ineqs, eqs), a, b};
        } catch (...) {
            internal_error = true;
        }
    }
    if (internal_error) throw MathError("valuation cone: piece construction failed");
    vc.pieces = std::move(pieces);

    // conical hull of the union
    std::vector<Vec> gens, lin_gens;
    for (const TropicalPiece& p : vc.pieces) {
        gens.insert(gens.end(), p.cone.rays.begin(), p.cone.rays.end());
        lin_gens.insert(lin_gens.end(), p.cone.lineality.begin(), p.cone.lineality.end());
    }
    Cone hull = cone_from_rays(amb, gens, lin_gens);

    // certificate that hull == union: wherever a singleton class is minimal
    // inside the hull, it must tie with another class everywhere, i.e. that
    // slice lies in a single tie hyperplane.  (A cone not contained in any
    // of finitely many hyperplanes has a point outside all of them.)
    for (std::size_t a = 0; a < cls.size(); ++a) {
        if (cls[a].multiplicity >= 2) continue;
        Cone slice = intersect(hull, cone_from_inequalities(amb, min_at_inequalities(cls, a)));
        if (slice.is_zero()) continue;
        std::vector<Vec> slice_gens = slice.rays;
        slice_gens.insert(slice_gens.end(), slice.lineality.begin(), slice.lineality.end());
        bool tied = false;
        for (std::size_t b = 0; b < cls.size() && !tied; ++b) {
            if (b == a) continue;
            Vec diff = sub_vec(cls[a].weight, cls[b].weight);
            bool all_zero = true;
            for (const Vec& g : slice_gens)
                if (dot(diff, g) != 0) {
                    all_zero = false;
                    break;
                }
            tied = all_zero;
        }
        if (!tied)
            throw MathError("valuation cone: tropical locus is not convex "
                            "(minimum can be attained by a single monomial); "
                            "the datum is not consistent with a spherical space");
    }

    vc.cone = hull;
    vc.horospherical = hull.span_eqs.empty() && hull.facets.empty();
    if (vc.horospherical) return vc;

    // spherical roots: outward primitive facet normals of the hull
    if (!hull.span_eqs.empty())
        throw MathError("valuation cone: not full-dimensional in N_Q");
    for (const Vec& f_in : hull.facets) vc.roots.push_back(negate_vec(f_in));
    std::sort(vc.roots.begin(), vc.roots.end(), lex_less);
    for (const Vec& g : vc.roots)
        if (!is_primitive(g)) throw MathError("valuation cone: non-primitive facet normal");
    Mat root_rows(vc.roots.begin(), vc.roots.end());
    if (rational_rank(root_rows) != vc.roots.size())
        throw MathError("valuation cone: spherical roots are linearly dependent");
    return vc;
}

bool ray_in_valuation_cone(const ValuationCone& vc, const Vec& u) {
    return vc.cone.contains(u);
}

} // namespace sphcox
