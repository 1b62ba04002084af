#include "sphcox/cone.hpp"

#include <algorithm>

#include "sphcox/errors.hpp"

namespace sphcox {

namespace {

struct GeneratorPair {
    std::vector<Vec> rays;       // primitive, deduped; may contain non-extreme junk
    std::vector<Vec> lineality;  // linearly independent spanning set
};

// dim of the common rational kernel of the given covectors
std::size_t kernel_dim(const std::vector<Vec>& rows_list, std::size_t dim) {
    if (rows_list.empty()) return dim;
    Mat m(rows_list.begin(), rows_list.end());
    return dim - rational_rank(m);
}

void sort_unique(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// One double-description sweep.  State invariant after each constraint:
//   current cone = cone(R) + span(L),  L = lineality of the current cone
//   (exactly the common kernel of all processed constraints).
// R may accumulate non-extreme generators; callers canonicalize afterwards.
GeneratorPair double_description(std::size_t dim, const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs) {
    std::vector<Vec> constraints;
    for (const Vec& e : eqs) {
        if (e.size() != dim) throw InputError("cone: constraint dimension mismatch");
        if (is_zero_vec(e)) continue;
        constraints.push_back(e);
        constraints.push_back(negate_vec(e));
    }
    for (const Vec& a : ineqs) {
        if (a.size() != dim) throw InputError("cone: constraint dimension mismatch");
        if (is_zero_vec(a)) continue;
        constraints.push_back(a);
    }

    std::vector<Vec> L;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim, 0);
        e[i] = 1;
        L.push_back(e);
    }
    std::vector<Vec> R;
    std::vector<Vec> processed;

    for (const Vec& a : constraints) {
        // If the lineality sticks out of {a >= 0}, fold it: one generator l0
        // becomes a ray, the rest of L is projected along l0 into {a = 0},
        // and existing rays are shifted by l0 to land in {a = 0}.
        std::size_t hit = L.size();
        for (std::size_t i = 0; i < L.size(); ++i)
            if (dot(a, L[i]) != 0) {
                hit = i;
                break;
            }
        if (hit < L.size()) {
            Vec l0 = L[hit];
            Int al0 = dot(a, l0);
            if (al0 < 0) {
                l0 = negate_vec(l0);
                al0 = -al0;
            }
            std::vector<Vec> new_l;
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (i == hit) continue;
                new_l.push_back(primitive_part(combine(al0, L[i], -dot(a, L[i]), l0)));
            }
            for (Vec& r : R) r = primitive_part(combine(al0, r, -dot(a, r), l0));
            L = std::move(new_l);
            R.push_back(l0);
            sort_unique(R);
            processed.push_back(a);
            continue;
        }

        // a vanishes on L: classify rays and combine across the hyperplane
        std::vector<Vec> pos, zero, neg;
        for (const Vec& r : R) {
            int s = sgn(dot(a, r));
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else zero.push_back(r);
        }
        if (!neg.empty()) {
            std::vector<Vec> next = zero;
            next.insert(next.end(), pos.begin(), pos.end());
            for (const Vec& p : pos)
                for (const Vec& n : neg) {
                    // combine only pairs whose minimal common face is
                    // 2-dimensional modulo the lineality
                    std::vector<Vec> active;
                    for (const Vec& b : processed)
                        if (dot(b, p) == 0 && dot(b, n) == 0) active.push_back(b);
                    if (kernel_dim(active, dim) != L.size() + 2) continue;
                    Vec w = primitive_part(combine(dot(a, p), n, -dot(a, n), p));
                    if (!is_zero_vec(w)) next.push_back(w);
                }
            sort_unique(next);
            R = std::move(next);
        }
        processed.push_back(a);
    }

    GeneratorPair out;
    out.rays = std::move(R);
    out.lineality = std::move(L);
    return out;
}

// Keep exactly the extreme generators: g is extreme iff the minimal face of
// the cone containing g is one-dimensional modulo the lineality.  `normals`
// and `eqs` must be a valid H-description of the cone the gens generate.
std::vector<Vec> extreme_filter(const std::vector<Vec>& gens, std::size_t lin_dim,
                                const std::vector<Vec>& normals, const std::vector<Vec>& eqs,
                                std::size_t dim) {
    std::vector<Vec> out;
    for (const Vec& g : gens) {
        std::vector<Vec> active(eqs.begin(), eqs.end());
        for (const Vec& f : normals)
            if (dot(f, g) == 0) active.push_back(f);
        if (kernel_dim(active, dim) == lin_dim + 1) out.push_back(primitive_part(g));
    }
    sort_unique(out);
    return out;
}

Cone build_from_generators(const FreeLattice& amb, const std::vector<Vec>& gens,
                           const std::vector<Vec>& lin_gens) {
    const std::size_t dim = static_cast<std::size_t>(amb.rank);
    for (const Vec& g : gens)
        if (g.size() != dim) throw InputError("cone: generator dimension mismatch");
    for (const Vec& l : lin_gens)
        if (l.size() != dim) throw InputError("cone: lineality dimension mismatch");

    // dual cone D = {y : <g,y> >= 0, <l,y> = 0}; its lineality spans the
    // orthogonal complement of our span, its extreme rays are our facets
    GeneratorPair dual = double_description(dim, gens, lin_gens);
    std::vector<Vec> span_eqs = saturated_span_basis(dual.lineality, dim);
    std::vector<Vec> facets = extreme_filter(dual.rays, span_eqs.size(), gens, lin_gens, dim);

    // primal pass against the canonical H-description
    GeneratorPair primal = double_description(dim, facets, span_eqs);
    std::vector<Vec> lineality = saturated_span_basis(primal.lineality, dim);
    std::vector<Vec> rays = extreme_filter(primal.rays, lineality.size(), facets, span_eqs, dim);

    Cone c;
    c.ambient = amb;
    c.rays = std::move(rays);
    c.lineality = std::move(lineality);
    c.facets = std::move(facets);
    c.span_eqs = std::move(span_eqs);
    return c;
}

} // namespace

bool Cone::contains(const Vec& x) const {
    if (x.size() != static_cast<std::size_t>(ambient.rank))
        throw InputError("cone: point dimension mismatch");
    for (const Vec& e : span_eqs)
        if (dot(e, x) != 0) return false;
    for (const Vec& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

Cone cone_from_rays(const FreeLattice& ambient, const std::vector<Vec>& ray_gens,
                    const std::vector<Vec>& lineality_gens) {
    return build_from_generators(ambient, ray_gens, lineality_gens);
}

Cone cone_from_inequalities(const FreeLattice& ambient, const std::vector<Vec>& ineqs,
                            const std::vector<Vec>& eqs) {
    GeneratorPair g = double_description(static_cast<std::size_t>(ambient.rank), ineqs, eqs);
    return build_from_generators(ambient, g.rays, g.lineality);
}

Cone cone_full(const FreeLattice& ambient) {
    return cone_from_inequalities(ambient, {}, {});
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient.rank != b.ambient.rank)
        throw InputError("cone: intersect in different ambient lattices");
    std::vector<Vec> ineqs = a.facets;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    std::vector<Vec> eqs = a.span_eqs;
    eqs.insert(eqs.end(), b.span_eqs.begin(), b.span_eqs.end());
    return cone_from_inequalities(a.ambient, ineqs, eqs);
}

Cone face_cut(const Cone& c, const Vec& normal) {
    std::vector<Vec> eqs = c.span_eqs;
    eqs.push_back(normal);
    return cone_from_inequalities(c.ambient, c.facets, eqs);
}

bool is_face(const Cone& f, const Cone& c) {
    if (f.ambient.rank != c.ambient.rank)
        throw InputError("cone: face test in different ambient lattices");
    for (const Vec& r : f.rays)
        if (!c.contains(r)) return false;
    for (const Vec& l : f.lineality) {
        if (!c.contains(l)) return false;
        if (!c.contains(negate_vec(l))) return false;
    }
    // descend through facets that contain f until we either reach f or get
    // stuck: a proper subcone whose minimal enclosing face is the cone itself
    // is not a face
    Cone cur = c;
    for (;;) {
        if (f == cur) return true;
        const Vec* pick = nullptr;
        for (const Vec& g : cur.facets) {
            bool vanishes = true;
            for (const Vec& r : f.rays)
                if (dot(g, r) != 0) {
                    vanishes = false;
                    break;
                }
            if (vanishes)
                for (const Vec& l : f.lineality)
                    if (dot(g, l) != 0) {
                        vanishes = false;
                        break;
                    }
            if (vanishes) {
                pick = &g;
                break;
            }
        }
        if (pick == nullptr) return false;
        cur = face_cut(cur, *pick);
    }
}

std::pair<bool, Cone> intersect_is_face(const Cone& a, const Cone& b) {
    Cone i = intersect(a, b);
    bool ok = is_face(i, a) && is_face(i, b);
    return {ok, std::move(i)};
}

bool is_smooth_cone(const Cone& c) {
    if (!c.lineality.empty()) return false;
    if (c.rays.empty()) return true;
    Mat m(c.rays.begin(), c.rays.end());
    SmithDecomposition s = smith_normal_form(m);
    if (s.rank != static_cast<int>(c.rays.size())) return false;  // not simplicial
    for (int k = 0; k < s.rank; ++k)
        if (s.D[k][k] != 1) return false;  // saturation defect
    return true;
}

HalfspaceDescription dual_halfspaces(const Cone& c) {
    return {c.facets, c.span_eqs};
}

} // namespace sphcox
