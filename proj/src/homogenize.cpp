#include "sphcox/homogenize.hpp"

#include <memory>

#include "sphcox/errors.hpp"
#include "sphcox/tropical.hpp"

namespace sphcox {

Int ord_along(const SphericalDatum& d, const LaurentPoly& f, const Vec& u) {
    if (f.is_zero()) throw InputError("ord: zero polynomial has no order");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : f.terms()) {
        Int v = dot(u, monomial_weight(d, e));
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

namespace {

std::vector<Var> space_vars_plus_w(const SphericalDatum& d, std::size_t n, bool keep_t) {
    std::vector<Var> vars;
    for (const Var& v : d.space_table->vars())
        if (keep_t || v.kind != VarKind::T) vars.push_back(v);
    for (std::size_t l = 1; l <= n; ++l)
        vars.push_back(Var{VarKind::W, static_cast<int>(l), 0, false});
    return vars;
}

} // namespace

VarTablePtr alpha_table(const SphericalDatum& d, std::size_t n) {
    return std::make_shared<VarTable>(space_vars_plus_w(d, n, true));
}

VarTablePtr cox_table(const SphericalDatum& d, std::size_t n) {
    return std::make_shared<VarTable>(space_vars_plus_w(d, n, false));
}

LaurentPoly alpha_homogenize(const SphericalDatum& d, const LaurentPoly& f,
                             const std::vector<Vec>& rays) {
    if (!(*f.table() == *d.space_table))
        throw InputError("alpha: polynomial is not over the space variables");
    if (f.is_zero()) throw InputError("alpha: zero polynomial");
    const std::size_t n = rays.size();
    VarTablePtr out_table = alpha_table(d, n);
    const std::size_t base = d.space_table->size();

    std::vector<Int> ord(n);
    for (std::size_t l = 0; l < n; ++l) ord[l] = ord_along(d, f, rays[l]);

    LaurentPoly out(out_table);
    for (const auto& [e, c] : f.terms()) {
        Vec ne(out_table->size(), 0);
        for (std::size_t k = 0; k < base; ++k) ne[k] = e[k];
        Vec w = monomial_weight(d, e);
        for (std::size_t l = 0; l < n; ++l) ne[base + l] = dot(rays[l], w) - ord[l];
        out.add_term(ne, c);
    }
    return out;
}

LaurentPoly beta_collapse(const SphericalDatum& d, const LaurentPoly& g, std::size_t n) {
    VarTablePtr expect = alpha_table(d, n);
    if (!(*g.table() == *expect))
        throw InputError("beta: polynomial is not over the S/T/W variables");
    std::vector<bool> drop(expect->size(), false);
    for (std::size_t k = 0; k < expect->size(); ++k)
        drop[k] = expect->at(k).kind == VarKind::T;
    return g.collapse_to_one(cox_table(d, n), drop);
}

LaurentPoly homogenize(const SphericalDatum& d, const LaurentPoly& f,
                       const std::vector<Vec>& rays) {
    LaurentPoly h = beta_collapse(d, alpha_homogenize(d, f, rays), rays.size());
    if (h.is_zero())
        throw MathError("homogenize: relation collapses to zero after inverting the torus");
    for (const auto& [e, c] : h.terms())
        for (const Int& x : e)
            if (x < 0)
                throw MathError("homogenize: negative exponent survived; "
                                "datum violates the order bound");
    return h;
}

CoxPresentation cox_presentation(const SphericalDatum& d, const std::vector<Vec>& rays,
                                 const std::optional<BoldDatum>& bold,
                                 const std::vector<Vec>& bold_rays, const CoxOptions& opts) {
    validate_rays(d, rays);
    const std::size_t n = rays.size();

    CoxPresentation pres;
    pres.ring = cox_table(d, n);
    pres.factorial = d.h_connected;

    // valuation-cone membership of the rays (only determined for principal
    // or empty relation sets)
    if (d.relations.size() <= 1) {
        ValuationCone vc = d.relations.empty()
                               ? full_valuation_cone(d)
                               : valuation_cone(d, d.relations[0], opts.parallel);
        for (const Vec& u : rays) {
            if (ray_in_valuation_cone(vc, u)) continue;
            std::string msg = "ray " + vec_to_string(u) + " lies outside the valuation cone";
            if (!opts.allow_outside_valuation_cone)
                throw MathError(msg + " (pass --allow-outside-valuation-cone to force)");
            pres.warnings.push_back(msg + "; presentation is formal");
        }
    } else {
        pres.generating_guaranteed = false;
        pres.warnings.push_back(
            "ideal is not principal; homogenized relations are "
            "computed generator by generator and are not guaranteed to "
            "generate the Cox-ring ideal");
        pres.warnings.push_back(
            "valuation-cone membership of the rays was not checked "
            "(not implemented for non-principal ideals)");
    }

    for (const LaurentPoly& f : d.relations)
        pres.relations.push_back(homogenize(d, f, rays));

    // grading
    if (bold) {
        if (bold->rbar != d.r)
            throw InputError("bold: d_matrix must have one row per section block");
        pres.class_group = class_group_bold(*bold, bold_rays);
    } else {
        pres.class_group = class_group_plain(d, rays);
    }

    for (std::size_t k = 0; k < pres.ring->size(); ++k) {
        const Var& v = pres.ring->at(k);
        std::size_t idx = v.kind == VarKind::S
                              ? static_cast<std::size_t>(v.i - 1)
                              : static_cast<std::size_t>(d.r + v.i - 1);
        pres.degrees.push_back(pres.class_group.class_of_basis(idx));
    }

    // every relation must be homogeneous for the grading
    for (const LaurentPoly& h : pres.relations) {
        bool first = true;
        ClassElement deg = pres.class_group.zero_element();
        for (const auto& [e, c] : h.terms()) {
            ClassElement t = pres.class_group.zero_element();
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) t = pres.class_group.add(t, pres.class_group.scale(e[k], pres.degrees[k]));
            if (first) {
                deg = t;
                first = false;
            } else if (!(t == deg)) {
                throw MathError("relation is not homogeneous for the class-group grading: " +
                                h.to_string());
            }
        }
    }
    return pres;
}

} // namespace sphcox
