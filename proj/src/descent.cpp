#include "sphcox/descent.hpp"

#include "sphcox/errors.hpp"

namespace sphcox {

namespace {

// exact integer solve A x = b; throws when no integral solution exists
Vec solve_integral(const Mat& a, const Vec& b, const char* what) {
    auto x = solve_rational(a, b);
    if (!x) throw MathError(std::string(what) + ": system is inconsistent");
    Vec out;
    for (const Rat& q : *x) {
        if (q.get_den() != 1)
            throw MathError(std::string(what) + ": solution is not integral");
        out.push_back(q.get_num());
    }
    return out;
}

} // namespace

DescentMaps descent_maps(const BoldDatum& b) {
    DescentMaps m;
    const std::size_t h = static_cast<std::size_t>(b.rbar + b.xc_rank);
    m.gamma_columns = zero_matrix(h, b.mbar);
    for (int j = 0; j < b.mbar; ++j) {
        for (int i = 0; i < b.rbar; ++i) m.gamma_columns[i][j] = -b.d_matrix[i][j];
        for (int i = 0; i < b.xc_rank; ++i)
            m.gamma_columns[b.rbar + i][j] = b.mu_restriction[i][j];
    }

    std::vector<Vec> cols;
    for (int j = 0; j < b.mbar; ++j) {
        Vec c(h);
        for (std::size_t i = 0; i < h; ++i) c[i] = m.gamma_columns[i][j];
        cols.push_back(c);
    }
    m.torus_weight_basis = lattice_basis_hnf(cols, h);
    if (m.torus_weight_basis.size() != static_cast<std::size_t>(b.mbar))
        throw MathError("descent: torus weights are linearly dependent; "
                        "the character map does not identify the lift torus");

    // B * Gamma = C with B the canonical basis as columns
    Mat basis_cols = zero_matrix(h, b.mbar);
    for (int k = 0; k < b.mbar; ++k)
        for (std::size_t i = 0; i < h; ++i) basis_cols[i][k] = m.torus_weight_basis[k][i];
    m.transition = zero_matrix(b.mbar, b.mbar);
    for (int j = 0; j < b.mbar; ++j) {
        Vec c(h);
        for (std::size_t i = 0; i < h; ++i) c[i] = m.gamma_columns[i][j];
        Vec g = solve_integral(basis_cols, c, "descent: expressing gamma in the basis");
        for (int k = 0; k < b.mbar; ++k) m.transition[k][j] = g[k];
    }
    Int det = determinant(m.transition);
    if (det != 1 && det != -1)
        throw MathError("descent: transition matrix is not unimodular");

    m.pullback = zero_matrix(b.rbar + b.mbar, b.mbar);
    for (int i = 0; i < b.rbar; ++i)
        for (int j = 0; j < b.mbar; ++j) m.pullback[i][j] = b.d_matrix[i][j];
    for (int k = 0; k < b.mbar; ++k)
        for (int j = 0; j < b.mbar; ++j) m.pullback[b.rbar + k][j] = m.transition[k][j];
    m.pushforward = transpose(m.pullback);
    return m;
}

FreeLattice bold_covaluation_lattice(const BoldDatum& b) {
    std::vector<std::string> labels;
    for (int k = 1; k <= b.mbar; ++k) labels.push_back("nbar" + std::to_string(k));
    return FreeLattice(b.mbar, std::move(labels));
}

FreeLattice bold_weight_lattice(const BoldDatum& b) {
    std::vector<std::string> labels;
    for (int k = 1; k <= b.mbar; ++k) labels.push_back("mubar" + std::to_string(k));
    return FreeLattice(b.mbar, std::move(labels));
}

std::vector<Vec> lift_rays(const BoldDatum& b, const DescentMaps& m,
                           const std::vector<Vec>& bold_rays) {
    validate_bold_rays(b, bold_rays);
    Mat gt = transpose(m.transition);
    std::vector<Vec> out;
    for (const Vec& ubar : bold_rays) {
        Vec c = solve_integral(gt, ubar, "descent: lifting a ray");
        Vec u(static_cast<std::size_t>(b.rbar + b.mbar), 0);
        for (int k = 0; k < b.mbar; ++k) u[b.rbar + k] = c[k];
        if (!is_primitive(u)) throw MathError("descent: lifted ray is not primitive");
        out.push_back(u);
    }
    return out;
}

Cone descend_cone(const BoldDatum& b, const DescentMaps& m, const Cone& vcone) {
    if (vcone.ambient.rank != b.rbar + b.mbar)
        throw InputError("descent: valuation cone lives in the wrong lattice");
    FreeLattice nbar = bold_covaluation_lattice(b);
    std::vector<Vec> gens, lin;
    for (const Vec& r : vcone.rays) gens.push_back(mat_vec(m.pushforward, r));
    for (const Vec& l : vcone.lineality) lin.push_back(mat_vec(m.pushforward, l));
    Cone image = cone_from_rays(nbar, gens, lin);

    // round trip: the preimage of the image must be exactly the cone (the
    // pushforward is surjective, so this certifies no information was lost)
    Mat pt = transpose(m.pushforward);
    std::vector<Vec> pulled_ineqs, pulled_eqs;
    for (const Vec& f : image.facets) pulled_ineqs.push_back(mat_vec(pt, f));
    for (const Vec& e : image.span_eqs) pulled_eqs.push_back(mat_vec(pt, e));
    Cone back = cone_from_inequalities(vcone.ambient, pulled_ineqs, pulled_eqs);
    if (!(back == vcone))
        throw MathError("descent: valuation cone does not descend exactly "
                        "(preimage of the image differs from the cone)");
    return image;
}

void validate_relation_weights(const SphericalDatum& d, const BoldDatum& b,
                               const DescentMaps& m) {
    if (b.rbar != d.r)
        throw InputError("bold: d_matrix must have one row per section block");
    if (b.mbar != d.m)
        throw InputError("bold: character rank must equal the torus rank of the space");
    const std::size_t h = static_cast<std::size_t>(b.rbar + b.xc_rank);
    const VarTable& tab = *d.space_table;
    for (const LaurentPoly& f : d.relations) {
        bool first = true;
        Vec ref;
        for (const auto& [e, c] : f.terms()) {
            Vec theta(h, 0);
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                const Var& v = tab.at(k);
                if (v.kind == VarKind::S) {
                    theta[v.i - 1] += e[k];
                } else {
                    const Vec& bk = m.torus_weight_basis[v.i - 1];
                    for (std::size_t i = 0; i < h; ++i) theta[i] += e[k] * bk[i];
                }
            }
            if (first) {
                ref = theta;
                first = false;
            } else if (theta != ref) {
                throw MathError("bold: relation monomials have different torus weights; "
                                "the datum does not descend: " + f.to_string());
            }
        }
    }
}

} // namespace sphcox
