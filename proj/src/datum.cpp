#include "sphcox/datum.hpp"

#include <algorithm>
#include <memory>

#include "sphcox/errors.hpp"
#include "sphcox/parser.hpp"

namespace sphcox {

int SphericalDatum::total_block_size() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

SphericalDatum make_spherical_datum(int r, std::vector<int> dims, int m, bool h_connected,
                                    const std::vector<std::string>& relation_strings) {
    if (r < 0 || m < 0) throw InputError("space: r and m must be nonnegative");
    if (dims.size() != static_cast<std::size_t>(r))
        throw InputError("space: dims must list exactly r block sizes");
    for (int s : dims)
        if (s < 1) throw InputError("space: block sizes must be positive");

    std::vector<Var> vars;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= dims[i - 1]; ++j)
            vars.push_back(Var{VarKind::S, i, j, true});
    for (int k = 1; k <= m; ++k) vars.push_back(Var{VarKind::T, k, 0, false});

    SphericalDatum d;
    d.r = r;
    d.dims = std::move(dims);
    d.m = m;
    d.h_connected = h_connected;
    d.space_table = std::make_shared<VarTable>(std::move(vars));

    for (const std::string& s : relation_strings) {
        LaurentPoly f = parse_poly(s, d.space_table);
        if (f.is_zero()) throw InputError("space: relation is identically zero: " + s);
        for (const auto& [e, c] : f.terms())
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] < 0 && d.space_table->at(k).kind != VarKind::T)
                    throw InputError("space: negative exponent on non-torus variable " +
                                     d.space_table->at(k).name() + " in " + s);
        d.relations.push_back(std::move(f));
    }
    return d;
}

namespace {

std::vector<std::string> block_labels(const SphericalDatum& d, const char* v_suffix,
                                      const char* w_suffix) {
    std::vector<std::string> labels;
    for (int i = 1; i <= d.r; ++i) labels.push_back("v" + std::to_string(i) + v_suffix);
    for (int k = 1; k <= d.m; ++k) labels.push_back("w" + std::to_string(k) + w_suffix);
    return labels;
}

} // namespace

FreeLattice weight_lattice(const SphericalDatum& d) {
    return FreeLattice(d.weight_rank(), block_labels(d, "*", "*"));
}

FreeLattice covaluation_lattice(const SphericalDatum& d) {
    return FreeLattice(d.weight_rank(), block_labels(d, "", ""));
}

Vec monomial_weight(const SphericalDatum& d, const Vec& exps) {
    const VarTable& tab = *d.space_table;
    if (exps.size() != tab.size()) throw InputError("weight: exponent vector size mismatch");
    Vec w(d.weight_rank(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        const Var& v = tab.at(k);
        if (v.kind == VarKind::S) w[v.i - 1] += exps[k];
        else if (v.kind == VarKind::T) w[d.r + v.i - 1] += exps[k];
        else throw InputError("weight: unexpected variable kind in space polynomial");
    }
    return w;
}

void validate_rays(const SphericalDatum& d, const std::vector<Vec>& rays) {
    for (const Vec& u : rays) {
        if (u.size() != static_cast<std::size_t>(d.weight_rank()))
            throw InputError("embedding: ray dimension must be r+m = " +
                             std::to_string(d.weight_rank()));
        if (!is_primitive(u))
            throw InputError("embedding: ray is not primitive: " + vec_to_string(u));
    }
    for (std::size_t a = 0; a < rays.size(); ++a)
        for (std::size_t b = a + 1; b < rays.size(); ++b)
            if (rays[a] == rays[b])
                throw InputError("embedding: rays must be pairwise distinct");
}

} // namespace sphcox
