#include "sphcox/brion.hpp"

#include <algorithm>
#include <memory>

#include "sphcox/errors.hpp"
#include "sphcox/parser.hpp"

namespace sphcox {

namespace {

Var parse_var_name(const std::string& name) {
    // reuse the polynomial parser on a one-variable table probe: cheaper to
    // split by hand since the shape is KIND '[' i (',' j)? ']'
    if (name.size() < 4) throw InputError("wonderful: bad variable name: " + name);
    auto kind = kind_from_letter(name[0]);
    if (!kind || name[1] != '[' || name.back() != ']')
        throw InputError("wonderful: bad variable name: " + name);
    std::string inner = name.substr(2, name.size() - 3);
    Var v;
    v.kind = *kind;
    std::size_t comma = inner.find(',');
    try {
        if (comma == std::string::npos) {
            v.i = std::stoi(inner);
        } else {
            v.i = std::stoi(inner.substr(0, comma));
            v.j = std::stoi(inner.substr(comma + 1));
            v.two_index = true;
        }
    } catch (const std::exception&) {
        throw InputError("wonderful: bad variable name: " + name);
    }
    if (v.i < 1 || (v.two_index && v.j < 1))
        throw InputError("wonderful: variable indices must be positive: " + name);
    return v;
}

} // namespace

WonderfulPresentation make_wonderful(const std::vector<std::string>& var_names,
                                     const std::vector<std::string>& z_section_strings,
                                     std::vector<Vec> roots,
                                     const std::vector<std::string>& relation_strings,
                                     int weight_rank) {
    WonderfulPresentation w;
    std::vector<Var> vars;
    for (const std::string& s : var_names) {
        Var v = parse_var_name(s);
        if (v.kind == VarKind::W)
            throw InputError("wonderful: section variables may not use the W family");
        vars.push_back(v);
    }
    w.ring = std::make_shared<VarTable>(std::move(vars));
    for (const std::string& s : z_section_strings) {
        LaurentPoly p = parse_poly(s, w.ring);
        if (p.is_zero()) throw InputError("wonderful: zero boundary section: " + s);
        w.z_sections.push_back(std::move(p));
    }
    for (const Vec& g : roots)
        if (g.size() != static_cast<std::size_t>(weight_rank))
            throw InputError("wonderful: root dimension must be r+m");
    w.roots = std::move(roots);
    if (w.roots.size() != w.z_sections.size())
        throw InputError("wonderful: need exactly one root per boundary section");
    for (const std::string& s : relation_strings)
        w.relations.push_back(parse_poly(s, w.ring));
    return w;
}

std::vector<Vec> z_substitution(const std::vector<Vec>& roots, const std::vector<Vec>& rays) {
    std::vector<Vec> exps;
    for (const Vec& g : roots) {
        Vec e(rays.size());
        for (std::size_t l = 0; l < rays.size(); ++l) {
            e[l] = -dot(rays[l], g);
            if (e[l] < 0)
                throw MathError("boundary substitution: ray " + vec_to_string(rays[l]) +
                                " pairs positively with root " + vec_to_string(g) +
                                " (outside the valuation cone)");
        }
        exps.push_back(e);
    }
    return exps;
}

TensorPresentation tensor_presentation(const WonderfulPresentation& w,
                                       const std::vector<Vec>& rays) {
    const std::size_t n = rays.size();
    std::vector<Var> vars = w.ring->vars();
    for (std::size_t l = 1; l <= n; ++l)
        vars.push_back(Var{VarKind::W, static_cast<int>(l), 0, false});
    TensorPresentation t;
    t.ring = std::make_shared<VarTable>(std::move(vars));

    std::vector<std::size_t> inject(w.ring->size());
    for (std::size_t k = 0; k < w.ring->size(); ++k) inject[k] = k;

    for (const LaurentPoly& f : w.relations)
        t.relations.push_back(f.remapped(t.ring, inject));

    std::vector<Vec> wexps = z_substitution(w.roots, rays);
    for (std::size_t i = 0; i < w.z_sections.size(); ++i) {
        Vec mono(t.ring->size(), 0);
        for (std::size_t l = 0; l < n; ++l) mono[w.ring->size() + l] = wexps[i][l];
        LaurentPoly rel = w.z_sections[i].remapped(t.ring, inject) -
                          LaurentPoly::monomial(t.ring, mono, 1);
        t.relations.push_back(std::move(rel));
    }
    return t;
}

bool presentations_agree(const CoxPresentation& cox, const TensorPresentation& tensor,
                         std::string* detail) {
    // split both rings into non-W and W parts
    std::vector<std::size_t> cox_nonw, cox_w;
    for (std::size_t k = 0; k < cox.ring->size(); ++k)
        (cox.ring->at(k).kind == VarKind::W ? cox_w : cox_nonw).push_back(k);
    std::vector<std::size_t> ten_nonw, ten_w;
    for (std::size_t k = 0; k < tensor.ring->size(); ++k)
        (tensor.ring->at(k).kind == VarKind::W ? ten_w : ten_nonw).push_back(k);

    if (cox_nonw.size() != ten_nonw.size() || cox_w.size() != ten_w.size()) {
        if (detail) *detail = "variable counts differ between the presentations";
        return false;
    }
    const std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(cox.ring->size(), npos);
    for (std::size_t k = 0; k < cox_nonw.size(); ++k) map[cox_nonw[k]] = ten_nonw[k];
    for (std::size_t k = 0; k < cox_w.size(); ++k) {
        // match W[l] by index, not position
        const Var& cw = cox.ring->at(cox_w[k]);
        auto idx = tensor.ring->find(cw);
        if (!idx) {
            if (detail) *detail = "missing variable " + cw.name() + " in the tensor ring";
            return false;
        }
        map[cox_w[k]] = *idx;
    }

    std::vector<std::string> a, b;
    for (const LaurentPoly& f : cox.relations)
        a.push_back(f.remapped(tensor.ring, map).to_string());
    for (const LaurentPoly& f : tensor.relations) b.push_back(f.to_string());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return true;
    if (detail) {
        *detail = "relation multisets differ";
        for (const std::string& s : a) *detail += "\n  cox:    " + s;
        for (const std::string& s : b) *detail += "\n  tensor: " + s;
    }
    return false;
}

} // namespace sphcox
