#include "sphcox/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "sphcox/brion.hpp"
#include "sphcox/descent.hpp"
#include "sphcox/errors.hpp"
#include "sphcox/fan.hpp"
#include "sphcox/homogenize.hpp"
#include "sphcox/tropical.hpp"

namespace sphcox {

using nlohmann::json;

std::string linear_combo(const Vec& coeffs, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Int mag = abs(coeffs[i]);
        if (out.empty()) {
            if (coeffs[i] < 0) out += "-";
        } else {
            out += coeffs[i] < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += labels.at(i);
    }
    return out.empty() ? "0" : out;
}

std::string halfspace_line(const Vec& outward, const std::vector<std::string>& labels) {
    for (const Int& c : outward) {
        if (c == 0) continue;
        if (c < 0) return linear_combo(negate_vec(outward), labels) + " >= 0";
        break;
    }
    return linear_combo(outward, labels) + " <= 0";
}

namespace {

json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

json json_vec(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

json json_mat(const Mat& m) {
    json a = json::array();
    for (const Vec& row : m) a.push_back(json_vec(row));
    return a;
}

json json_rays(const std::vector<Vec>& rays) {
    json a = json::array();
    for (const Vec& r : rays) a.push_back(json_vec(r));
    return a;
}

// Rays/maps made effective: when descent data is present the embedding and
// bold rays determine each other through the canonical lift, and whichever
// side is missing is filled in (both given -> they must match).
struct Resolved {
    std::vector<Vec> rays;
    std::vector<Vec> bold_rays;
    std::optional<DescentMaps> dm;
};

Resolved resolve(const Problem& p) {
    Resolved out;
    out.rays = p.rays;
    out.bold_rays = p.bold_rays;
    if (!p.bold) return out;

    out.dm = descent_maps(*p.bold);
    validate_relation_weights(p.datum, *p.bold, *out.dm);

    if (p.bold_rays_given) {
        std::vector<Vec> lifted = lift_rays(*p.bold, *out.dm, p.bold_rays);
        if (p.embedding_given) {
            if (lifted != p.rays)
                throw MathError("embedding rays do not match the canonical lift of bold_rays");
        } else {
            out.rays = lifted;
        }
    } else if (p.embedding_given) {
        for (const Vec& u : p.rays) {
            Vec image = mat_vec(out.dm->pushforward, u);
            if (is_zero_vec(image) || !is_primitive(image))
                throw MathError("pushforward of ray " + vec_to_string(u) +
                                " is not a primitive bold ray; the embedding is not a "
                                "canonical lift");
            out.bold_rays.push_back(image);
        }
        validate_bold_rays(*p.bold, out.bold_rays);
    }
    return out;
}

ValuationCone valuation_cone_of(const Problem& p, bool parallel) {
    const SphericalDatum& d = p.datum;
    if (d.relations.empty()) return full_valuation_cone(d);
    if (d.relations.size() > 1)
        throw UnsupportedError("the valuation cone is only computed for a principal ideal (" +
                               std::to_string(d.relations.size()) + " relations given)");
    return valuation_cone(d, d.relations.front(), parallel);
}

void append_warnings(std::ostringstream& out, json& j, const std::vector<std::string>& warnings) {
    j["warnings"] = json::array();
    for (const std::string& w : warnings) {
        out << "warning: " << w << "\n";
        j["warnings"].push_back(w);
    }
}

Report cmd_cox(const Problem& p, const ReportOptions& opts) {
    Resolved rs = resolve(p);
    CoxOptions copts;
    copts.allow_outside_valuation_cone = opts.allow_outside_valuation_cone;
    copts.parallel = opts.parallel;
    CoxPresentation cp = cox_presentation(p.datum, rs.rays, p.bold, rs.bold_rays, copts);

    std::ostringstream out;
    json j;
    j["command"] = "cox";
    out << "command: cox\n";
    out << "ring variables: " << cp.ring->joined_names() << "\n";
    j["ring"] = json::array();
    for (const Var& v : cp.ring->vars()) j["ring"].push_back(v.name());

    j["relations"] = json::array();
    if (cp.relations.empty()) {
        out << "relations: (none); free polynomial ring\n";
    } else {
        out << "relations:\n";
        for (const LaurentPoly& f : cp.relations) {
            out << "  " << f.to_string() << "\n";
            j["relations"].push_back(f.to_string());
        }
    }

    out << "Cl = " << cp.class_group.shape().to_string() << "\n";
    j["class_group"] = cp.class_group.shape().to_string();
    j["degrees"] = json::array();
    for (std::size_t k = 0; k < cp.ring->size(); ++k) {
        std::string deg = cp.class_group.element_string(cp.degrees.at(k));
        out << "deg " << cp.ring->at(k).name() << " = " << deg << "\n";
        j["degrees"].push_back({{"var", cp.ring->at(k).name()}, {"degree", deg}});
    }
    out << "factorial = " << (cp.factorial ? "true" : "false") << "\n";
    j["factorial"] = cp.factorial;
    j["generating_guaranteed"] = cp.generating_guaranteed;
    append_warnings(out, j, cp.warnings);
    return {out.str(), std::move(j), 0};
}

Report cmd_valcone(const Problem& p, const ReportOptions& opts) {
    ValuationCone vc = valuation_cone_of(p, opts.parallel);
    const std::vector<std::string>& labels = weight_lattice(p.datum).basis_labels;

    std::ostringstream out;
    json j;
    j["command"] = "valcone";
    out << "command: valcone\n";
    j["horospherical"] = vc.horospherical;
    j["halfspaces"] = json::array();
    j["facet_normals"] = json_rays(vc.roots);
    if (vc.horospherical) {
        out << "V = N_Q\n";
    } else {
        out << "valuation cone in N_Q:\n";
        for (const Vec& g : vc.roots) {
            std::string line = halfspace_line(g, labels);
            out << "  " << line << "\n";
            j["halfspaces"].push_back(line);
        }
    }
    std::size_t lin = vc.cone.lineality.size();
    out << "lineality rank = " << lin << "\n";
    out << "horospherical = " << (vc.horospherical ? "true" : "false") << "\n";
    j["lineality_rank"] = lin;
    return {out.str(), std::move(j), 0};
}

Report cmd_roots(const Problem& p, const ReportOptions& opts) {
    ValuationCone vc = valuation_cone_of(p, opts.parallel);
    const std::vector<std::string>& labels = weight_lattice(p.datum).basis_labels;

    std::ostringstream out;
    json j;
    j["command"] = "roots";
    out << "command: roots\n";
    j["roots"] = json_rays(vc.roots);
    j["root_strings"] = json::array();
    if (vc.roots.empty()) {
        out << "spherical roots: (none)\n";
    } else {
        out << "spherical roots:\n";
        for (const Vec& g : vc.roots) {
            std::string s = linear_combo(g, labels);
            out << "  " << s << "\n";
            j["root_strings"].push_back(s);
        }
    }
    out << "count = " << vc.roots.size() << "\n";
    j["count"] = vc.roots.size();
    j["horospherical"] = vc.horospherical;
    return {out.str(), std::move(j), 0};
}

void fan_section(std::ostringstream& out, json& jfans, const std::string& name, const Fan& fan,
                 const FanCheckReport& rep) {
    out << "fan in " << name << ": " << rep.cone_count << " maximal cones";
    if (rep.cone_count > 0 && rep.cone_dim >= 0)
        out << " of dimension " << rep.cone_dim;
    out << "\n";
    out << "  all cones smooth: " << (rep.non_smooth.empty() ? "yes" : "no") << "\n";
    out << "  pairwise intersections are faces: " << (rep.bad_pairs.empty() ? "yes" : "no") << "\n";
    for (std::size_t idx : rep.non_smooth)
        out << "  non-smooth: " << fan.labels.at(idx) << "\n";
    for (const auto& [a, b] : rep.bad_pairs)
        out << "  bad pair: " << fan.labels.at(a) << " | " << fan.labels.at(b) << "\n";

    json jf;
    jf["name"] = name;
    jf["cone_count"] = rep.cone_count;
    jf["cone_dim"] = rep.cone_dim;
    jf["smooth"] = rep.non_smooth.empty();
    jf["compatible"] = rep.bad_pairs.empty();
    jf["non_smooth"] = json::array();
    for (std::size_t idx : rep.non_smooth) jf["non_smooth"].push_back(fan.labels.at(idx));
    jf["bad_pairs"] = json::array();
    for (const auto& [a, b] : rep.bad_pairs)
        jf["bad_pairs"].push_back(json::array({fan.labels.at(a), fan.labels.at(b)}));
    jfans.push_back(std::move(jf));
}

Report cmd_fan_check(const Problem& p, const ReportOptions& opts) {
    Resolved rs = resolve(p);
    Fan fan = fan_of_embedding(p.datum, rs.rays);
    Fan hat = lifted_fan(p.datum, rs.rays);
    FanCheckReport rep = verify_fan(fan, opts.parallel);
    FanCheckReport hat_rep = verify_fan(hat, opts.parallel);

    std::ostringstream out;
    json j;
    j["command"] = "fan-check";
    out << "command: fan-check\n";
    json jfans = json::array();
    fan_section(out, jfans, "N", fan, rep);
    fan_section(out, jfans, "N-hat", hat, hat_rep);
    j["fans"] = std::move(jfans);
    bool ok = rep.ok() && hat_rep.ok();
    out << "result: " << (ok ? "ok" : "FAIL") << "\n";
    j["ok"] = ok;
    return {out.str(), std::move(j), ok ? 0 : 3};
}

Report cmd_clgroup(const Problem& p, const ReportOptions&) {
    Resolved rs = resolve(p);

    std::ostringstream out;
    json j;
    j["command"] = "clgroup";
    out << "command: clgroup\n";

    ClassGroupData cl;
    std::size_t color_count, ray_count;
    if (p.bold) {
        cl = class_group_bold(*p.bold, rs.bold_rays);
        color_count = static_cast<std::size_t>(p.bold->rbar);
        ray_count = rs.bold_rays.size();
    } else {
        cl = class_group_plain(p.datum, rs.rays);
        color_count = static_cast<std::size_t>(p.datum.r);
        ray_count = rs.rays.size();
    }
    out << "Cl = " << cl.shape().to_string() << "\n";
    j["class_group"] = cl.shape().to_string();
    j["degrees"] = json::array();
    for (std::size_t k = 0; k < color_count + ray_count; ++k) {
        std::string label = k < color_count ? "D" + std::to_string(k + 1)
                                            : "Y" + std::to_string(k - color_count + 1);
        std::string deg = cl.element_string(cl.class_of_basis(k));
        out << "deg " << label << " = " << deg << "\n";
        j["degrees"].push_back({{"var", label}, {"degree", deg}});
    }
    if (p.bold) {
        AbelianGroup pic = pic_g_group(*p.bold);
        out << "Pic_G = " << pic.to_string() << "\n";
        j["pic_g"] = pic.to_string();
    }
    return {out.str(), std::move(j), 0};
}

Report cmd_lift(const Problem& p, const ReportOptions& opts) {
    if (!p.bold)
        throw InputError("lift requires a [bold] section");
    Resolved rs = resolve(p);
    const BoldDatum& b = *p.bold;
    const DescentMaps& dm = *rs.dm;

    FreeLattice nbar = bold_covaluation_lattice(b);
    FreeLattice mubar = bold_weight_lattice(b);
    FreeLattice cov = covaluation_lattice(p.datum);

    std::ostringstream out;
    json j;
    j["command"] = "lift";
    out << "command: lift\n";

    out << "torus weight basis in Z^(rbar+xc):\n";
    j["torus_weight_basis"] = json_rays(dm.torus_weight_basis);
    for (std::size_t k = 0; k < dm.torus_weight_basis.size(); ++k)
        out << "  b" << k + 1 << " = " << vec_to_string(dm.torus_weight_basis[k]) << "\n";

    out << "Gamma:\n";
    j["gamma"] = json_mat(dm.transition);
    for (const Vec& row : dm.transition) {
        out << "  [";
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << row[c].get_str();
        out << "]\n";
    }

    out << "pushforward:\n";
    j["pushforward"] = json_mat(dm.pushforward);
    for (std::size_t col = 0; col < cov.basis_labels.size(); ++col) {
        Vec image(dm.pushforward.size());
        for (std::size_t row = 0; row < dm.pushforward.size(); ++row)
            image[row] = dm.pushforward[row][col];
        out << "  pi(" << cov.basis_labels[col] << ") = " << linear_combo(image, nbar.basis_labels)
            << "\n";
    }

    j["lifted_rays"] = json_rays(rs.rays);
    if (rs.rays.empty()) {
        out << "lifted rays in N: (none)\n";
    } else {
        out << "lifted rays in N:\n";
        for (const Vec& u : rs.rays)
            out << "  " << linear_combo(u, cov.basis_labels) << "\n";
    }

    out << "relation torus weights: consistent\n";

    if (p.datum.relations.size() > 1) {
        out << "descended valuation cone: (skipped; ideal not principal)\n";
        j["descended"] = nullptr;
    } else {
        ValuationCone vc = valuation_cone_of(p, opts.parallel);
        Cone down = descend_cone(b, dm, vc.cone);
        j["descended"] = json();
        j["descended"]["halfspaces"] = json::array();
        if (down.facets.empty() && down.span_eqs.empty()) {
            out << "descended valuation cone: all of Nbar_Q\n";
        } else {
            out << "descended valuation cone:\n";
            for (const Vec& f : down.facets) {
                std::string line = halfspace_line(negate_vec(f), mubar.basis_labels);
                out << "  " << line << "\n";
                j["descended"]["halfspaces"].push_back(line);
            }
            for (const Vec& e : down.span_eqs) {
                std::string line = linear_combo(e, mubar.basis_labels) + " = 0";
                out << "  " << line << "\n";
                j["descended"]["halfspaces"].push_back(line);
            }
        }
        j["descended"]["lineality_rank"] = down.lineality.size();
    }
    return {out.str(), std::move(j), 0};
}

Report cmd_brion_compare(const Problem& p, const ReportOptions& opts) {
    if (!p.wonderful)
        throw InputError("brion-compare requires a [wonderful] section");
    Resolved rs = resolve(p);
    const WonderfulPresentation& w = *p.wonderful;

    // The declared roots must be exactly the spherical roots of the datum.
    ValuationCone vc = valuation_cone_of(p, opts.parallel);
    std::vector<Vec> declared = w.roots, computed = vc.roots;
    std::sort(declared.begin(), declared.end(), lex_less);
    std::sort(computed.begin(), computed.end(), lex_less);
    if (declared != computed)
        throw MathError("the declared roots do not match the spherical roots of the space");

    CoxOptions copts;
    copts.allow_outside_valuation_cone = opts.allow_outside_valuation_cone;
    copts.parallel = opts.parallel;
    CoxPresentation cox = cox_presentation(p.datum, rs.rays, p.bold, rs.bold_rays, copts);
    TensorPresentation tensor = tensor_presentation(w, rs.rays);

    std::vector<Vec> subs = z_substitution(w.roots, rs.rays);

    std::string detail;
    bool agree = presentations_agree(cox, tensor, &detail);

    std::ostringstream out;
    json j;
    j["command"] = "brion-compare";
    out << "command: brion-compare\n";

    j["substitution"] = json::array();
    if (subs.empty()) {
        out << "substitution: (no sections)\n";
    } else {
        out << "substitution:\n";
        for (std::size_t i = 0; i < subs.size(); ++i) {
            Vec exps(tensor.ring->size(), Int(0));
            std::size_t w_offset = tensor.ring->size() - subs[i].size();
            for (std::size_t l = 0; l < subs[i].size(); ++l) exps[w_offset + l] = subs[i][l];
            LaurentPoly mono = LaurentPoly::monomial(tensor.ring, exps, 1);
            out << "  Z[" << i + 1 << "] -> " << mono.to_string() << "\n";
            j["substitution"].push_back(mono.to_string());
        }
    }

    j["cox_relations"] = json::array();
    out << "cox relations:\n";
    for (const LaurentPoly& f : cox.relations) {
        out << "  " << f.to_string() << "\n";
        j["cox_relations"].push_back(f.to_string());
    }
    j["tensor_relations"] = json::array();
    out << "tensor relations:\n";
    for (const LaurentPoly& f : tensor.relations) {
        out << "  " << f.to_string() << "\n";
        j["tensor_relations"].push_back(f.to_string());
    }
    out << "result: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    if (!agree && !detail.empty()) out << detail;
    j["agree"] = agree;
    return {out.str(), std::move(j), agree ? 0 : 3};
}

} // namespace

Report run_command(const std::string& command, const Problem& p, const ReportOptions& opts) {
    if (command == "cox") return cmd_cox(p, opts);
    if (command == "valcone") return cmd_valcone(p, opts);
    if (command == "roots") return cmd_roots(p, opts);
    if (command == "fan-check") return cmd_fan_check(p, opts);
    if (command == "clgroup") return cmd_clgroup(p, opts);
    if (command == "lift") return cmd_lift(p, opts);
    if (command == "brion-compare") return cmd_brion_compare(p, opts);
    throw InputError("unknown command '" + command + "'");
}

} // namespace sphcox
