#include "sphcox/classgroup.hpp"

#include "sphcox/errors.hpp"

namespace sphcox {

BoldDatum make_bold_datum(int rbar, int mbar, int xc_rank, Mat d_matrix, Mat mu_restriction) {
    if (rbar < 0 || mbar < 1 || xc_rank < 0)
        throw InputError("bold: need rbar >= 0, mbar >= 1, xc_rank >= 0");
    if (rows(d_matrix) != static_cast<std::size_t>(rbar))
        throw InputError("bold: d_matrix must have rbar rows");
    for (const Vec& row : d_matrix)
        if (row.size() != static_cast<std::size_t>(mbar))
            throw InputError("bold: d_matrix rows must have mbar entries");
    if (rows(mu_restriction) != static_cast<std::size_t>(xc_rank))
        throw InputError("bold: mu_restriction must have xc_rank rows");
    for (const Vec& row : mu_restriction)
        if (row.size() != static_cast<std::size_t>(mbar))
            throw InputError("bold: mu_restriction rows must have mbar entries");
    return BoldDatum{rbar, mbar, xc_rank, std::move(d_matrix), std::move(mu_restriction)};
}

void validate_bold_rays(const BoldDatum& b, const std::vector<Vec>& bold_rays) {
    for (const Vec& u : bold_rays) {
        if (u.size() != static_cast<std::size_t>(b.mbar))
            throw InputError("bold: ray dimension must be mbar = " + std::to_string(b.mbar));
        if (!is_primitive(u))
            throw InputError("bold: ray is not primitive: " + vec_to_string(u));
    }
    for (std::size_t a = 0; a < bold_rays.size(); ++a)
        for (std::size_t c = a + 1; c < bold_rays.size(); ++c)
            if (bold_rays[a] == bold_rays[c])
                throw InputError("bold: rays must be pairwise distinct");
}

ClassGroupData::ClassGroupData(Mat a, std::size_t ambient_rank) : ambient_(ambient_rank) {
    if (!a.empty() && rows(a) != ambient_rank)
        throw InputError("class group: presentation rows must match ambient rank");
    if (a.empty() || cols(a) == 0) {
        u_ = identity_matrix(ambient_rank);
        rank_ = 0;
        shape_ = AbelianGroup(static_cast<int>(ambient_rank), {});
        return;
    }
    SmithDecomposition snf = smith_normal_form(a);
    u_ = std::move(snf.U);
    rank_ = snf.rank;
    std::vector<Int> torsion;
    for (int k = 0; k < rank_; ++k) {
        invariants_.push_back(snf.D[k][k]);
        if (snf.D[k][k] >= 2) torsion.push_back(snf.D[k][k]);
    }
    shape_ = AbelianGroup(static_cast<int>(ambient_rank) - rank_, std::move(torsion));
}

ClassElement ClassGroupData::class_of(const Vec& v) const {
    if (v.size() != ambient_) throw InputError("class group: vector dimension mismatch");
    Vec y = mat_vec(u_, v);
    ClassElement e;
    for (std::size_t i = rank_; i < ambient_; ++i) e.free_part.push_back(y[i]);
    for (int i = 0; i < rank_; ++i) {
        if (invariants_[i] < 2) continue;
        Int md;
        mpz_fdiv_r(md.get_mpz_t(), y[i].get_mpz_t(), invariants_[i].get_mpz_t());
        e.torsion_part.push_back(md);
    }
    return e;
}

ClassElement ClassGroupData::class_of_basis(std::size_t idx) const {
    Vec v(ambient_, 0);
    v.at(idx) = 1;
    return class_of(v);
}

ClassElement ClassGroupData::zero_element() const { return class_of(Vec(ambient_, 0)); }

ClassElement ClassGroupData::add(const ClassElement& a, const ClassElement& b) const {
    ClassElement e;
    if (a.free_part.size() != b.free_part.size() ||
        a.torsion_part.size() != b.torsion_part.size())
        throw InputError("class group: adding elements of different shapes");
    e.free_part = add_vec(a.free_part, b.free_part);
    for (std::size_t k = 0; k < a.torsion_part.size(); ++k) {
        Int s = a.torsion_part[k] + b.torsion_part[k];
        Int md;
        mpz_fdiv_r(md.get_mpz_t(), s.get_mpz_t(), shape_.torsion[k].get_mpz_t());
        e.torsion_part.push_back(md);
    }
    return e;
}

ClassElement ClassGroupData::scale(const Int& k, const ClassElement& a) const {
    ClassElement e;
    for (const Int& x : a.free_part) e.free_part.push_back(k * x);
    for (std::size_t t = 0; t < a.torsion_part.size(); ++t) {
        Int s = k * a.torsion_part[t];
        Int md;
        mpz_fdiv_r(md.get_mpz_t(), s.get_mpz_t(), shape_.torsion[t].get_mpz_t());
        e.torsion_part.push_back(md);
    }
    return e;
}

std::string ClassGroupData::element_string(const ClassElement& e) const {
    if (e.free_part.empty() && e.torsion_part.empty()) return "0";
    std::string s = "(";
    bool first = true;
    for (const Int& x : e.free_part) {
        if (!first) s += ", ";
        s += x.get_str();
        first = false;
    }
    for (std::size_t k = 0; k < e.torsion_part.size(); ++k) {
        if (!first) s += ", ";
        s += e.torsion_part[k].get_str() + " mod " + shape_.torsion[k].get_str();
        first = false;
    }
    return s + ")";
}

ClassGroupData class_group_plain(const SphericalDatum& d, const std::vector<Vec>& rays) {
    const std::size_t t = static_cast<std::size_t>(d.r) + rays.size();
    Mat a;
    for (int i = 0; i < d.r; ++i) {
        Vec row(d.weight_rank(), 0);
        row[i] = 1;
        a.push_back(row);
    }
    for (const Vec& u : rays) a.push_back(u);
    if (a.empty()) return ClassGroupData(Mat{}, t);
    return ClassGroupData(a, t);
}

ClassGroupData class_group_bold(const BoldDatum& b, const std::vector<Vec>& bold_rays) {
    validate_bold_rays(b, bold_rays);
    const std::size_t t = static_cast<std::size_t>(b.rbar) + bold_rays.size();
    Mat a = b.d_matrix;
    for (const Vec& u : bold_rays) a.push_back(u);
    if (a.empty()) return ClassGroupData(Mat{}, t);
    return ClassGroupData(a, t);
}

AbelianGroup pic_g_group(const BoldDatum& b) {
    Mat a = b.d_matrix;
    for (const Vec& row : b.mu_restriction) a.push_back(negate_vec(row));
    const std::size_t t = static_cast<std::size_t>(b.rbar + b.xc_rank);
    if (a.empty()) return AbelianGroup(static_cast<int>(t), {});
    if (rational_rank(a) != static_cast<std::size_t>(b.mbar))
        throw MathError("bold: character map eta/restriction is not injective");
    return cokernel_of_matrix(a, t);
}

} // namespace sphcox
