#include "sphcox/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sphcox/errors.hpp"

namespace sphcox {

FreeLattice::FreeLattice(int rank_, std::vector<std::string> labels)
    : rank(rank_), basis_labels(std::move(labels)) {
    if (rank < 0) throw InputError("lattice rank must be nonnegative");
    if (basis_labels.size() != static_cast<std::size_t>(rank))
        throw InputError("lattice label count does not match rank");
    std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
    if (seen.size() != basis_labels.size())
        throw InputError("lattice basis labels must be pairwise distinct");
}

LatticeMap::LatticeMap(FreeLattice src, FreeLattice tgt, Mat m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (rows(matrix) != static_cast<std::size_t>(target.rank))
        throw InputError("lattice map: row count does not match target rank");
    for (const Vec& row : matrix)
        if (row.size() != static_cast<std::size_t>(source.rank))
            throw InputError("lattice map: column count does not match source rank");
}

AbelianGroup::AbelianGroup(int free, std::vector<Int> tors)
    : free_rank(free), torsion(std::move(tors)) {
    if (free_rank < 0) throw InputError("abelian group: negative free rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2)
            throw InputError("abelian group: torsion orders must be >= 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw InputError("abelian group: torsion orders must form a divisibility chain");
    }
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

//--------------------------------------------------------------------------
// Smith normal form
//--------------------------------------------------------------------------

namespace {

void swap_rows(Mat& m, std::size_t i, std::size_t j) {
    if (i != j) std::swap(m[i], m[j]);
}

void swap_cols(Mat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (Vec& row : m) std::swap(row[i], row[j]);
}

// row_i -= q * row_k
void row_axpy(Mat& m, std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[k][j];
}

// col_j -= q * col_k
void col_axpy(Mat& m, std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (Vec& row : m) row[j] -= q * row[k];
}

void negate_row(Mat& m, std::size_t i) {
    for (Int& x : m[i]) x = -x;
}

} // namespace

SmithDecomposition smith_normal_form(const Mat& a) {
    const std::size_t t = rows(a), s = cols(a);
    SmithDecomposition out;
    out.D = a;
    out.U = identity_matrix(t);
    out.V = identity_matrix(s);
    Mat& D = out.D;
    Mat& U = out.U;
    Mat& V = out.V;

    const std::size_t n = std::min(t, s);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block, row-major ties
            std::size_t pi = t, pj = s;
            Int best = 0;
            for (std::size_t i = k; i < t; ++i)
                for (std::size_t j = k; j < s; ++j) {
                    if (D[i][j] == 0) continue;
                    Int v = abs(D[i][j]);
                    if (pi == t || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == t) goto done;  // trailing block vanished

            swap_rows(D, k, pi);
            swap_rows(U, k, pi);
            swap_cols(D, k, pj);
            swap_cols(V, k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < t; ++i) {
                if (D[i][k] == 0) continue;
                Int q = D[i][k] / D[k][k];  // truncated: |remainder| < |pivot|
                row_axpy(D, i, k, q);
                row_axpy(U, i, k, q);
                if (D[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < s; ++j) {
                if (D[k][j] == 0) continue;
                Int q = D[k][j] / D[k][k];
                col_axpy(D, j, k, q);
                col_axpy(V, j, k, q);
                if (D[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            // pivot now alone in its row and column; enforce divisibility
            bool fixed = false;
            for (std::size_t i = k + 1; i < t && !fixed; ++i)
                for (std::size_t j = k + 1; j < s && !fixed; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        // fold row i into row k and retry the reduction
                        row_axpy(D, k, i, Int(-1));
                        row_axpy(U, k, i, Int(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (D[k][k] < 0) {
            negate_row(D, k);
            negate_row(U, k);
        }
    }
done:
    out.rank = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (D[k][k] != 0) ++out.rank;
    return out;
}

AbelianGroup cokernel_of_matrix(const Mat& a, std::size_t target_rank) {
    if (!a.empty() && rows(a) != target_rank)
        throw InputError("cokernel: matrix row count does not match target rank");
    if (a.empty() || cols(a) == 0)
        return AbelianGroup(static_cast<int>(target_rank), {});
    SmithDecomposition snf = smith_normal_form(a);
    std::vector<Int> torsion;
    for (int k = 0; k < snf.rank; ++k)
        if (snf.D[k][k] >= 2) torsion.push_back(snf.D[k][k]);
    int free = static_cast<int>(target_rank) - snf.rank;
    return AbelianGroup(free, std::move(torsion));
}

AbelianGroup cokernel(const LatticeMap& f) {
    if (f.source.rank == 0)
        return AbelianGroup(f.target.rank, {});
    return cokernel_of_matrix(f.matrix, static_cast<std::size_t>(f.target.rank));
}

bool is_primitive(const Vec& v) { return content(v) == 1; }

//--------------------------------------------------------------------------
// Hermite-style bases, kernels, saturation
//--------------------------------------------------------------------------

namespace {

// Row-style Hermite normal form: echelon rows, positive pivots, entries above
// each pivot reduced into [0, pivot).  Returns only the nonzero rows.
Mat row_hnf(Mat a) {
    const std::size_t m = rows(a);
    if (m == 0) return a;
    const std::size_t n = cols(a);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a[i][j] == 0) continue;
                if (piv == m || abs(a[i][j]) < abs(a[piv][j])) piv = i;
            }
            if (piv == m) break;  // no pivot in this column
            swap_rows(a, r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][j] == 0) continue;
                Int q = a[i][j] / a[r][j];
                row_axpy(a, i, r, q);
                if (a[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][j] == 0) continue;
        if (a[r][j] < 0) negate_row(a, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
            row_axpy(a, i, r, q);
        }
        ++r;
    }
    a.resize(r);
    return a;
}

Mat rows_from(const std::vector<Vec>& vs, std::size_t dim) {
    Mat m;
    for (const Vec& v : vs) {
        if (v.size() != dim) throw InputError("vector dimension mismatch");
        m.push_back(v);
    }
    return m;
}

} // namespace

std::vector<Vec> lattice_basis_hnf(const std::vector<Vec>& gens, std::size_t dim) {
    Mat h = row_hnf(rows_from(gens, dim));
    return std::vector<Vec>(h.begin(), h.end());
}

std::vector<Vec> kernel_basis(const Mat& a) {
    const std::size_t s = cols(a);
    if (rows(a) == 0 || s == 0) {
        // kernel of the zero/empty map is everything
        std::vector<Vec> basis;
        for (std::size_t j = 0; j < s; ++j) {
            Vec e(s, 0);
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    SmithDecomposition snf = smith_normal_form(a);
    // A V = U^{-1} D, so columns of V beyond the rank span the kernel; V is
    // unimodular, hence the span is saturated.
    std::vector<Vec> basis;
    for (std::size_t j = snf.rank; j < s; ++j) {
        Vec col(s);
        for (std::size_t i = 0; i < s; ++i) col[i] = snf.V[i][j];
        basis.push_back(col);
    }
    return lattice_basis_hnf(basis, s);  // canonicalize
}

std::vector<Vec> saturated_span_basis(const std::vector<Vec>& gens, std::size_t dim) {
    if (gens.empty()) return {};
    // forms vanishing on the span ...
    std::vector<Vec> forms = kernel_basis(rows_from(gens, dim));
    // ... and their common kernel, which is the saturation
    if (forms.empty()) {
        Mat id = identity_matrix(dim);
        return std::vector<Vec>(id.begin(), id.end());
    }
    return kernel_basis(rows_from(forms, dim));
}

std::vector<Vec> preimage_basis(const LatticeMap& f, const std::vector<Vec>& span_vectors) {
    const std::size_t t = static_cast<std::size_t>(f.target.rank);
    const std::size_t s = static_cast<std::size_t>(f.source.rank);
    std::vector<Vec> forms;  // forms on the target vanishing on the span
    if (span_vectors.empty()) {
        Mat id = identity_matrix(t);
        forms.assign(id.begin(), id.end());
    } else {
        forms = kernel_basis(rows_from(span_vectors, t));
    }
    if (forms.empty()) {
        Mat id = identity_matrix(s);
        return std::vector<Vec>(id.begin(), id.end());
    }
    // x is in the preimage iff (w . f(x)) = 0 for every such form w
    Mat pulled;
    for (const Vec& w : forms) {
        Vec row(s, 0);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < t; ++i) row[j] += w[i] * f.matrix[i][j];
        pulled.push_back(row);
    }
    return kernel_basis(pulled);
}

//--------------------------------------------------------------------------
// Rational linear algebra
//--------------------------------------------------------------------------

std::size_t rational_rank(const Mat& rows_mat) {
    if (rows(rows_mat) == 0 || cols(rows_mat) == 0) return 0;
    std::vector<std::vector<Rat>> a(rows(rows_mat), std::vector<Rat>(cols(rows_mat)));
    for (std::size_t i = 0; i < rows(rows_mat); ++i)
        for (std::size_t j = 0; j < cols(rows_mat); ++j) a[i][j] = Rat(rows_mat[i][j]);
    std::size_t r = 0;
    const std::size_t m = a.size(), n = a[0].size();
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (a[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][j] == 0) continue;
            Rat q = a[i][j] / a[r][j];
            for (std::size_t jj = j; jj < n; ++jj) a[i][jj] -= q * a[r][jj];
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b) {
    const std::size_t m = rows(a), n = cols(a);
    if (b.size() != m) throw InputError("solve: right-hand side dimension mismatch");
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
        w[i][n] = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (w[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        std::swap(w[r], w[piv]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w[i][j] == 0) continue;
            Rat q = w[i][j] / w[r][j];
            for (std::size_t jj = j; jj <= n; ++jj) w[i][jj] -= q * w[r][jj];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n] / w[i][pivot_col[i]];
    return x;
}

Int determinant(const Mat& a) {
    const std::size_t n = rows(a);
    if (n == 0) return 1;
    if (cols(a) != n) throw InputError("determinant: matrix not square");
    // Bareiss fraction-free elimination
    Mat w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == n) return 0;
            std::swap(w[k], w[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            }
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];
}

} // namespace sphcox
