// Finitely generated lattices: Smith/Hermite normal forms, kernels,
// cokernels, saturation.  Everything is exact over GMP integers.
#ifndef SPHCOX_LATTICE_HPP
#define SPHCOX_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sphcox/numeric.hpp"

namespace sphcox {

// A free Z-module of finite rank with named basis elements.  The labels are
// only used for printing (v1*, w1, nbar1, ...) but are validated for
// uniqueness so reports can never show two coordinates under the same name.
struct FreeLattice {
    int rank = 0;
    std::vector<std::string> basis_labels;

    FreeLattice() = default;
    FreeLattice(int rank_, std::vector<std::string> labels);
};

// Z-linear map between free lattices, matrix acting on column vectors:
// target_vec = matrix * source_vec, so the matrix is (target.rank x source.rank).
struct LatticeMap {
    FreeLattice source;
    FreeLattice target;
    Mat matrix;

    LatticeMap() = default;
    LatticeMap(FreeLattice src, FreeLattice tgt, Mat m);

    Vec apply(const Vec& x) const { return mat_vec(matrix, x); }
};

// Invariant-factor presentation of a finitely generated abelian group:
// Z^free_rank  x  Z/t1 x ... x Z/tk  with 2 <= t1 | t2 | ... | tk.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    AbelianGroup() = default;
    AbelianGroup(int free, std::vector<Int> tors);

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;  // "0", "Z", "Z^2", "Z/2", "Z^2 x Z/4"
};

// U * A * V = D with U, V unimodular and D diagonal, diagonal entries
// nonnegative and each dividing the next.
struct SmithDecomposition {
    Mat U, D, V;
    int rank = 0;  // number of nonzero diagonal entries
};

// Pivot selection: smallest nonzero |entry| in the remaining block, ties
// broken row-major.  Deterministic for reproducible bases downstream.
SmithDecomposition smith_normal_form(const Mat& a);

// Z^target / image(f) in invariant factors (unit factors dropped).
AbelianGroup cokernel(const LatticeMap& f);
AbelianGroup cokernel_of_matrix(const Mat& a, std::size_t target_rank);

// gcd of the coordinates is 1 (zero vector is not primitive).
bool is_primitive(const Vec& v);

// Saturated integer kernel {x : a x = 0}, returned as a list of basis
// vectors (canonical, Hermite-reduced).  `a` maps Z^cols -> Z^rows.
std::vector<Vec> kernel_basis(const Mat& a);

// Basis of the saturation span_Q(gens) ∩ Z^dim, canonical.  `dim` is needed
// because gens may be empty.
std::vector<Vec> saturated_span_basis(const std::vector<Vec>& gens, std::size_t dim);

// Canonical basis of the lattice *generated* by `gens` (no saturation):
// column-style Hermite normal form, positive pivots.
std::vector<Vec> lattice_basis_hnf(const std::vector<Vec>& gens, std::size_t dim);

// Basis of f^{-1}(span_Q(span_vectors)) as a saturated sublattice of the source.
std::vector<Vec> preimage_basis(const LatticeMap& f, const std::vector<Vec>& span_vectors);

// Rank over Q of a list of row vectors / a matrix.
std::size_t rational_rank(const Mat& rows_mat);

// Exact solution of A x = b (A need not be square); nullopt if inconsistent.
// If the solution is not unique an arbitrary one is returned.
std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b);

// Determinant of a square integer matrix (fraction-free elimination).
Int determinant(const Mat& a);

} // namespace sphcox

#endif
