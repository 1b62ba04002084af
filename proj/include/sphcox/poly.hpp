// Multivariate Laurent polynomials over Q with a fixed variable table.
//
// Variables come in five families: S[i,j] (section variables, two indices),
// T[k] (torus-invertible variables, the only ones allowed negative
// exponents), W[l] (boundary-divisor variables), and Z[k]/X[...] (auxiliary
// families for comparison presentations).  A VarTable pins the variable
// order; exponent vectors are parallel to it.
#ifndef SPHCOX_POLY_HPP
#define SPHCOX_POLY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphcox/numeric.hpp"

namespace sphcox {

enum class VarKind : int { S = 0, T = 1, W = 2, Z = 3, X = 4 };

char kind_letter(VarKind k);
std::optional<VarKind> kind_from_letter(char c);

struct Var {
    VarKind kind = VarKind::S;
    int i = 0;            // first index (1-based)
    int j = 0;            // second index (1-based), 0 when absent
    bool two_index = false;

    std::string name() const;  // "S[1,2]", "W[3]"
    bool operator==(const Var& o) const {
        return kind == o.kind && i == o.i && j == o.j && two_index == o.two_index;
    }
    bool operator<(const Var& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

class VarTable {
  public:
    VarTable() = default;
    explicit VarTable(std::vector<Var> vars);

    std::size_t size() const { return vars_.size(); }
    const Var& at(std::size_t idx) const { return vars_.at(idx); }
    const std::vector<Var>& vars() const { return vars_; }
    std::optional<std::size_t> find(const Var& v) const;

    bool operator==(const VarTable& o) const { return vars_ == o.vars_; }
    std::string joined_names() const;  // "S[1,1], S[1,2], W[1]"

  private:
    std::vector<Var> vars_;
    std::map<Var, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr table) : table_(std::move(table)) {}

    static LaurentPoly zero(VarTablePtr table) { return LaurentPoly(std::move(table)); }
    static LaurentPoly constant(VarTablePtr table, const Rat& c);
    static LaurentPoly monomial(VarTablePtr table, const Vec& exps, const Rat& c);

    const VarTablePtr& table() const { return table_; }
    const std::map<Vec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Vec& exps, const Rat& c);  // accumulates, drops zeros

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;

    LaurentPoly pow(long e) const;  // e < 0 only for single-term polynomials

    // Rewrite into `new_table`; index_map[k] is the position of our k-th
    // variable there.  Dropped variables (index_map[k] == npos) must have
    // zero exponent everywhere.
    LaurentPoly remapped(VarTablePtr new_table,
                         const std::vector<std::size_t>& index_map) const;

    // Set every variable selected by `drop` to 1 (exponents discarded), and
    // express the result in `new_table` which must contain the remaining
    // variables in order.
    LaurentPoly collapse_to_one(VarTablePtr new_table,
                                const std::vector<bool>& drop) const;

    // Canonical text form: terms ordered by weighted graded-lex (weight 0 on
    // W variables, 1 elsewhere), descending total weight, ties broken by
    // descending lexicographic exponent comparison in table order.
    std::string to_string() const;

  private:
    VarTablePtr table_;
    std::map<Vec, Rat> terms_;
};

// Sum of weighted exponents (weight 0 for W, 1 otherwise).
Int weighted_degree(const VarTable& table, const Vec& exps);

} // namespace sphcox

#endif
