// Exact integer/rational vectors and matrices on top of GMP.
#ifndef SPHCOX_NUMERIC_HPP
#define SPHCOX_NUMERIC_HPP

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

namespace sphcox {

using Int = mpz_class;
using Rat = mpq_class;

using Vec = std::vector<Int>;  // column vector unless said otherwise
using Mat = std::vector<Vec>;  // row-major, rectangular

inline std::size_t rows(const Mat& a) { return a.size(); }
inline std::size_t cols(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

inline Mat zero_matrix(std::size_t r, std::size_t c) {
    return Mat(r, Vec(c, 0));
}

inline Mat identity_matrix(std::size_t n) {
    Mat m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Int dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec mat_vec(const Mat& m, const Vec& x) {
    assert(cols(m) == x.size() || m.empty());
    Vec y(rows(m));
    for (std::size_t i = 0; i < rows(m); ++i) y[i] = dot(m[i], x);
    return y;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    assert(cols(a) == rows(b));
    Mat c = zero_matrix(rows(a), cols(b));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t k = 0; k < cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols(b); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Mat transpose(const Mat& a) {
    Mat t = zero_matrix(cols(a), rows(a));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
    return t;
}

inline bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divide out the content, keeping orientation.  Zero vector stays zero.
inline Vec primitive_part(Vec v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline Vec negate_vec(Vec v) {
    for (Int& x : v) x = -x;
    return v;
}

inline Vec add_vec(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Vec sub_vec(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

// a*x + b*y, the combination used all over the cone algebra.
inline Vec combine(const Int& a, const Vec& x, const Int& b, const Vec& y) {
    assert(x.size() == y.size());
    Vec c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = a * x[i] + b * y[i];
    return c;
}

inline std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace sphcox

#endif
