#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "foldmv/error.hpp"

namespace foldmv {

// Lattice coordinates are plain 64-bit integers: at the supported ranks all
// intermediates stay tiny.  Everything that divides goes through mpq_class,
// so the library is exact end to end and never touches floating point.
using Int = long long;
using Rat = mpq_class;

using Vec = std::vector<Int>;    // integer vector, e.g. a coweight in the coroot basis
using QVec = std::vector<Rat>;   // rational vector, e.g. a weight in the dual basis
using Mat = std::vector<Vec>;    // row-major square integer matrix
using QMat = std::vector<QVec>;  // row-major rational matrix

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), 0); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline bool all_nonneg(const Vec& a) {
    for (Int x : a)
        if (x < 0) return false;
    return true;
}

inline Int height(const Vec& a) {
    Int h = 0;
    for (Int x : a) h += x;
    return h;
}

inline Mat identity_mat(int n) {
    Mat m(static_cast<size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Vec apply_mat(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline Mat mul_mat(const Mat& a, const Mat& b) {
    size_t n = a.size();
    Mat r(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            Int aik = a[i][k];
            if (aik == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

// Exact inverse of an integer matrix with determinant +-1 (all Weyl matrices
// qualify).  Gauss-Jordan over rationals, then checked integral.
Mat inverse_unimodular(const Mat& m);

// Exact inverse of a rational matrix; throws InternalError if singular.
QMat inverse_qmat(const QMat& m);

inline QVec apply_qmat(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline QVec to_qvec(const Vec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(static_cast<long>(v[i]));
    return r;
}

// Formatting helpers shared by the CLI, JSON records and error messages.
std::string format_vec(const Vec& v);    // "1,-2,0"
std::string format_qvec(const QVec& v);  // "1/2,-2,0"

}  // namespace foldmv
