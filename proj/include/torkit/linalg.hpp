#pragma once

#include <optional>

#include "torkit/numeric.hpp"

namespace torkit {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& a, size_t cols);
size_t rank(const QMat& a, size_t cols);
size_t rank(const IMat& a, size_t cols);

// Basis of {x : a x = 0} as rows of length cols.
QMat nullspace(const QMat& a, size_t cols);
// Saturated integer basis of {x in Z^cols : a x = 0}.
IMat integer_nullspace(const IMat& a, size_t cols);

// Some c with c*b = x (b given by rows), if one exists.
std::optional<QVec> solve_left(const QMat& b, const QVec& x, size_t cols);

Rat det(const QMat& a);
Int det(const IMat& a);
std::optional<QMat> inverse(const QMat& a);

// Row Hermite normal form: nonzero rows only, positive pivots, entries above
// pivots reduced into [0, pivot). If transform is given it receives the
// unimodular U with U*a = [H; 0] (all rows, zero rows at the bottom).
IMat hnf(const IMat& a, size_t cols, IMat* transform = nullptr);

struct Smith {
    IMat left, right;        // unimodular, left * a * right = diag
    std::vector<Int> diag;   // nonzero invariant factors, d_i | d_{i+1}
};
Smith smith(const IMat& a, size_t cols);

// Unimodular k x k matrix whose first row is the primitive vector v.
IMat complete_to_basis(const IVec& v);

IMat identity(size_t n);
QMat qidentity(size_t n);
IMat mat_mul(const IMat& a, const IMat& b, size_t bcols);
QMat mat_mul(const QMat& a, const QMat& b, size_t bcols);

}  // namespace torkit
