#pragma once

#include <vector>

#include "weylzeta/rational.hpp"

namespace weylzeta {

using QVec = std::vector<Rational>;
using QMat = std::vector<std::vector<Rational>>;
using IVec = std::vector<long>;
using IMat = std::vector<std::vector<long>>;

QMat qmat_identity(int n);
QMat qmat_from_int(const IMat& m);
QVec qmat_mul_vec(const QMat& m, const QVec& v);
QMat qmat_mul(const QMat& a, const QMat& b);
Rational qmat_det(QMat m);
// Inverse of a square rational matrix; throws computation_error if singular.
QMat qmat_inverse(const QMat& m);
// Solves A x = b for (possibly rectangular) A with exact elimination.
// Throws computation_error when inconsistent or underdetermined.
QVec qmat_solve(QMat a, QVec b);

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_mul_vec(const IMat& m, const IVec& v);
long imat_det(const IMat& m);          // n <= 3
IMat imat_adjugate(const IMat& m);     // n <= 3, adj(A) with A*adj(A) = det(A) I
// Inverse of a unimodular integer matrix (|det| = 1).
IMat imat_unimodular_inverse(const IMat& m);
IMat imat_transpose(const IMat& m);

// Smith normal form: returns (U, D, V) with U*A*V = D, U and V unimodular,
// D diagonal with d_1 | d_2 | ... (nonnegative).
struct SmithForm {
    IMat u, d, v;
};
SmithForm smith_normal_form(IMat a);

// Row-style Hermite basis of the integer row span of `rows` (full rank r):
// returns an r x r matrix whose rows span the same lattice.
IMat hermite_row_basis(IMat rows, int r);

} // namespace weylzeta
