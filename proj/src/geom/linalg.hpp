#pragma once

#include <optional>
#include <vector>

#include "support/rat.hpp"

namespace sqk {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>; // row-major

QVec qvec_zero(int n);
QMat qmat_identity(int n);
QMat qmat_zero(int rows, int cols);

mpq_class dot(const QVec &a, const QVec &b);
QVec add(const QVec &a, const QVec &b);
QVec sub(const QVec &a, const QVec &b);
QVec scale(const mpq_class &c, const QVec &a);
bool is_zero(const QVec &a);

QVec mat_apply(const QMat &m, const QVec &x);
QMat mat_mul(const QMat &a, const QMat &b);
QMat mat_sub(const QMat &a, const QMat &b);

int rank(QMat m); // works on a copy

// Basis of { x : m x = 0 }, one vector per row of the result.
QMat nullspace(const QMat &m);

// One solution of a x = b, or nullopt if the system is inconsistent.
std::optional<QVec> solve(const QMat &a, const QVec &b);

// Inverse of a square matrix, or nullopt if singular.
std::optional<QMat> mat_inverse(const QMat &m);

} // namespace sqk
