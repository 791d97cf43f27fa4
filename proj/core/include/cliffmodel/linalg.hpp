#pragma once

#include <optional>
#include <vector>

#include "cliffmodel/scalar.hpp"

namespace cliff {

// Dense matrices with exact entries.  All routines here use plain Gaussian
// elimination with exact division, so results are exact; no pivoting
// heuristics are needed beyond skipping zeros.
using Matrix = std::vector<std::vector<Scalar>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

Matrix mat_identity(int n);
Matrix mat_zero(int rows, int cols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& c, const Matrix& a);
Matrix mat_conj(const Matrix& a);       // entrywise conjugation
Matrix mat_transpose(const Matrix& a);
bool mat_is_real(const Matrix& a);
bool mat_is_zero(const Matrix& a);

// If a == c * identity for some scalar c, returns c.
std::optional<Scalar> proportional_to_identity(const Matrix& a);

std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& v);

// Rank of an exact complex matrix.
int rank(Matrix a);

// Basis of the right kernel {v : a v = 0}, one vector per free column of the
// reduced echelon form, each scaled so its first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel_basis(Matrix a);

// Rational (real) variants.
int rank_q(QMatrix a);
std::vector<std::vector<mpq_class>> kernel_basis_q(QMatrix a);

}  // namespace cliff
