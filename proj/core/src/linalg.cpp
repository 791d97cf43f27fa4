#include "cliffmodel/linalg.hpp"

#include <utility>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

void check_rect(const Matrix& a) {
  for (const auto& row : a)
    if (row.size() != a.front().size())
      throw dimension_mismatch("ragged matrix");
}

void check_mul(std::size_t inner_a, std::size_t inner_b) {
  if (inner_a != inner_b)
    throw dimension_mismatch("matrix product shape mismatch");
}

// Shared echelon machinery, generic over the exact field element.
template <typename T>
struct Echelon {
  std::vector<std::vector<T>> rows;
  std::vector<int> pivot_cols;

  explicit Echelon(std::vector<std::vector<T>> a) : rows(std::move(a)) {
    if (rows.empty()) return;
    std::size_t ncols = rows.front().size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
      std::size_t pivot = next_row;
      while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[next_row], rows[pivot]);
      T inv = invert(rows[next_row][col]);
      for (std::size_t c = col; c < ncols; ++c)
        rows[next_row][c] = rows[next_row][c] * inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == next_row || is_zero(rows[r][col])) continue;
        T factor = rows[r][col];
        for (std::size_t c = col; c < ncols; ++c)
          rows[r][c] = rows[r][c] - factor * rows[next_row][c];
      }
      pivot_cols.push_back(static_cast<int>(col));
      ++next_row;
    }
  }

  static bool is_zero(const Scalar& v) { return v.is_zero(); }
  static bool is_zero(const mpq_class& v) { return v == 0; }
  static Scalar invert(const Scalar& v) { return v.inverse(); }
  static mpq_class invert(const mpq_class& v) { return 1 / v; }

  int rank() const { return static_cast<int>(pivot_cols.size()); }

  std::vector<std::vector<T>> kernel() const {
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<T> v(ncols, T(0));
      v[free_col] = T(1);
      for (std::size_t p = 0; p < pivot_cols.size(); ++p)
        v[pivot_cols[p]] = -rows[p][free_col];
      // Normalize so the first nonzero entry is 1.
      for (const T& entry : v) {
        if (is_zero(entry)) continue;
        T inv = invert(entry);
        for (T& e : v) e = e * inv;
        break;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

}  // namespace

Matrix mat_identity(int n) {
  Matrix a(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) a[i][i] = Scalar(1);
  return a;
}

Matrix mat_zero(int rows, int cols) {
  return Matrix(rows, std::vector<Scalar>(cols, Scalar(0)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_rect(a);
  check_rect(b);
  check_mul(a.empty() ? 0 : a.front().size(), b.size());
  std::size_t rows = a.size(), inner = b.size(),
              cols = b.empty() ? 0 : b.front().size();
  Matrix out(rows, std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw dimension_mismatch("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw dimension_mismatch("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

Matrix mat_scale(const Scalar& c, const Matrix& a) {
  Matrix out = a;
  for (auto& row : out)
    for (auto& e : row) e *= c;
  return out;
}

Matrix mat_conj(const Matrix& a) {
  Matrix out = a;
  for (auto& row : out)
    for (auto& e : row) e = e.conj();
  return out;
}

Matrix mat_transpose(const Matrix& a) {
  if (a.empty()) return a;
  check_rect(a);
  Matrix out(a.front().size(), std::vector<Scalar>(a.size(), Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

bool mat_is_real(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_real()) return false;
  return true;
}

bool mat_is_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::optional<Scalar> proportional_to_identity(const Matrix& a) {
  if (a.empty() || a.size() != a.front().size()) return std::nullopt;
  const Scalar& c = a[0][0];
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (i == j ? a[i][j] != c : !a[i][j].is_zero()) return std::nullopt;
    }
  return c;
}

std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != v.size())
      throw dimension_mismatch("matrix-vector shape mismatch");
    Scalar acc(0);
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

int rank(Matrix a) {
  if (a.empty()) return 0;
  check_rect(a);
  return Echelon<Scalar>(std::move(a)).rank();
}

std::vector<std::vector<Scalar>> kernel_basis(Matrix a) {
  if (a.empty()) return {};
  check_rect(a);
  return Echelon<Scalar>(std::move(a)).kernel();
}

int rank_q(QMatrix a) {
  if (a.empty()) return 0;
  return Echelon<mpq_class>(std::move(a)).rank();
}

std::vector<std::vector<mpq_class>> kernel_basis_q(QMatrix a) {
  if (a.empty()) return {};
  return Echelon<mpq_class>(std::move(a)).kernel();
}

}  // namespace cliff
