#include "cliffmodel/spin.hpp"

#include <sstream>
#include <tuple>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

void check_param(const ModelSpec& spec, const SpinParam& x) {
  if (static_cast<int>(x.size()) != spec.labels())
    throw dimension_mismatch("spin parameter has wrong size");
  for (const auto& row : x)
    if (static_cast<int>(row.size()) != spec.labels())
      throw dimension_mismatch("spin parameter has wrong size");
  for (int a = 0; a < spec.labels(); ++a)
    for (int b = 0; b <= a; ++b)
      if (x[a][b] != -x[b][a])
        throw invalid_argument("spin parameter must be antisymmetric");
}

// All strictly-upper label pairs (A < B), 1-based, in row-major order; the
// coordinate system used for subalgebra and stabilizer computations.
std::vector<std::pair<int, int>> upper_pairs(int labels) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= labels; ++a)
    for (int b = a + 1; b <= labels; ++b) pairs.emplace_back(a, b);
  return pairs;
}

SpinParam param_from_flat(int labels, const std::vector<mpq_class>& flat) {
  SpinParam x = spin_param_zero(labels);
  const auto pairs = upper_pairs(labels);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    x[pairs[p].first - 1][pairs[p].second - 1] = flat[p];
    x[pairs[p].second - 1][pairs[p].first - 1] = -flat[p];
  }
  return x;
}

// Shared kernel computation: rows constrain the flat upper-triangle
// coordinates; complex rows are split into real and imaginary parts.
std::vector<SpinParam> solve_param_kernel(const ModelSpec& spec,
                                          const std::vector<std::vector<Scalar>>& rows) {
  const auto pairs = upper_pairs(spec.labels());
  QMatrix real_rows;
  for (const auto& row : rows) {
    QMatrix::value_type re_row, im_row;
    bool has_re = false, has_im = false;
    re_row.reserve(pairs.size());
    im_row.reserve(pairs.size());
    for (const Scalar& c : row) {
      re_row.push_back(c.re());
      im_row.push_back(c.im());
      has_re = has_re || c.re() != 0;
      has_im = has_im || c.im() != 0;
    }
    if (has_re) real_rows.push_back(std::move(re_row));
    if (has_im) real_rows.push_back(std::move(im_row));
  }
  if (real_rows.empty())
    real_rows.emplace_back(pairs.size(), mpq_class(0));
  std::vector<SpinParam> basis;
  for (const auto& flat : kernel_basis_q(std::move(real_rows)))
    basis.push_back(param_from_flat(spec.labels(), flat));
  return basis;
}

}  // namespace

SpinParam spin_param_zero(int labels) {
  return SpinParam(labels, std::vector<mpq_class>(labels, mpq_class(0)));
}

SpinParam spin_param_from_upper(
    int labels, const std::vector<std::tuple<int, int, mpq_class>>& entries) {
  SpinParam x = spin_param_zero(labels);
  for (const auto& [a, b, value] : entries) {
    if (a < 1 || b < 1 || a > labels || b > labels || a >= b)
      throw invalid_argument("spin parameter entries need labels A < B");
    x[a - 1][b - 1] += value;
    x[b - 1][a - 1] -= value;
  }
  return x;
}

Polyform lie_apply(const ModelSpec& spec, const SpinParam& x,
                   const Polyform& psi) {
  check_param(spec, x);
  Polyform out(spec.m);
  for (int b = 2; b <= spec.labels(); ++b) {
    bool column_used = false;
    for (int a = 1; a < b; ++a)
      if (x[a - 1][b - 1] != 0) {
        column_used = true;
        break;
      }
    if (!column_used) continue;
    Polyform inner = gamma_apply(spec, b, psi);  // shared across the column
    for (int a = 1; a < b; ++a) {
      const mpq_class& coef = x[a - 1][b - 1];
      if (coef == 0) continue;
      out += Scalar(mpq_class(coef / 2)) * gamma_apply(spec, a, inner);
    }
  }
  return out;
}

Matrix lie_matrix(const ModelSpec& spec, const SpinParam& x) {
  int n = spec.dim();
  Matrix mat = mat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> col =
        polyform_to_coords(spec, lie_apply(spec, x, basis_spinor(spec, j)));
    for (int i = 0; i < n; ++i) mat[i][j] = col[i];
  }
  return mat;
}

SpinParam spin_bracket(const ModelSpec& spec, const SpinParam& x,
                       const SpinParam& y) {
  check_param(spec, x);
  check_param(spec, y);
  int n = spec.labels();
  SpinParam out = spin_param_zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      mpq_class acc(0);
      for (int c = 0; c < n; ++c)
        acc += spec.metric[c] * (x[a][c] * y[c][b] - y[a][c] * x[c][b]);
      out[a][b] = acc;
    }
  return out;
}

CheckResult check_homomorphism(const ModelSpec& spec, const SpinParam& x,
                               const SpinParam& y) {
  SpinParam bracket = spin_bracket(spec, x, y);
  for (Mask mask = 0; mask < static_cast<Mask>(spec.dim()); ++mask) {
    Polyform e = Polyform::monomial(spec.m, mask);
    Polyform lhs =
        lie_apply(spec, x, lie_apply(spec, y, e)) -
        lie_apply(spec, y, lie_apply(spec, x, e));
    Polyform rhs = lie_apply(spec, bracket, e);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "spinor action fails to intertwine the bracket on monomial mask "
         << mask;
      return {false, os.str()};
    }
  }
  return {true, ""};
}

std::vector<Scalar> vector_action(const ModelSpec& spec, const SpinParam& x,
                                  const std::vector<Scalar>& y) {
  check_param(spec, x);
  if (static_cast<int>(y.size()) != spec.labels())
    throw dimension_mismatch("vector has wrong number of components");
  int n = spec.dim();
  // Dense matrix of the commutator [A(X), gamma(y)].
  Matrix commutator = mat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    Polyform bj = basis_spinor(spec, j);
    Polyform col = lie_apply(spec, x, gamma_vector_apply(spec, y, bj)) -
                   gamma_vector_apply(spec, y, lie_apply(spec, x, bj));
    std::vector<Scalar> coords = polyform_to_coords(spec, col);
    for (int i = 0; i < n; ++i) commutator[i][j] = coords[i];
  }
  // Project on each gamma via the trace form tr(gamma_A gamma_B) =
  // 2^m g_A delta_AB, then verify the decomposition is exact.
  std::vector<Scalar> z(spec.labels(), Scalar(0));
  Matrix residue = commutator;
  for (int a = 1; a <= spec.labels(); ++a) {
    Matrix ga = gamma_matrix(spec, a);
    Scalar trace(0);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < n; ++p) trace += ga[i][p] * commutator[p][i];
    Scalar coef = trace / Scalar(static_cast<long>(n) * spec.metric[a - 1]);
    z[a - 1] = coef;
    if (!coef.is_zero()) residue = mat_sub(residue, mat_scale(coef, ga));
  }
  if (!mat_is_zero(residue))
    throw invariant_violation(
        "commutator with a vector action did not decompose in the gamma basis");
  return z;
}

std::vector<SpinParam> degree_preserving_subalgebra(const ModelSpec& spec) {
  const auto pairs = upper_pairs(spec.labels());
  // For each monomial and each pair, gamma_A gamma_B sends the monomial to a
  // single monomial; collect the coefficients that land off-degree, one
  // constraint row per (source, target) pair.
  std::vector<std::vector<Scalar>> rows;
  for (Mask mask = 0; mask < static_cast<Mask>(spec.dim()); ++mask) {
    Polyform e = Polyform::monomial(spec.m, mask);
    std::map<Mask, std::vector<Scalar>> off_degree;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Polyform image =
          gamma_apply(spec, pairs[p].first, gamma_apply(spec, pairs[p].second, e));
      for (const auto& [target, c] : image.terms()) {
        if (mask_degree(target) == mask_degree(mask)) continue;
        auto [it, inserted] = off_degree.try_emplace(
            target, std::vector<Scalar>(pairs.size(), Scalar(0)));
        it->second[p] += c;
      }
    }
    for (auto& [target, row] : off_degree) rows.push_back(std::move(row));
  }
  return solve_param_kernel(spec, rows);
}

std::vector<SpinParam> stabilizer(const ModelSpec& spec, const Polyform& psi) {
  const auto pairs = upper_pairs(spec.labels());
  // Row per target monomial of (1/2) gamma_A gamma_B psi across all pairs.
  std::map<Mask, std::vector<Scalar>> by_target;
  const Scalar half(mpq_class(1, 2));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Polyform image = half * gamma_apply(spec, pairs[p].first,
                                        gamma_apply(spec, pairs[p].second, psi));
    for (const auto& [target, c] : image.terms()) {
      auto [it, inserted] = by_target.try_emplace(
          target, std::vector<Scalar>(pairs.size(), Scalar(0)));
      it->second[p] += c;
    }
  }
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(by_target.size());
  for (auto& [target, row] : by_target) rows.push_back(std::move(row));
  return solve_param_kernel(spec, rows);
}

Scalar vector_pairing(const ModelSpec& spec, const std::vector<Scalar>& v,
                      const std::vector<Scalar>& w) {
  if (static_cast<int>(v.size()) != spec.labels() ||
      static_cast<int>(w.size()) != spec.labels())
    throw dimension_mismatch("vector has wrong number of components");
  Scalar acc(0);
  for (int a = 0; a < spec.labels(); ++a)
    acc += Scalar(spec.metric[a]) * v[a] * w[a];
  return acc;
}

Polyform clifford_group_orbit(const ModelSpec& spec,
                              const std::vector<std::vector<Scalar>>& vectors,
                              const Polyform& psi) {
  Polyform out = psi;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vector_pairing(spec, vectors[i], vectors[i]).is_zero()) {
      std::ostringstream os;
      os << "orbit vector " << i + 1 << " is null; the twisted group needs "
         << "g(v, v) != 0";
      throw invalid_argument(os.str());
    }
    out = gamma_vector_apply(spec, vectors[i], out);
  }
  return out;
}

std::uint64_t SmallRng::next_u64() {
  // splitmix64 step.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SmallRng::next_int(long lo, long hi) {
  return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

mpq_class SmallRng::next_rational() {
  mpq_class q(next_int(-6, 6), next_int(1, 4));
  q.canonicalize();
  return q;
}

SpinParam SmallRng::next_spin_param(int labels) {
  SpinParam x = spin_param_zero(labels);
  for (int a = 0; a < labels; ++a)
    for (int b = a + 1; b < labels; ++b) {
      mpq_class v = next_rational();
      x[a][b] = v;
      x[b][a] = -v;
    }
  return x;
}

std::vector<Scalar> SmallRng::next_vector(int labels) {
  std::vector<Scalar> v;
  v.reserve(labels);
  for (int a = 0; a < labels; ++a)
    v.emplace_back(next_rational(), next_rational());
  return v;
}

std::uint64_t model_seed(int r, int s, int t) {
  // One splitmix64 scramble of the packed signature keeps runs deterministic
  // and independent across models.
  SmallRng rng((static_cast<std::uint64_t>(r) << 40) ^
               (static_cast<std::uint64_t>(s) << 20) ^
               static_cast<std::uint64_t>(t + 1));
  return rng.next_u64();
}

}  // namespace cliff
