#include "cliffmodel/pairing.hpp"

#include <sstream>

#include "cliffmodel/errors.hpp"

namespace cliff {

Scalar inner(const ModelSpec& spec, const Polyform& psi1, const Polyform& psi2) {
  if (psi1.gens() != spec.m || psi2.gens() != spec.m)
    throw dimension_mismatch("pairing arguments must live over m generators");
  // Complementary masks only: accumulate directly instead of building the
  // whole wedge product.
  Mask top = (Mask{1} << spec.m) - 1;
  Scalar acc(0);
  const Polyform rev = psi1.reverse();
  for (const auto& [mask, c] : rev.terms()) {
    Scalar other = psi2.coeff(top & ~mask);
    if (other.is_zero()) continue;
    Scalar contribution = c * other;
    if (wedge_sign(mask, top & ~mask) < 0) contribution = -contribution;
    acc += contribution;
  }
  return spec.top_orientation < 0 ? -acc : acc;
}

Matrix gram(const ModelSpec& spec) {
  int n = spec.dim();
  Matrix g = mat_zero(n, n);
  for (int i = 0; i < n; ++i) {
    Polyform bi = basis_spinor(spec, i);
    for (int j = 0; j < n; ++j)
      g[i][j] = inner(spec, bi, basis_spinor(spec, j));
  }
  return g;
}

CheckResult check_selfadjoint_gammas(const ModelSpec& spec) {
  int n = spec.dim();
  std::vector<Polyform> basis;
  basis.reserve(n);
  for (int i = 0; i < n; ++i) basis.push_back(basis_spinor(spec, i));

  for (int a = 1; a <= spec.labels(); ++a) {
    std::vector<Polyform> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) images.push_back(gamma_apply(spec, a, basis[i]));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar lhs = inner(spec, images[i], basis[j]);
        Scalar rhs = inner(spec, basis[i], images[j]);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "gamma_" << a << " fails self-adjointness on basis pair (" << i
             << ", " << j << "): " << lhs << " vs " << rhs;
          return {false, os.str()};
        }
      }
  }

  // Infinitesimal invariance for the degree-two generators.
  for (int a = 1; a <= spec.labels(); ++a)
    for (int b = a + 1; b <= spec.labels(); ++b) {
      std::vector<Polyform> images;
      images.reserve(n);
      for (int i = 0; i < n; ++i)
        images.push_back(gamma_apply(spec, a, gamma_apply(spec, b, basis[i])));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar total =
              inner(spec, images[i], basis[j]) + inner(spec, basis[i], images[j]);
          if (!total.is_zero()) {
            std::ostringstream os;
            os << "pairing not invariant under gamma_" << a << " gamma_" << b
               << " on basis pair (" << i << ", " << j << ")";
            return {false, os.str()};
          }
        }
    }
  return {true, ""};
}

}  // namespace cliff
