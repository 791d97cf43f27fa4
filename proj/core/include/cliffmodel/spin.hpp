#pragma once

#include <cstdint>
#include <vector>

#include "cliffmodel/model.hpp"

namespace cliff {

// Antisymmetric rational parameter matrix X^{AB} of a spin Lie-algebra
// element, stored densely with both triangles.
using SpinParam = std::vector<std::vector<mpq_class>>;

SpinParam spin_param_zero(int labels);

// Builds X from its strictly-upper entries {(A, B, value)} with 1-based
// labels, filling the lower triangle antisymmetrically.
SpinParam spin_param_from_upper(
    int labels, const std::vector<std::tuple<int, int, mpq_class>>& entries);

// Spinor action of X: half the sum over A < B of X^{AB} gamma_A gamma_B.
Polyform lie_apply(const ModelSpec& spec, const SpinParam& x,
                   const Polyform& psi);

// Dense matrix of the spinor action in the presentation basis.
Matrix lie_matrix(const ModelSpec& spec, const SpinParam& x);

// Commutator in the parameter space: [X, Y]^{AB} contracted through the
// metric, the bracket the spinor action must intertwine.
SpinParam spin_bracket(const ModelSpec& spec, const SpinParam& x,
                       const SpinParam& y);

// Verifies [A(X), A(Y)] = A([X, Y]) on every basis monomial.
CheckResult check_homomorphism(const ModelSpec& spec, const SpinParam& x,
                               const SpinParam& y);

// Action induced on vectors: the commutator [A(X), gamma(y)] is again the
// Clifford action of a vector, returned here.  Throws invariant_violation if
// the commutator fails to decompose exactly in the gamma basis.
std::vector<Scalar> vector_action(const ModelSpec& spec, const SpinParam& x,
                                  const std::vector<Scalar>& y);

// Basis of the subalgebra of parameters whose spinor action preserves the
// exterior degree of every monomial.
std::vector<SpinParam> degree_preserving_subalgebra(const ModelSpec& spec);

// Basis of the stabilizer subalgebra {X : A(X) psi = 0}.
std::vector<SpinParam> stabilizer(const ModelSpec& spec, const Polyform& psi);

// Applies the Clifford actions of the given vectors in sequence (first vector
// first).  Every vector must satisfy g(v, v) != 0; throws invalid_argument on
// a null vector.
Polyform clifford_group_orbit(const ModelSpec& spec,
                              const std::vector<std::vector<Scalar>>& vectors,
                              const Polyform& psi);

// Metric pairing of two coordinate vectors.
Scalar vector_pairing(const ModelSpec& spec, const std::vector<Scalar>& v,
                      const std::vector<Scalar>& w);

// Deterministic pseudo-random rationals for property checks: a 64-bit mix
// generator with small-integer outputs.
class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  // Uniform integer in [lo, hi].
  long next_int(long lo, long hi);
  mpq_class next_rational();  // small numerator and denominator
  SpinParam next_spin_param(int labels);
  std::vector<Scalar> next_vector(int labels);

 private:
  std::uint64_t state_;
};

// Seed used for the per-model deterministic checks.
std::uint64_t model_seed(int r, int s, int t);

}  // namespace cliff
