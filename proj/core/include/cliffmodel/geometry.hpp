#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffmodel/model.hpp"
#include "cliffmodel/reality.hpp"

namespace cliff {

// Exact antisymmetric tensor of fixed degree, stored by ascending 1-based
// label tuples.  Zero components are never stored.
struct Multivector {
  int degree = 0;
  std::map<std::vector<int>, Scalar> comps;

  bool is_zero() const { return comps.empty(); }
  Scalar component(const std::vector<int>& labels) const;
  void add(const std::vector<int>& labels, const Scalar& c);
  std::string to_string() const;
};

// Exterior product of two multivectors on label tuples.
Multivector wedge(const Multivector& a, const Multivector& b);

// Degree-k pairing component: for each ascending tuple (A_1 < ... < A_k) the
// value <psi1, gamma_{A_1}(...(gamma_{A_k} psi2))>.
Multivector bilinear_B(const ModelSpec& spec, int k, const Polyform& psi1,
                       const Polyform& psi2);

// All degrees 0..2m in one shared traversal of the label-subset tree.
std::vector<Multivector> bilinear_all(const ModelSpec& spec,
                                      const Polyform& psi1,
                                      const Polyform& psi2);

// Vectors v with gamma(v) psi = 0: a complex subspace of dimension at most m,
// returned as an echelon-normalized basis of coordinate vectors.
std::vector<std::vector<Scalar>> annihilator(const ModelSpec& spec,
                                             const Polyform& psi);

// A nonzero spinor is pure iff its annihilator has the maximal dimension m.
bool is_pure(const ModelSpec& spec, const Polyform& psi);

// Real dimension of the real vectors inside the annihilator.  Requires a pure
// spinor; throws invalid_argument otherwise.
int real_index(const ModelSpec& spec, const Polyform& psi);

// Purity witness on the pairing side: every B_k(psi, psi) with k != m
// vanishes, B_m does not, the lowered annihilator directions wedge B_m to
// zero (so B_m is the volume of the annihilator plane), and the annihilator
// is totally isotropic.
CheckResult cartan_check(const ModelSpec& spec, const Polyform& psi);

struct IndexReport {
  bool ok = false;
  int t_star = 0;                   // real index of psi
  std::vector<int> nonzero_degrees; // degrees with B_k(hat psi, psi) != 0
  std::string detail;
};

// Degree-ladder constraints tied to the real index: B_k(hat psi, psi) must
// vanish for k = t* - 2, t* - 4, ... and must not vanish at k = t*.
IndexReport index_constraints_check(const ModelSpec& spec, const Polyform& psi,
                                    HatChoice hat_choice);
IndexReport index_constraints_check(const ModelSpec& spec, const Polyform& psi);

struct MixedStructure {
  Matrix k_matrix;      // endomorphism of the vector space, second index raised
  bool normalized = false;  // true when k_matrix squares to +identity
  Scalar square_scale;  // the proportionality factor before rescaling
};

// Mixed structure induced by a complementary pair of pure spinors: the
// degree-two pairing with its second index raised through the metric, rescaled
// to square to identity when the scale admits an exact root.  Throws
// invalid_argument on a degenerate pair (<psi1, psi2> = 0) and on a
// non-complementary pair (square not proportional to a nonzero multiple of
// the identity).
MixedStructure mixed_from_pair(const ModelSpec& spec, const Polyform& psi1,
                               const Polyform& psi2);

struct ProductSplit {
  Matrix p;                                   // K conj(K), real with P^2 = 1
  std::vector<std::vector<Scalar>> plus_basis;   // eigenvalue +1
  std::vector<std::vector<Scalar>> minus_basis;  // eigenvalue -1
  Matrix i_part;  // real, squares to the +1 projector on its eigenspace
  Matrix j_part;  // real, squares to minus the -1 projector
};

// Splits a normalized mixed structure into its paracomplex part I on the +1
// eigenspace of K conj(K) and its complex part J on the -1 eigenspace, with
// K = I pi_+ + i J pi_-.
ProductSplit decompose_mixed(const ModelSpec& spec,
                             const MixedStructure& mixed);

// Complex structure attached to a pure spinor of real index zero: the raised
// degree-two pairing of (hat psi, psi), rescaled so the square is exactly
// minus the identity.  Throws invalid_argument when the square is not a
// nonzero multiple of the identity or the result fails to be real (both
// signal a nonzero real index), or when the rescaling has no exact root.
Matrix complex_structure_from_spinor(const ModelSpec& spec,
                                     const Polyform& psi);

// Antisymmetric matrix of a degree-two multivector, and the raise of its
// second index through the metric (the shared step of the two constructions
// above).
Matrix two_form_matrix(const ModelSpec& spec, const Multivector& form);
Matrix raise_second_index(const ModelSpec& spec, const Matrix& two_form);

}  // namespace cliff
