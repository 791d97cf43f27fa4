#pragma once

#include <string>

#include "cliffmodel/model.hpp"

namespace cliff {

// Antilinear operator psi -> phase * gamma_{f_1}(...(gamma_{f_p}(conj psi))).
// `mat` is the matrix of the linear part in the presentation basis, so the
// operator acts on coordinates as v -> mat * conj(v).
struct AntilinearOp {
  std::string label;         // "R" or "R'"
  std::vector<int> factors;  // as written; the leftmost factor acts last
  Scalar phase = Scalar(1);
  Matrix mat;
};

// Intertwiner built on the real-phase gammas, per the model's recipe.
AntilinearOp build_R(const ModelSpec& spec);
// Intertwiner built on the imaginary-phase gammas.
AntilinearOp build_R_prime(const ModelSpec& spec);

// Applies the operator at the polyform level (no dense matrices involved).
Polyform apply_antilinear(const ModelSpec& spec, const AntilinearOp& op,
                          const Polyform& psi);

// Sign epsilon with op^2 = epsilon * identity; throws invariant_violation if
// the square is not +/- identity.
int square_sign(const ModelSpec& spec, const AntilinearOp& op);

// Uniform sign epsilon with op gamma_A = epsilon gamma_A op for every label;
// throws invariant_violation if the sign differs across labels.
int commutation_sign(const ModelSpec& spec, const AntilinearOp& op);

enum class MajoranaClass { Majorana, MajoranaWeyl, None };

std::string to_string(MajoranaClass cls);

struct ClassifyResult {
  int r_square = 0;        // sign of R^2
  int r_prime_square = 0;  // sign of R'^2
  MajoranaClass cls = MajoranaClass::None;
  std::string witness;     // which operator realizes the class, if any
};

// A model admits a real structure iff one of the intertwiners squares to +1;
// the structure restricts to the semi-spinors iff that operator has an even
// number of gamma factors (preserves parity).
ClassifyResult classify(const ModelSpec& spec);

// The operator designated by the spec's hat choice; Default resolves to the
// intertwiner that commutes with every gamma.
AntilinearOp resolve_hat(const ModelSpec& spec);
AntilinearOp resolve_hat(const ModelSpec& spec, HatChoice choice);

// Companion spinor used by the degree-ladder pairings.
Polyform hat(const ModelSpec& spec, const Polyform& psi);
Polyform hat(const ModelSpec& spec, const Polyform& psi, HatChoice choice);

}  // namespace cliff
