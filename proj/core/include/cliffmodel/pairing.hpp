#pragma once

#include "cliffmodel/model.hpp"

namespace cliff {

// Invariant bilinear pairing on the spinor space: the coefficient of the top
// monomial in reverse(psi1) ^ psi2, read against the model's orientation.
// Bilinear in both slots (no conjugation anywhere).
Scalar inner(const ModelSpec& spec, const Polyform& psi1, const Polyform& psi2);

// Matrix of the pairing over the presentation basis, rows indexing the first
// slot.  Always a signed permutation matrix: each basis spinor pairs against
// exactly the one with complementary monomial.
Matrix gram(const ModelSpec& spec);

// Checks that every gamma is self-adjoint for the pairing on all basis pairs,
// and that the pairing is infinitesimally invariant: the two-sided sum
// <gamma_A gamma_B psi1, psi2> + <psi1, gamma_A gamma_B psi2> vanishes for all
// A < B (degree-two elements span the relevant algebra).
CheckResult check_selfadjoint_gammas(const ModelSpec& spec);

}  // namespace cliff
