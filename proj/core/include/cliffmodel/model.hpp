#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffmodel/linalg.hpp"
#include "cliffmodel/polyform.hpp"
#include "cliffmodel/scalar.hpp"

namespace cliff {

// How one exterior generator participates in the model: paired with +1 metric
// directions, paired with -1 directions, or carrying one direction of each.
enum class Role { ComplexPositive, ComplexNegative, Real };

// Whether a gamma operator is built from the sum or the difference of the
// creation and annihilation operators of its generator.
enum class Species { Sum, Diff };

// Which antilinear intertwiner supplies the "hat" companion spinor: the one
// built from real-phase gammas (R), from imaginary-phase gammas (RPrime), or
// whichever of the two commutes with every gamma (Default).
enum class HatChoice { Default, R, RPrime };

// One gamma operator: phase * (a_gen + a_gen^dag) or phase * (a_gen - a_gen^dag),
// with a = left exterior multiplication and a^dag = interior contraction.
struct GammaEntry {
  int gen = 1;                // 1-based exterior generator index
  Species species = Species::Sum;
  Scalar phase = Scalar(1);   // unit phase, one of +1, -1, +i, -i
};

// Recipe for an antilinear operator: compose the listed gamma factors in the
// written order (leftmost applied last), scale by a unit phase, then
// conjugate.
struct RealityLayout {
  std::vector<int> factors;
  Scalar phase = Scalar(1);
};

// Complete description of one creation/annihilation-operator model of the
// Clifford algebra Cl(r,s): generator roles, the gamma layout, the metric
// signs, the presentation basis of the spinor space, and the reality-operator
// recipes.
struct ModelSpec {
  std::string name;
  int r = 0, s = 0, t = 0;   // signature and real index
  int k = 0, l = 0, m = 0;   // generator counts per role; m = k + l + t
  std::vector<Role> roles;                    // size m, indexed by generator
  std::vector<GammaEntry> layout;             // size 2m, label A = index + 1
  std::vector<int> metric;                    // size 2m, +1 / -1 per label
  std::vector<std::pair<Mask, int>> basis;    // presentation order: mask, sign
  int top_orientation = 1;
  std::vector<std::string> label_names;       // display names, size 2m
  RealityLayout r_op;        // built on real-phase labels
  RealityLayout r_prime_op;  // built on imaginary-phase labels
  HatChoice hat = HatChoice::Default;

  int dim() const { return 1 << m; }          // dim of the spinor space
  int labels() const { return 2 * m; }
};

enum class PresetName {
  Spin2,
  Spin11,
  Spin4,
  Spin31,
  Spin22_index2,
  Spin22_index0,
  Spin6,
  Spin51,
  Spin42_index0,
  Spin33_index1,
  Spin33_index3,
};

std::vector<PresetName> all_presets();
std::string preset_cli_name(PresetName name);
std::optional<PresetName> parse_preset_name(const std::string& text);

// The models worked out explicitly in the reference tables, with their
// published gamma orderings, presentation bases, and operator recipes.
ModelSpec preset(PresetName name);

// Admissible real indices of Cl(r,s), largest first: s, s-2, ..., down to
// 0 or 1.  Throws invalid_argument("unsupported-signature: ...") when r < s,
// r + s is odd or zero, or r + s exceeds 16.
std::vector<int> enumerate_real_indices(int r, int s);

// Canonical model of Cl(r,s) with real index t: complex-positive generators
// first, then complex-negative, then real; gamma labels grouped as documented
// in the README.  Validates (r, s, t) and the resulting spec.
ModelSpec plan_model(int r, int s, int t);

// Every canonical model with r + s <= max_dim, in deterministic order:
// ascending total dimension, then ascending s, then descending t.
std::vector<ModelSpec> enumerate_models(int max_dim);

// Structural checks on a spec: consistent sizes, unit phases, role/phase
// counts, presentation basis a signed permutation of the monomials.  Throws
// invariant_violation with a description on failure.
void validate_spec(const ModelSpec& spec);

// Applies the gamma operator with 1-based label A.  One ladder move per
// monomial, so this is linear in the number of terms.
Polyform gamma_apply(const ModelSpec& spec, int label, const Polyform& psi);

// Clifford action of the vector y = (y^1, ..., y^{2m}): sum of y^A gamma_A.
Polyform gamma_vector_apply(const ModelSpec& spec,
                            const std::vector<Scalar>& y, const Polyform& psi);

// Dense matrix of gamma_label in the presentation basis (columns = images of
// the basis spinors).
Matrix gamma_matrix(const ModelSpec& spec, int label);

// Presentation-basis conversions.
Polyform basis_spinor(const ModelSpec& spec, int index);
std::vector<Scalar> polyform_to_coords(const ModelSpec& spec,
                                       const Polyform& psi);
Polyform coords_to_polyform(const ModelSpec& spec,
                            const std::vector<Scalar>& coords);

// Vacuum (the constant spinor 1) and the top spinor e_1^...^e_m.
Polyform vacuum_spinor(const ModelSpec& spec);
Polyform top_spinor(const ModelSpec& spec);

// Result of an exhaustive relation check.
struct CheckResult {
  bool ok = true;
  std::string detail;  // first violation, empty when ok
};

// Verifies gamma_A gamma_B + gamma_B gamma_A = 2 g_AB on every monomial.
CheckResult verify_clifford(const ModelSpec& spec);

}  // namespace cliff
