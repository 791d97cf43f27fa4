#include "cliffmodel/model.hpp"

#include <algorithm>
#include <sstream>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

const Scalar kOne(1);
const Scalar kI(0, 1);
const Scalar kMinusI(0, -1);

bool is_unit_phase(const Scalar& p) {
  return p == Scalar(1) || p == Scalar(-1) || p == Scalar(0, 1) ||
         p == Scalar(0, -1);
}

std::vector<std::pair<Mask, int>> identity_basis(int m) {
  std::vector<std::pair<Mask, int>> basis;
  basis.reserve(std::size_t{1} << m);
  for (Mask mask = 0; mask < (Mask{1} << m); ++mask) basis.emplace_back(mask, 1);
  return basis;
}

std::vector<std::string> numeric_label_names(int labels) {
  std::vector<std::string> names;
  names.reserve(labels);
  for (int a = 1; a <= labels; ++a) names.push_back(std::to_string(a));
  return names;
}

// Ascending labels whose phase is real (+1/-1) resp. imaginary (+i/-i).
std::vector<int> labels_with_phase(const ModelSpec& spec, bool imaginary) {
  std::vector<int> labels;
  for (int a = 1; a <= spec.labels(); ++a)
    if ((spec.layout[a - 1].phase.re() == 0) == imaginary) labels.push_back(a);
  return labels;
}

// Shared semi-spinor presentation used by the dimension-six presets, chosen to
// match the published matrix tables: the even block is (e2^e3, -e1^e3,
// e1^e2, 1) and the odd block is (e1, e2, e3, -e1^e2^e3).
std::vector<std::pair<Mask, int>> dim6_basis() {
  return {{0b110, 1}, {0b101, -1}, {0b011, 1}, {0b000, 1},
          {0b001, 1}, {0b010, 1}, {0b100, 1}, {0b111, -1}};
}

ModelSpec finish(ModelSpec spec) {
  spec.m = spec.k + spec.l + spec.t;
  if (spec.label_names.empty())
    spec.label_names = numeric_label_names(spec.labels());
  if (spec.basis.empty()) spec.basis = identity_basis(spec.m);
  if (spec.r_op.factors.empty() && spec.r_prime_op.factors.empty()) {
    spec.r_op.factors = labels_with_phase(spec, false);
    spec.r_prime_op.factors = labels_with_phase(spec, true);
  }
  validate_spec(spec);
  return spec;
}

}  // namespace

std::vector<PresetName> all_presets() {
  return {PresetName::Spin2,         PresetName::Spin11,
          PresetName::Spin4,         PresetName::Spin31,
          PresetName::Spin22_index2, PresetName::Spin22_index0,
          PresetName::Spin6,         PresetName::Spin51,
          PresetName::Spin42_index0, PresetName::Spin33_index1,
          PresetName::Spin33_index3};
}

std::string preset_cli_name(PresetName name) {
  switch (name) {
    case PresetName::Spin2: return "spin2";
    case PresetName::Spin11: return "spin11";
    case PresetName::Spin4: return "spin4";
    case PresetName::Spin31: return "spin31";
    case PresetName::Spin22_index2: return "spin22_t2";
    case PresetName::Spin22_index0: return "spin22_t0";
    case PresetName::Spin6: return "spin6";
    case PresetName::Spin51: return "spin51";
    case PresetName::Spin42_index0: return "spin42";
    case PresetName::Spin33_index1: return "spin33_t1";
    case PresetName::Spin33_index3: return "spin33_t3";
  }
  throw invalid_argument("unknown preset enumerator");
}

std::optional<PresetName> parse_preset_name(const std::string& text) {
  for (PresetName name : all_presets()) {
    if (text == preset_cli_name(name)) return name;
  }
  // Long-form aliases mirroring the enumerator spellings.
  if (text == "spin22_index2") return PresetName::Spin22_index2;
  if (text == "spin22_index0") return PresetName::Spin22_index0;
  if (text == "spin42_index0") return PresetName::Spin42_index0;
  if (text == "spin33_index1") return PresetName::Spin33_index1;
  if (text == "spin33_index3") return PresetName::Spin33_index3;
  return std::nullopt;
}

ModelSpec preset(PresetName name) {
  ModelSpec spec;
  spec.name = preset_cli_name(name);
  switch (name) {
    case PresetName::Spin2:
      spec.r = 2; spec.s = 0; spec.t = 0; spec.k = 1; spec.l = 0;
      spec.roles = {Role::ComplexPositive};
      spec.layout = {{1, Species::Sum, kOne}, {1, Species::Diff, kI}};
      spec.metric = {1, 1};
      break;
    case PresetName::Spin11:
      spec.r = 1; spec.s = 1; spec.t = 1; spec.k = 0; spec.l = 0;
      spec.roles = {Role::Real};
      spec.layout = {{1, Species::Sum, kOne}, {1, Species::Diff, kOne}};
      spec.metric = {1, -1};
      break;
    case PresetName::Spin4:
      spec.r = 4; spec.s = 0; spec.t = 0; spec.k = 2; spec.l = 0;
      spec.roles = {Role::ComplexPositive, Role::ComplexPositive};
      spec.layout = {{2, Species::Diff, kMinusI},
                     {2, Species::Sum, kOne},
                     {1, Species::Diff, kMinusI},
                     {1, Species::Sum, kOne}};
      spec.metric = {1, 1, 1, 1};
      spec.basis = {{0b00, 1}, {0b11, 1}, {0b01, 1}, {0b10, 1}};
      spec.hat = HatChoice::RPrime;
      break;
    case PresetName::Spin31:
      spec.r = 3; spec.s = 1; spec.t = 1; spec.k = 1; spec.l = 0;
      spec.roles = {Role::ComplexPositive, Role::Real};
      spec.layout = {{1, Species::Sum, kOne},
                     {1, Species::Diff, kI},
                     {2, Species::Sum, kOne},
                     {2, Species::Diff, kOne}};
      spec.metric = {1, 1, 1, -1};
      spec.basis = {{0b00, 1}, {0b11, 1}, {0b10, 1}, {0b01, 1}};
      spec.label_names = {"1", "2", "3", "0"};
      // Published factor order: gamma_0 gamma_1 gamma_3 (an even permutation
      // of the ascending order, so the operator is unchanged).
      spec.r_op.factors = {4, 1, 3};
      spec.r_prime_op.factors = {2};
      spec.hat = HatChoice::R;
      break;
    case PresetName::Spin22_index2:
      spec.r = 2; spec.s = 2; spec.t = 2; spec.k = 0; spec.l = 0;
      spec.roles = {Role::Real, Role::Real};
      spec.layout = {{1, Species::Sum, kOne},
                     {2, Species::Sum, kOne},
                     {1, Species::Diff, kOne},
                     {2, Species::Diff, kOne}};
      spec.metric = {1, 1, -1, -1};
      spec.basis = {{0b00, 1}, {0b11, 1}, {0b01, 1}, {0b10, 1}};
      break;
    case PresetName::Spin22_index0:
      spec.r = 2; spec.s = 2; spec.t = 0; spec.k = 1; spec.l = 1;
      spec.roles = {Role::ComplexPositive, Role::ComplexNegative};
      spec.layout = {{1, Species::Sum, kOne},
                     {1, Species::Diff, kMinusI},
                     {2, Species::Diff, kOne},
                     {2, Species::Sum, kI}};
      spec.metric = {1, 1, -1, -1};
      spec.basis = {{0b00, 1}, {0b11, 1}, {0b01, 1}, {0b10, 1}};
      spec.hat = HatChoice::RPrime;
      break;
    case PresetName::Spin6:
      spec.r = 6; spec.s = 0; spec.t = 0; spec.k = 3; spec.l = 0;
      spec.roles = {Role::ComplexPositive, Role::ComplexPositive,
                    Role::ComplexPositive};
      spec.layout = {{1, Species::Sum, kOne},  {2, Species::Sum, kOne},
                     {3, Species::Sum, kOne},  {1, Species::Diff, kI},
                     {2, Species::Diff, kI},   {3, Species::Diff, kI}};
      spec.metric = {1, 1, 1, 1, 1, 1};
      spec.basis = dim6_basis();
      spec.r_prime_op.factors = {4, 5, 6};
      spec.r_prime_op.phase = kMinusI;
      spec.r_op.factors = {1, 2, 3};
      spec.hat = HatChoice::RPrime;
      break;
    case PresetName::Spin51:
      spec.r = 5; spec.s = 1; spec.t = 1; spec.k = 2; spec.l = 0;
      spec.roles = {Role::ComplexPositive, Role::ComplexPositive, Role::Real};
      spec.layout = {{1, Species::Sum, kOne},  {2, Species::Sum, kOne},
                     {3, Species::Sum, kOne},  {1, Species::Diff, kI},
                     {2, Species::Diff, kI},   {3, Species::Diff, kOne}};
      spec.metric = {1, 1, 1, 1, 1, -1};
      spec.basis = dim6_basis();
      spec.hat = HatChoice::RPrime;
      break;
    case PresetName::Spin42_index0:
      spec.r = 4; spec.s = 2; spec.t = 0; spec.k = 2; spec.l = 1;
      spec.roles = {Role::ComplexPositive, Role::ComplexPositive,
                    Role::ComplexNegative};
      spec.layout = {{1, Species::Sum, kOne},  {2, Species::Sum, kOne},
                     {3, Species::Sum, kI},    {1, Species::Diff, kI},
                     {2, Species::Diff, kI},   {3, Species::Diff, kOne}};
      spec.metric = {1, 1, -1, 1, 1, -1};
      spec.basis = dim6_basis();
      spec.hat = HatChoice::R;
      break;
    case PresetName::Spin33_index1:
      spec.r = 3; spec.s = 3; spec.t = 1; spec.k = 1; spec.l = 1;
      spec.roles = {Role::ComplexPositive, Role::Real, Role::ComplexNegative};
      spec.layout = {{1, Species::Sum, kOne},  {2, Species::Sum, kOne},
                     {3, Species::Sum, kI},    {1, Species::Diff, kI},
                     {2, Species::Diff, kOne}, {3, Species::Diff, kOne}};
      spec.metric = {1, 1, -1, 1, -1, -1};
      spec.basis = dim6_basis();
      spec.hat = HatChoice::R;
      break;
    case PresetName::Spin33_index3: {
      ModelSpec canonical = plan_model(3, 3, 3);
      canonical.name = spec.name;
      return canonical;
    }
  }
  return finish(std::move(spec));
}

std::vector<int> enumerate_real_indices(int r, int s) {
  if (r < 0 || s < 0 || r < s || (r + s) % 2 != 0 || r + s == 0 || r + s > 16) {
    std::ostringstream os;
    os << "unsupported-signature: Cl(" << r << "," << s
       << ") is outside the admissible family (need r >= s >= 0, r + s even, "
          "2 <= r + s <= 16)";
    throw invalid_argument(os.str());
  }
  std::vector<int> indices;
  for (int t = s; t >= 0; t -= 2) indices.push_back(t);
  return indices;
}

ModelSpec plan_model(int r, int s, int t) {
  std::vector<int> admissible = enumerate_real_indices(r, s);
  if (std::find(admissible.begin(), admissible.end(), t) == admissible.end()) {
    std::ostringstream os;
    os << "unsupported-signature: real index " << t << " is not admissible for "
       << "Cl(" << r << "," << s << ") (need t <= s with t = s mod 2)";
    throw invalid_argument(os.str());
  }

  ModelSpec spec;
  spec.r = r;
  spec.s = s;
  spec.t = t;
  spec.k = (r - t) / 2;
  spec.l = (s - t) / 2;
  {
    std::ostringstream os;
    os << "cl(" << r << "," << s << ") t=" << t;
    spec.name = os.str();
  }
  spec.roles.insert(spec.roles.end(), spec.k, Role::ComplexPositive);
  spec.roles.insert(spec.roles.end(), spec.l, Role::ComplexNegative);
  spec.roles.insert(spec.roles.end(), spec.t, Role::Real);

  spec.layout.resize(2 * (spec.k + spec.l + spec.t));
  spec.metric.resize(spec.layout.size());
  int pos = 0;
  auto put = [&](int gen, Species species, Scalar phase, int g) {
    spec.layout[pos] = {gen, species, std::move(phase)};
    spec.metric[pos] = g;
    ++pos;
  };
  // Positive-direction sums, then positive-direction differences, for the
  // complex-positive generators.
  for (int j = 1; j <= spec.k; ++j) put(j, Species::Sum, kOne, 1);
  for (int j = 1; j <= spec.k; ++j) put(j, Species::Diff, kI, 1);
  // Negative-direction sums, then differences, for the complex-negative ones.
  for (int j = 1; j <= spec.l; ++j) put(spec.k + j, Species::Sum, kI, -1);
  for (int j = 1; j <= spec.l; ++j) put(spec.k + j, Species::Diff, kOne, -1);
  // One alternating +/- pair per real generator.
  for (int j = 1; j <= spec.t; ++j) {
    put(spec.k + spec.l + j, Species::Sum, kOne, 1);
    put(spec.k + spec.l + j, Species::Diff, kOne, -1);
  }
  return finish(std::move(spec));
}

std::vector<ModelSpec> enumerate_models(int max_dim) {
  if (max_dim < 2 || max_dim > 16)
    throw invalid_argument("max_dim must lie in [2, 16]");
  std::vector<ModelSpec> models;
  for (int n = 2; n <= max_dim; n += 2)
    for (int s = 0; 2 * s <= n; ++s)
      for (int t : enumerate_real_indices(n - s, s))
        models.push_back(plan_model(n - s, s, t));
  return models;
}

void validate_spec(const ModelSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw invariant_violation("model spec '" + spec.name + "': " + why);
  };
  int m = spec.k + spec.l + spec.t;
  if (spec.m != m) fail("generator count m != k + l + t");
  if (spec.r != 2 * spec.k + spec.t || spec.s != 2 * spec.l + spec.t)
    fail("signature does not match role counts");
  if (static_cast<int>(spec.roles.size()) != m) fail("roles size != m");
  if (static_cast<int>(spec.layout.size()) != 2 * m) fail("layout size != 2m");
  if (static_cast<int>(spec.metric.size()) != 2 * m) fail("metric size != 2m");
  if (static_cast<int>(spec.label_names.size()) != 2 * m)
    fail("label_names size != 2m");
  if (spec.top_orientation != 1 && spec.top_orientation != -1)
    fail("top orientation must be +1 or -1");

  int role_counts[3] = {0, 0, 0};
  for (Role role : spec.roles) ++role_counts[static_cast<int>(role)];
  if (role_counts[0] != spec.k || role_counts[1] != spec.l ||
      role_counts[2] != spec.t)
    fail("role multiset does not match (k, l, t)");

  int plus = 0;
  for (int g : spec.metric) {
    if (g != 1 && g != -1) fail("metric entries must be +1 or -1");
    if (g == 1) ++plus;
  }
  if (plus != spec.r) fail("metric signature does not match (r, s)");

  // Each generator must appear in exactly one Sum and one Diff label, and the
  // phase statistics must match the role counts: k + l imaginary phases,
  // k + l + 2t real phases.
  std::vector<int> sum_seen(m, 0), diff_seen(m, 0);
  int imag_phases = 0;
  for (const GammaEntry& e : spec.layout) {
    if (e.gen < 1 || e.gen > m) fail("layout generator index out of range");
    if (!is_unit_phase(e.phase)) fail("layout phase must be a fourth root of 1");
    if (e.phase.re() == 0) ++imag_phases;
    ++(e.species == Species::Sum ? sum_seen : diff_seen)[e.gen - 1];
  }
  for (int j = 0; j < m; ++j)
    if (sum_seen[j] != 1 || diff_seen[j] != 1)
      fail("each generator needs exactly one Sum and one Diff label");
  if (imag_phases != spec.k + spec.l)
    fail("imaginary-phase label count must equal k + l");

  if (static_cast<int>(spec.basis.size()) != spec.dim())
    fail("presentation basis must have 2^m entries");
  std::vector<bool> seen(spec.dim(), false);
  for (const auto& [mask, sign] : spec.basis) {
    if (mask >= static_cast<Mask>(spec.dim())) fail("basis mask out of range");
    if (seen[mask]) fail("duplicate mask in presentation basis");
    seen[mask] = true;
    if (sign != 1 && sign != -1) fail("basis signs must be +1 or -1");
  }

  for (const RealityLayout* op : {&spec.r_op, &spec.r_prime_op}) {
    if (!is_unit_phase(op->phase)) fail("reality phase must be a unit phase");
    for (int a : op->factors)
      if (a < 1 || a > 2 * m) fail("reality factor label out of range");
  }
}

Polyform gamma_apply(const ModelSpec& spec, int label, const Polyform& psi) {
  if (label < 1 || label > spec.labels())
    throw invalid_argument("gamma label out of range: " + std::to_string(label));
  const GammaEntry& e = spec.layout[label - 1];
  Polyform created = wedge_generator(e.gen, psi);
  Polyform annihilated = contract_generator(e.gen, psi);
  Polyform out = e.species == Species::Sum ? created + annihilated
                                           : created - annihilated;
  if (e.phase.is_one()) return out;
  return e.phase * out;
}

Polyform gamma_vector_apply(const ModelSpec& spec,
                            const std::vector<Scalar>& y, const Polyform& psi) {
  if (static_cast<int>(y.size()) != spec.labels())
    throw dimension_mismatch("vector has wrong number of components");
  Polyform out(spec.m);
  for (int a = 1; a <= spec.labels(); ++a) {
    if (y[a - 1].is_zero()) continue;
    out += y[a - 1] * gamma_apply(spec, a, psi);
  }
  return out;
}

Polyform basis_spinor(const ModelSpec& spec, int index) {
  if (index < 0 || index >= spec.dim())
    throw invalid_argument("basis index out of range");
  const auto& [mask, sign] = spec.basis[index];
  return Polyform::monomial(spec.m, mask, Scalar(sign));
}

std::vector<Scalar> polyform_to_coords(const ModelSpec& spec,
                                       const Polyform& psi) {
  if (psi.gens() != spec.m)
    throw dimension_mismatch("polyform generator count != model m");
  std::vector<Scalar> coords;
  coords.reserve(spec.basis.size());
  for (const auto& [mask, sign] : spec.basis) {
    Scalar c = psi.coeff(mask);
    coords.push_back(sign < 0 ? -c : c);
  }
  return coords;
}

Polyform coords_to_polyform(const ModelSpec& spec,
                            const std::vector<Scalar>& coords) {
  if (coords.size() != spec.basis.size())
    throw dimension_mismatch("coordinate vector has wrong length");
  Polyform psi(spec.m);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& [mask, sign] = spec.basis[i];
    psi.add_term(mask, sign < 0 ? -coords[i] : coords[i]);
  }
  return psi;
}

Polyform vacuum_spinor(const ModelSpec& spec) { return Polyform::one(spec.m); }

Polyform top_spinor(const ModelSpec& spec) {
  return Polyform::monomial(spec.m, (Mask{1} << spec.m) - 1);
}

Matrix gamma_matrix(const ModelSpec& spec, int label) {
  int n = spec.dim();
  Matrix mat = mat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> col =
        polyform_to_coords(spec, gamma_apply(spec, label, basis_spinor(spec, j)));
    for (int i = 0; i < n; ++i) mat[i][j] = col[i];
  }
  return mat;
}

CheckResult verify_clifford(const ModelSpec& spec) {
  for (Mask mask = 0; mask < static_cast<Mask>(spec.dim()); ++mask) {
    Polyform e = Polyform::monomial(spec.m, mask);
    std::vector<Polyform> first;
    first.reserve(spec.labels());
    for (int a = 1; a <= spec.labels(); ++a)
      first.push_back(gamma_apply(spec, a, e));
    for (int a = 1; a <= spec.labels(); ++a)
      for (int b = a; b <= spec.labels(); ++b) {
        Polyform anti =
            gamma_apply(spec, a, first[b - 1]) + gamma_apply(spec, b, first[a - 1]);
        if (a == b) anti -= Scalar(2 * spec.metric[a - 1]) * e;
        if (!anti.is_zero()) {
          std::ostringstream os;
          os << "relation failure at labels (" << a << ", " << b
             << ") on monomial mask " << mask << ": residue " << anti.to_string();
          return {false, os.str()};
        }
      }
  }
  return {true, ""};
}

}  // namespace cliff
