#include "cliffmodel/geometry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cliffmodel/errors.hpp"
#include "cliffmodel/pairing.hpp"
#include "cliffmodel/spin.hpp"

namespace cliff {

Scalar Multivector::component(const std::vector<int>& labels) const {
  auto it = comps.find(labels);
  return it == comps.end() ? Scalar(0) : it->second;
}

void Multivector::add(const std::vector<int>& labels, const Scalar& c) {
  if (static_cast<int>(labels.size()) != degree)
    throw dimension_mismatch("component tuple length != multivector degree");
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw invalid_argument("component labels must be strictly ascending");
  if (c.is_zero()) return;
  auto [it, inserted] = comps.try_emplace(labels, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps.erase(it);
  }
}

std::string Multivector::to_string() const {
  if (comps.empty()) return "·";
  std::ostringstream os;
  bool first = true;
  for (const auto& [labels, c] : comps) {
    if (!first) os << "  ";
    first = false;
    os << "(";
    for (std::size_t i = 0; i < labels.size(); ++i)
      os << (i ? "," : "") << labels[i];
    os << "): " << c.to_short_string();
  }
  return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  Multivector out;
  out.degree = a.degree + b.degree;
  for (const auto& [la, ca] : a.comps)
    for (const auto& [lb, cb] : b.comps) {
      // Merge the ascending tuples, counting transpositions; equal labels kill
      // the term.
      std::vector<int> merged;
      merged.reserve(la.size() + lb.size());
      std::size_t ia = 0, ib = 0;
      int inversions = 0;
      bool zero = false;
      while (ia < la.size() && ib < lb.size()) {
        if (la[ia] == lb[ib]) {
          zero = true;
          break;
        }
        if (la[ia] < lb[ib]) {
          merged.push_back(la[ia++]);
        } else {
          inversions += static_cast<int>(la.size() - ia);
          merged.push_back(lb[ib++]);
        }
      }
      if (zero) continue;
      while (ia < la.size()) merged.push_back(la[ia++]);
      while (ib < lb.size()) merged.push_back(lb[ib++]);
      Scalar c = ca * cb;
      if (inversions % 2 != 0) c = -c;
      out.add(merged, c);
    }
  return out;
}

namespace {

// Walks the tree of ascending label tuples, prepending ever-smaller labels;
// each node's polyform is gamma_(tuple) psi2 with the smallest label applied
// outermost, so parents are shared by all extensions.
void walk_tuples(const ModelSpec& spec, const Polyform& psi1,
                 const Polyform& node, std::vector<int>& tuple_desc,
                 int max_label, const std::vector<bool>& wanted,
                 std::vector<Multivector>& out) {
  int len = static_cast<int>(tuple_desc.size());
  if (wanted[len]) {
    std::vector<int> ascending(tuple_desc.rbegin(), tuple_desc.rend());
    out[len].add(ascending, inner(spec, psi1, node));
  }
  // Descend only if some wanted degree is still reachable with the labels
  // remaining below max_label.
  bool reachable = false;
  for (int d = len + 1; d <= len + max_label && !reachable; ++d)
    reachable = wanted[d];
  if (!reachable) return;
  for (int a = max_label; a >= 1; --a) {
    tuple_desc.push_back(a);
    Polyform child = gamma_apply(spec, a, node);
    walk_tuples(spec, psi1, child, tuple_desc, a - 1, wanted, out);
    tuple_desc.pop_back();
  }
}

std::vector<Multivector> bilinear_walk(const ModelSpec& spec,
                                       const Polyform& psi1,
                                       const Polyform& psi2,
                                       const std::vector<bool>& wanted) {
  std::vector<Multivector> out(spec.labels() + 1);
  for (int d = 0; d <= spec.labels(); ++d) out[d].degree = d;
  std::vector<int> tuple_desc;
  walk_tuples(spec, psi1, psi2, tuple_desc, spec.labels(), wanted, out);
  return out;
}

void check_spinor(const ModelSpec& spec, const Polyform& psi,
                  const char* what) {
  if (psi.gens() != spec.m)
    throw dimension_mismatch(std::string(what) +
                             ": polyform generator count != model m");
  if (psi.is_zero())
    throw invalid_argument(std::string(what) + ": zero spinor");
}

}  // namespace

Multivector bilinear_B(const ModelSpec& spec, int k, const Polyform& psi1,
                       const Polyform& psi2) {
  if (k < 0 || k > spec.labels())
    throw invalid_argument("pairing degree out of range");
  if (psi1.gens() != spec.m || psi2.gens() != spec.m)
    throw dimension_mismatch("pairing arguments must live over m generators");
  std::vector<bool> wanted(spec.labels() + 1, false);
  wanted[k] = true;
  return bilinear_walk(spec, psi1, psi2, wanted)[k];
}

std::vector<Multivector> bilinear_all(const ModelSpec& spec,
                                      const Polyform& psi1,
                                      const Polyform& psi2) {
  if (psi1.gens() != spec.m || psi2.gens() != spec.m)
    throw dimension_mismatch("pairing arguments must live over m generators");
  std::vector<bool> wanted(spec.labels() + 1, true);
  return bilinear_walk(spec, psi1, psi2, wanted);
}

std::vector<std::vector<Scalar>> annihilator(const ModelSpec& spec,
                                             const Polyform& psi) {
  check_spinor(spec, psi, "annihilator");
  int n = spec.dim();
  Matrix columns = mat_zero(n, spec.labels());
  for (int a = 1; a <= spec.labels(); ++a) {
    std::vector<Scalar> col = polyform_to_coords(spec, gamma_apply(spec, a, psi));
    for (int i = 0; i < n; ++i) columns[i][a - 1] = col[i];
  }
  return kernel_basis(std::move(columns));
}

bool is_pure(const ModelSpec& spec, const Polyform& psi) {
  return static_cast<int>(annihilator(spec, psi).size()) == spec.m;
}

int real_index(const ModelSpec& spec, const Polyform& psi) {
  auto basis = annihilator(spec, psi);
  if (static_cast<int>(basis.size()) != spec.m)
    throw invalid_argument("real_index requires a pure spinor");
  // Real members of span{b_j}: parametrize by (x, y) with
  // sum_j x_j Im(b_j) + y_j Re(b_j) = 0; the solution space maps injectively
  // onto the real vectors of the span.
  int labels = spec.labels();
  QMatrix mat(labels, std::vector<mpq_class>(2 * basis.size(), mpq_class(0)));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int a = 0; a < labels; ++a) {
      mat[a][j] = basis[j][a].im();
      mat[a][basis.size() + j] = basis[j][a].re();
    }
  return 2 * static_cast<int>(basis.size()) - rank_q(std::move(mat));
}

CheckResult cartan_check(const ModelSpec& spec, const Polyform& psi) {
  check_spinor(spec, psi, "cartan_check");
  auto all = bilinear_all(spec, psi, psi);
  for (int kdeg = 0; kdeg <= spec.labels(); ++kdeg) {
    if (kdeg == spec.m) continue;
    if (!all[kdeg].is_zero()) {
      std::ostringstream os;
      os << "self-pairing of degree " << kdeg << " is nonzero: "
         << all[kdeg].to_string();
      return {false, os.str()};
    }
  }
  if (all[spec.m].is_zero())
    return {false, "self-pairing of degree m vanishes"};

  auto basis = annihilator(spec, psi);
  if (static_cast<int>(basis.size()) != spec.m) {
    std::ostringstream os;
    os << "annihilator dimension " << basis.size() << " != m = " << spec.m;
    return {false, os.str()};
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!vector_pairing(spec, basis[i], basis[j]).is_zero()) {
        std::ostringstream os;
        os << "annihilator directions " << i + 1 << " and " << j + 1
           << " are not orthogonal";
        return {false, os.str()};
      }
    }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // Lower the direction's index, wedge against the degree-m component.
    Multivector lowered;
    lowered.degree = 1;
    for (int a = 1; a <= spec.labels(); ++a) {
      Scalar c = Scalar(spec.metric[a - 1]) * basis[i][a - 1];
      lowered.add({a}, c);
    }
    if (!wedge(lowered, all[spec.m]).is_zero()) {
      std::ostringstream os;
      os << "annihilator direction " << i + 1
         << " does not divide the degree-m self-pairing";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

IndexReport index_constraints_check(const ModelSpec& spec, const Polyform& psi,
                                    HatChoice hat_choice) {
  check_spinor(spec, psi, "index_constraints_check");
  IndexReport report;
  report.t_star = real_index(spec, psi);  // throws unless pure
  Polyform companion = hat(spec, psi, hat_choice);
  auto all = bilinear_all(spec, companion, psi);
  for (int d = 0; d <= spec.labels(); ++d)
    if (!all[d].is_zero()) report.nonzero_degrees.push_back(d);

  std::ostringstream os;
  report.ok = true;
  for (int d = report.t_star - 2; d >= 0; d -= 2)
    if (!all[d].is_zero()) {
      report.ok = false;
      os << "pairing of degree " << d << " should vanish below the real index "
         << report.t_star << " but equals " << all[d].to_string() << "; ";
    }
  if (all[report.t_star].is_zero()) {
    report.ok = false;
    os << "pairing of degree t* = " << report.t_star << " vanishes; ";
  }
  report.detail = os.str();
  return report;
}

IndexReport index_constraints_check(const ModelSpec& spec,
                                    const Polyform& psi) {
  return index_constraints_check(spec, psi, spec.hat);
}

Matrix two_form_matrix(const ModelSpec& spec, const Multivector& form) {
  if (form.degree != 2)
    throw invalid_argument("two_form_matrix needs a degree-two multivector");
  int n = spec.labels();
  Matrix mat = mat_zero(n, n);
  for (const auto& [labels, c] : form.comps) {
    if (labels[0] < 1 || labels[1] > n)
      throw invalid_argument("two-form label out of range");
    mat[labels[0] - 1][labels[1] - 1] = c;
    mat[labels[1] - 1][labels[0] - 1] = -c;
  }
  return mat;
}

Matrix raise_second_index(const ModelSpec& spec, const Matrix& two_form) {
  int n = spec.labels();
  if (static_cast<int>(two_form.size()) != n)
    throw dimension_mismatch("two-form matrix has wrong size");
  // (K v)^B = v^A M_A{}^B with M_A{}^B = M_AC g^{CB}: as a matrix acting from
  // the left, K[B][A] = g_B M[A][B].
  Matrix out = mat_zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      out[b][a] = Scalar(spec.metric[b]) * two_form[a][b];
  return out;
}

MixedStructure mixed_from_pair(const ModelSpec& spec, const Polyform& psi1,
                               const Polyform& psi2) {
  check_spinor(spec, psi1, "mixed_from_pair");
  check_spinor(spec, psi2, "mixed_from_pair");
  if (inner(spec, psi1, psi2).is_zero())
    throw invalid_argument(
        "degenerate-pair: the spinors pair to zero, so the degree-two pairing "
        "cannot induce an invertible structure");
  Matrix raised = raise_second_index(
      spec, two_form_matrix(spec, bilinear_B(spec, 2, psi1, psi2)));
  auto scale = proportional_to_identity(mat_mul(raised, raised));
  if (!scale || scale->is_zero())
    throw invalid_argument(
        "non-complementary-pair: the raised degree-two pairing does not square "
        "to a nonzero multiple of the identity");

  MixedStructure mixed;
  mixed.square_scale = *scale;
  auto root = sqrt_exact(*scale);
  if (root) {
    mixed.normalized = true;
    mixed.k_matrix = root->is_one() ? std::move(raised)
                                    : mat_scale(root->inverse(), raised);
    // Consequences of the construction; a failure here is a library bug.
    Matrix square = mat_mul(mixed.k_matrix, mixed.k_matrix);
    if (proportional_to_identity(square) != std::optional<Scalar>(Scalar(1)))
      throw invariant_violation("normalized mixed structure fails K^2 = 1");
    Matrix gram_change = mat_zero(spec.labels(), spec.labels());
    for (int a = 0; a < spec.labels(); ++a)
      for (int b = 0; b < spec.labels(); ++b) {
        Scalar acc(0);
        for (int c = 0; c < spec.labels(); ++c)
          acc += mixed.k_matrix[c][a] * Scalar(spec.metric[c]) *
                 mixed.k_matrix[c][b];
        gram_change[a][b] = acc;
      }
    for (int a = 0; a < spec.labels(); ++a)
      for (int b = 0; b < spec.labels(); ++b) {
        Scalar expected =
            a == b ? Scalar(-spec.metric[a]) : Scalar(0);
        if (gram_change[a][b] != expected)
          throw invariant_violation(
              "normalized mixed structure fails g(Kx, Ky) = -g(x, y)");
      }
  } else {
    mixed.normalized = false;
    mixed.k_matrix = std::move(raised);
  }
  return mixed;
}

ProductSplit decompose_mixed(const ModelSpec& spec,
                             const MixedStructure& mixed) {
  if (!mixed.normalized)
    throw invalid_argument(
        "decompose_mixed needs a normalized mixed structure (K^2 = identity)");
  int n = spec.labels();
  ProductSplit split;
  split.p = mat_mul(mixed.k_matrix, mat_conj(mixed.k_matrix));
  if (!mat_is_real(split.p))
    throw invariant_violation("product structure K conj(K) is not real");
  if (proportional_to_identity(mat_mul(split.p, split.p)) !=
      std::optional<Scalar>(Scalar(1)))
    throw invariant_violation("product structure does not square to identity");

  Matrix id = mat_identity(n);
  split.plus_basis = kernel_basis(mat_sub(split.p, id));
  split.minus_basis = kernel_basis(mat_add(split.p, id));

  const Scalar half(mpq_class(1, 2));
  Matrix pi_plus = mat_scale(half, mat_add(id, split.p));
  Matrix pi_minus = mat_scale(half, mat_sub(id, split.p));
  split.i_part = mat_mul(mixed.k_matrix, pi_plus);
  split.j_part = mat_scale(Scalar(0, -1), mat_mul(mixed.k_matrix, pi_minus));
  if (!mat_is_real(split.i_part) || !mat_is_real(split.j_part))
    throw invariant_violation("mixed structure parts are not real");
  if (mat_mul(split.i_part, split.i_part) != pi_plus)
    throw invariant_violation("paracomplex part fails I^2 = pi_+");
  if (mat_mul(split.j_part, split.j_part) != mat_scale(Scalar(-1), pi_minus))
    throw invariant_violation("complex part fails J^2 = -pi_-");
  return split;
}

Matrix complex_structure_from_spinor(const ModelSpec& spec,
                                     const Polyform& psi) {
  check_spinor(spec, psi, "complex_structure_from_spinor");
  Polyform companion = hat(spec, psi);
  Matrix raised = raise_second_index(
      spec, two_form_matrix(spec, bilinear_B(spec, 2, companion, psi)));
  auto scale = proportional_to_identity(mat_mul(raised, raised));
  if (!scale || scale->is_zero())
    throw invalid_argument(
        "complex structure unavailable: the raised pairing does not square to "
        "a nonzero multiple of the identity (nonzero real index)");
  auto root = sqrt_exact(-*scale);
  if (!root)
    throw invalid_argument(
        "complex structure unavailable: the square scale " +
        scale->to_short_string() + " admits no exact root");
  Matrix j = mat_scale(root->inverse(), raised);
  if (!mat_is_real(j))
    throw invalid_argument(
        "complex structure unavailable: the rescaled structure is not real "
        "(nonzero real index)");
  if (proportional_to_identity(mat_mul(j, j)) !=
      std::optional<Scalar>(Scalar(-1)))
    throw invariant_violation("complex structure fails J^2 = -identity");
  return j;
}

}  // namespace cliff
