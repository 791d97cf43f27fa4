#include "cliffmodel/reality.hpp"

#include <sstream>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

AntilinearOp build_op(const ModelSpec& spec, const RealityLayout& layout,
                      const std::string& label) {
  AntilinearOp op;
  op.label = label;
  op.factors = layout.factors;
  op.phase = layout.phase;
  int n = spec.dim();
  op.mat = mat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    // Presentation spinors have real coefficients, so the linear part of the
    // operator is exactly its action on them.
    Polyform image = basis_spinor(spec, j);
    for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it)
      image = gamma_apply(spec, *it, image);
    std::vector<Scalar> col = polyform_to_coords(spec, op.phase * image);
    for (int i = 0; i < n; ++i) op.mat[i][j] = col[i];
  }
  return op;
}

}  // namespace

AntilinearOp build_R(const ModelSpec& spec) {
  return build_op(spec, spec.r_op, "R");
}

AntilinearOp build_R_prime(const ModelSpec& spec) {
  return build_op(spec, spec.r_prime_op, "R'");
}

Polyform apply_antilinear(const ModelSpec& spec, const AntilinearOp& op,
                          const Polyform& psi) {
  Polyform out = psi.conjugate();
  for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it)
    out = gamma_apply(spec, *it, out);
  if (!op.phase.is_one()) out = op.phase * out;
  return out;
}

int square_sign(const ModelSpec& spec, const AntilinearOp& op) {
  // The antilinear square has linear part mat * conj(mat).
  Matrix square = mat_mul(op.mat, mat_conj(op.mat));
  auto c = proportional_to_identity(square);
  if (c && *c == Scalar(1)) return 1;
  if (c && *c == Scalar(-1)) return -1;
  throw invariant_violation("antilinear operator " + op.label + " of model '" +
                            spec.name + "' does not square to +/- identity");
}

int commutation_sign(const ModelSpec& spec, const AntilinearOp& op) {
  int sign = 0;
  for (int a = 1; a <= spec.labels(); ++a) {
    Matrix ga = gamma_matrix(spec, a);
    // op gamma_A has linear part mat * conj(gamma_A); gamma_A op has gamma_A * mat.
    Matrix lhs = mat_mul(op.mat, mat_conj(ga));
    Matrix rhs = mat_mul(ga, op.mat);
    int this_sign;
    if (lhs == rhs)
      this_sign = 1;
    else if (lhs == mat_scale(Scalar(-1), rhs))
      this_sign = -1;
    else
      throw invariant_violation("operator " + op.label + " of model '" +
                                spec.name +
                                "' neither commutes nor anticommutes with gamma_" +
                                std::to_string(a));
    if (sign == 0) sign = this_sign;
    if (sign != this_sign)
      throw invariant_violation("operator " + op.label + " of model '" +
                                spec.name +
                                "' has a non-uniform commutation sign");
  }
  return sign == 0 ? 1 : sign;
}

std::string to_string(MajoranaClass cls) {
  switch (cls) {
    case MajoranaClass::Majorana: return "majorana";
    case MajoranaClass::MajoranaWeyl: return "majorana-weyl";
    case MajoranaClass::None: return "none";
  }
  throw invalid_argument("unknown class enumerator");
}

ClassifyResult classify(const ModelSpec& spec) {
  AntilinearOp r = build_R(spec);
  AntilinearOp rp = build_R_prime(spec);
  ClassifyResult out;
  out.r_square = square_sign(spec, r);
  out.r_prime_square = square_sign(spec, rp);

  const AntilinearOp* ops[2] = {&r, &rp};
  int squares[2] = {out.r_square, out.r_prime_square};
  // Prefer a parity-preserving real structure (even factor count) as witness.
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i) {
      if (squares[i] != 1) continue;
      bool even = ops[i]->factors.size() % 2 == 0;
      if (pass == 0 && !even) continue;
      out.cls = even ? MajoranaClass::MajoranaWeyl : MajoranaClass::Majorana;
      out.witness = ops[i]->label;
      return out;
    }
  out.cls = MajoranaClass::None;
  return out;
}

AntilinearOp resolve_hat(const ModelSpec& spec, HatChoice choice) {
  switch (choice) {
    case HatChoice::R: return build_R(spec);
    case HatChoice::RPrime: return build_R_prime(spec);
    case HatChoice::Default: break;
  }
  AntilinearOp r = build_R(spec);
  if (commutation_sign(spec, r) == 1) return r;
  AntilinearOp rp = build_R_prime(spec);
  if (commutation_sign(spec, rp) == 1) return rp;
  throw invariant_violation("model '" + spec.name +
                            "' has no gamma-commuting intertwiner to hat with");
}

AntilinearOp resolve_hat(const ModelSpec& spec) {
  return resolve_hat(spec, spec.hat);
}

Polyform hat(const ModelSpec& spec, const Polyform& psi, HatChoice choice) {
  return apply_antilinear(spec, resolve_hat(spec, choice), psi);
}

Polyform hat(const ModelSpec& spec, const Polyform& psi) {
  return hat(spec, psi, spec.hat);
}

}  // namespace cliff
