#include "cliffmodel/reality.hpp"

#include <doctest.h>

#include <string>
#include <vector>

#include "cliffmodel/errors.hpp"
#include "cliffmodel/spin.hpp"

using cliff::AntilinearOp;
using cliff::MajoranaClass;
using cliff::Matrix;
using cliff::ModelSpec;
using cliff::Polyform;
using cliff::PresetName;
using cliff::Scalar;

namespace {

int parity_sign(int exponent) { return exponent % 2 ? -1 : 1; }

struct TableRow {
  PresetName name;
  int r_square;
  int r_prime_square;
  MajoranaClass cls;
};

}  // namespace

TEST_CASE("reality-operator squares and classes of the worked models") {
  const TableRow rows[] = {
      {PresetName::Spin2, 1, -1, MajoranaClass::Majorana},
      {PresetName::Spin11, 1, 1, MajoranaClass::MajoranaWeyl},
      {PresetName::Spin4, -1, -1, MajoranaClass::None},
      {PresetName::Spin31, 1, -1, MajoranaClass::Majorana},
      {PresetName::Spin22_index2, 1, 1, MajoranaClass::MajoranaWeyl},
      {PresetName::Spin22_index0, 1, 1, MajoranaClass::MajoranaWeyl},
      {PresetName::Spin6, -1, 1, MajoranaClass::Majorana},
      {PresetName::Spin51, -1, -1, MajoranaClass::None},
      {PresetName::Spin42_index0, 1, -1, MajoranaClass::Majorana},
      {PresetName::Spin33_index1, 1, 1, MajoranaClass::MajoranaWeyl},
      {PresetName::Spin33_index3, 1, 1, MajoranaClass::MajoranaWeyl},
  };
  for (const TableRow& row : rows) {
    ModelSpec spec = cliff::preset(row.name);
    cliff::ClassifyResult res = cliff::classify(spec);
    INFO("preset ", spec.name);
    CHECK(res.r_square == row.r_square);
    CHECK(res.r_prime_square == row.r_prime_square);
    CHECK(res.cls == row.cls);
  }
}

TEST_CASE("class names render as documented") {
  CHECK(cliff::to_string(MajoranaClass::Majorana) == "majorana");
  CHECK(cliff::to_string(MajoranaClass::MajoranaWeyl) == "majorana-weyl");
  CHECK(cliff::to_string(MajoranaClass::None) == "none");
}

TEST_CASE("intertwiner matrices of the worked models") {
  ModelSpec spin31 = cliff::preset(PresetName::Spin31);
  AntilinearOp r31 = cliff::build_R(spin31);
  CHECK(r31.factors == std::vector<int>{4, 1, 3});
  Matrix expected31(4, std::vector<Scalar>(4));
  expected31[0][3] = Scalar(1);   // [[0, eps], [-eps, 0]]
  expected31[1][2] = Scalar(-1);
  expected31[2][1] = Scalar(-1);
  expected31[3][0] = Scalar(1);
  CHECK(r31.mat == expected31);

  ModelSpec spin6 = cliff::preset(PresetName::Spin6);
  AntilinearOp rp6 = cliff::build_R_prime(spin6);
  CHECK(rp6.factors == std::vector<int>{4, 5, 6});
  CHECK(rp6.phase == Scalar(0, -1));
  Matrix expected6(8, std::vector<Scalar>(8));
  for (int i = 0; i < 4; ++i) {
    expected6[i][4 + i] = Scalar(1);
    expected6[4 + i][i] = Scalar(1);
  }
  CHECK(rp6.mat == expected6);

  ModelSpec spin22 = cliff::preset(PresetName::Spin22_index0);
  AntilinearOp rp22 = cliff::build_R_prime(spin22);
  Matrix expected22(4, std::vector<Scalar>(4));
  expected22[0][1] = Scalar(1);  // sigma^1 on each semi-spinor half
  expected22[1][0] = Scalar(1);
  expected22[2][3] = Scalar(1);
  expected22[3][2] = Scalar(1);
  CHECK(rp22.mat == expected22);
}

TEST_CASE("square signs follow the closed forms") {
  SUBCASE("definite signature") {
    for (int n = 1; n <= 6; ++n) {
      ModelSpec spec = cliff::plan_model(2 * n, 0, 0);
      INFO("Cl(", 2 * n, ",0)");
      CHECK(cliff::square_sign(spec, cliff::build_R(spec)) ==
            parity_sign(n * (n - 1) / 2));
      CHECK(cliff::square_sign(spec, cliff::build_R_prime(spec)) ==
            parity_sign(n * (n + 1) / 2));
    }
  }
  SUBCASE("maximal real index") {
    for (int n = 0; n <= 3; ++n) {
      for (int s = 0; s <= 3; ++s) {
        if (n + s == 0 || 2 * n + 2 * s > 12) continue;
        ModelSpec spec = cliff::plan_model(2 * n + s, s, s);
        INFO("Cl(", 2 * n + s, ",", s, ") t=", s);
        CHECK(cliff::square_sign(spec, cliff::build_R(spec)) ==
              parity_sign(n * (n - 1) / 2));
        CHECK(cliff::square_sign(spec, cliff::build_R_prime(spec)) ==
              parity_sign(n * (n + 1) / 2));
      }
    }
  }
  SUBCASE("index zero") {
    for (int rho = 1; rho <= 3; ++rho) {
      for (int sigma = 0; sigma <= rho; ++sigma) {
        if (rho + sigma > 6) continue;
        ModelSpec spec = cliff::plan_model(2 * rho, 2 * sigma, 0);
        int d = rho - sigma;
        INFO("Cl(", 2 * rho, ",", 2 * sigma, ") t=0");
        CHECK(cliff::square_sign(spec, cliff::build_R(spec)) ==
              parity_sign(d * (d - 1) / 2));
        CHECK(cliff::square_sign(spec, cliff::build_R_prime(spec)) ==
              parity_sign(d * (d + 1) / 2));
      }
    }
  }
}

TEST_CASE("exactly one intertwiner commutes with every gamma") {
  auto check_model = [](const ModelSpec& spec) {
    AntilinearOp r = cliff::build_R(spec);
    AntilinearOp rp = cliff::build_R_prime(spec);
    int cr = cliff::commutation_sign(spec, r);
    int cp = cliff::commutation_sign(spec, rp);
    INFO("model ", spec.name);
    CHECK(cr == parity_sign(static_cast<int>(r.factors.size()) + 1));
    CHECK(cp == parity_sign(static_cast<int>(rp.factors.size())));
    CHECK(cr * cp == -1);
  };
  for (PresetName name : cliff::all_presets())
    check_model(cliff::preset(name));
  for (const ModelSpec& spec : cliff::enumerate_models(8)) check_model(spec);
}

TEST_CASE("the class does not depend on the real index") {
  for (int n = 2; n <= 10; n += 2) {
    for (int s = 0; 2 * s <= n; ++s) {
      int r = n - s;
      if (r < s) continue;
      auto t_values = cliff::enumerate_real_indices(r, s);
      if (t_values.size() < 2) continue;
      cliff::ClassifyResult first =
          cliff::classify(cliff::plan_model(r, s, t_values[0]));
      for (std::size_t i = 1; i < t_values.size(); ++i) {
        cliff::ClassifyResult other =
            cliff::classify(cliff::plan_model(r, s, t_values[i]));
        INFO("Cl(", r, ",", s, ") t=", t_values[i]);
        CHECK(first.cls == other.cls);
      }
    }
  }
}

TEST_CASE("hat applied twice reproduces the square sign") {
  for (PresetName name : cliff::all_presets()) {
    ModelSpec spec = cliff::preset(name);
    AntilinearOp op = cliff::resolve_hat(spec);
    int sign = cliff::square_sign(spec, op);
    Polyform psi = cliff::vacuum_spinor(spec) +
                   Scalar(0, 1) * cliff::top_spinor(spec) +
                   Scalar(2) * cliff::basis_spinor(spec, spec.dim() - 1);
    Polyform twice = cliff::hat(spec, cliff::hat(spec, psi));
    INFO("preset ", spec.name);
    CHECK(twice == Scalar(sign) * psi);
  }
}

TEST_CASE("polyform-level application matches the matrix") {
  for (PresetName name : cliff::all_presets()) {
    ModelSpec spec = cliff::preset(name);
    for (const AntilinearOp& op :
         {cliff::build_R(spec), cliff::build_R_prime(spec)}) {
      Polyform psi = cliff::basis_spinor(spec, 0) +
                     Scalar(1, 2) * cliff::basis_spinor(spec, spec.dim() - 1);
      std::vector<Scalar> coords = cliff::polyform_to_coords(spec, psi);
      for (Scalar& c : coords) c = c.conj();
      std::vector<Scalar> via_mat = cliff::mat_apply(op.mat, coords);
      Polyform direct = cliff::apply_antilinear(spec, op, psi);
      INFO("preset ", spec.name, ", op ", op.label);
      CHECK(cliff::polyform_to_coords(spec, direct) == via_mat);
    }
  }
}

TEST_CASE("hat choices resolve to the requested operator") {
  ModelSpec spin2 = cliff::preset(PresetName::Spin2);
  CHECK(cliff::resolve_hat(spin2).label == "R");
  CHECK(cliff::resolve_hat(spin2, cliff::HatChoice::RPrime).label == "R'");
  ModelSpec spin4 = cliff::preset(PresetName::Spin4);
  CHECK(cliff::resolve_hat(spin4).label == "R'");
  // The worked six-dimensional definite model pins its hat on the
  // anticommuting intertwiner, overriding the default rule.
  ModelSpec spin6 = cliff::preset(PresetName::Spin6);
  CHECK(spin6.hat == cliff::HatChoice::RPrime);
  CHECK(cliff::resolve_hat(spin6).label == "R'");
  CHECK(cliff::commutation_sign(spin6, cliff::resolve_hat(spin6)) == -1);
  CHECK(cliff::hat(spin6, cliff::vacuum_spinor(spin6)) ==
        -cliff::top_spinor(spin6));
}

TEST_CASE("a positive square yields an invariant real subspace") {
  ModelSpec spec = cliff::preset(PresetName::Spin31);
  AntilinearOp r = cliff::build_R(spec);
  REQUIRE(cliff::square_sign(spec, r) == 1);
  Polyform phi = cliff::basis_spinor(spec, 0) +
                 Scalar(0, 1) * cliff::basis_spinor(spec, 2);
  Polyform fixed = phi + cliff::apply_antilinear(spec, r, phi);
  REQUIRE(cliff::apply_antilinear(spec, r, fixed) == fixed);
  cliff::SmallRng rng(cliff::model_seed(spec.r, spec.s, spec.t) + 5);
  for (int round = 0; round < 4; ++round) {
    cliff::SpinParam x = rng.next_spin_param(spec.labels());
    Polyform moved = cliff::lie_apply(spec, x, fixed);
    CHECK(cliff::apply_antilinear(spec, r, moved) == moved);
  }
}
