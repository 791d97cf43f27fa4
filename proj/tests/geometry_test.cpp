#include "cliffmodel/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "cliffmodel/errors.hpp"
#include "cliffmodel/linalg.hpp"
#include "cliffmodel/pairing.hpp"

using cliff::Matrix;
using cliff::ModelSpec;
using cliff::Multivector;
using cliff::Polyform;
using cliff::PresetName;
using cliff::Scalar;

namespace {

Multivector mv2(std::initializer_list<std::tuple<int, int, Scalar>> entries) {
  Multivector form;
  form.degree = 2;
  for (const auto& [a, b, c] : entries) form.add({a, b}, c);
  return form;
}

template <typename Exception, typename Fn>
void check_throws_containing(Fn&& fn, const std::string& needle) {
  bool thrown = false;
  std::string message;
  try {
    fn();
  } catch (const Exception& e) {
    thrown = true;
    message = e.what();
  }
  INFO("expected message fragment: ", needle, ", got: ", message);
  CHECK(thrown);
  CHECK(message.find(needle) != std::string::npos);
}

bool contains_degree(const std::vector<int>& degrees, int k) {
  return std::find(degrees.begin(), degrees.end(), k) != degrees.end();
}

const Scalar kI = Scalar(0, 1);

}  // namespace

TEST_CASE("multivector components accumulate and validate") {
  Multivector form;
  form.degree = 2;
  form.add({1, 2}, Scalar(3));
  form.add({1, 2}, Scalar(-1));
  CHECK(form.component({1, 2}) == Scalar(2));
  CHECK(form.component({1, 3}) == Scalar(0));
  form.add({1, 2}, Scalar(-2));
  CHECK(form.is_zero());  // cancelled entries are erased
  form.add({2, 4}, Scalar(0));
  CHECK(form.is_zero());  // zero is never stored
  CHECK_THROWS_AS(form.add({1}, Scalar(1)), cliff::dimension_mismatch);
  CHECK_THROWS_AS(form.add({2, 1}, Scalar(1)), cliff::invalid_argument);
  CHECK_THROWS_AS(form.add({1, 1}, Scalar(1)), cliff::invalid_argument);
}

TEST_CASE("multivector rendering") {
  Multivector form;
  form.degree = 2;
  CHECK(form.to_string() == "·");
  form.add({1, 2}, Scalar(-1));
  form.add({3, 4}, kI);
  CHECK(form.to_string() == "(1,2): -1/1  (3,4): 1/1*i");
}

TEST_CASE("wedge of multivectors") {
  Multivector a, b;
  a.degree = 1;
  b.degree = 1;
  a.add({1}, Scalar(2));
  b.add({2}, Scalar(3));
  Multivector ab = wedge(a, b);
  CHECK(ab.degree == 2);
  CHECK(ab.comps == mv2({{1, 2, Scalar(6)}}).comps);
  Multivector ba = wedge(b, a);
  CHECK(ba.comps == mv2({{1, 2, Scalar(-6)}}).comps);

  Multivector overlapping = wedge(mv2({{1, 2, Scalar(1)}}),
                                  mv2({{2, 3, Scalar(1)}}));
  CHECK(overlapping.degree == 4);
  CHECK(overlapping.is_zero());

  Multivector disjoint = wedge(mv2({{1, 2, Scalar(1)}}),
                               mv2({{3, 4, Scalar(5)}}));
  CHECK(disjoint.component({1, 2, 3, 4}) == Scalar(5));
}

TEST_CASE("degree-two pairings of the four-dimensional worked models") {
  SUBCASE("lorentzian") {
    ModelSpec spec = cliff::preset(PresetName::Spin31);
    Multivector got = cliff::bilinear_B(spec, 2, Polyform::monomial(2, 0b11),
                                        Polyform::one(2));
    CHECK(got.comps == mv2({{1, 2, -kI}, {3, 4, Scalar(-1)}}).comps);
  }
  SUBCASE("definite") {
    ModelSpec spec = cliff::preset(PresetName::Spin4);
    Polyform vac = cliff::vacuum_spinor(spec);
    Multivector got = cliff::bilinear_B(spec, 2, cliff::hat(spec, vac), vac);
    CHECK(got.comps == mv2({{1, 2, -kI}, {3, 4, -kI}}).comps);
  }
  SUBCASE("split, maximal real index") {
    ModelSpec spec = cliff::preset(PresetName::Spin22_index2);
    Polyform vac = cliff::vacuum_spinor(spec);
    CHECK(cliff::bilinear_B(spec, 2, vac, vac).comps ==
          mv2({{1, 2, Scalar(1)},
               {3, 4, Scalar(1)},
               {1, 4, Scalar(1)},
               {2, 3, Scalar(-1)}})
              .comps);
    Polyform mixed = Scalar(2) * vac + Scalar(3) * Polyform::monomial(2, 0b11);
    CHECK(cliff::bilinear_B(spec, 2, mixed, mixed).comps ==
          mv2({{1, 2, Scalar(13)},
               {3, 4, Scalar(13)},
               {1, 3, Scalar(-12)},
               {2, 4, Scalar(-12)},
               {1, 4, Scalar(-5)},
               {2, 3, Scalar(5)}})
              .comps);
    CHECK(cliff::bilinear_B(spec, 2, Polyform::monomial(2, 0b11), vac).comps ==
          mv2({{1, 3, Scalar(-1)}, {2, 4, Scalar(-1)}}).comps);
  }
  SUBCASE("split, real index zero") {
    ModelSpec spec = cliff::preset(PresetName::Spin22_index0);
    Polyform vac = cliff::vacuum_spinor(spec);
    CHECK(cliff::bilinear_B(spec, 2, vac, vac).comps ==
          mv2({{1, 3, Scalar(1)}, {2, 4, Scalar(1)}, {1, 4, kI}, {2, 3, -kI}})
              .comps);
    Polyform chi = vac + Polyform::monomial(2, 0b11);
    CHECK(cliff::bilinear_B(spec, 2, chi, chi).comps ==
          mv2({{1, 2, Scalar(2) * kI},
               {1, 4, Scalar(2) * kI},
               {2, 3, Scalar(-2) * kI},
               {3, 4, Scalar(2) * kI}})
              .comps);
  }
}

TEST_CASE("degree-two pairings of the six-dimensional worked models") {
  SUBCASE("definite") {
    ModelSpec spec = cliff::preset(PresetName::Spin6);
    Polyform vac = cliff::vacuum_spinor(spec);
    Polyform top = cliff::top_spinor(spec);
    CHECK(cliff::bilinear_B(spec, 2, cliff::hat(spec, vac), vac).comps ==
          mv2({{1, 4, kI}, {2, 5, kI}, {3, 6, kI}}).comps);
    CHECK(cliff::bilinear_B(spec, 2, cliff::hat(spec, top), top).comps ==
          mv2({{1, 4, kI}, {2, 5, kI}, {3, 6, kI}}).comps);
  }
  SUBCASE("lorentzian") {
    ModelSpec spec = cliff::preset(PresetName::Spin51);
    CHECK(cliff::bilinear_B(spec, 2, Polyform::one(3),
                            Polyform::monomial(3, 0b111))
              .comps ==
          mv2({{1, 4, -kI}, {2, 5, -kI}, {3, 6, Scalar(-1)}}).comps);
  }
  SUBCASE("signature (4,2)") {
    ModelSpec spec = cliff::preset(PresetName::Spin42_index0);
    Polyform vac = cliff::vacuum_spinor(spec);
    CHECK(cliff::bilinear_B(spec, 2, cliff::hat(spec, vac), vac).comps ==
          mv2({{1, 4, -kI}, {2, 5, -kI}, {3, 6, -kI}}).comps);
    Polyform null_psi = Polyform::one(3) + Polyform::monomial(3, 0b110);
    CHECK(cliff::bilinear_B(spec, 2, cliff::hat(spec, null_psi), null_psi)
              .comps ==
          mv2({{2, 3, Scalar(2) * kI},
               {2, 5, Scalar(-2) * kI},
               {3, 6, Scalar(-2) * kI},
               {5, 6, Scalar(2) * kI}})
              .comps);
    Polyform odd = Polyform::monomial(3, 0b001) +
                   Scalar(-1) * Polyform::monomial(3, 0b111);
    CHECK(cliff::bilinear_B(spec, 2, odd, null_psi).comps ==
          mv2({{1, 4, Scalar(2) * kI}, {2, 6, Scalar(2)}, {3, 5, Scalar(2)}})
              .comps);
  }
  SUBCASE("signature (3,3), real index one") {
    ModelSpec spec = cliff::preset(PresetName::Spin33_index1);
    CHECK(cliff::bilinear_B(spec, 2,
                            Scalar(-1) * Polyform::monomial(3, 0b111),
                            Polyform::one(3))
              .comps ==
          mv2({{1, 4, kI}, {2, 5, Scalar(1)}, {3, 6, kI}}).comps);
    Polyform left = Scalar(-1) * Polyform::monomial(3, 0b111) +
                    Scalar(-1) * Polyform::monomial(3, 0b010);
    Polyform right = Polyform::one(3) + Polyform::monomial(3, 0b101);
    CHECK(cliff::bilinear_B(spec, 2, left, right).comps ==
          mv2({{1, 6, Scalar(2)}, {2, 5, Scalar(2)}, {3, 4, Scalar(2)}})
              .comps);
  }
}

TEST_CASE("the shared traversal agrees with the per-degree pairing") {
  ModelSpec spec = cliff::preset(PresetName::Spin42_index0);
  Polyform psi = Polyform::one(3) + Polyform::monomial(3, 0b110);
  Polyform companion = cliff::hat(spec, psi);
  std::vector<Multivector> all = cliff::bilinear_all(spec, companion, psi);
  REQUIRE(static_cast<int>(all.size()) == spec.labels() + 1);
  for (int k = 0; k <= spec.labels(); ++k) {
    Multivector direct = cliff::bilinear_B(spec, k, companion, psi);
    INFO("degree ", k);
    CHECK(all[k].degree == k);
    CHECK(all[k].comps == direct.comps);
  }
}

TEST_CASE("annihilator spaces") {
  SUBCASE("two dimensions, explicit bases") {
    ModelSpec spec = cliff::preset(PresetName::Spin2);
    auto vac_basis = cliff::annihilator(spec, cliff::vacuum_spinor(spec));
    REQUIRE(vac_basis.size() == 1);
    CHECK(vac_basis[0] == std::vector<Scalar>{Scalar(1), kI});
    auto top_basis = cliff::annihilator(spec, cliff::top_spinor(spec));
    REQUIRE(top_basis.size() == 1);
    CHECK(top_basis[0] == std::vector<Scalar>{Scalar(1), -kI});
  }
  SUBCASE("basis vectors really annihilate") {
    for (PresetName name : cliff::all_presets()) {
      ModelSpec spec = cliff::preset(name);
      for (const Polyform& psi :
           {cliff::vacuum_spinor(spec), cliff::top_spinor(spec)}) {
        auto basis = cliff::annihilator(spec, psi);
        INFO("preset ", spec.name);
        CHECK(static_cast<int>(basis.size()) == spec.m);
        for (const auto& v : basis)
          CHECK(cliff::gamma_vector_apply(spec, v, psi).is_zero());
      }
    }
  }
  SUBCASE("sums of monomials") {
    ModelSpec spin4 = cliff::preset(PresetName::Spin4);
    Polyform mixed = Polyform::one(2) + Polyform::monomial(2, 0b11);
    CHECK(cliff::annihilator(spin4, mixed).size() == 2);
    CHECK(cliff::is_pure(spin4, mixed));

    ModelSpec spin8 = cliff::plan_model(8, 0, 0);
    Polyform shallow = Polyform::one(4) + Polyform::monomial(4, 0b1111);
    CHECK(cliff::annihilator(spin8, shallow).empty());
    CHECK_FALSE(cliff::is_pure(spin8, shallow));
  }
}

TEST_CASE("real index of pure spinors") {
  for (PresetName name : cliff::all_presets()) {
    ModelSpec spec = cliff::preset(name);
    INFO("preset ", spec.name);
    CHECK(cliff::real_index(spec, cliff::vacuum_spinor(spec)) == spec.t);
  }
  ModelSpec spin22 = cliff::preset(PresetName::Spin22_index0);
  CHECK(cliff::real_index(spin22, Polyform::one(2) +
                                      Polyform::monomial(2, 0b11)) == 2);
  ModelSpec spin33 = cliff::preset(PresetName::Spin33_index1);
  CHECK(cliff::real_index(spin33, Polyform::one(3) +
                                      Polyform::monomial(3, 0b101)) == 3);
  ModelSpec spin42 = cliff::preset(PresetName::Spin42_index0);
  CHECK(cliff::real_index(spin42, Polyform::one(3) +
                                      Polyform::monomial(3, 0b110)) == 2);
  ModelSpec spin8 = cliff::plan_model(8, 0, 0);
  check_throws_containing<cliff::invalid_argument>(
      [&] {
        cliff::real_index(spin8,
                          Polyform::one(4) + Polyform::monomial(4, 0b1111));
      },
      "pure");
}

TEST_CASE("purity witness on the pairing side") {
  for (PresetName name : cliff::all_presets()) {
    ModelSpec spec = cliff::preset(name);
    INFO("preset ", spec.name);
    CHECK(cliff::cartan_check(spec, cliff::vacuum_spinor(spec)).ok);
    CHECK(cliff::cartan_check(spec, cliff::top_spinor(spec)).ok);
  }
  for (const ModelSpec& spec : cliff::enumerate_models(8)) {
    INFO("model ", spec.name);
    CHECK(cliff::cartan_check(spec, cliff::vacuum_spinor(spec)).ok);
    CHECK(cliff::cartan_check(spec, cliff::top_spinor(spec)).ok);
  }
  ModelSpec spin4 = cliff::preset(PresetName::Spin4);
  CHECK(cliff::cartan_check(spin4, Polyform::one(2) +
                                       Polyform::monomial(2, 0b11))
            .ok);
  ModelSpec spin8 = cliff::plan_model(8, 0, 0);
  cliff::CheckResult bad = cliff::cartan_check(
      spin8, Polyform::one(4) + Polyform::monomial(4, 0b1111));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("degree ladder tied to the real index") {
  SUBCASE("split signature, maximal index") {
    ModelSpec spec = cliff::preset(PresetName::Spin22_index2);
    cliff::IndexReport report =
        cliff::index_constraints_check(spec, cliff::vacuum_spinor(spec));
    CHECK(report.ok);
    CHECK(report.t_star == 2);
    CHECK(contains_degree(report.nonzero_degrees, 2));
    CHECK_FALSE(contains_degree(report.nonzero_degrees, 0));
  }
  SUBCASE("lorentzian six dimensions") {
    ModelSpec spec = cliff::preset(PresetName::Spin51);
    cliff::IndexReport report =
        cliff::index_constraints_check(spec, cliff::vacuum_spinor(spec));
    CHECK(report.ok);
    CHECK(report.t_star == 1);
    CHECK(contains_degree(report.nonzero_degrees, 1));
  }
  SUBCASE("signature (3,3) with an index-three spinor") {
    ModelSpec spec = cliff::preset(PresetName::Spin33_index1);
    Polyform psi = Polyform::one(3) + Polyform::monomial(3, 0b101);
    cliff::IndexReport report = cliff::index_constraints_check(spec, psi);
    CHECK(report.ok);
    CHECK(report.t_star == 3);
    CHECK(contains_degree(report.nonzero_degrees, 3));
    CHECK_FALSE(contains_degree(report.nonzero_degrees, 1));
  }
  SUBCASE("signature (4,2) with an index-two spinor") {
    ModelSpec spec = cliff::preset(PresetName::Spin42_index0);
    Polyform psi = Polyform::one(3) + Polyform::monomial(3, 0b110);
    cliff::IndexReport report = cliff::index_constraints_check(spec, psi);
    CHECK(report.ok);
    CHECK(report.t_star == 2);
    CHECK(contains_degree(report.nonzero_degrees, 2));
    CHECK_FALSE(contains_degree(report.nonzero_degrees, 0));
  }
  SUBCASE("maximal index in signature (3,3)") {
    ModelSpec spec = cliff::preset(PresetName::Spin33_index3);
    cliff::IndexReport report =
        cliff::index_constraints_check(spec, cliff::vacuum_spinor(spec));
    CHECK(report.ok);
    CHECK(report.t_star == 3);
    CHECK(contains_degree(report.nonzero_degrees, 3));
    CHECK_FALSE(contains_degree(report.nonzero_degrees, 1));
  }
}

TEST_CASE("raising the second index through the metric") {
  ModelSpec spec = cliff::preset(PresetName::Spin22_index2);
  Multivector form = cliff::bilinear_B(spec, 2, Polyform::monomial(2, 0b11),
                                       Polyform::one(2));
  Matrix m = cliff::two_form_matrix(spec, form);
  CHECK(m[0][2] == Scalar(-1));
  CHECK(m[2][0] == Scalar(1));
  CHECK(m[1][3] == Scalar(-1));
  CHECK(m[3][1] == Scalar(1));
  Matrix raised = cliff::raise_second_index(spec, m);
  Matrix expected = cliff::mat_zero(4, 4);
  expected[0][2] = expected[2][0] = Scalar(1);
  expected[1][3] = expected[3][1] = Scalar(1);
  CHECK(raised == expected);
  CHECK(cliff::mat_mul(raised, raised) == cliff::mat_identity(4));
  CHECK_THROWS_AS(
      cliff::two_form_matrix(spec, mv2({{1, 7, Scalar(1)}})),
      cliff::invalid_argument);
}

TEST_CASE("mixed structure from the vacuum/top pair") {
  for (PresetName name : cliff::all_presets()) {
    ModelSpec spec = cliff::preset(name);
    INFO("preset ", spec.name);
    cliff::MixedStructure mixed = cliff::mixed_from_pair(
        spec, cliff::vacuum_spinor(spec), cliff::top_spinor(spec));
    CHECK(mixed.normalized);
    CHECK(cliff::mat_mul(mixed.k_matrix, mixed.k_matrix) ==
          cliff::mat_identity(spec.labels()));
    cliff::ProductSplit split = cliff::decompose_mixed(spec, mixed);
    CHECK(cliff::mat_is_real(split.p));
    CHECK(static_cast<int>(split.plus_basis.size()) == 2 * spec.t);
    CHECK(static_cast<int>(split.minus_basis.size()) ==
          2 * spec.k + 2 * spec.l);
    CHECK(cliff::mat_is_real(split.i_part));
    CHECK(cliff::mat_is_real(split.j_part));
    Matrix rebuilt =
        cliff::mat_add(split.i_part, cliff::mat_scale(kI, split.j_part));
    CHECK(rebuilt == mixed.k_matrix);
  }
}

TEST_CASE("mixed structure error paths") {
  ModelSpec spin2 = cliff::preset(PresetName::Spin2);
  Polyform vac = cliff::vacuum_spinor(spin2);
  check_throws_containing<cliff::invalid_argument>(
      [&] { cliff::mixed_from_pair(spin2, vac, vac); }, "degenerate-pair");
  // <1 + e_1, 1 + e_1> = 2 but the degree-two pairing vanishes identically.
  Polyform psi = Polyform::one(1) + Polyform::monomial(1, 0b1);
  check_throws_containing<cliff::invalid_argument>(
      [&] { cliff::mixed_from_pair(spin2, psi, psi); },
      "non-complementary-pair");
  cliff::MixedStructure unnormalized;
  unnormalized.normalized = false;
  CHECK_THROWS_AS(cliff::decompose_mixed(spin2, unnormalized),
                  cliff::invalid_argument);
}

TEST_CASE("complex structure attached to an index-zero spinor") {
  SUBCASE("four definite dimensions") {
    ModelSpec spec = cliff::preset(PresetName::Spin4);
    Matrix j = cliff::complex_structure_from_spinor(
        spec, cliff::vacuum_spinor(spec));
    Matrix expected = cliff::mat_zero(4, 4);
    expected[0][1] = Scalar(1);
    expected[1][0] = Scalar(-1);
    expected[2][3] = Scalar(1);
    expected[3][2] = Scalar(-1);
    CHECK(j == expected);
  }
  SUBCASE("split four dimensions") {
    ModelSpec spec = cliff::preset(PresetName::Spin22_index0);
    Matrix j = cliff::complex_structure_from_spinor(
        spec, cliff::vacuum_spinor(spec));
    Matrix expected = cliff::mat_zero(4, 4);
    expected[0][1] = Scalar(-1);
    expected[1][0] = Scalar(1);
    expected[2][3] = Scalar(1);
    expected[3][2] = Scalar(-1);
    CHECK(j == expected);
  }
  SUBCASE("six definite dimensions, properties only") {
    ModelSpec spec = cliff::preset(PresetName::Spin6);
    Matrix j = cliff::complex_structure_from_spinor(
        spec, cliff::vacuum_spinor(spec));
    CHECK(cliff::mat_is_real(j));
    CHECK(cliff::mat_mul(j, j) ==
          cliff::mat_scale(Scalar(-1), cliff::mat_identity(6)));
  }
  SUBCASE("nonzero real index is rejected") {
    ModelSpec maximal = cliff::preset(PresetName::Spin22_index2);
    check_throws_containing<cliff::invalid_argument>(
        [&] {
          cliff::complex_structure_from_spinor(
              maximal, cliff::vacuum_spinor(maximal));
        },
        "real index");
    ModelSpec lorentzian = cliff::preset(PresetName::Spin31);
    CHECK_THROWS_AS(cliff::complex_structure_from_spinor(
                        lorentzian, cliff::vacuum_spinor(lorentzian)),
                    cliff::invalid_argument);
  }
  SUBCASE("zero spinor is rejected") {
    ModelSpec spec = cliff::preset(PresetName::Spin4);
    check_throws_containing<cliff::invalid_argument>(
        [&] { cliff::complex_structure_from_spinor(spec, Polyform::zero(2)); },
        "zero");
  }
}
