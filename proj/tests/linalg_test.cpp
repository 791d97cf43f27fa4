#include "cliffmodel/linalg.hpp"

#include <doctest.h>

using cliff::Matrix;
using cliff::QMatrix;
using cliff::Scalar;

TEST_CASE("matrix algebra basics") {
  Matrix a = {{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
  Matrix b = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  CHECK(cliff::mat_mul(a, b) ==
        Matrix{{Scalar(2), Scalar(1)}, {Scalar(4), Scalar(3)}});
  CHECK(cliff::mat_add(a, b) ==
        Matrix{{Scalar(1), Scalar(3)}, {Scalar(4), Scalar(4)}});
  CHECK(cliff::mat_sub(a, a) == cliff::mat_zero(2, 2));
  CHECK(cliff::mat_mul(a, cliff::mat_identity(2)) == a);
  CHECK(cliff::mat_transpose(a) ==
        Matrix{{Scalar(1), Scalar(3)}, {Scalar(2), Scalar(4)}});
  CHECK(cliff::mat_scale(Scalar(2), b) ==
        Matrix{{Scalar(0), Scalar(2)}, {Scalar(2), Scalar(0)}});
  Matrix c = {{Scalar(0, 1), Scalar(1)}, {Scalar(2), Scalar(0, -3)}};
  CHECK(cliff::mat_conj(c) ==
        Matrix{{Scalar(0, -1), Scalar(1)}, {Scalar(2), Scalar(0, 3)}});
  CHECK(cliff::mat_is_real(a));
  CHECK(!cliff::mat_is_real(c));
  CHECK(cliff::mat_is_zero(cliff::mat_zero(3, 2)));
  CHECK(cliff::mat_apply(a, {Scalar(1), Scalar(1)}) ==
        std::vector<Scalar>{Scalar(3), Scalar(7)});
}

TEST_CASE("proportionality to the identity is detected exactly") {
  Matrix two = cliff::mat_scale(Scalar(0, 2), cliff::mat_identity(3));
  auto c = cliff::proportional_to_identity(two);
  REQUIRE(c.has_value());
  CHECK(*c == Scalar(0, 2));
  Matrix off = cliff::mat_identity(2);
  off[0][1] = Scalar(1);
  CHECK(!cliff::proportional_to_identity(off));
  Matrix skew = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}};
  CHECK(!cliff::proportional_to_identity(skew));
  CHECK(*cliff::proportional_to_identity(cliff::mat_zero(2, 2)) == Scalar(0));
}

TEST_CASE("rank and kernel over the complex rationals") {
  Matrix a = {{Scalar(1), Scalar(2), Scalar(3)},
              {Scalar(2), Scalar(4), Scalar(6)},
              {Scalar(0), Scalar(1), Scalar(1)}};
  CHECK(cliff::rank(a) == 2);
  auto ker = cliff::kernel_basis(a);
  REQUIRE(ker.size() == 1);
  // Echelon normalization: first nonzero entry is 1.
  const auto& v = ker[0];
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == Scalar(0)) ++lead;
  REQUIRE(lead < v.size());
  CHECK(v[lead] == Scalar(1));
  for (const auto& row : a) {
    Scalar dot;
    for (std::size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
    CHECK(dot == Scalar(0));
  }

  Matrix complex_rows = {{Scalar(0, 1), Scalar(1)}};
  auto ker2 = cliff::kernel_basis(complex_rows);
  REQUIRE(ker2.size() == 1);
  CHECK(ker2[0][0] * Scalar(0, 1) + ker2[0][1] == Scalar(0));

  CHECK(cliff::rank(cliff::mat_identity(4)) == 4);
  CHECK(cliff::kernel_basis(cliff::mat_identity(4)).empty());
}

TEST_CASE("rational rank and kernel agree with hand reduction") {
  QMatrix a = {{1, 2}, {2, 4}, {3, 6}};
  CHECK(cliff::rank_q(a) == 1);
  auto ker = cliff::kernel_basis_q(a);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] * 1 + ker[0][1] * 2 == 0);
  QMatrix id = {{1, 0}, {0, 1}};
  CHECK(cliff::rank_q(id) == 2);
  CHECK(cliff::kernel_basis_q(id).empty());
}
