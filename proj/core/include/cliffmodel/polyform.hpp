#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffmodel/scalar.hpp"

namespace cliff {

// Monomial in the exterior algebra on m anticommuting generators e_1..e_m,
// encoded as a bitmask: bit j-1 set iff e_j is present, factors in ascending
// order with coefficient +1.
using Mask = std::uint32_t;

inline int mask_degree(Mask mask) { return __builtin_popcount(mask); }

// Element of the exterior algebra Lambda(C^m): a finite Scalar-linear
// combination of monomials.  Terms with zero coefficient are never stored.
class Polyform {
 public:
  explicit Polyform(int gens = 0);

  // The monomial e_{j1}^...^e_{jk} encoded by `mask`, scaled by `coeff`.
  static Polyform monomial(int gens, Mask mask, Scalar coeff = Scalar(1));
  static Polyform zero(int gens) { return Polyform(gens); }
  static Polyform one(int gens) { return monomial(gens, 0); }

  int gens() const { return gens_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Scalar>& terms() const { return terms_; }

  Scalar coeff(Mask mask) const;
  void add_term(Mask mask, const Scalar& c);  // accumulate, dropping zeros

  Polyform operator-() const;
  Polyform& operator+=(const Polyform& o);
  Polyform& operator-=(const Polyform& o);
  friend Polyform operator+(Polyform a, const Polyform& b) { return a += b; }
  friend Polyform operator-(Polyform a, const Polyform& b) { return a -= b; }
  friend Polyform operator*(const Scalar& c, const Polyform& p);

  friend bool operator==(const Polyform& a, const Polyform& b) {
    return a.gens_ == b.gens_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polyform& a, const Polyform& b) {
    return !(a == b);
  }

  // Keeps only terms whose degree has the given parity (0 = even, 1 = odd).
  Polyform parity_part(int parity) const;

  // Coefficientwise complex conjugation (monomials are fixed).
  Polyform conjugate() const;

  // Reverses the factor order of every monomial: a degree-k monomial picks up
  // the sign (-1)^{k(k-1)/2}.
  Polyform reverse() const;

  // Human-readable rendering such as "1 + 2*e1^e2"; the zero element renders
  // as the centered dot placeholder.
  std::string to_string() const;

 private:
  int gens_;
  std::map<Mask, Scalar> terms_;
};

// Sign (+1/-1) of merging two disjoint ascending monomials a and b into the
// ascending monomial a|b, counting the transpositions needed.
int wedge_sign(Mask a, Mask b);

// Exterior product.  Overlapping monomials annihilate.
Polyform wedge(const Polyform& a, const Polyform& b);

// Left exterior multiplication by the single generator e_j (1-based): the
// creation operator of the model construction.
Polyform wedge_generator(int j, const Polyform& p);

// Interior product by e_j (1-based): deletes e_j from each monomial containing
// it with sign (-1)^{#factors before e_j}; kills the others.  The annihilation
// operator of the model construction.
Polyform contract_generator(int j, const Polyform& p);

// Coefficient of the top monomial e_1^...^e_m relative to the chosen
// orientation sign of the top form.
Scalar top_coefficient(const Polyform& p, int orientation = 1);

}  // namespace cliff
