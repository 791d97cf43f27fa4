#pragma once

#include <string>

#include "cliffmodel/model.hpp"

namespace cliff {

// Monomial mask rendered as a binary literal with exactly `width` digits,
// least significant bit = generator 1 (e.g. e1^e3 over 4 generators is
// "0b0101").
std::string mask_to_string(Mask mask, int width);
Mask mask_from_string(const std::string& text);

// Complete JSON object describing a model, with keys sorted; the inverse
// accepts exactly this shape.  Scalars serialize canonically ("p/q+r/s*i"),
// masks as binary literals.
std::string model_to_json(const ModelSpec& spec);
ModelSpec model_from_json(const std::string& text);

// Parses a spinor literal over the model's generators, e.g.
//   "1 + 2*e1^e2", "e1^e2 - e3", "(1/2+3/4*i)*0b011", "u1^z1"
// Terms are separated by top-level +/-; a coefficient is a scalar literal
// (parenthesized when it contains a sign), attached with '*'.  Monomial
// factors are generator names joined by '^': "e<j>" addresses generator j
// directly, "z<p>"/"w<p>"/"u<p>" address the p-th complex-positive /
// complex-negative / real generator (an optional leading 'd' is allowed),
// "1" is the empty monomial, and "0b..." addresses a monomial by mask.
Polyform parse_polyform(const ModelSpec& spec, const std::string& text);

}  // namespace cliff
