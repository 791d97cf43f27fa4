#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace cliff {

// Exact complex number with rational real and imaginary parts (a Gaussian
// rational).  Backed by GMP rationals, so arithmetic never rounds and
// denominators are always positive and fully reduced.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(long re, long im) : re_(re), im_(im) {}
  Scalar(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }

  // Parses either the real form "p/q" or the complex form "p/q+r/s*i".
  // Bare integers, a lone "i", and signed variants are accepted; throws
  // parse_error on anything else.
  static Scalar parse(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  // |z|^2 = re^2 + im^2, always a nonnegative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws invalid_argument on /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;  // throws invalid_argument on zero

  // Canonical serialization "p/q+r/s*i": both parts always present, both
  // denominators explicit, the imaginary part carrying an explicit sign.
  // Examples: "0/1+0/1*i", "1/2-1/1*i".
  std::string to_string() const;

  // Compact human-readable form: "p/q" for reals, "r/s*i" for purely
  // imaginary values, and "p/q+r/s*i" otherwise.
  std::string to_short_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class re_;
  mpq_class im_;
};

// Renders a single rational with an explicit denominator, e.g. "-3/2", "0/1".
std::string rational_to_string(const mpq_class& q);

// Parses "p/q" or a bare integer "p" into an exact rational.
mpq_class parse_rational(const std::string& text);

// Exact square root of a rational if one exists: p/q with p, q coprime is a
// perfect square iff both p and q are.  Returns the nonnegative root.
std::optional<mpq_class> sqrt_exact(const mpq_class& q);

// Exact square root of a Gaussian rational if one exists.  Of the two roots
// the canonical one is returned: positive real part, or zero real part and
// nonnegative imaginary part (so sqrt(-1) = i).
std::optional<Scalar> sqrt_exact(const Scalar& z);

}  // namespace cliff
