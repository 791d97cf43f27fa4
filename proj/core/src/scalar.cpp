#include "cliffmodel/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>
#include <vector>

#include "cliffmodel/errors.hpp"

namespace cliff {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw invalid_argument("division by zero scalar");
  mpq_class n = norm2();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  mpq_class ai = abs(im_);
  return rational_to_string(re_) + (im_ < 0 ? "-" : "+") +
         rational_to_string(ai) + "*i";
}

std::string Scalar::to_short_string() const {
  if (im_ == 0) return rational_to_string(re_);
  mpq_class ai = abs(im_);
  std::string imag = rational_to_string(ai) + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return rational_to_string(re_) + (im_ < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_short_string();
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits_start)
    throw parse_error("expected digits in rational literal '" + text + "'");
  mpz_class num(text.substr(digits_start, pos - digits_start));
  mpz_class den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/')
      throw parse_error("unexpected character in rational literal '" + text +
                        "'");
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == den_start || pos != text.size())
      throw parse_error("malformed denominator in rational literal '" + text +
                        "'");
    den = mpz_class(text.substr(den_start));
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

namespace {

// One additive term of a scalar literal: a rational, optionally tagged
// imaginary by a "*i" suffix or by being a bare "i".
struct ScalarTerm {
  mpq_class value;
  bool imaginary = false;
};

ScalarTerm parse_term(std::string text) {
  ScalarTerm term;
  if (!text.empty() && (text.back() == 'i' || text.back() == 'I')) {
    term.imaginary = true;
    text.pop_back();
    if (!text.empty() && text.back() == '*') text.pop_back();
    if (text.empty() || text == "+" || text == "-") text += "1";
  }
  term.value = parse_rational(text);
  return term;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string clean;
  clean.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) throw parse_error("empty scalar literal");

  // Split on top-level '+'/'-' signs; a leading sign belongs to the first term.
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t pos = 1; pos < clean.size(); ++pos) {
    if (clean[pos] == '+' || clean[pos] == '-') {
      pieces.push_back(clean.substr(start, pos - start));
      start = pos;
    }
  }
  pieces.push_back(clean.substr(start));
  if (pieces.size() > 2)
    throw parse_error("too many terms in scalar literal '" + text + "'");

  Scalar result;
  bool seen_real = false, seen_imag = false;
  for (const std::string& piece : pieces) {
    ScalarTerm term = parse_term(piece);
    if (term.imaginary) {
      if (seen_imag)
        throw parse_error("duplicate imaginary part in '" + text + "'");
      seen_imag = true;
      result += Scalar(0, term.value);
    } else {
      if (seen_real) throw parse_error("duplicate real part in '" + text + "'");
      seen_real = true;
      result += Scalar(term.value);
    }
  }
  return result;
}

std::optional<mpq_class> sqrt_exact(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<Scalar> sqrt_exact(const Scalar& z) {
  if (z.im() == 0) {
    if (z.re() >= 0) {
      auto r = sqrt_exact(z.re());
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    auto r = sqrt_exact(mpq_class(-z.re()));
    if (!r) return std::nullopt;
    return Scalar(0, *r);  // canonical root of a negative real is +i*|root|
  }
  // For z = a+bi with b != 0: |z| must be rational and x^2 = (a+|z|)/2 a
  // perfect square; then y = b/(2x) and (x+iy)^2 = z with x > 0.
  auto mod = sqrt_exact(z.norm2());
  if (!mod) return std::nullopt;
  auto x = sqrt_exact(mpq_class((z.re() + *mod) / 2));
  if (!x || *x == 0) return std::nullopt;
  mpq_class y = z.im() / (2 * *x);
  Scalar root(*x, y);
  if (root * root != z) return std::nullopt;
  return root;
}

}  // namespace cliff
