#include "cliffmodel/polyform.hpp"

#include <cctype>
#include <sstream>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

void check_gens(int gens) {
  if (gens < 0 || gens > 16)
    throw invalid_argument("generator count out of range: " +
                           std::to_string(gens));
}

void check_same_gens(const Polyform& a, const Polyform& b) {
  if (a.gens() != b.gens())
    throw dimension_mismatch("polyforms over different generator counts");
}

}  // namespace

Polyform::Polyform(int gens) : gens_(gens) { check_gens(gens); }

Polyform Polyform::monomial(int gens, Mask mask, Scalar coeff) {
  check_gens(gens);
  if (mask >= (Mask{1} << gens))
    throw invalid_argument("monomial mask out of range");
  Polyform p(gens);
  p.add_term(mask, coeff);
  return p;
}

Scalar Polyform::coeff(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polyform::add_term(Mask mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polyform Polyform::operator-() const {
  Polyform out(gens_);
  for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
  return out;
}

Polyform& Polyform::operator+=(const Polyform& o) {
  check_same_gens(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

Polyform& Polyform::operator-=(const Polyform& o) {
  check_same_gens(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

Polyform operator*(const Scalar& c, const Polyform& p) {
  Polyform out(p.gens());
  if (c.is_zero()) return out;
  for (const auto& [mask, t] : p.terms()) out.add_term(mask, c * t);
  return out;
}

Polyform Polyform::parity_part(int parity) const {
  Polyform out(gens_);
  for (const auto& [mask, c] : terms_)
    if (mask_degree(mask) % 2 == parity) out.add_term(mask, c);
  return out;
}

Polyform Polyform::conjugate() const {
  Polyform out(gens_);
  for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, c.conj());
  return out;
}

Polyform Polyform::reverse() const {
  Polyform out(gens_);
  for (const auto& [mask, c] : terms_) {
    int k = mask_degree(mask);
    bool flip = (k * (k - 1) / 2) % 2 != 0;
    out.terms_.emplace(mask, flip ? -c : c);
  }
  return out;
}

int wedge_sign(Mask a, Mask b) {
  // Each factor of b must hop over the factors of a above it.
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    Mask bit = rest & -rest;
    inversions += mask_degree(a & ~(bit | (bit - 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Polyform wedge(const Polyform& a, const Polyform& b) {
  check_same_gens(a, b);
  Polyform out(a.gens());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

Polyform wedge_generator(int j, const Polyform& p) {
  if (j < 1 || j > p.gens())
    throw invalid_argument("generator index out of range: " + std::to_string(j));
  Mask bit = Mask{1} << (j - 1);
  Polyform out(p.gens());
  for (const auto& [mask, c] : p.terms()) {
    if (mask & bit) continue;
    // e_j hops over the factors below it... none: e_j enters in front, then
    // moves past every factor smaller than j to reach ascending order.
    bool flip = mask_degree(mask & (bit - 1)) % 2 != 0;
    out.add_term(mask | bit, flip ? -c : c);
  }
  return out;
}

Polyform contract_generator(int j, const Polyform& p) {
  if (j < 1 || j > p.gens())
    throw invalid_argument("generator index out of range: " + std::to_string(j));
  Mask bit = Mask{1} << (j - 1);
  Polyform out(p.gens());
  for (const auto& [mask, c] : p.terms()) {
    if (!(mask & bit)) continue;
    bool flip = mask_degree(mask & (bit - 1)) % 2 != 0;
    out.add_term(mask & ~bit, flip ? -c : c);
  }
  return out;
}

Scalar top_coefficient(const Polyform& p, int orientation) {
  if (orientation != 1 && orientation != -1)
    throw invalid_argument("orientation must be +1 or -1");
  Mask top = (Mask{1} << p.gens()) - 1;
  Scalar c = p.coeff(top);
  return orientation < 0 ? -c : c;
}

namespace {

std::string monomial_name(Mask mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int j = 1; mask != 0; ++j, mask >>= 1) {
    if (!(mask & 1)) continue;
    if (!out.empty()) out += "^";
    out += "e" + std::to_string(j);
  }
  return out;
}

// Drops "/1" denominators from a short scalar rendering, display only.
std::string tidy_coeff(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '/' && i + 1 < s.size() && s[i + 1] == '1' &&
        (i + 2 == s.size() ||
         !std::isdigit(static_cast<unsigned char>(s[i + 2])))) {
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

}  // namespace

std::string Polyform::to_string() const {
  if (terms_.empty()) return "·";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    std::string cs = tidy_coeff(c.to_short_string());
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (mask == 0) {
      os << cs;
    } else if (cs == "1") {
      os << monomial_name(mask);
    } else if (cs == "-1") {
      os << "-" << monomial_name(mask);
    } else {
      bool composite = cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
      if (composite) os << "(" << cs << ")";
      else os << cs;
      os << "*" << monomial_name(mask);
    }
  }
  return os.str();
}

}  // namespace cliff
