#include "knotguts/polynomial.hpp"

#include <stdexcept>

namespace knotguts {

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coeff, int degree) {
  LaurentPolynomial p;
  p.add_term(degree, coeff);
  return p;
}

int LaurentPolynomial::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LaurentPolynomial::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + by, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled_degrees(int factor) const {
  LaurentPolynomial r;
  for (const auto& [d, c] : terms_) r.add_term(d * factor, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

BigInt LaurentPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::divided_by(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  LaurentPolynomial rem = *this;
  LaurentPolynomial quot;
  const int dtop = divisor.max_degree();
  const int dlow = divisor.min_degree();
  const BigInt& lead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int rtop = rem.max_degree();
    if (rtop - dtop < rem.min_degree() - dlow) break;
    const BigInt& rc = rem.terms_.rbegin()->second;
    if (rc % lead != 0) break;
    LaurentPolynomial step = monomial(rc / lead, rtop - dtop);
    quot += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quot;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace knotguts
