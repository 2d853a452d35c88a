#pragma once

#include "knotguts/numeric.hpp"

#include <map>
#include <string>

namespace knotguts {

// Integer Laurent polynomial in one variable. Only nonzero terms are stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const BigInt& coeff, int degree);
  static LaurentPolynomial constant(const BigInt& c) { return monomial(c, 0); }

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()
  BigInt coeff(int degree) const;
  void add_term(int degree, const BigInt& c);
  const std::map<int, BigInt>& terms() const { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const BigInt& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  LaurentPolynomial shifted(int by) const;  // multiply by x^by
  LaurentPolynomial scaled_degrees(int factor) const;  // x -> x^factor
  LaurentPolynomial pow(unsigned n) const;
  BigInt value_at_one() const;

  // Exact division; throws std::logic_error when the divisor does not divide.
  LaurentPolynomial divided_by(const LaurentPolynomial& divisor) const;

  // Ascending degree with explicit signs, e.g. "-A^-5 + 2 - A^3".
  std::string to_string(const std::string& var) const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace knotguts
