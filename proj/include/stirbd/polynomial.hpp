#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "stirbd/bigint.hpp"

namespace stirbd {

/// Dense polynomial with exact integer coefficients, lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int degree, const BigInt& c = 1);
  // x - root
  static IntPolynomial linear_factor(const BigInt& root);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(int degree) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

  BigInt operator()(const BigInt& x) const;  // Horner

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // e.g. "x^2 - 4x + 3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
inline BigInt eval(const IntPolynomial& p, const BigInt& x) { return p(x); }

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

}  // namespace stirbd
