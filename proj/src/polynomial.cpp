#include "stirbd/polynomial.hpp"

#include <algorithm>

namespace stirbd {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear_factor(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, 1}); }

BigInt IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[degree];
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigInt> product(coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) product[i + j] += coefficients_[i] * other.coefficients_[j];
  coefficients_ = std::move(product);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coefficients_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace stirbd
