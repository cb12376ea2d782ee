#pragma once

#include "convex_count/bigint.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace convex_count {

/// Dense polynomial in one variable (lambda) with BigInt coefficients.
/// Coefficients are stored low to high and kept normalized: the leading
/// stored coefficient is nonzero, and the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> low_to_high);
  explicit IntPolynomial(std::vector<BigInt> low_to_high);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);
  /// c - lambda
  static IntPolynomial shifted_lambda(const BigInt& c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int power) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial derivative() const;

  template <typename Scalar>
  Scalar evaluate(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Scalar(*it);
    }
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& s) { return lhs *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial rhs) { return rhs *= s; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "λ^4 - 8λ^3 - 16"; variable name is configurable.
  std::string to_string(const std::string& var = "λ") const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace convex_count
