#include "convex_count/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace convex_count {

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> low_to_high) : coeffs_(low_to_high) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> low_to_high) : coeffs_(std::move(low_to_high)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::shifted_lambda(const BigInt& c) { return IntPolynomial({c, BigInt(-1)}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial neg = *this;
  for (auto& c : neg.coeffs_) c = -c;
  return neg;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || p == 0) out << mag;
    if (p >= 1) out << var;
    if (p >= 2) out << "^" << p;
  }
  return out.str();
}

}  // namespace convex_count
