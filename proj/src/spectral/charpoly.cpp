#include "convex_count/spectral.hpp"

#include <stdexcept>

namespace convex_count::spectral {

namespace {

BigInt C(long n, long k) { return generalized_binomial(n, k); }

Rational rational_power(long base, long e) {
  BigInt p = power(BigInt(base), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

IntPolynomial integral_polynomial(const std::vector<Rational>& coeffs, const char* who) {
  std::vector<BigInt> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) throw std::logic_error(std::string(who) + ": non-integral coefficient " + c.str());
    ints.push_back(numerator(c));
  }
  return IntPolynomial(std::move(ints));
}

}  // namespace

CharPolySequence charpoly_recurrence(const HTMatrix& m, int n) {
  if (!m.is_pure_toeplitz()) throw std::invalid_argument("charpoly_recurrence: first row is not the Toeplitz extension");
  if (n < 0 || n > m.size()) throw std::invalid_argument("charpoly_recurrence: n must lie in [0, size]");
  CharPolySequence seq;
  seq.polys.reserve(static_cast<std::size_t>(n) + 1);
  seq.polys.push_back(IntPolynomial::constant(1));
  const BigInt& sub = m.subdiagonal();
  for (int i = 1; i <= n; ++i) {
    IntPolynomial d = IntPolynomial::shifted_lambda(m.band(0)) * seq.polys[i - 1];
    BigInt sub_power = 1;
    for (int s = 2; s <= i; ++s) {
      sub_power *= sub;
      BigInt factor = m.band(s - 1) * sub_power;
      if (s % 2 == 0) factor = -factor;  // (-1)^{s+1}
      d += seq.polys[i - s] * factor;
    }
    seq.polys.push_back(std::move(d));
  }
  return seq;
}

IntPolynomial charpoly_closed_kangulation(int k, int r) {
  if (k < 3) throw std::invalid_argument("charpoly_closed_kangulation: k must be at least 3");
  if (r < 0) throw std::invalid_argument("charpoly_closed_kangulation: r must be non-negative");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(r) + 1);
  for (int l = 0; l <= r; ++l) coeffs[l] = sign_power(l) * C(static_cast<long>(k - 2) * (l + 1), r - l);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial charpoly_closed_geometric(int n) {
  if (n < 0) throw std::invalid_argument("charpoly_closed_geometric: n must be non-negative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    Rational sum = 0;
    for (int k = t; k <= n; ++k) {
      BigInt binoms = C(k, t) * C(t + 1, n - k);
      if (binoms == 0) continue;
      sum += Rational(sign_power(k) * binoms) * rational_power(2, 2L * n - t - k);
    }
    coeffs[t] = sum;
  }
  return integral_polynomial(coeffs, "charpoly_closed_geometric");
}

IntPolynomial charpoly_closed_connected(int n) {
  if (n < 0) throw std::invalid_argument("charpoly_closed_connected: n must be non-negative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    Rational sum = 0;
    for (int l = 0; l <= t; ++l) {
      const long e = static_cast<long>(n) + 2L * l - 3L * t - 2;
      // The power of 3 can go negative; such terms only matter when the
      // bracket is nonzero, and then they are summed exactly.
      BigInt bracket = 2 * C(l, e) + 9 * C(l + 1, e + 2);
      if (bracket == 0) continue;
      Rational term = Rational(sign_power(t) * C(t, l) * bracket) * rational_power(2, t - l) * rational_power(3, e);
      sum += term;
    }
    coeffs[t] = sum;
  }
  return integral_polynomial(coeffs, "charpoly_closed_connected");
}

IntPolynomial charpoly_closed_partition(int n) {
  if (n < 0) throw std::invalid_argument("charpoly_closed_partition: n must be non-negative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= k; ++l) {
        BigInt bracket = 4 * C(k - t, 2L * k - n - l + 1) + C(k - t, 2L * k - n - l);
        if (bracket == 0) continue;
        BigInt binoms = C(k, t) * C(t, l);
        if (binoms == 0) continue;
        sum += Rational(sign_power(k) * binoms * bracket) * rational_power(2, 2L * k - n + t - 2L * l);
      }
    }
    coeffs[t] = sum;
  }
  return integral_polynomial(coeffs, "charpoly_closed_partition");
}

IntPolynomial characteristic_polynomial(const HTMatrix& m) {
  if (m.is_pure_toeplitz()) return charpoly_recurrence(m, m.size()).polys.back();
  return poly_determinant_charpoly(m);
}

}  // namespace convex_count::spectral
