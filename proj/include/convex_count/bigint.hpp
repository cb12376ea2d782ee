#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace convex_count {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// C(n, k) with the combinatorial convention: zero unless 0 <= k <= n.
BigInt binomial(long n, long k);

/// C(n, k) extended to negative n by upper negation,
/// C(n, k) = (-1)^k C(k - n - 1, k). Zero for k < 0.
BigInt generalized_binomial(long n, long k);

/// a / b, throwing std::domain_error unless b divides a.
BigInt exact_div(const BigInt& a, const BigInt& b);

BigInt pow2(unsigned e);
BigInt power(const BigInt& base, unsigned e);

/// (-1)^e as +1 / -1.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_decimal(const BigInt& x);
BigInt from_decimal(const std::string& text);

}  // namespace convex_count
