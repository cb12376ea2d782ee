#include "convex_count/bigint.hpp"

#include <stdexcept>

namespace convex_count {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt generalized_binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  BigInt magnitude = binomial(k - n - 1, k);
  return (k % 2 == 0) ? magnitude : BigInt(-magnitude);
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw std::domain_error("exact_div: " + a.str() + " is not divisible by " + b.str());
  }
  return q;
}

BigInt pow2(unsigned e) {
  BigInt result = 1;
  result <<= e;
  return result;
}

BigInt power(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace convex_count
