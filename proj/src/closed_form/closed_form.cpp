#include "convex_count/closed_form.hpp"

#include <stdexcept>

namespace convex_count::closed_form {

using production::GraphClass;

namespace {

// The entry formulas come out of power-series expansions of (1 - x)^{-m} that
// include m = 0, so binomials with a negative upper index take their
// generalized value (C(-1, 0) = 1).
BigInt C(long n, long k) { return generalized_binomial(n, k); }

BigInt signed_pow2(long e, int sign) {
  BigInt v = pow2(static_cast<unsigned>(e));
  return sign < 0 ? BigInt(-v) : v;
}

}  // namespace

BigInt kangulation_entry(int k, int r, int j) {
  if (k < 3) throw std::invalid_argument("kangulation_entry: k must be at least 3");
  if (r < 1 || j < 1 || j > r) return 0;
  BigInt numerator = BigInt(j) * C(static_cast<long>(k - 1) * r - j - 1, r - j);
  return exact_div(numerator, BigInt(r));
}

BigInt geometric_entry(int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) return 0;
  BigInt sum = 0;
  for (int k = j; k <= n - 1; ++k) {
    BigInt term = C(n - 1, k) * C(n + k - j - 2, k - j) * pow2(static_cast<unsigned>(k));
    if ((n - 1 - k) % 2 == 0) sum += term; else sum -= term;
  }
  BigInt numerator = BigInt(j) * pow2(static_cast<unsigned>(n - 1 - j)) * sum;
  BigInt value = exact_div(numerator, BigInt(n - 1));
  if (value < 0) throw std::logic_error("geometric_entry: negative result");
  return value;
}

BigInt connected_entry(int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) return 0;
  BigInt sum = 0;
  for (int k = 0; k <= n - 1; ++k) {
    BigInt inner = 0;
    for (int l = 0; l <= n - j - 1; ++l) {
      inner += C(n - 2 - k + l, l) * C(k + n - l - j - 2, n - l - j - 1) * pow2(static_cast<unsigned>(l));
    }
    // 2^{n-1} (-1/2)^k = (-1)^k 2^{n-1-k}, an integer since k <= n - 1.
    sum += C(n - 1, k) * signed_pow2(n - 1 - k, sign_power(k)) * inner;
  }
  BigInt value = exact_div(BigInt(j) * sum, BigInt(n - 1));
  if (value < 0) throw std::logic_error("connected_entry: negative result");
  return value;
}

BigInt partition_entry(int n, int j) {
  if (n < 1 || j < 1 || j > n + 1) return 0;
  const int lower = (n + j + 1 + 1) / 2;  // ceil((n + j + 1) / 2)
  BigInt sum = 0;
  for (int k = lower; k <= n + 1; ++k) {
    sum += C(n + 1, k) * C(k - j - 1, 2 * k - n - j - 1) * pow2(static_cast<unsigned>(2 * k - n - j - 1));
  }
  return exact_div(BigInt(j) * sum, BigInt(n + 1));
}

EntryFormulaResult evaluate_entry(GraphClass cls, int level, int j, int k) {
  EntryFormulaResult r{cls, level, j, 0};
  switch (cls) {
    case GraphClass::KAngulation: r.value = kangulation_entry(k, level, j); break;
    case GraphClass::Geometric: r.value = geometric_entry(level, j); break;
    case GraphClass::Connected: r.value = connected_entry(level, j); break;
    case GraphClass::NonCrossingPartition: r.value = partition_entry(level, j); break;
    case GraphClass::RelationMatrix: throw std::invalid_argument("relation-matrix classes have no closed-form entries");
  }
  return r;
}

CountVector closed_form_vector(const production::GraphClassSpec& spec, int level, int size) {
  CountVector v{std::vector<BigInt>(static_cast<std::size_t>(size)), level};
  for (int j = 1; j <= size; ++j) v.entries[static_cast<std::size_t>(j - 1)] = evaluate_entry(spec.cls, level, j, spec.k).value;
  return v;
}

std::pair<BigInt, BigInt> lemma1_sides(int t, int m, int n) {
  if (t < 0 || m < 0 || n < 0) throw std::invalid_argument("lemma1: t, m, n must be non-negative");
  BigInt lhs = 0;
  for (int j = 0; j <= n; ++j) {
    BigInt multiset = (m == 0) ? BigInt(j == 0 ? 1 : 0) : binomial(j + m - 1, m - 1);
    BigInt term = multiset * binomial(static_cast<long>(m) * (t + 1), n - j - t);
    if (j % 2 == 0) lhs += term; else lhs -= term;
  }
  return {lhs, binomial(static_cast<long>(m) * t, n - t)};
}

bool lemma1_check(int t, int m, int n) {
  auto [lhs, rhs] = lemma1_sides(t, m, n);
  return lhs == rhs;
}

}  // namespace convex_count::closed_form
