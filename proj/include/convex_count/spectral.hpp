#pragma once

#include "convex_count/bigint.hpp"
#include "convex_count/ht_matrix.hpp"
#include "convex_count/polynomial.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace convex_count::spectral {

using Real = boost::multiprecision::mpfr_float;

/// Binary precision used when CONVEX_COUNT_PRECISION is unset or invalid.
inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Reads CONVEX_COUNT_PRECISION (bits); falls back to kDefaultPrecisionBits.
unsigned precision_bits_from_env();

/// Sets the process-wide default Real precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// d_0 .. d_n for the leading principal submatrices; polys[0] == 1.
struct CharPolySequence {
  std::string label;
  std::vector<IntPolynomial> polys;

  const IntPolynomial& operator[](std::size_t i) const { return polys.at(i); }
};

/// Characteristic polynomials of the leading i x i submatrices, i = 0 .. n, by
///   d_i = (a_0 - λ) d_{i-1} + sum_{s=2}^{i} (-1)^{s+1} a_{s-1} a_{-1}^{s-1} d_{i-s}.
/// Requires a pure Toeplitz band (std::invalid_argument otherwise) and n <= m.size().
CharPolySequence charpoly_recurrence(const HTMatrix& m, int n);

// Closed forms. Each is evaluated term by term in exact rationals and must come
// out integral (std::logic_error otherwise).
IntPolynomial charpoly_closed_kangulation(int k, int r);
IntPolynomial charpoly_closed_geometric(int n);
IntPolynomial charpoly_closed_connected(int n);
IntPolynomial charpoly_closed_partition(int n);

/// Distinct real roots of p in increasing order, each to absolute error below
/// `eps`, at the current Real precision. Root isolation is exact (square-free
/// part + Sturm sequence + rational bisection); refinement is safeguarded Newton.
std::vector<Real> real_roots(const IntPolynomial& p, const Real& eps);

/// Number of distinct real roots, computed exactly by a Sturm sequence.
int count_real_roots(const IntPolynomial& p);

struct EigenPair {
  Real lambda;
  /// (x_{n-1}, ..., x_0), x_0 = 1.
  std::vector<Real> vector;
  /// max |A x - λ x| / max |x|.
  Real residual;
};

/// x_i = (-1/a_{-1})^i d_i(λ), x_0 = 1, plus the residual of A x = λ x.
/// The vector is returned whether or not λ is an eigenvalue.
EigenPair eigenvector_from_charpoly(const HTMatrix& m, const Real& lambda);

/// Max-norm relative residual of (m, lambda, x) with x ordered as in EigenPair.
Real relative_residual(const HTMatrix& m, const Real& lambda, const std::vector<Real>& x);

struct DominantEigenvalue {
  Real value;
  /// Distinct real roots of the characteristic polynomial.
  int real_root_count = 0;
};

/// Largest-modulus real root of det(m - λI), to within `tol`.
/// Throws std::runtime_error when the polynomial has no real root.
DominantEigenvalue dominant_eigenvalue(const HTMatrix& m, const Real& tol);

/// The exact characteristic polynomial: recurrence for pure Toeplitz matrices,
/// cofactor expansion otherwise.
IntPolynomial characteristic_polynomial(const HTMatrix& m);

}  // namespace convex_count::spectral
