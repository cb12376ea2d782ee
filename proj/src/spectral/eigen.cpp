#include "convex_count/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace convex_count::spectral {

Real relative_residual(const HTMatrix& m, const Real& lambda, const std::vector<Real>& x) {
  const int n = m.size();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("relative_residual: size mismatch");
  Real worst = 0, scale = 0;
  for (int i = 0; i < n; ++i) {
    Real acc = -lambda * x[i];
    for (int j = std::max(0, i - 1); j < n; ++j) acc += Real(m.entry(i, j)) * x[j];
    worst = std::max(worst, Real(abs(acc)));
    scale = std::max(scale, Real(abs(x[i])));
  }
  if (scale == 0) throw std::domain_error("relative_residual: zero vector");
  return worst / scale;
}

EigenPair eigenvector_from_charpoly(const HTMatrix& m, const Real& lambda) {
  if (m.subdiagonal() == 0) throw std::invalid_argument("eigenvector_from_charpoly: subdiagonal a_{-1} is zero");
  const int n = m.size();
  CharPolySequence d = charpoly_recurrence(m, n - 1);
  const Real ratio = Real(-1) / Real(m.subdiagonal());
  std::vector<Real> x(static_cast<std::size_t>(n));
  Real factor = 1;
  for (int i = 0; i < n; ++i) {
    // x_i sits at position n - 1 - i.
    x[static_cast<std::size_t>(n - 1 - i)] = factor * d[static_cast<std::size_t>(i)].evaluate(lambda);
    factor *= ratio;
  }
  Real residual = relative_residual(m, lambda, x);
  return {lambda, std::move(x), std::move(residual)};
}

DominantEigenvalue dominant_eigenvalue(const HTMatrix& m, const Real& tol) {
  if (!(tol > 0)) throw std::invalid_argument("dominant_eigenvalue: tolerance must be positive");
  IntPolynomial p = characteristic_polynomial(m);
  std::vector<Real> roots = real_roots(p, tol);
  if (roots.empty()) throw std::runtime_error("dominant_eigenvalue: characteristic polynomial has no real root");
  // Ascending order: the candidates are the two ends; prefer the positive one on ties.
  const Real& low = roots.front();
  const Real& high = roots.back();
  Real best = (abs(low) > abs(high)) ? low : high;
  return {best, static_cast<int>(roots.size())};
}

}  // namespace convex_count::spectral
