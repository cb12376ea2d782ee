#include "convex_count/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace convex_count::spectral {

namespace {

// Dense polynomial over Q, low to high, normalized.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
  RatPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly monic(RatPoly p) {
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <typename Scalar>
Scalar eval(const RatPoly& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Scalar(*it);
  return acc;
}

Real to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& squarefree) {
    chain_.push_back(squarefree);
    chain_.push_back(derivative(squarefree));
    while (!chain_.back().empty() && chain_.back().size() > 1) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
    if (chain_.back().empty()) chain_.pop_back();
  }

  int sign_changes(const Rational& x) const {
    int changes = 0, previous = 0;
    for (const auto& p : chain_) {
      int s = sign_of(eval(p, x));
      if (s == 0) continue;
      if (previous != 0 && s != previous) ++changes;
      previous = s;
    }
    return changes;
  }

  /// Distinct roots in (a, b].
  int roots_in(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

 private:
  std::vector<RatPoly> chain_;
};

RatPoly squarefree_part(const IntPolynomial& p) {
  RatPoly rp = to_rational(p);
  RatPoly g = gcd(rp, derivative(rp));
  return monic(divmod(rp, g).first);
}

// Every root has modulus below 1 + max |a_i / a_d| (Cauchy).
Rational root_bound(const RatPoly& p) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) best = std::max(best, Rational(abs(p[i] / p.back())));
  return best + 1;
}

struct Bracket {
  Rational lo, hi;  // exactly one root in (lo, hi]
};

void isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, int count, std::vector<Bracket>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = sturm.roots_in(lo, mid);
  isolate(sturm, lo, mid, left, out);
  isolate(sturm, mid, hi, count - left, out);
}

Real refine(const RatPoly& p, Bracket b, const Real& eps) {
  if (eval(p, b.hi) == 0) return to_real(b.hi);
  // A few exact bisection steps before switching to floating point.
  int sign_hi = sign_of(eval(p, b.hi));
  for (int step = 0; step < 48; ++step) {
    Rational mid = (b.lo + b.hi) / 2;
    int s = sign_of(eval(p, mid));
    if (s == 0) return to_real(mid);
    if (s == sign_hi) b.hi = mid; else b.lo = mid;
  }

  const RatPoly dp = derivative(p);
  Real lo = to_real(b.lo), hi = to_real(b.hi);
  const int sign_lo = -sign_hi;
  Real x = (lo + hi) / 2;
  for (int iter = 0; iter < 2000; ++iter) {
    Real fx = eval(p, x);
    if (fx == 0) return x;
    if ((fx > 0 ? 1 : -1) == sign_lo) lo = x; else hi = x;
    Real dfx = eval(dp, x);
    Real next = (dfx != 0) ? Real(x - fx / dfx) : Real((lo + hi) / 2);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    Real step = abs(next - x);
    x = next;
    if (step < eps / 4 || hi - lo < eps) return x;
  }
  throw std::runtime_error("real_roots: refinement did not converge");
}

}  // namespace

unsigned precision_bits_from_env() {
  const char* raw = std::getenv("CONVEX_COUNT_PRECISION");
  if (raw == nullptr || *raw == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  long bits = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || bits < 32 || bits > 1 << 20) return kDefaultPrecisionBits;
  return static_cast<unsigned>(bits);
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  const auto digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

int count_real_roots(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  RatPoly sf = squarefree_part(p);
  SturmSequence sturm(sf);
  Rational bound = root_bound(sf);
  return sturm.roots_in(-bound, bound);
}

std::vector<Real> real_roots(const IntPolynomial& p, const Real& eps) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (p.degree() < 1) return {};
  RatPoly sf = squarefree_part(p);
  SturmSequence sturm(sf);
  Rational bound = root_bound(sf);
  std::vector<Bracket> brackets;
  isolate(sturm, -bound, bound, sturm.roots_in(-bound, bound), brackets);
  std::vector<Real> roots;
  roots.reserve(brackets.size());
  for (const auto& b : brackets) roots.push_back(refine(sf, b, eps));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace convex_count::spectral
