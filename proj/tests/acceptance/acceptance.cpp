// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "convex_count/closed_form.hpp"
#include "convex_count/oracle.hpp"
#include "convex_count/production.hpp"
#include "convex_count/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <unordered_set>

using namespace convex_count;
using production::GraphClassSpec;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Records the first failure; later failures only bump the count.
class Collector {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string show(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
  return out + ")";
}

std::vector<BigInt> prefix(const std::vector<BigInt>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

std::vector<BigInt> vector_at(const GraphClassSpec& spec, int level) {
  return production::count_sequence(spec, level).back().vector.entries;
}

std::vector<BigInt> connected_totals(int last) {
  std::vector<BigInt> c;
  for (const auto& l : production::count_sequence(GraphClassSpec::connected(), last)) c.push_back(l.total);
  return c;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.passed && budget_seconds > 0 && secs > budget_seconds) {
    out = {false, "over the " + std::to_string(budget_seconds) + " s budget; " + out.detail};
  }
  if (!out.passed) ++failures;
  std::printf("%s  criterion %d  %s  [%.3f s]  %s\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.c_str());
  std::fflush(stdout);
}

Outcome golden_vectors() {
  Collector c;
  auto check = [&](const GraphClassSpec& spec, int level, std::vector<BigInt> expected) {
    const auto got = vector_at(spec, level);
    auto padded = expected;
    padded.resize(got.size(), 0);
    c.expect(got == padded, production::to_string(spec.cls) + " level " + std::to_string(level) + ": " + show(got));
  };
  check(GraphClassSpec::geometric(), 3, {4, 4});
  check(GraphClassSpec::geometric(), 4, {24, 16, 8});
  check(GraphClassSpec::geometric(), 5, {176, 112, 48, 16});
  check(GraphClassSpec::connected(), 3, {3, 1});
  check(GraphClassSpec::connected(), 4, {16, 6, 1});
  check(GraphClassSpec::connected(), 5, {105, 41, 9, 1});
  check(GraphClassSpec::partition(), 3, {2, 2, 0, 1});
  check(GraphClassSpec::partition(), 4, {6, 4, 3, 0, 1});
  return c.outcome("8 vectors exact");
}

Outcome golden_charpolys() {
  // Coefficients low to high, n = 1..6.
  const std::vector<std::vector<BigInt>> geometric{{2, -1},
                                                    {-4, -4, 1},
                                                    {8, 4, 6, -1},
                                                    {-16, 0, 0, -8, 1},
                                                    {32, -16, -16, -8, 10, -1},
                                                    {-64, 64, 48, 32, 20, -12, 1}};
  const std::vector<std::vector<BigInt>> connected{{3, -1},
                                                    {2, -6, 1},
                                                    {0, -13, 9, -1},
                                                    {0, -12, 33, -12, 1},
                                                    {0, -4, 63, -62, 15, -1},
                                                    {0, 0, 66, -180, 100, -18, 1}};
  const std::vector<std::vector<BigInt>> partition{{0, -1},
                                                    {-1, 0, 1},
                                                    {2, 2, 0, -1},
                                                    {-3, -4, -3, 0, 1},
                                                    {4, 5, 6, 4, 0, -1},
                                                    {-5, -4, -6, -8, -5, 0, 1}};
  Collector c;
  int compared = 0;
  auto run = [&](const char* name, const std::vector<std::vector<BigInt>>& golden,
                 const std::function<HTMatrix(int)>& build, const std::function<IntPolynomial(int)>& closed) {
    const auto rec = spectral::charpoly_recurrence(build(6), 6);
    for (int n = 1; n <= 6; ++n) {
      const IntPolynomial expected(golden[static_cast<std::size_t>(n - 1)]);
      const std::string where = std::string(name) + " n=" + std::to_string(n);
      c.expect(rec[static_cast<std::size_t>(n)] == expected, where + " recurrence " + rec[static_cast<std::size_t>(n)].to_string());
      c.expect(closed(n) == expected, where + " closed " + closed(n).to_string());
      const auto det = poly_determinant_charpoly(build(n));
      c.expect(det == expected, where + " determinant " + det.to_string());
      ++compared;
    }
  };
  run("geometric", geometric, production::build_geometric_matrix, spectral::charpoly_closed_geometric);
  run("connected", connected, production::build_connected_matrix, spectral::charpoly_closed_connected);
  run("partition", partition, production::build_partition_matrix, spectral::charpoly_closed_partition);
  return c.outcome(std::to_string(compared) + " polynomials x 3 methods");
}

Outcome closed_form_agreement() {
  Collector c;
  int vectors = 0;
  for (const auto& spec : {GraphClassSpec::geometric(), GraphClassSpec::connected(), GraphClassSpec::partition(),
                           GraphClassSpec::k_angulation(3), GraphClassSpec::k_angulation(4),
                           GraphClassSpec::k_angulation(5), GraphClassSpec::k_angulation(6)}) {
    for (const auto& l : production::count_sequence(spec, 12)) {
      const auto cf = closed_form::closed_form_vector(spec, l.level, static_cast<int>(l.vector.entries.size()));
      c.expect(cf.entries == l.vector.entries, production::to_string(spec.cls) + " k=" + std::to_string(spec.k) +
                                                   " level " + std::to_string(l.level) + ": " + show(cf.entries) +
                                                   " vs " + show(l.vector.entries));
      ++vectors;
    }
  }
  return c.outcome(std::to_string(vectors) + " vectors, levels up to 12, size padded +2");
}

Outcome oracle_agreement() {
  Collector c;
  int compared = 0;
  auto cmp = [&](const oracle::Histogram& h, const std::vector<BigInt>& v, const std::string& where) {
    c.expect(oracle::same_counts(h, v), where + ": oracle " + show(h) + " vs matrix " + show(v));
    ++compared;
  };
  for (int n = 2; n <= 7; ++n) {
    cmp(oracle::geometric_histogram(n), vector_at(GraphClassSpec::geometric(), n), "geometric n=" + std::to_string(n));
    cmp(oracle::connected_histogram(n), vector_at(GraphClassSpec::connected(), n), "connected n=" + std::to_string(n));
  }
  for (int n = 1; n <= 9; ++n) {
    cmp(oracle::partition_histogram(n), vector_at(GraphClassSpec::partition(), n), "partition n=" + std::to_string(n));
  }
  for (int k = 3; k <= 5; ++k) {
    for (int r = 1; (k - 2) * r + 2 <= 12; ++r) {
      const auto h = oracle::dissection_histogram(k, r);
      const auto v = vector_at(GraphClassSpec::k_angulation(k), r);
      cmp(h, v, "k=" + std::to_string(k) + " r=" + std::to_string(r));
      std::vector<BigInt> formula;
      for (int j = 1; j <= r; ++j) formula.push_back(closed_form::kangulation_entry(k, r, j));
      c.expect(oracle::same_counts(h, formula), "k=" + std::to_string(k) + " r=" + std::to_string(r) + " entry formula");
    }
  }
  const auto relation = GraphClassSpec::relation(connected_totals(9));
  for (int n = 2; n <= 7; ++n) {
    cmp(oracle::relation_histogram(n), vector_at(relation, n), "relation n=" + std::to_string(n));
  }
  return c.outcome(std::to_string(compared) + " histograms exact");
}

Outcome totals() {
  Collector c;
  int pairs = 0;
  for (int k = 3; k <= 6; ++k) {
    for (int r = 1; (k - 2) * r + 2 <= 14; ++r) {
      BigInt counted = 0;
      oracle::enumerate_dissections(k, r, [&](const oracle::Dissection&) { ++counted; });
      c.expect(counted == production::k_angulation_total(k, r),
               "k=" + std::to_string(k) + " r=" + std::to_string(r) + ": oracle " + to_decimal(counted));
      ++pairs;
    }
  }
  std::vector<BigInt> k3;
  for (const auto& l : production::count_sequence(GraphClassSpec::k_angulation(3), 6)) k3.push_back(l.total);
  c.expect(k3 == std::vector<BigInt>{1, 2, 5, 14, 42, 132}, "K_3 totals " + show(k3));

  std::vector<BigInt> geo;
  for (const auto& l : production::count_sequence(GraphClassSpec::geometric(), 6)) geo.push_back(l.total);
  c.expect(prefix(geo, 4) == std::vector<BigInt>{2, 8, 48, 352}, "geometric totals n=2..5 " + show(geo));
  long oracle_n6 = 0;
  oracle::enumerate_noncrossing_graphs(6, [&](const oracle::PlaneGraph&) { ++oracle_n6; });
  c.expect(geo.back() == oracle_n6, "geometric n=6: matrix " + to_decimal(geo.back()) + " vs oracle " +
                                         std::to_string(oracle_n6));
  std::string note = std::to_string(pairs) + " (k, r) pairs; Catalan ok; geometric " + show(geo) +
                     ", n=6 matrix = oracle = " + std::to_string(oracle_n6);
  if (oracle_n6 != 2832) note += " (not 2832)";
  return c.outcome(note);
}

Outcome relation_matrix() {
  Collector c;
  const auto rel = production::count_sequence(GraphClassSpec::relation(connected_totals(12)), 10);
  const auto geo = production::count_sequence(GraphClassSpec::geometric(), 10);
  for (const auto& g : geo) {
    const auto& r = rel[static_cast<std::size_t>(g.level - 1)];
    c.expect(r.total == g.total, "n=" + std::to_string(g.level) + ": relation " + to_decimal(r.total) + " vs " +
                                     to_decimal(g.total));
  }
  // The input sequences must reach c_9 for a level-7 matrix sized 9; the
  // spanning-structure oracle is run past its default guard for them.
  auto spanning = [](oracle::SpanningKind kind) {
    std::vector<BigInt> c;
    for (int i = 2; i <= 9; ++i) c.push_back(oracle::enumerate_spanning_structures(i, kind, true));
    return c;
  };
  const struct {
    oracle::SpanningKind input, target;
    const char* name;
  } variants[] = {{oracle::SpanningKind::Tree, oracle::SpanningKind::Forest, "trees -> forests"},
                  {oracle::SpanningKind::Path, oracle::SpanningKind::PathForest, "paths -> path forests"}};
  for (const auto& v : variants) {
    for (const auto& l : production::count_sequence(GraphClassSpec::relation(spanning(v.input)), 7)) {
      const auto expected = oracle::enumerate_spanning_structures(l.level, v.target);
      c.expect(l.total == expected, std::string(v.name) + " n=" + std::to_string(l.level) + ": " +
                                        to_decimal(l.total) + " vs oracle " + to_decimal(expected));
    }
  }
  return c.outcome("connected -> geometric n<=10; trees -> forests and paths -> path forests n<=7");
}

Outcome lemma() {
  Collector c;
  for (int t = 0; t <= 12; ++t)
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 12; ++n)
        c.expect(closed_form::lemma1_check(t, m, n),
                 "t=" + std::to_string(t) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
  return c.outcome("2197 triples");
}

Outcome residuals() {
  spectral::PrecisionScope scope(256);
  const spectral::Real eps("1e-40");
  const spectral::Real bound("1e-30");
  Collector c;
  int roots = 0;
  spectral::Real worst = 0;
  std::vector<GraphClassSpec> specs{GraphClassSpec::geometric(), GraphClassSpec::connected(),
                                    GraphClassSpec::partition(), GraphClassSpec::k_angulation(3),
                                    GraphClassSpec::k_angulation(4), GraphClassSpec::k_angulation(5),
                                    GraphClassSpec::relation(connected_totals(6))};
  for (const auto& spec : specs) {
    for (int n = 1; n <= 6; ++n) {
      const auto m = production::build_matrix(spec, n);
      const auto p = spectral::characteristic_polynomial(m);
      const auto found = spectral::real_roots(p, eps);
      c.expect(static_cast<int>(found.size()) == spectral::count_real_roots(p), "root count mismatch");
      for (const auto& lambda : found) {
        const auto pair = spectral::eigenvector_from_charpoly(m, lambda);
        ++roots;
        if (pair.residual > worst) worst = pair.residual;
        c.expect(pair.residual <= bound, production::to_string(spec.cls) + " n=" + std::to_string(n) + " λ=" +
                                             lambda.str(25) + " residual " + pair.residual.str(5));
      }
    }
  }
  return c.outcome(std::to_string(roots) + " real roots, worst relative residual " +
                   worst.str(3, std::ios_base::scientific));
}

std::size_t hash_edges(const std::vector<oracle::Edge>& edges) {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& e : edges) {
    h = (h ^ static_cast<std::size_t>(e.a)) * 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(e.b)) * 1099511628211ULL;
  }
  return h ^ edges.size();
}

struct EdgeListHash {
  std::size_t operator()(const std::vector<oracle::Edge>& e) const { return hash_edges(e); }
};

Outcome properties() {
  Collector c;
  // Hessenberg structure and constant subdiagonal.
  std::vector<GraphClassSpec> specs{GraphClassSpec::geometric(), GraphClassSpec::connected(),
                                    GraphClassSpec::partition(), GraphClassSpec::k_angulation(3),
                                    GraphClassSpec::k_angulation(5), GraphClassSpec::relation(connected_totals(14))};
  for (const auto& spec : specs) {
    for (int n = 1; n <= 12; ++n) {
      const auto d = production::build_matrix(spec, n).dense();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (j < i - 1) c.expect(d[i][j] == 0, "nonzero below the subdiagonal");
          if (j == i - 1) c.expect(d[i][j] == d[1][0], "subdiagonal not constant");
          if (i >= 1 && j >= i - 1 && i + 1 < n && j + 1 < n) c.expect(d[i][j] == d[i + 1][j + 1], "band not Toeplitz");
        }
    }
  }
  // Non-negative count vectors.
  for (const auto& spec : specs) {
    for (const auto& l : production::count_sequence(spec, 12)) {
      for (const auto& x : l.vector.entries) c.expect(x >= 0, "negative count");
    }
  }
  // Duplicate-free enumeration.
  for (int n = 1; n <= 6; ++n) {
    std::unordered_set<std::vector<oracle::Edge>, EdgeListHash> seen;
    long total = 0;
    oracle::enumerate_noncrossing_graphs(n, [&](const oracle::PlaneGraph& g) {
      ++total;
      c.expect(g.is_non_crossing(), "crossing graph emitted");
      seen.insert(g.edges);
    });
    c.expect(static_cast<long>(seen.size()) == total, "duplicate graph at n=" + std::to_string(n));
    std::unordered_set<std::string> parts;
    long pcount = 0;
    oracle::enumerate_partitions(n, [&](const oracle::NonCrossingPartitionValue& p) {
      ++pcount;
      std::string key;
      for (const auto& b : p.blocks) {
        for (int v : b) key += std::to_string(v) + ",";
        key += "|";
      }
      parts.insert(key);
    });
    c.expect(static_cast<long>(parts.size()) == pcount, "duplicate partition at n=" + std::to_string(n));
  }
  // Determinism across worker counts.
  for (int n = 2; n <= 7; ++n) {
    c.expect(oracle::geometric_histogram(n, {1, false}) == oracle::geometric_histogram(n, {4, false}),
             "geometric histogram depends on workers at n=" + std::to_string(n));
    c.expect(oracle::connected_histogram(n, {1, false}) == oracle::connected_histogram(n, {3, false}),
             "connected histogram depends on workers at n=" + std::to_string(n));
    c.expect(oracle::relation_histogram(n, {2, false}) == oracle::relation_histogram(n, {5, false}),
             "relation histogram depends on workers at n=" + std::to_string(n));
  }
  return c.outcome("Hessenberg structure, non-negativity, duplicate-free enumeration, worker-count determinism");
}

// Diagnostic only: the dominant eigenvalue of G_n rises with n, and the growth
// ratio of the totals rises too.
void monotone_diagnostic() {
  spectral::PrecisionScope scope(256);
  const spectral::Real tol("1e-40");
  bool ok = true;
  spectral::Real previous = 0;
  std::string values;
  for (int n = 1; n <= 12; ++n) {
    const auto d = spectral::dominant_eigenvalue(production::build_geometric_matrix(n), tol);
    ok = ok && d.value > previous;
    previous = d.value;
    values += (n > 1 ? " " : "") + d.value.str(6);
  }
  const auto seq = production::count_sequence(GraphClassSpec::geometric(), 14);
  for (std::size_t i = 2; i < seq.size(); ++i) {
    ok = ok && seq[i].total * seq[i - 2].total > seq[i - 1].total * seq[i - 1].total;
  }
  std::printf("%s  diagnostic   dominant eigenvalue of G_n (n=1..12) and total growth ratios increase: %s\n", ok ? "PASS" : "FAIL",
              values.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "golden count vectors", 1.0, golden_vectors);
  criterion(2, "golden characteristic polynomials", 5.0, golden_charpolys);
  criterion(3, "closed forms = matrix powers", 30.0, closed_form_agreement);
  criterion(4, "oracle histograms = matrix vectors", 600.0, oracle_agreement);
  criterion(5, "totals", 0.0, totals);
  criterion(6, "relation matrix", 0.0, relation_matrix);
  criterion(7, "lemma identity", 10.0, lemma);
  criterion(8, "eigenpair residuals", 30.0, residuals);
  criterion(9, "property suite", 0.0, properties);
  monotone_diagnostic();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
