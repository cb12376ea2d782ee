#include "convex_count/cli.hpp"

#include "convex_count/closed_form.hpp"
#include "convex_count/oracle.hpp"
#include "convex_count/spectral.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace convex_count::cli {

namespace {

using production::GraphClass;
using production::GraphClassSpec;

std::string show(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
  return out + ")";
}

std::string label(const GraphClassSpec& spec) {
  std::string s = production::to_string(spec.cls);
  if (spec.cls == GraphClass::KAngulation) s += " k=" + std::to_string(spec.k);
  return s;
}

std::vector<GraphClassSpec> closed_form_classes() {
  return {GraphClassSpec::geometric(), GraphClassSpec::connected(), GraphClassSpec::partition(),
          GraphClassSpec::k_angulation(3), GraphClassSpec::k_angulation(4), GraphClassSpec::k_angulation(5)};
}

IntPolynomial closed_charpoly(const GraphClassSpec& spec, int n) {
  switch (spec.cls) {
    case GraphClass::KAngulation: return spectral::charpoly_closed_kangulation(spec.k, n);
    case GraphClass::Geometric: return spectral::charpoly_closed_geometric(n);
    case GraphClass::Connected: return spectral::charpoly_closed_connected(n);
    case GraphClass::NonCrossingPartition: return spectral::charpoly_closed_partition(n);
    case GraphClass::RelationMatrix: break;
  }
  throw std::invalid_argument("no closed-form characteristic polynomial for " + label(spec));
}

// Runs `body`; an escaping exception becomes a failed check.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

void suite_vectors(const VerifyLimits& lim, VerifyReport& rep) {
  for (const auto& spec : closed_form_classes()) {
    const std::string name = "closed form = matrix power, " + label(spec);
    rep.checks.push_back(guarded(name, [&] {
      const auto seq = production::count_sequence(spec, lim.n_max);
      for (const auto& l : seq) {
        const auto cf = closed_form::closed_form_vector(spec, l.level, static_cast<int>(l.vector.entries.size()));
        if (cf.entries != l.vector.entries) {
          return CheckResult{name, false,
                             "level " + std::to_string(l.level) + ": matrix " + show(l.vector.entries) +
                                 " vs closed form " + show(cf.entries)};
        }
      }
      return CheckResult{name, true, "levels " + std::to_string(spec.start_index) + ".." + std::to_string(lim.n_max)};
    }));
  }
}

void suite_charpoly(const VerifyLimits& lim, VerifyReport& rep) {
  const int det_cap = lim.force ? lim.n_max : std::min(lim.n_max, 8);
  for (const auto& spec : closed_form_classes()) {
    const std::string name = "recurrence = closed form = determinant, " + label(spec);
    rep.checks.push_back(guarded(name, [&] {
      const auto seq = spectral::charpoly_recurrence(production::build_matrix(spec, lim.n_max), lim.n_max);
      for (int n = 0; n <= lim.n_max; ++n) {
        const auto cf = closed_charpoly(spec, n);
        if (cf != seq[n]) {
          return CheckResult{name, false,
                             "n=" + std::to_string(n) + ": recurrence " + seq[n].to_string() + " vs closed " + cf.to_string()};
        }
        if (n >= 1 && n <= det_cap) {
          const auto det = poly_determinant_charpoly(production::build_matrix(spec, n));
          if (det != seq[n]) {
            return CheckResult{name, false,
                               "n=" + std::to_string(n) + ": recurrence " + seq[n].to_string() + " vs determinant " +
                                   det.to_string()};
          }
        }
      }
      return CheckResult{name, true,
                         "n=0.." + std::to_string(lim.n_max) + ", determinant to n=" + std::to_string(det_cap)};
    }));
  }
  const std::string name = "recurrence = determinant, relation (connected input)";
  rep.checks.push_back(guarded(name, [&] {
    const auto c = relation_sequence("connected", std::max(lim.n_max, 2), false);
    const auto seq = spectral::charpoly_recurrence(production::build_relation_matrix(lim.n_max, c), lim.n_max);
    for (int n = 1; n <= det_cap; ++n) {
      const auto det = poly_determinant_charpoly(production::build_relation_matrix(n, c));
      if (det != seq[n]) {
        return CheckResult{name, false, "n=" + std::to_string(n) + ": " + seq[n].to_string() + " vs " + det.to_string()};
      }
    }
    return CheckResult{name, true, "n=1.." + std::to_string(det_cap)};
  }));
}

void suite_eigen(const VerifyLimits& lim, VerifyReport& rep) {
  spectral::PrecisionScope scope(spectral::precision_bits_from_env());
  const spectral::Real eps("1e-40");
  const spectral::Real bound("1e-30");
  auto specs = closed_form_classes();
  specs.push_back(GraphClassSpec::relation(relation_sequence("connected", std::max(lim.n_max, 2), false)));
  for (const auto& spec : specs) {
    const std::string name = "eigenvector residuals, " + label(spec);
    rep.checks.push_back(guarded(name, [&] {
      int roots = 0;
      spectral::Real worst = 0;
      for (int n = 1; n <= lim.n_max; ++n) {
        const auto m = production::build_matrix(spec, n);
        for (const auto& lambda : spectral::real_roots(spectral::characteristic_polynomial(m), eps)) {
          const auto pair = spectral::eigenvector_from_charpoly(m, lambda);
          ++roots;
          if (pair.residual > worst) worst = pair.residual;
          if (!(pair.residual <= bound)) {
            return CheckResult{name, false,
                               "n=" + std::to_string(n) + " λ=" + lambda.str(30) + " residual " + pair.residual.str(6)};
          }
        }
      }
      return CheckResult{name, true, std::to_string(roots) + " roots, worst residual " + worst.str(3)};
    }));
  }
  const std::string name = "dominant eigenvalue of the geometric matrix increases with n";
  rep.checks.push_back(guarded(name, [&] {
    spectral::Real previous = 0;
    for (int n = 1; n <= lim.n_max; ++n) {
      const auto d = spectral::dominant_eigenvalue(production::build_geometric_matrix(n), eps);
      if (!(d.value > previous)) {
        return CheckResult{name, false, "n=" + std::to_string(n) + ": " + d.value.str(20) + " <= " + previous.str(20)};
      }
      previous = d.value;
    }
    return CheckResult{name, true, "n=1.." + std::to_string(lim.n_max) + ", last " + previous.str(12)};
  }));
}

CheckResult compare_histogram(const std::string& name, const std::string& where, const oracle::Histogram& h,
                              const std::vector<BigInt>& v) {
  if (oracle::same_counts(h, v)) return {name, true, ""};
  return {name, false, where + ": oracle " + show(h) + " vs matrix " + show(v)};
}

void suite_oracle(const VerifyLimits& lim, VerifyReport& rep) {
  oracle::HistogramOptions opts{lim.workers, lim.force};
  struct Graphs {
    GraphClassSpec spec;
    std::function<oracle::Histogram(int)> histogram;
  };
  std::vector<Graphs> graph_classes{
      {GraphClassSpec::geometric(), [&](int n) { return oracle::geometric_histogram(n, opts); }},
      {GraphClassSpec::connected(), [&](int n) { return oracle::connected_histogram(n, opts); }},
      {GraphClassSpec::partition(), [&](int n) { return oracle::partition_histogram(n, oracle::IsolationRootPolicy::IncludeRoot, lim.force); }},
      {GraphClassSpec::relation(relation_sequence("connected", lim.n_max + 2, false)),
       [&](int n) { return oracle::relation_histogram(n, opts); }},
  };
  for (const auto& g : graph_classes) {
    const std::string name = "oracle histogram = matrix vector, " + label(g.spec);
    rep.checks.push_back(guarded(name, [&] {
      for (const auto& l : production::count_sequence(g.spec, lim.n_max)) {
        auto r = compare_histogram(name, "n=" + std::to_string(l.level), g.histogram(l.level), l.vector.entries);
        if (!r.passed) return r;
      }
      return CheckResult{name, true, "n=" + std::to_string(g.spec.start_index) + ".." + std::to_string(lim.n_max)};
    }));
  }
  for (int k : {3, 4, 5}) {
    const auto spec = GraphClassSpec::k_angulation(k);
    const std::string name = "oracle histogram = matrix vector, " + label(spec);
    rep.checks.push_back(guarded(name, [&] {
      const int r_max = std::max(1, (lim.n_max - 2) / (k - 2));
      for (const auto& l : production::count_sequence(spec, r_max)) {
        auto res = compare_histogram(name, "r=" + std::to_string(l.level),
                                     oracle::dissection_histogram(k, l.level, lim.force), l.vector.entries);
        if (!res.passed) return res;
      }
      return CheckResult{name, true, "r=1.." + std::to_string(r_max)};
    }));
  }
}

void suite_lemma1(const VerifyLimits& lim, VerifyReport& rep) {
  const std::string name = "lemma identity, t, m, n <= " + std::to_string(lim.max);
  rep.checks.push_back(guarded(name, [&] {
    long cases = 0;
    for (int t = 0; t <= lim.max; ++t)
      for (int m = 0; m <= lim.max; ++m)
        for (int n = 0; n <= lim.max; ++n) {
          ++cases;
          if (!closed_form::lemma1_check(t, m, n)) {
            const auto [lhs, rhs] = closed_form::lemma1_sides(t, m, n);
            return CheckResult{name, false,
                               "t=" + std::to_string(t) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                                   to_decimal(lhs) + " != " + to_decimal(rhs)};
          }
        }
    return CheckResult{name, true, std::to_string(cases) + " cases"};
  }));
}

void suite_relation(const VerifyLimits& lim, VerifyReport& rep) {
  // Input sequences are needed two levels past n_max; they are cheap, so the
  // spanning-structure guard is lifted for them.
  const int last = lim.n_max + 2;
  {
    const std::string name = "relation(connected) totals = geometric totals";
    rep.checks.push_back(guarded(name, [&] {
      const auto rel = production::count_sequence(GraphClassSpec::relation(relation_sequence("connected", last, false)), lim.n_max);
      const auto geo = production::count_sequence(GraphClassSpec::geometric(), lim.n_max);
      for (const auto& g : geo) {
        const auto& r = rel.at(static_cast<std::size_t>(g.level - 1));
        if (r.total != g.total) {
          return CheckResult{name, false,
                             "n=" + std::to_string(g.level) + ": " + to_decimal(r.total) + " vs " + to_decimal(g.total)};
        }
      }
      return CheckResult{name, true, "n=2.." + std::to_string(lim.n_max)};
    }));
  }
  const struct {
    const char* input;
    oracle::SpanningKind target;
    const char* what;
  } variants[] = {{"trees", oracle::SpanningKind::Forest, "forests"},
                  {"paths", oracle::SpanningKind::PathForest, "forests of paths"}};
  for (const auto& var : variants) {
    const std::string name = std::string("relation(") + var.input + ") totals = oracle " + var.what;
    rep.checks.push_back(guarded(name, [&] {
      const auto rel = production::count_sequence(GraphClassSpec::relation(relation_sequence(var.input, last, true)), lim.n_max);
      for (const auto& r : rel) {
        const auto expected = oracle::enumerate_spanning_structures(r.level, var.target, lim.force);
        if (r.total != expected) {
          return CheckResult{name, false,
                             "n=" + std::to_string(r.level) + ": " + to_decimal(r.total) + " vs " + to_decimal(expected)};
        }
      }
      return CheckResult{name, true, "n=1.." + std::to_string(lim.n_max)};
    }));
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyLimits& limits) {
  if (limits.n_max < 2) throw std::invalid_argument("verify: --n-max must be at least 2");
  if (limits.max < 0) throw std::invalid_argument("verify: --max must be non-negative");
  VerifyReport rep{suite, {}};
  if (suite == "vectors") {
    suite_vectors(limits, rep);
  } else if (suite == "charpoly") {
    suite_charpoly(limits, rep);
  } else if (suite == "eigen") {
    suite_eigen(limits, rep);
  } else if (suite == "oracle") {
    suite_oracle(limits, rep);
  } else if (suite == "lemma1") {
    suite_lemma1(limits, rep);
  } else if (suite == "relation") {
    suite_relation(limits, rep);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite +
                                "' (expected vectors, charpoly, eigen, oracle, lemma1, relation)");
  }
  return rep;
}

}  // namespace convex_count::cli
