#include "convex_count/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>

namespace convex_count::oracle {

bool crosses(const Edge& e, const Edge& f) {
  return (e.a < f.a && f.a < e.b && e.b < f.b) || (f.a < e.a && e.a < f.b && f.b < e.b);
}

bool PlaneGraph::is_non_crossing() const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(edges[i], edges[j])) return false;
  return true;
}

std::vector<int> PlaneGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

bool PlaneGraph::is_connected() const {
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (const auto& e : edges) {
    int ra = find_root(parent, e.a), rb = find_root(parent, e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

bool PlaneGraph::is_acyclic() const {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges) {
    int ra = find_root(parent, e.a), rb = find_root(parent, e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool PlaneGraph::is_spanned(int v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.a < v && v < e.b; });
}

int visibility_degree(const PlaneGraph& g) {
  int visible = 0;
  for (int v = 1; v <= g.n; ++v)
    if (!g.is_spanned(v)) ++visible;
  return visible - 2;
}

int isolation_degree(const PlaneGraph& g, IsolationRootPolicy policy) {
  const std::vector<int> deg = g.degrees();
  int count = 0;
  for (int v = 1; v <= g.n; ++v) {
    if (v == g.n && policy == IsolationRootPolicy::ExcludeRoot) continue;
    if (deg[v] == 0 && !g.is_spanned(v)) ++count;
  }
  return count;
}

namespace {

void check_guard(int n, int limit, bool force, const char* what) {
  if (n > limit && !force) {
    throw GuardExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(limit) + " (pass force to override)");
  }
}

struct SearchConstraints {
  int max_degree = 0;  // 0: unbounded
  bool acyclic = false;
};

// Include/exclude search over the chords of a convex n-gon in lexicographic order.
class ChordSearch {
 public:
  ChordSearch(int n, SearchConstraints constraints) : n_(n), constraints_(constraints) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) chords_.push_back({a, b});
  }

  std::size_t chord_count() const { return chords_.size(); }

  struct State {
    std::vector<Edge> edges;
    std::vector<int> degree;
    std::vector<int> component;
  };

  State initial_state() const {
    State s;
    s.degree.assign(static_cast<std::size_t>(n_) + 1, 0);
    s.component.resize(static_cast<std::size_t>(n_) + 1);
    std::iota(s.component.begin(), s.component.end(), 0);
    return s;
  }

  bool can_add(const State& s, const Edge& e) const {
    for (const auto& f : s.edges)
      if (crosses(e, f)) return false;
    if (constraints_.max_degree > 0 &&
        (s.degree[e.a] >= constraints_.max_degree || s.degree[e.b] >= constraints_.max_degree))
      return false;
    if (constraints_.acyclic && s.component[e.a] == s.component[e.b]) return false;
    return true;
  }

  void add(State& s, const Edge& e) const {
    s.edges.push_back(e);
    ++s.degree[e.a];
    ++s.degree[e.b];
    if (constraints_.acyclic) {
      const int from = s.component[e.b], to = s.component[e.a];
      for (auto& c : s.component)
        if (c == from) c = to;
    }
  }

  /// Applies the include/exclude bits of chords [0, depth); false if infeasible.
  bool apply_prefix(State& s, std::uint64_t bits, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      if (!(bits & (std::uint64_t{1} << i))) continue;
      if (!can_add(s, chords_[i])) return false;
      add(s, chords_[i]);
    }
    return true;
  }

  template <typename Visit>
  void run(State& s, std::size_t index, Visit& visit) const {
    if (index == chords_.size()) {
      visit(PlaneGraph{n_, s.edges});
      return;
    }
    const Edge& e = chords_[index];
    if (can_add(s, e)) {
      State next = s;
      add(next, e);
      run(next, index + 1, visit);
    }
    run(s, index + 1, visit);
  }

 private:
  int n_;
  SearchConstraints constraints_;
  std::vector<Edge> chords_;
};

// Splits the search on the first few chords, runs the pieces on `workers`
// threads and merges the per-piece histograms in piece order.
template <typename Degree>
Histogram parallel_histogram(int n, SearchConstraints constraints, unsigned workers, Degree degree_of,
                             bool connected_only) {
  ChordSearch search(n, constraints);
  const std::size_t depth = (workers <= 1) ? 0 : std::min<std::size_t>(search.chord_count(), 8);
  const std::size_t pieces = std::size_t{1} << depth;
  const std::size_t width = static_cast<std::size_t>(n) + 2;
  std::vector<std::vector<std::uint64_t>> partial(pieces, std::vector<std::uint64_t>(width, 0));

  auto run_piece = [&](std::size_t piece) {
    // Bit i set means chord i is included; pieces enumerate include-first order.
    const std::uint64_t bits = ~static_cast<std::uint64_t>(piece) & ((std::uint64_t{1} << depth) - 1);
    auto state = search.initial_state();
    if (!search.apply_prefix(state, bits, depth)) return;
    auto& local = partial[piece];
    auto visit = [&](const PlaneGraph& g) {
      if (connected_only && !g.is_connected()) return;
      ++local.at(static_cast<std::size_t>(degree_of(g)));
    };
    search.run(state, depth, visit);
  };

  if (workers <= 1) {
    run_piece(0);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t piece = next++; piece < pieces; piece = next++) run_piece(piece);
      });
    }
    for (auto& t : pool) t.join();
  }

  Histogram merged(width, 0);
  for (const auto& local : partial)
    for (std::size_t d = 0; d < width; ++d) merged[d] += local[d];
  return merged;
}

}  // namespace

void enumerate_noncrossing_graphs(int n, const GraphVisitor& visit, bool force) {
  if (n < 1) throw std::invalid_argument("enumerate_noncrossing_graphs: n must be at least 1");
  check_guard(n, kGraphGuard, force, "enumerate_noncrossing_graphs");
  ChordSearch search(n, {});
  auto state = search.initial_state();
  search.run(state, 0, visit);
}

void enumerate_connected(int n, const GraphVisitor& visit, bool force) {
  enumerate_noncrossing_graphs(
      n,
      [&](const PlaneGraph& g) {
        if (g.is_connected()) visit(g);
      },
      force);
}

BigInt enumerate_spanning_structures(int n, SpanningKind kind, bool force) {
  if (n < 1) throw std::invalid_argument("enumerate_spanning_structures: n must be at least 1");
  check_guard(n, kSpanningGuard, force, "enumerate_spanning_structures");
  SearchConstraints constraints;
  constraints.acyclic = true;
  if (kind == SpanningKind::Path || kind == SpanningKind::PathForest) constraints.max_degree = 2;
  const bool spanning = (kind == SpanningKind::Tree || kind == SpanningKind::Path);
  ChordSearch search(n, constraints);
  auto state = search.initial_state();
  std::uint64_t count = 0;
  auto visit = [&](const PlaneGraph& g) {
    // An acyclic graph with n - 1 edges is a spanning tree.
    if (!spanning || static_cast<int>(g.edges.size()) == n - 1) ++count;
  };
  search.run(state, 0, visit);
  return BigInt(count);
}

Histogram geometric_histogram(int n, const HistogramOptions& opts) {
  check_guard(n, kGraphGuard, opts.force, "geometric_histogram");
  if (n < 2) throw std::invalid_argument("geometric_histogram: n must be at least 2");
  return parallel_histogram(n, {}, opts.workers, visibility_degree, false);
}

Histogram connected_histogram(int n, const HistogramOptions& opts) {
  check_guard(n, kGraphGuard, opts.force, "connected_histogram");
  if (n < 2) throw std::invalid_argument("connected_histogram: n must be at least 2");
  return parallel_histogram(n, {}, opts.workers, visibility_degree, true);
}

Histogram relation_histogram(int n, const HistogramOptions& opts) {
  check_guard(n, kGraphGuard, opts.force, "relation_histogram");
  if (n < 1) throw std::invalid_argument("relation_histogram: n must be at least 1");
  return parallel_histogram(
      n, {}, opts.workers, [](const PlaneGraph& g) { return isolation_degree(g); }, false);
}

bool same_counts(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (a[i] != b[i]) return false;
  for (std::size_t i = common; i < a.size(); ++i)
    if (a[i] != 0) return false;
  for (std::size_t i = common; i < b.size(); ++i)
    if (b[i] != 0) return false;
  return true;
}

}  // namespace convex_count::oracle
