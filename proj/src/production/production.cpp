#include "convex_count/production.hpp"

#include <algorithm>
#include <stdexcept>

namespace convex_count::production {

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::KAngulation: return "kangulation";
    case GraphClass::Geometric: return "geometric";
    case GraphClass::Connected: return "connected";
    case GraphClass::NonCrossingPartition: return "partition";
    case GraphClass::RelationMatrix: return "relation";
  }
  return "unknown";
}

GraphClass parse_graph_class(const std::string& name) {
  if (name == "kangulation") return GraphClass::KAngulation;
  if (name == "geometric") return GraphClass::Geometric;
  if (name == "connected") return GraphClass::Connected;
  if (name == "partition") return GraphClass::NonCrossingPartition;
  if (name == "relation") return GraphClass::RelationMatrix;
  throw std::invalid_argument("unknown graph class: " + name);
}

GraphClassSpec GraphClassSpec::k_angulation(int k) {
  if (k < 3) throw std::invalid_argument("k-angulations need k >= 3");
  // A single k-gon: the root has exactly its two boundary edges.
  return {GraphClass::KAngulation, k, {}, 1, {1}};
}

GraphClassSpec GraphClassSpec::geometric() { return {GraphClass::Geometric, 0, {}, 2, {2}}; }

GraphClassSpec GraphClassSpec::connected() { return {GraphClass::Connected, 0, {}, 2, {1}}; }

// One vertex: its own singleton is the single isolated visible vertex.
GraphClassSpec GraphClassSpec::partition() { return {GraphClass::NonCrossingPartition, 0, {}, 1, {0, 1}}; }

GraphClassSpec GraphClassSpec::relation(std::vector<BigInt> c_from_two) {
  return {GraphClass::RelationMatrix, 0, std::move(c_from_two), 1, {0, 1}};
}

CountVector GraphClassSpec::initial_vector(int size) const {
  if (static_cast<std::size_t>(size) < initial_prefix.size()) {
    throw std::invalid_argument("initial vector does not fit in size " + std::to_string(size));
  }
  CountVector v{std::vector<BigInt>(static_cast<std::size_t>(size)), start_index};
  std::copy(initial_prefix.begin(), initial_prefix.end(), v.entries.begin());
  return v;
}

HTMatrix build_k_angulation_matrix(int k, int r) {
  if (k < 3) throw std::invalid_argument("build_k_angulation_matrix: k must be at least 3");
  if (r < 1) throw std::invalid_argument("build_k_angulation_matrix: r must be at least 1");
  std::vector<BigInt> band(static_cast<std::size_t>(r));
  for (int m = 0; m < r; ++m) band[m] = binomial(k - 2 + m, k - 3);
  return HTMatrix::toeplitz(r, 1, std::move(band));
}

HTMatrix build_geometric_matrix(int n) {
  if (n < 1) throw std::invalid_argument("build_geometric_matrix: n must be at least 1");
  std::vector<BigInt> band(static_cast<std::size_t>(n));
  band[0] = 2;
  for (int m = 1; m < n; ++m) band[m] = pow2(static_cast<unsigned>(m + 1));
  return HTMatrix::toeplitz(n, 2, std::move(band));
}

HTMatrix build_connected_matrix(int n) {
  if (n < 1) throw std::invalid_argument("build_connected_matrix: n must be at least 1");
  std::vector<BigInt> band(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) band[m] = pow2(static_cast<unsigned>(m + 2)) - 1;
  return HTMatrix::toeplitz(n, 1, std::move(band));
}

HTMatrix build_partition_matrix(int n) {
  if (n < 1) throw std::invalid_argument("build_partition_matrix: n must be at least 1");
  std::vector<BigInt> band(static_cast<std::size_t>(n));
  band[0] = 0;
  for (int m = 1; m < n; ++m) band[m] = pow2(static_cast<unsigned>(m - 1));
  std::vector<BigInt> row0 = band;
  return HTMatrix::with_first_row(n, 1, std::move(band), std::move(row0));
}

std::vector<BigInt> relation_a_sequence(const std::vector<BigInt>& c_from_two, int m_max) {
  if (m_max < 2) return {};
  if (c_from_two.size() < static_cast<std::size_t>(m_max - 1)) {
    throw std::invalid_argument("relation sequence too short: need c_2 .. c_" + std::to_string(m_max) + ", got " +
                                std::to_string(c_from_two.size()) + " values");
  }
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(m_max - 1));
  for (int m = 2; m <= m_max; ++m) {
    BigInt sum = 0;
    for (int i = 2; i <= m; ++i) sum += binomial(m - 2, i - 2) * c_from_two[static_cast<std::size_t>(i - 2)];
    a.push_back(std::move(sum));
  }
  return a;
}

HTMatrix build_relation_matrix(int n, const std::vector<BigInt>& c_from_two) {
  if (n < 1) throw std::invalid_argument("build_relation_matrix: n must be at least 1");
  // Row i, column j >= i + 1 holds a_{j-i+1}; the largest index needed is a_n.
  std::vector<BigInt> a = relation_a_sequence(c_from_two, n);
  std::vector<BigInt> band(static_cast<std::size_t>(n));
  for (int m = 1; m < n; ++m) band[m] = a[static_cast<std::size_t>(m - 1)];
  std::vector<BigInt> row0 = band;
  return HTMatrix::with_first_row(n, 1, std::move(band), std::move(row0));
}

HTMatrix build_from_riordan(const RiordanTriple& t, int n) {
  if (n < 1) throw std::invalid_argument("build_from_riordan: n must be at least 1");
  if (t.a.empty() || t.a.front() == 0) throw std::invalid_argument("build_from_riordan: A-sequence is not proper (a_1 = 0)");
  if (t.a.size() < static_cast<std::size_t>(n) || t.z.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("build_from_riordan: need at least " + std::to_string(n) + " terms of A and Z");
  }
  // Row i >= 1 is (0, ..., 0, a_1, a_2, ...) starting at column i - 1, so the
  // subdiagonal is a_1 and band offset m is a_{m+2}.
  std::vector<BigInt> band(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    std::size_t idx = static_cast<std::size_t>(m + 1);
    band[m] = idx < t.a.size() ? t.a[idx] : BigInt(0);
  }
  std::vector<BigInt> row0(t.z.begin(), t.z.begin() + n);
  return HTMatrix::with_first_row(n, t.a.front(), std::move(band), std::move(row0));
}

RiordanTriple riordan_triple_of(const HTMatrix& m, const BigInt& d0) {
  const int n = m.size();
  RiordanTriple t;
  t.d0 = d0;
  for (int j = 0; j < n; ++j) t.z.push_back(m.entry(0, j));
  if (n >= 2) {
    for (int j = 0; j < n; ++j) t.a.push_back(m.entry(1, j));
  } else {
    t.a.push_back(m.subdiagonal());
  }
  // Pad A so that it reaches n terms even though row 1 only shows n of them.
  while (t.a.size() < static_cast<std::size_t>(n)) t.a.push_back(0);
  return t;
}

HTMatrix build_matrix(const GraphClassSpec& spec, int n) {
  switch (spec.cls) {
    case GraphClass::KAngulation: return build_k_angulation_matrix(spec.k, n);
    case GraphClass::Geometric: return build_geometric_matrix(n);
    case GraphClass::Connected: return build_connected_matrix(n);
    case GraphClass::NonCrossingPartition: return build_partition_matrix(n);
    case GraphClass::RelationMatrix: return build_relation_matrix(n, spec.relation_sequence);
  }
  throw std::logic_error("build_matrix: unhandled class");
}

std::vector<LevelCount> count_sequence(const GraphClassSpec& spec, int n_max) {
  if (n_max < spec.start_index) {
    throw std::invalid_argument("count_sequence: n_max " + std::to_string(n_max) + " is below the start level " +
                                std::to_string(spec.start_index));
  }
  const int size = padded_size(n_max);
  const HTMatrix m = build_matrix(spec, size);
  std::vector<LevelCount> out;
  CountVector v = spec.initial_vector(size);
  for (int level = spec.start_index;; ++level) {
    BigInt total = v.total();
    out.push_back({level, v, std::move(total)});
    if (level == n_max) break;
    v = mat_vec(m, v);
  }
  return out;
}

BigInt k_angulation_total(int k, int r) {
  if (k < 3) throw std::invalid_argument("k_angulation_total: k must be at least 3");
  if (r < 1) throw std::invalid_argument("k_angulation_total: r must be at least 1");
  return exact_div(binomial(static_cast<long>(k - 1) * r, r), BigInt(static_cast<long>(k - 2) * r + 1));
}

}  // namespace convex_count::production
