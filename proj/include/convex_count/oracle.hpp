#pragma once

#include "convex_count/bigint.hpp"

#include <compare>
#include <functional>
#include <stdexcept>
#include <vector>

// Brute-force enumerators for small instances. Vertices are 1..n in
// counter-clockwise convex position; p_n is the root.
namespace convex_count::oracle {

struct Edge {
  int a = 0;  // a < b
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Chords of a convex polygon cross iff their endpoints interleave.
bool crosses(const Edge& e, const Edge& f);

struct PlaneGraph {
  int n = 0;
  std::vector<Edge> edges;  // lexicographically sorted

  bool is_non_crossing() const;
  bool is_connected() const;
  bool is_acyclic() const;
  std::vector<int> degrees() const;  // index 1..n
  /// True when some edge (a, b) has a < v < b.
  bool is_spanned(int v) const;
};

struct NonCrossingPartitionValue {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // each sorted, ordered by minimum

  bool is_non_crossing() const;
};

struct Dissection {
  int k = 0;
  int r = 0;
  int n = 0;  // (k - 2) r + 2
  std::vector<Edge> diagonals;

  /// Incident edges at p_n minus the two boundary edges.
  int root_degree() const;
};

/// Raised when a size guard is exceeded without `force`.
class GuardExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kGraphGuard = 9;
inline constexpr int kPartitionGuard = 12;
inline constexpr int kDissectionGuard = 14;  // polygon vertices
inline constexpr int kSpanningGuard = 8;

using GraphVisitor = std::function<void(const PlaneGraph&)>;

/// Every non-crossing graph on n points exactly once, chords decided in
/// lexicographic order (include before exclude).
void enumerate_noncrossing_graphs(int n, const GraphVisitor& visit, bool force = false);
void enumerate_connected(int n, const GraphVisitor& visit, bool force = false);
void enumerate_partitions(int n, const std::function<void(const NonCrossingPartitionValue&)>& visit,
                          bool force = false);
void enumerate_dissections(int k, int r, const std::function<void(const Dissection&)>& visit, bool force = false);

/// Vertices visible from a point inserted between p_1 and p_n, minus 2.
int visibility_degree(const PlaneGraph& g);

/// Whether the root p_n itself may count as an isolated visible vertex.
/// IncludeRoot is the variant that reproduces the partition production matrix
/// and is the default.
enum class IsolationRootPolicy { IncludeRoot, ExcludeRoot };

int isolation_degree(const PlaneGraph& g, IsolationRootPolicy policy = IsolationRootPolicy::IncludeRoot);
int isolation_degree(const NonCrossingPartitionValue& p,
                     IsolationRootPolicy policy = IsolationRootPolicy::IncludeRoot);

enum class SpanningKind { Tree, Path, Forest, PathForest };

/// Non-crossing spanning trees / spanning paths / forests / forests of paths on n points.
BigInt enumerate_spanning_structures(int n, SpanningKind kind, bool force = false);

/// histogram[d] = number of objects whose root degree is d.
using Histogram = std::vector<BigInt>;

struct HistogramOptions {
  unsigned workers = 1;
  bool force = false;
};

Histogram geometric_histogram(int n, const HistogramOptions& opts = {});
Histogram connected_histogram(int n, const HistogramOptions& opts = {});
/// Isolation degree over all non-crossing graphs.
Histogram relation_histogram(int n, const HistogramOptions& opts = {});
Histogram partition_histogram(int n, IsolationRootPolicy policy = IsolationRootPolicy::IncludeRoot,
                              bool force = false);
Histogram dissection_histogram(int k, int r, bool force = false);

/// Equality up to trailing zeros.
bool same_counts(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace convex_count::oracle
