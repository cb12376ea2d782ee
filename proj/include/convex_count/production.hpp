#pragma once

#include "convex_count/bigint.hpp"
#include "convex_count/ht_matrix.hpp"

#include <string>
#include <vector>

namespace convex_count::production {

enum class GraphClass { KAngulation, Geometric, Connected, NonCrossingPartition, RelationMatrix };

std::string to_string(GraphClass cls);
/// Accepts "kangulation", "geometric", "connected", "partition", "relation".
GraphClass parse_graph_class(const std::string& name);

/// A graph class together with its parameters and the start of its generating tree.
struct GraphClassSpec {
  GraphClass cls = GraphClass::Geometric;
  /// Face size, KAngulation only.
  int k = 0;
  /// RelationMatrix only: relation_sequence[i] holds c_{i+2}.
  std::vector<BigInt> relation_sequence;
  /// First level of the generating tree (vertices, or k-gons for KAngulation).
  int start_index = 2;
  /// Nonzero prefix of the initial count vector at start_index.
  std::vector<BigInt> initial_prefix;

  static GraphClassSpec k_angulation(int k);
  static GraphClassSpec geometric();
  static GraphClassSpec connected();
  static GraphClassSpec partition();
  static GraphClassSpec relation(std::vector<BigInt> c_from_two);

  /// Initial vector padded with zeros to `size` entries.
  CountVector initial_vector(int size) const;
};

/// (d(0), Z, A) describing a proper Riordan array; z[0] = z_1, a[0] = a_1.
struct RiordanTriple {
  BigInt d0;
  std::vector<BigInt> z;
  std::vector<BigInt> a;
};

HTMatrix build_k_angulation_matrix(int k, int r);
HTMatrix build_geometric_matrix(int n);
HTMatrix build_connected_matrix(int n);
HTMatrix build_partition_matrix(int n);
/// `c_from_two[i]` is c_{i+2}; needs c_2 .. c_n.
HTMatrix build_relation_matrix(int n, const std::vector<BigInt>& c_from_two);
/// Row 0 from Z, row i >= 1 from A shifted right by i - 1.
HTMatrix build_from_riordan(const RiordanTriple& t, int n);

/// The class matrix of the requested size.
HTMatrix build_matrix(const GraphClassSpec& spec, int n);

/// a_m = sum_{i=2}^{m} C(m-2, i-2) c_i for m = 2 .. m_max; result[0] is a_2.
std::vector<BigInt> relation_a_sequence(const std::vector<BigInt>& c_from_two, int m_max);

/// Reads (d(0), Z, A) back off a production matrix: Z is row 0, A is column 0
/// of row 1 onward, i.e. (a_{-1}, a_0, a_1, ...). d0 is supplied by the caller.
RiordanTriple riordan_triple_of(const HTMatrix& m, const BigInt& d0);

struct LevelCount {
  int level = 0;
  CountVector vector;
  BigInt total;
};

/// v^{i+1} = A v^i from the class's initial vector up to level n_max.
/// The matrix is sized n_max + 2 so that the highest root degree of every
/// level stays inside the vector.
std::vector<LevelCount> count_sequence(const GraphClassSpec& spec, int n_max);

/// Matrix size used by count_sequence.
inline int padded_size(int n_max) { return n_max + 2; }

/// Number of k-angulations with r faces: C((k-1)r, r) / ((k-2)r + 1).
BigInt k_angulation_total(int k, int r);

}  // namespace convex_count::production
