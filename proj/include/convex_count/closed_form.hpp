#pragma once

#include "convex_count/bigint.hpp"
#include "convex_count/ht_matrix.hpp"
#include "convex_count/production.hpp"

namespace convex_count::closed_form {

/// One evaluated entry v_j at a given level (vertices, or faces for k-angulations).
struct EntryFormulaResult {
  production::GraphClass cls;
  int level = 0;
  int j = 0;
  BigInt value;
};

// Entry j (1-based) counts objects whose root has degree j - 1. Every function
// returns 0 for j outside its valid range. Divisions are checked for exactness.

/// k-angulations with r faces: (j / r) C((k-1)r - j - 1, r - j), 1 <= j <= r.
BigInt kangulation_entry(int k, int r, int j);

/// Geometric graphs on n >= 2 vertices by visibility degree, 1 <= j <= n - 1.
BigInt geometric_entry(int n, int j);

/// Connected graphs on n >= 2 vertices by visibility degree, 1 <= j <= n - 1.
BigInt connected_entry(int n, int j);

/// Non-crossing partitions of [n], n >= 1, by isolation degree, 1 <= j <= n + 1.
BigInt partition_entry(int n, int j);

/// Dispatches on the class. `k` is only read for k-angulations.
EntryFormulaResult evaluate_entry(production::GraphClass cls, int level, int j, int k = 0);

/// Full vector at `level`, padded with zeros to `size` entries. Relation-matrix
/// classes have no closed form and are rejected.
CountVector closed_form_vector(const production::GraphClassSpec& spec, int level, int size);

/// sum_{j=0}^{n} C(j+m-1, j) C(m(t+1), n-j-t) (-1)^j == C(mt, n-t).
/// The first factor is written as the multiset count C(j+m-1, j), which agrees
/// with C(j+m-1, m-1) for m >= 1 and stays meaningful at m = 0.
bool lemma1_check(int t, int m, int n);

/// Both sides of the identity, for diagnostics.
std::pair<BigInt, BigInt> lemma1_sides(int t, int m, int n);

}  // namespace convex_count::closed_form
