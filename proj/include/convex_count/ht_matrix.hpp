#pragma once

#include "convex_count/bigint.hpp"
#include "convex_count/polynomial.hpp"

#include <optional>
#include <vector>

namespace convex_count {

/// Finite upper Hessenberg-Toeplitz matrix.
///
/// Entry (i, j), 0-based:
///   j <  i - 1  -> 0
///   j == i - 1  -> subdiagonal value a_{-1}
///   j >= i      -> band value a_{j-i}
/// Row 0 may be overridden by an explicit list; this carries matrices whose
/// first row comes from a Z-sequence that is not the Toeplitz extension of
/// the remaining rows.
class HTMatrix {
 public:
  /// `band` must hold at least `size` values a_0 .. a_{size-1}; extra values are dropped.
  static HTMatrix toeplitz(int size, BigInt subdiagonal, std::vector<BigInt> band);
  /// Same, with row 0 replaced by `row0` (exactly `size` values).
  static HTMatrix with_first_row(int size, BigInt subdiagonal, std::vector<BigInt> band,
                                 std::vector<BigInt> row0);

  int size() const { return size_; }
  const BigInt& subdiagonal() const { return subdiagonal_; }
  /// a_m for 0 <= m < size.
  const BigInt& band(int offset) const;
  const std::vector<BigInt>& band_values() const { return band_; }

  BigInt entry(int row, int col) const;

  bool has_first_row_override() const { return row0_.has_value(); }
  /// True when every entry depends only on j - i, which includes the case of a
  /// row-0 override that happens to equal the Toeplitz extension.
  bool is_pure_toeplitz() const;

  std::vector<std::vector<BigInt>> dense() const;

  friend bool operator==(const HTMatrix& a, const HTMatrix& b) { return a.dense() == b.dense(); }

 private:
  HTMatrix(int size, BigInt subdiagonal, std::vector<BigInt> band, std::optional<std::vector<BigInt>> row0);

  int size_ = 0;
  BigInt subdiagonal_;
  std::vector<BigInt> band_;
  std::optional<std::vector<BigInt>> row0_;
};

/// Counts of one level (vertices, or k-gons for k-angulations) partitioned by
/// root degree: entries[j] counts objects whose root has degree j.
struct CountVector {
  std::vector<BigInt> entries;
  int level = 0;

  BigInt total() const;
  /// Index of the last nonzero entry, -1 if all zero.
  int highest_nonzero() const;

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

/// Exact product m * v; the result's level is v.level + 1.
/// Throws std::invalid_argument when sizes differ.
CountVector mat_vec(const HTMatrix& m, const CountVector& v);

/// det(m - lambda I) over Z[lambda], by cofactor expansion along the first row
/// with memoized minors. Independent of any band structure.
IntPolynomial poly_determinant_charpoly(const HTMatrix& m);

/// Same for an arbitrary square integer matrix.
IntPolynomial poly_determinant_charpoly(const std::vector<std::vector<BigInt>>& dense);

}  // namespace convex_count
