#include "convex_count/ht_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace convex_count {

HTMatrix::HTMatrix(int size, BigInt subdiagonal, std::vector<BigInt> band,
                   std::optional<std::vector<BigInt>> row0)
    : size_(size), subdiagonal_(std::move(subdiagonal)), band_(std::move(band)), row0_(std::move(row0)) {}

HTMatrix HTMatrix::toeplitz(int size, BigInt subdiagonal, std::vector<BigInt> band) {
  if (size < 1) throw std::invalid_argument("HTMatrix: size must be at least 1");
  if (band.size() < static_cast<std::size_t>(size)) {
    throw std::invalid_argument("HTMatrix: band needs " + std::to_string(size) + " values, got " +
                                std::to_string(band.size()));
  }
  band.resize(static_cast<std::size_t>(size));
  return HTMatrix(size, std::move(subdiagonal), std::move(band), std::nullopt);
}

HTMatrix HTMatrix::with_first_row(int size, BigInt subdiagonal, std::vector<BigInt> band,
                                  std::vector<BigInt> row0) {
  HTMatrix m = toeplitz(size, std::move(subdiagonal), std::move(band));
  if (row0.size() != static_cast<std::size_t>(size)) {
    throw std::invalid_argument("HTMatrix: first row must have exactly " + std::to_string(size) + " values");
  }
  m.row0_ = std::move(row0);
  return m;
}

const BigInt& HTMatrix::band(int offset) const {
  if (offset < 0 || offset >= size_) throw std::out_of_range("HTMatrix::band offset " + std::to_string(offset));
  return band_[static_cast<std::size_t>(offset)];
}

BigInt HTMatrix::entry(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_) throw std::out_of_range("HTMatrix::entry");
  if (row == 0 && row0_) return (*row0_)[static_cast<std::size_t>(col)];
  if (col < row - 1) return 0;
  if (col == row - 1) return subdiagonal_;
  return band_[static_cast<std::size_t>(col - row)];
}

bool HTMatrix::is_pure_toeplitz() const { return !row0_ || *row0_ == band_; }

std::vector<std::vector<BigInt>> HTMatrix::dense() const {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(size_), std::vector<BigInt>(size_));
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) rows[i][j] = entry(i, j);
  return rows;
}

BigInt CountVector::total() const { return std::accumulate(entries.begin(), entries.end(), BigInt(0)); }

int CountVector::highest_nonzero() const {
  for (int j = static_cast<int>(entries.size()) - 1; j >= 0; --j)
    if (entries[static_cast<std::size_t>(j)] != 0) return j;
  return -1;
}

CountVector mat_vec(const HTMatrix& m, const CountVector& v) {
  const int n = m.size();
  if (static_cast<int>(v.entries.size()) != n) {
    throw std::invalid_argument("mat_vec: matrix is " + std::to_string(n) + "x" + std::to_string(n) +
                                " but vector has " + std::to_string(v.entries.size()) + " entries");
  }
  CountVector out{std::vector<BigInt>(static_cast<std::size_t>(n)), v.level + 1};
  for (int i = 0; i < n; ++i) {
    BigInt acc = 0;
    // Row i is zero left of column i - 1.
    for (int j = std::max(0, i - 1); j < n; ++j) {
      if (v.entries[j] == 0) continue;
      acc += m.entry(i, j) * v.entries[j];
    }
    out.entries[i] = std::move(acc);
  }
  return out;
}

namespace {

// Minor of (M - lambda I) on rows [first_row, n) and the column set `cols`.
class MinorExpander {
 public:
  explicit MinorExpander(const std::vector<std::vector<BigInt>>& m) : m_(m), n_(static_cast<int>(m.size())) {}

  IntPolynomial det(int first_row, std::uint64_t cols) {
    if (first_row == n_) return IntPolynomial::constant(1);
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;

    IntPolynomial acc;
    int position = 0;
    for (int c = 0; c < n_; ++c) {
      if (!(cols & (std::uint64_t{1} << c))) continue;
      IntPolynomial element = IntPolynomial::constant(m_[first_row][c]);
      if (c == first_row) element -= IntPolynomial::monomial(1, 1);
      if (!element.is_zero()) {
        IntPolynomial term = element * det(first_row + 1, cols & ~(std::uint64_t{1} << c));
        if (position % 2 == 0) acc += term; else acc -= term;
      }
      ++position;
    }
    memo_.emplace(cols, acc);
    return acc;
  }

 private:
  const std::vector<std::vector<BigInt>>& m_;
  int n_;
  std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial poly_determinant_charpoly(const std::vector<std::vector<BigInt>>& dense) {
  const std::size_t n = dense.size();
  if (n == 0) throw std::invalid_argument("poly_determinant_charpoly: empty matrix");
  if (n > 24) throw std::invalid_argument("poly_determinant_charpoly: cofactor expansion limited to 24x24");
  for (const auto& row : dense)
    if (row.size() != n) throw std::invalid_argument("poly_determinant_charpoly: matrix is not square");
  MinorExpander expander(dense);
  return expander.det(0, (std::uint64_t{1} << n) - 1);
}

IntPolynomial poly_determinant_charpoly(const HTMatrix& m) { return poly_determinant_charpoly(m.dense()); }

}  // namespace convex_count
