#include "convex_count/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace convex_count::oracle {

namespace {

void check_guard(int n, int limit, bool force, const char* what) {
  if (n > limit && !force) {
    throw GuardExceeded(std::string(what) + ": size " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(limit) + " (pass force to override)");
  }
}

// Partitions of pending intervals. The block of the smallest element of an
// interval is chosen first; the gaps it leaves are independent sub-intervals.
class PartitionBuilder {
 public:
  PartitionBuilder(int n, const std::function<void(const NonCrossingPartitionValue&)>& visit)
      : n_(n), visit_(visit), owner_(static_cast<std::size_t>(n) + 1, 0) {}

  void run(std::vector<std::pair<int, int>> pending) {
    while (!pending.empty() && pending.back().first > pending.back().second) pending.pop_back();
    if (pending.empty()) {
      emit();
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    const int rest = hi - lo;
    for (unsigned long mask = 0; mask < (1UL << rest); ++mask) {
      std::vector<std::pair<int, int>> next = pending;
      owner_[lo] = lo;
      int previous = lo;
      for (int i = 0; i < rest; ++i) {
        if (!(mask & (1UL << i))) continue;
        const int v = lo + 1 + i;
        owner_[v] = lo;
        next.emplace_back(previous + 1, v - 1);
        previous = v;
      }
      next.emplace_back(previous + 1, hi);
      run(std::move(next));
    }
  }

 private:
  void emit() const {
    NonCrossingPartitionValue p{n_, {}};
    for (int v = 1; v <= n_; ++v) {
      if (owner_[v] == v) p.blocks.push_back({});
    }
    std::vector<int> block_index(static_cast<std::size_t>(n_) + 1, -1);
    int next = 0;
    for (int v = 1; v <= n_; ++v) {
      if (owner_[v] == v) block_index[v] = next++;
      p.blocks[block_index[owner_[v]]].push_back(v);
    }
    visit_(p);
  }

  int n_;
  const std::function<void(const NonCrossingPartitionValue&)>& visit_;
  std::vector<int> owner_;  // smallest element of each vertex's block
};

// k-angulations of pending sub-polygons [u, v] (consecutive boundary vertices
// u..v closed by the chord u-v). The face on chord u-v is chosen first.
class DissectionBuilder {
 public:
  DissectionBuilder(int k, int r, const std::function<void(const Dissection&)>& visit)
      : k_(k), r_(r), n_((k - 2) * r + 2), visit_(visit) {}

  void run(std::vector<std::pair<int, int>> pending, std::vector<Edge>& diagonals) {
    while (!pending.empty() && pending.back().second - pending.back().first < 2) pending.pop_back();
    if (pending.empty()) {
      Dissection d{k_, r_, n_, diagonals};
      std::sort(d.diagonals.begin(), d.diagonals.end());
      visit_(d);
      return;
    }
    const auto [u, v] = pending.back();
    pending.pop_back();
    std::vector<int> face{u};
    choose(u, v, face, pending, diagonals);
  }

 private:
  bool gap_ok(int from, int to) const { return (to - from - 1) % (k_ - 2) == 0; }

  void choose(int u, int v, std::vector<int>& face, const std::vector<std::pair<int, int>>& pending,
              std::vector<Edge>& diagonals) {
    const int remaining = k_ - static_cast<int>(face.size());  // vertices still to pick, v included
    const int last = face.back();
    if (remaining == 1) {
      if (!gap_ok(last, v)) return;
      face.push_back(v);
      std::vector<std::pair<int, int>> next = pending;
      const std::size_t mark = diagonals.size();
      for (std::size_t i = 0; i + 1 < face.size(); ++i) {
        if (face[i + 1] - face[i] >= 2) {
          diagonals.push_back({face[i], face[i + 1]});
          next.emplace_back(face[i], face[i + 1]);
        }
      }
      run(std::move(next), diagonals);
      diagonals.resize(mark);
      face.pop_back();
      return;
    }
    for (int w = last + 1; w <= v - (remaining - 1); ++w) {
      if (!gap_ok(last, w)) continue;
      face.push_back(w);
      choose(u, v, face, pending, diagonals);
      face.pop_back();
    }
  }

  int k_, r_, n_;
  const std::function<void(const Dissection&)>& visit_;
};

}  // namespace

bool NonCrossingPartitionValue::is_non_crossing() const {
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (int a : blocks[x])
        for (int c : blocks[x])
          for (int b : blocks[y])
            for (int d : blocks[y])
              if (a < b && b < c && c < d) return false;
    }
  return true;
}

int isolation_degree(const NonCrossingPartitionValue& p, IsolationRootPolicy policy) {
  int count = 0;
  for (const auto& block : p.blocks) {
    if (block.size() != 1) continue;
    const int v = block.front();
    if (v == p.n && policy == IsolationRootPolicy::ExcludeRoot) continue;
    const bool spanned = std::any_of(p.blocks.begin(), p.blocks.end(), [v](const std::vector<int>& b) {
      return b.front() < v && v < b.back();
    });
    if (!spanned) ++count;
  }
  return count;
}

int Dissection::root_degree() const {
  return static_cast<int>(std::count_if(diagonals.begin(), diagonals.end(),
                                        [this](const Edge& e) { return e.a == n || e.b == n; }));
}

void enumerate_partitions(int n, const std::function<void(const NonCrossingPartitionValue&)>& visit, bool force) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be at least 1");
  check_guard(n, kPartitionGuard, force, "enumerate_partitions");
  PartitionBuilder builder(n, visit);
  builder.run({{1, n}});
}

void enumerate_dissections(int k, int r, const std::function<void(const Dissection&)>& visit, bool force) {
  if (k < 3) throw std::invalid_argument("enumerate_dissections: k must be at least 3");
  if (r < 1) throw std::invalid_argument("enumerate_dissections: r must be at least 1");
  const int n = (k - 2) * r + 2;
  check_guard(n, kDissectionGuard, force, "enumerate_dissections");
  DissectionBuilder builder(k, r, visit);
  std::vector<Edge> diagonals;
  // The outer chord 1-n is a boundary edge, so it is not recorded as a diagonal.
  builder.run({{1, n}}, diagonals);
}

Histogram partition_histogram(int n, IsolationRootPolicy policy, bool force) {
  Histogram h(static_cast<std::size_t>(n) + 2, 0);
  enumerate_partitions(
      n, [&](const NonCrossingPartitionValue& p) { ++h[static_cast<std::size_t>(isolation_degree(p, policy))]; },
      force);
  return h;
}

Histogram dissection_histogram(int k, int r, bool force) {
  Histogram h(static_cast<std::size_t>(r) + 2, 0);
  enumerate_dissections(k, r, [&](const Dissection& d) { ++h[static_cast<std::size_t>(d.root_degree())]; }, force);
  return h;
}

}  // namespace convex_count::oracle
