#pragma once

// Deliberately naive reference computations. Nothing here calls into the
// library except for the Partition value type, so agreement is meaningful.

#include "hookdiff/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using hookdiff::Partition;
using i64 = std::int64_t;

// Partitions of n with parts <= cap, by recursion on the largest part.
inline void partitions_rec(int n, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  partitions_rec(n, n, cur, raw);
  std::vector<Partition> out;
  for (auto& r : raw) out.emplace_back(r);
  return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions(k)) out.push_back(p);
  return out;
}

// Euler's pentagonal recurrence.
inline std::vector<i64> partition_counts(int n) {
  std::vector<i64> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    i64 s = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const i64 sign = (j % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) s += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  return p;
}

// Boolean diagram, rows top-down.
inline std::vector<std::vector<bool>> diagram(const Partition& p) {
  std::vector<std::vector<bool>> d;
  for (int r = 1; r <= p.length(); ++r) d.emplace_back(static_cast<std::size_t>(p.largest()), false);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) d[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = true;
  return d;
}

inline bool in(const std::vector<std::vector<bool>>& d, int r, int c) {
  return r >= 1 && c >= 1 && r <= static_cast<int>(d.size()) && c <= static_cast<int>(d[0].size()) &&
         d[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
}

// Arm and leg by walking right and down one cell at a time.
inline std::pair<int, int> arm_leg(const Partition& p, int r, int c) {
  const auto d = diagram(p);
  int arm = 0, leg = 0;
  while (in(d, r, c + arm + 1)) ++arm;
  while (in(d, r + leg + 1, c)) ++leg;
  return {arm, leg};
}

inline int h_stat(const Partition& p, int alpha, int beta) {
  int count = 0;
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) {
      auto [a, l] = arm_leg(p, r, c);
      if (alpha * l == beta * (a + 1) && (a + l + 1) % (alpha + beta) == 0) ++count;
    }
  return count;
}

inline int h_zero(const Partition& p) {
  int count = 0;
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) {
      auto [a, l] = arm_leg(p, r, c);
      if (a == l) ++count;
    }
  return count;
}

inline int largest_repeated(const Partition& p, int m) {
  std::map<int, int> mult;
  for (int v : p.parts()) ++mult[v];
  int best = 0;
  for (auto [v, k] : mult)
    if (k >= m) best = std::max(best, v);
  return best;
}

// Repeated columns: each pair of equal column heights contributes one.
inline int column_pairs(const Partition& p) {
  std::map<int, int> heights;
  for (int c = 1; c <= p.largest(); ++c) {
    int h = 0;
    while (h < p.length() && p.row(h + 1) >= c) ++h;
    ++heights[h];
  }
  int s = 0;
  for (auto [h, k] : heights) s += k / 2;
  return s;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int c = 1; c <= p.largest(); ++c) {
    int h = 0;
    for (int v : p.parts()) h += v >= c;
    out.push_back(h);
  }
  return Partition(out);
}

// m-core by abacus: beta numbers, sliding beads up their runners.
inline Partition core_by_rim_hooks(const Partition& p, int m) {
  const int L = p.length();
  std::set<int> beta;
  for (int i = 1; i <= L; ++i) beta.insert(p.row(i) - i + L);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : std::vector<int>(beta.rbegin(), beta.rend())) {
      if (b - m >= 0 && !beta.count(b - m)) {
        beta.erase(b);
        beta.insert(b - m);
        moved = true;
        break;
      }
    }
  }
  std::vector<int> parts;
  int i = 0;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i) parts.push_back(*it - (L - 1 - i));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

// Number of m-rim-hook removals along the abacus reduction (= quotient size).
inline int abacus_weight(const Partition& p, int m) {
  return (p.size() - core_by_rim_hooks(p, m).size()) / m;
}

// Every partition obtained from p by deleting one rim hook of size m.
inline std::vector<Partition> remove_one_rim_hook(const Partition& p, int m) {
  const int L = p.length();
  std::set<int> beta;
  for (int i = 1; i <= L; ++i) beta.insert(p.row(i) - i + L);
  std::vector<Partition> out;
  for (int b : beta) {
    if (b - m < 0 || beta.count(b - m)) continue;
    std::set<int> nb = beta;
    nb.erase(b);
    nb.insert(b - m);
    std::vector<int> parts;
    int i = 0;
    for (auto it = nb.rbegin(); it != nb.rend(); ++it, ++i) parts.push_back(*it - (L - 1 - i));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.emplace_back(parts);
  }
  return out;
}

// Dense truncated bivariate series with 64-bit coefficients: c[q][t].
struct Series {
  int qmax;
  std::vector<std::vector<i64>> c;
  explicit Series(int qm) : qmax(qm), c(static_cast<std::size_t>(qm) + 1, std::vector<i64>(static_cast<std::size_t>(qm) + 1, 0)) {}
  static Series one(int qm) {
    Series s(qm);
    s.c[0][0] = 1;
    return s;
  }
  // Multiply by 1/(1 - q^a t^b), a >= 1.
  void divide_by(int a, int b) {
    for (int q = a; q <= qmax; ++q)
      for (int t = b; t <= qmax; ++t) c[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(q - a)][static_cast<std::size_t>(t - b)];
  }
  i64 at(int q, int t) const {
    if (q < 0 || t < 0 || q > qmax || t > qmax) return 0;
    return c[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)];
  }
  Series shifted(int k) const {
    Series s(qmax);
    for (int q = k; q <= qmax; ++q) s.c[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(q - k)];
    return s;
  }
};

// Gaussian binomial by counting inversions of every word with k ones among n letters.
inline std::vector<i64> gauss_by_words(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  std::vector<i64> out(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) != k) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((w >> i) & 1) && !((w >> j) & 1)) ++inv;
    ++out[static_cast<std::size_t>(inv)];
  }
  return out;
}

// Carlitz q-Catalan as a sum over Dyck paths of q^{coarea}; the coarea is
// the number of full squares between the path and the lowest path.
inline std::vector<i64> carlitz_by_dyck(int n) {
  std::vector<i64> out(static_cast<std::size_t>(std::max(0, n * (n - 1) / 2)) + 1, 0);
  if (n == 0) return {1};
  for (std::uint32_t w = 0; w < (1u << (2 * n)); ++w) {
    if (__builtin_popcount(w) != n) continue;
    int height = 0, area = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      if ((w >> i) & 1) {
        ++height;
      } else {
        --height;
        area += height;  // completed triangles above the floor
        ok = height >= 0;
      }
    }
    if (ok) ++out[static_cast<std::size_t>(area)];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<i64> catalan_numbers(int n) {
  std::vector<i64> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
  return c;
}

// A(n, m): pairs of partitions (alpha, beta) with |alpha| + |beta| = n and l(beta) = m.
inline i64 a_row_count(int n, int m) {
  const auto p = partition_counts(n);
  i64 total = 0;
  for (int b = 0; b <= n; ++b)
    for (const auto& beta : partitions(b))
      if (beta.length() == m) total += p[static_cast<std::size_t>(n - b)];
  return total;
}

inline bool distinct_parts(const Partition& p) {
  for (int i = 1; i < p.length(); ++i)
    if (p.row(i) == p.row(i + 1)) return false;
  return true;
}

inline int staircase_height(const Partition& core) { return core.length(); }

// Deterministic sampling helper for randomized property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

}  // namespace oracle
