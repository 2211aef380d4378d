#include "hookdiff/walks.hpp"

#include <algorithm>
#include <numeric>

namespace hookdiff {

WalkParams::WalkParams(int a, int b) : alpha(a), beta(b) {
  if (a < 1 || b < 1) throw DomainError("walk weights must be positive");
  if (std::gcd(a, b) != 1) throw DomainError("walk weights must be coprime");
}

WalkParams WalkParams::for_m(int m) {
  if (m < 2) throw DomainError("m must be at least 2");
  return WalkParams(m - 1, 1);
}

OrderLabel order_and_maxlabel(const Partition& p, WalkParams w) {
  int k = 0;
  for (int r = 1; r <= p.length(); ++r) k = std::max(k, w.alpha * r + w.beta * p.row(r));
  const int ab = w.alpha * w.beta;
  return {(k + ab - 1) / ab, k};
}

std::string border_path(const Partition& p, WalkParams w) {
  const int n = order_and_maxlabel(p, w).order;
  std::string path(static_cast<std::size_t>(w.beta * n - p.length()), 'N');
  int x = 0;
  for (int r = p.length(); r >= 1; --r) {
    path.append(static_cast<std::size_t>(p.row(r) - x), 'E');
    x = p.row(r);
    path.push_back('N');
  }
  path.append(static_cast<std::size_t>(w.alpha * n - x), 'E');
  return path;
}

DepartureWords departure_words(const Partition& p, WalkParams w) {
  DepartureWords dw;
  int v = 0;
  for (char step : border_path(p, w)) {
    if (static_cast<std::size_t>(v) >= dw.words.size()) dw.words.resize(static_cast<std::size_t>(v) + 1);
    dw.words[static_cast<std::size_t>(v)].push_back(step);
    v += step == 'N' ? w.alpha : -w.beta;
  }
  return dw;
}

Partition rebuild(const DepartureWords& dw, WalkParams w) {
  for (const auto& word : dw.words)
    for (char c : word)
      if (c != 'N' && c != 'E') throw DomainError("departure words use only the letters N and E");
  for (std::size_t i = 1; i < dw.words.size(); ++i)
    if (!dw.words[i].empty() && dw.words[i].back() != 'E')
      throw DomainError("nonempty departure word " + std::to_string(i) + " does not end in E");

  std::vector<std::size_t> pos(dw.words.size(), 0);
  std::vector<int> rows;  // bottom to top
  int v = 0, x = 0;
  while (true) {
    if (v < 0) throw DomainError("tour leaves the triangle");
    const auto idx = static_cast<std::size_t>(v);
    if (idx >= dw.words.size() || pos[idx] == dw.words[idx].size()) {
      if (v == 0) break;
      throw DomainError("tour is stuck at vertex " + std::to_string(v));
    }
    const char step = dw.words[idx][pos[idx]++];
    if (step == 'N') {
      rows.push_back(x);
      v += w.alpha;
    } else {
      ++x;
      v -= w.beta;
    }
  }
  for (std::size_t i = 0; i < dw.words.size(); ++i)
    if (pos[i] != dw.words[i].size()) throw DomainError("tour does not use every letter");

  std::reverse(rows.begin(), rows.end());
  Partition out(std::move(rows));
  if (departure_words(out, w) != dw) throw DomainError("words do not describe a border path of minimal order");
  return out;
}

int inversion_total(const DepartureWords& dw) {
  int total = 0;
  for (const auto& word : dw.words) {
    int es = 0;
    for (char c : word) {
      if (c == 'E') ++es;
      else total += es;
    }
  }
  return total;
}

namespace {

void trim_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int at(const std::vector<int>& v, long long i) {
  return (i >= 0 && i < static_cast<long long>(v.size())) ? v[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

NorthEastPatterns patterns_of(const DepartureWords& dw) {
  NorthEastPatterns np;
  for (const auto& word : dw.words) {
    np.north.push_back(static_cast<int>(std::count(word.begin(), word.end(), 'N')));
    np.east.push_back(static_cast<int>(std::count(word.begin(), word.end(), 'E')));
  }
  trim_zeros(np.north);
  trim_zeros(np.east);
  return np;
}

NorthEastPatterns patterns(const Partition& p, WalkParams w) { return patterns_of(departure_words(p, w)); }

long long size_from_pattern(const NorthEastPatterns& np, WalkParams w) {
  const long long norths = std::accumulate(np.north.begin(), np.north.end(), 0LL);
  const long long easts = std::accumulate(np.east.begin(), np.east.end(), 0LL);
  if (norths % w.beta != 0) throw DomainError("north count is not a multiple of beta");
  const long long n = norths / w.beta;
  if (easts != w.alpha * n) throw DomainError("east count does not match the order");
  long long size = static_cast<long long>(w.alpha) * w.beta * (n * (n - 1) / 2);
  for (int j = 0; j < w.beta; ++j) size += n * ((w.alpha * j) / w.beta);
  for (std::size_t i = 0; i < np.north.size(); ++i)
    size -= static_cast<long long>(i / static_cast<std::size_t>(w.beta)) * np.north[i];
  if (size < 0) throw DomainError("pattern does not describe a partition");
  return size;
}

bool in_S(const SSequence& s, int m) {
  if (m < 2) throw DomainError("m must be at least 2");
  const auto len = static_cast<long long>(s.size());
  for (long long i = 1; i <= len; ++i) {
    const int si = at(s, i - 1);
    if (si < 0) return false;
    if (si < at(s, i) - ((i % (m - 1)) == 0 ? 1 : 0)) return false;
    if (si < at(s, i + m - 2)) return false;
  }
  return true;
}

std::vector<int> full_diagonal_pattern(const Partition& p, int m) {
  WalkParams w = WalkParams::for_m(m);
  std::vector<int> d;
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.row(r); ++c) {
      auto k = static_cast<std::size_t>(w.alpha * r + w.beta * c);
      if (k > d.size()) d.resize(k, 0);
      ++d[k - 1];
    }
  }
  return d;
}

SSequence diagonal_to_s(const std::vector<int>& full, int m) {
  std::vector<int> d = full;
  trim_zeros(d);
  if (d.empty()) return {};
  const int step = m - 1;
  std::size_t prefix = 0;  // number of leading entries following the staircase rule
  while (prefix < d.size() && d[prefix] == static_cast<int>(prefix) / step) ++prefix;
  if (prefix == 0) throw DomainError("diagonal pattern lacks the staircase prefix");
  const std::size_t s1 = (prefix - 1) / static_cast<std::size_t>(step);
  if (s1 == 0) throw DomainError("diagonal pattern lacks the staircase prefix");
  SSequence s(d.begin() + static_cast<std::ptrdiff_t>(step * s1), d.end());
  return s;
}

std::vector<int> s_to_diagonal(const SSequence& s, int m) {
  SSequence t = s;
  trim_zeros(t);
  if (t.empty()) return {};
  std::vector<int> d;
  for (int v = 0; v < t.front(); ++v) d.insert(d.end(), static_cast<std::size_t>(m - 1), v);
  d.insert(d.end(), t.begin(), t.end());
  return d;
}

SSequence pattern_to_s(const NorthEastPatterns& np, int m) {
  const int step = m - 1;
  const long long n = std::accumulate(np.north.begin(), np.north.end(), 0LL);
  const long long top = step * n;
  if (static_cast<long long>(np.north.size()) > top) throw DomainError("north pattern extends past the order");
  // d[k] for labels k = 1..top; d[top + 1] = 0.
  std::vector<int> d(static_cast<std::size_t>(top) + 2, 0);
  for (long long v = 0; v < top; ++v) {
    const long long k = top - v;
    d[static_cast<std::size_t>(k)] = at(np.north, v) + d[static_cast<std::size_t>(k + 1)] - (v % step == 0 ? 1 : 0);
    if (d[static_cast<std::size_t>(k)] < 0) throw DomainError("north pattern gives a negative diagonal");
  }
  return diagonal_to_s(std::vector<int>(d.begin() + 1, d.end()), m);
}

NorthEastPatterns s_to_pattern(const SSequence& s, int m) {
  if (!in_S(s, m)) throw DomainError("sequence is not in S_m");
  const int step = m - 1;
  const std::vector<int> d = s_to_diagonal(s, m);  // d[k-1] is label k
  const long long K = static_cast<long long>(d.size());
  const long long n = (K + step - 1) / step;
  const long long top = step * n;
  NorthEastPatterns np;
  np.north.assign(static_cast<std::size_t>(top), 0);
  for (long long v = 0; v < top; ++v)
    np.north[static_cast<std::size_t>(v)] = at(d, top - v - 1) - at(d, top - v) + (v % step == 0 ? 1 : 0);
  np.east.assign(static_cast<std::size_t>(top) + static_cast<std::size_t>(step), 0);
  for (long long i = 0; i < static_cast<long long>(np.east.size()); ++i)
    for (int j = 1; j <= step; ++j) np.east[static_cast<std::size_t>(i)] += at(np.north, i - j);
  trim_zeros(np.north);
  trim_zeros(np.east);
  return np;
}

long long class_weight(const SSequence& s, int m) {
  if (s.empty()) return 0;
  const long long s1 = s.front();
  return (m - 1) * (s1 * (s1 - 1) / 2) + std::accumulate(s.begin(), s.end(), 0LL);
}

Poly class_gen_poly(const SSequence& s, int m) {
  Poly out = Poly::constant(1);
  const auto len = static_cast<long long>(s.size());
  for (long long j = 1; j <= len; ++j) {
    const int top = at(s, j - 1) - at(s, j + m - 1) + (j % (m - 1) == 0 ? 1 : 0);
    const int bottom = at(s, j) - at(s, j + m - 1);
    out = out * gauss_binomial(top, bottom);
    if (out.is_zero()) break;
  }
  return out;
}

BigInt class_size(const SSequence& s, int m) {
  const NorthEastPatterns np = s_to_pattern(s, m);
  BigInt out = 1;
  for (long long j = 1; j < static_cast<long long>(np.north.size()); ++j) {
    const int nj = at(np.north, j);
    if (nj == 0) continue;
    out *= binomial(at(np.east, j) + nj - 1, nj);
  }
  return out;
}

std::vector<Partition> enumerate_class(const SSequence& s, int m) {
  const NorthEastPatterns np = s_to_pattern(s, m);
  const std::size_t vertices = std::max(np.north.size(), np.east.size());
  if (vertices == 0) return {Partition()};

  // Candidate words per vertex, each list in lexicographic order (E < N).
  std::vector<std::vector<std::string>> options(vertices);
  options[0] = {std::string(static_cast<std::size_t>(at(np.north, 0)), 'N')};
  if (at(np.east, 0) != 0) throw DomainError("vertex 0 cannot have east departures");
  for (std::size_t i = 1; i < vertices; ++i) {
    const int nn = at(np.north, static_cast<long long>(i));
    const int ee = at(np.east, static_cast<long long>(i));
    if (nn + ee == 0) {
      options[i] = {""};
      continue;
    }
    if (ee == 0) return {};
    std::string head = std::string(static_cast<std::size_t>(ee - 1), 'E') + std::string(static_cast<std::size_t>(nn), 'N');
    do {
      options[i].push_back(head + 'E');
    } while (std::next_permutation(head.begin(), head.end()));
  }

  std::vector<Partition> out;
  std::vector<std::size_t> choice(vertices, 0);
  DepartureWords dw;
  dw.words.resize(vertices);
  const WalkParams w = WalkParams::for_m(m);
  while (true) {
    for (std::size_t i = 0; i < vertices; ++i) dw.words[i] = options[i][choice[i]];
    out.push_back(rebuild(dw, w));
    bool advanced = false;
    for (std::size_t k = vertices; k-- > 0;) {
      if (++choice[k] < options[k].size()) {
        advanced = true;
        break;
      }
      choice[k] = 0;
    }
    if (!advanced) return out;
  }
}

void for_each_s(int m, long long max_weight, const std::function<void(const SSequence&)>& fn) {
  if (m < 2) throw DomainError("m must be at least 2");
  fn(SSequence{});
  SSequence seq;
  const int step = m - 1;

  std::function<void(long long, int)> extend = [&](long long weight, int zero_run) {
    const long long t = static_cast<long long>(seq.size()) + 1;  // 1-based index being chosen
    int upper = seq.back() + (((t - 1) % step) == 0 ? 1 : 0);
    if (t - m + 1 >= 1) upper = std::min(upper, seq[static_cast<std::size_t>(t - m)]);
    for (int v = 0; v <= upper && weight + v <= max_weight; ++v) {
      if (v == 0 && zero_run + 1 > m - 2) continue;
      seq.push_back(v);
      if (v > 0) fn(seq);
      extend(weight + v, v == 0 ? zero_run + 1 : 0);
      seq.pop_back();
    }
  };

  for (int s1 = 1;; ++s1) {
    const long long w = static_cast<long long>(step) * s1 * (s1 - 1) / 2 + s1;
    if (w > max_weight) break;
    seq = {s1};
    fn(seq);
    extend(w, 0);
  }
}

QTSeries multisum_series(int m, int qmax) {
  QTSeries out(qmax);
  for_each_s(m, qmax, [&](const SSequence& s) {
    out.add_row(static_cast<int>(class_weight(s, m)), class_gen_poly(s, m));
  });
  return out;
}

QTSeries restricted_multisum(int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const int qmax = n * (n - 1) / 2 > 0 ? n * (n - 1) / 2 : 0;
  QTSeries out(qmax);
  for_each_s(2, qmax, [&](const SSequence& s) {
    const int first = s.empty() ? 0 : s.front();
    if (first + static_cast<int>(s.size()) <= n)
      out.add_row(static_cast<int>(class_weight(s, 2)), class_gen_poly(s, 2));
  });
  return out;
}

QTSeries qt_catalan(int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const int qmax = std::max(0, n * (n - 1) / 2);
  QTSeries out(qmax);
  // Rows with lambda_i + i <= n, built top-down.
  std::vector<int> parts;
  std::function<void(int)> grow = [&](int cap) {
    Partition p(parts);
    out.add_term(p.size(), h_stat(p, StatParams(1, 1)), 1);
    const int i = static_cast<int>(parts.size()) + 1;
    for (int v = 1; v <= std::min(cap, n - i); ++v) {
      parts.push_back(v);
      grow(v);
      parts.pop_back();
    }
  };
  grow(n);
  return out;
}

}  // namespace hookdiff
