#include "hookdiff/cores.hpp"

#include "hookdiff/walks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hookdiff {

namespace {

int pos_mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_m(int m) {
  if (m < 2) throw DomainError("m must be at least 2");
}

}  // namespace

int EdgeSequence::bit(long long i) const {
  if (i < anchor) return 0;
  if (i >= anchor + static_cast<long long>(window.size())) return 1;
  return window[static_cast<std::size_t>(i - anchor)];
}

EdgeSequence normalize(const EdgeSequence& e) {
  std::size_t lo = 0, hi = e.window.size();
  while (lo < hi && e.window[lo] == 0) ++lo;
  while (hi > lo && e.window[hi - 1] == 1) --hi;
  EdgeSequence out;
  out.window.assign(e.window.begin() + static_cast<std::ptrdiff_t>(lo), e.window.begin() + static_cast<std::ptrdiff_t>(hi));
  // With z zeros in the window, placing the first bit at -z balances the ones
  // before index 0 against the zeros from index 0 on.
  out.anchor = -static_cast<int>(std::count(out.window.begin(), out.window.end(), 0));
  return out;
}

EdgeSequence edge_sequence(const Partition& p) {
  EdgeSequence e;
  for (int r = p.length(); r >= 1; --r) {
    e.window.insert(e.window.end(), static_cast<std::size_t>(p.row(r) - p.row(r + 1)), 1);
    e.window.push_back(0);
  }
  e.anchor = -p.length();
  return e;
}

Partition partition_from_edges(const EdgeSequence& e) {
  const EdgeSequence n = normalize(e);
  std::vector<int> rows;
  int x = 0;
  for (int b : n.window) {
    if (b == 1) ++x;
    else rows.push_back(x);
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

int QuotientShift::quotient_size() const {
  int s = 0;
  for (const auto& q : quotient) s += q.size();
  return s;
}

QuotientShift quotient_and_shift(const Partition& p, int m) {
  check_m(m);
  const EdgeSequence e = edge_sequence(p);
  const long long first = e.anchor;
  const long long last = e.anchor + static_cast<long long>(e.window.size()) - 1;
  QuotientShift qs;
  for (int i = 0; i < m; ++i) {
    // S_i(r) = M(m r + i) over a range of r that covers the window.
    const long long r_lo = floor_div(first - i, m) - 1;
    const long long r_hi = floor_div(last - i, m) + 1;
    EdgeSequence sub;
    sub.anchor = static_cast<int>(r_lo);
    for (long long r = r_lo; r <= r_hi; ++r) sub.window.push_back(e.bit(m * r + i));
    // First 1 of S_i in its own coordinates.
    long long first_one = r_lo;
    while (sub.bit(first_one) == 0) ++first_one;
    const EdgeSequence canon = normalize(sub);
    qs.quotient.push_back(partition_from_edges(canon));
    qs.shift.push_back(static_cast<int>(first_one - canon.anchor));
  }
  return qs;
}

Partition from_quotient_and_shift(const std::vector<Partition>& quotient, const std::vector<int>& shift, int m) {
  check_m(m);
  if (static_cast<int>(quotient.size()) != m || static_cast<int>(shift.size()) != m)
    throw DomainError("quotient and shift need m components");
  if (std::accumulate(shift.begin(), shift.end(), 0LL) != 0) throw DomainError("shift must sum to zero");
  std::vector<EdgeSequence> comps;
  long long lo = 0, hi = 0;
  for (int i = 0; i < m; ++i) {
    comps.push_back(edge_sequence(quotient[static_cast<std::size_t>(i)]));
    const auto& c = comps.back();
    const long long k = shift[static_cast<std::size_t>(i)];
    lo = std::min(lo, m * (c.anchor + k) + i - m);
    hi = std::max(hi, m * (c.anchor + static_cast<long long>(c.window.size()) + k) + i + m);
  }
  EdgeSequence e;
  e.anchor = static_cast<int>(lo);
  for (long long idx = lo; idx <= hi; ++idx) {
    const int i = pos_mod(idx, m);
    const long long j = (idx - i) / m - shift[static_cast<std::size_t>(i)];
    e.window.push_back(comps[static_cast<std::size_t>(i)].bit(j));
  }
  return partition_from_edges(e);
}

Partition m_core(const Partition& p, int m) {
  const QuotientShift qs = quotient_and_shift(p, m);
  return from_quotient_and_shift(std::vector<Partition>(static_cast<std::size_t>(m)), qs.shift, m);
}

bool is_m_core(const Partition& p, int m) { return quotient_and_shift(p, m).quotient_size() == 0; }

Partition compose(const Partition& core, const std::vector<Partition>& quotient, int m) {
  const QuotientShift qs = quotient_and_shift(core, m);
  if (qs.quotient_size() != 0) throw DomainError(core.to_string() + " is not an m-core");
  return from_quotient_and_shift(quotient, qs.shift, m);
}

std::vector<int> shift_from_diagram(const Partition& p, int m) {
  check_m(m);
  std::vector<int> n(static_cast<std::size_t>(m), 0);
  for (const Cell& c : cells(p)) ++n[static_cast<std::size_t>(pos_mod(c.col - c.row, m))];
  std::vector<int> shift(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    shift[static_cast<std::size_t>(i)] = n[static_cast<std::size_t>(i)] - n[static_cast<std::size_t>((i + 1) % m)];
  return shift;
}

Partition two_core_for_shift(int j) { return Partition::staircase(std::max(-2 * j, 2 * j - 1)); }

AltSumForms alt_sum_forms(const Partition& tail) {
  AltSumForms f;
  if (tail.empty()) return f;
  const auto& t = tail.parts();
  const long long t1 = t.front();
  const long long k = tail.length();

  long long sign = 1;
  for (long long v = 1; v <= t1; ++v, sign = -sign) f.direct += sign * v;
  for (std::size_t i = 1; i < t.size(); ++i, sign = -sign) f.direct += sign * t[i];

  long long inner = (t1 + 1) / 2;
  for (long long i = 2; i <= k; ++i) inner += ((i - 1) % 2 == 0 ? 1 : -1) * t[static_cast<std::size_t>(i - 1)];
  f.folded = ((t1 - 1) % 2 == 0 ? 1 : -1) * inner;

  const Partition c = conjugate(tail);
  long long even = 0, odd = 0;
  for (int part : c.parts()) (part % 2 == 0 ? even : odd) += 1;
  f.parity = (c.length() % 2 == 0 ? 1 : -1) * floor_div(even - odd, 2);
  return f;
}

long long alt_sum(const Partition& tail) { return alt_sum_forms(tail).direct; }

long long two_core_size(const Partition& mu) {
  const long long j = alt_sum(Partition(s_of(mu, 2)));
  return j * (2 * j - 1);
}

int residue(Cell c, int m) { return pos_mod(c.row - c.col, m); }

std::vector<int> residue_counts(const Partition& mu, int m) {
  check_m(m);
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (const Cell& c : cells(mu)) ++w[static_cast<std::size_t>(residue(c, m))];
  return w;
}

long long core_size_formula(const std::vector<int>& w, int m) {
  check_m(m);
  if (static_cast<int>(w.size()) != m) throw DomainError("need m residue counts");
  long long squares = 0, rest = 0;
  for (int i = 0; i < m; ++i) {
    const long long d = w[static_cast<std::size_t>((i + 1) % m)] - w[static_cast<std::size_t>(i)];
    squares += d * d;
    if (i >= 1) rest += w[static_cast<std::size_t>(i)];
  }
  return m * squares / 2 + rest - static_cast<long long>(m - 1) * w[0];
}

std::vector<Cell> addable_cells(const Partition& mu) {
  std::vector<Cell> out;
  for (int r = 1; r <= mu.length() + 1; ++r)
    if (r == 1 || mu.row(r - 1) > mu.row(r)) out.push_back({r, mu.row(r) + 1});
  return out;
}

std::vector<Cell> removable_cells(const Partition& mu) {
  std::vector<Cell> out;
  for (int r = 1; r <= mu.length(); ++r)
    if (mu.row(r) > mu.row(r + 1)) out.push_back({r, mu.row(r)});
  return out;
}

AddRemove addable_removable(const Partition& mu, int m, int k) {
  check_m(m);
  if (k < 0 || k >= m) throw DomainError("residue out of range");
  AddRemove ar;
  for (const Cell& c : addable_cells(mu)) ar.addable += residue(c, m) == k;
  for (const Cell& c : removable_cells(mu)) ar.removable += residue(c, m) == k;
  return ar;
}

std::vector<Cell> conormal_cells(const Partition& mu, int m, int k, CellKind kind) {
  check_m(m);
  if (k < 0 || k >= m) throw DomainError("residue out of range");
  // Rows carrying an addable (+1) or removable (-1) k-cell, top to bottom.
  std::map<int, int> add_row, rem_row;
  for (const Cell& c : addable_cells(mu))
    if (residue(c, m) == k) add_row[c.row] = c.col;
  for (const Cell& c : removable_cells(mu))
    if (residue(c, m) == k) rem_row[c.row] = c.col;

  std::vector<Cell> out;
  if (kind == CellKind::addable) {
    // Score of an addable cell: addable minus removable k-cells in rows above it.
    bool any = false;
    int best = 0;
    for (const auto& [row, col] : add_row) {
      int score = 0;
      for (const auto& [r, c] : add_row) score += r < row;
      for (const auto& [r, c] : rem_row) score -= r < row;
      if (!any || score > best) out.push_back({row, col});
      best = any ? std::max(best, score) : score;
      any = true;
    }
  } else {
    // Mirror image: removable minus addable k-cells in rows below, read bottom-up.
    bool any = false;
    int best = 0;
    for (auto it = rem_row.rbegin(); it != rem_row.rend(); ++it) {
      const int row = it->first;
      int score = 0;
      for (const auto& [r, c] : rem_row) score += r > row;
      for (const auto& [r, c] : add_row) score -= r > row;
      if (!any || score > best) out.push_back({row, it->second});
      best = any ? std::max(best, score) : score;
      any = true;
    }
    std::reverse(out.begin(), out.end());
  }
  return out;
}

Partition add_cells(const Partition& mu, const std::vector<Cell>& cs) {
  std::vector<int> rows = mu.parts();
  for (const Cell& c : cs) {
    if (c.row > static_cast<int>(rows.size())) rows.resize(static_cast<std::size_t>(c.row), 0);
    auto& r = rows[static_cast<std::size_t>(c.row - 1)];
    if (r + 1 != c.col) throw DomainError("cell is not addable");
    r = c.col;
  }
  return Partition(std::move(rows));
}

Partition remove_cells(const Partition& mu, const std::vector<Cell>& cs) {
  std::vector<int> rows = mu.parts();
  for (const Cell& c : cs) {
    if (c.row > static_cast<int>(rows.size()) || rows[static_cast<std::size_t>(c.row - 1)] != c.col)
      throw DomainError("cell is not removable");
    rows[static_cast<std::size_t>(c.row - 1)] = c.col - 1;
  }
  return Partition(std::move(rows));
}

namespace {

std::vector<Cell> of_residue(const std::vector<Cell>& cs, int m, int k) {
  std::vector<Cell> out;
  for (const Cell& c : cs)
    if (residue(c, m) == k) out.push_back(c);
  return out;
}

}  // namespace

Partition add_all(const Partition& mu, int m, int k) { return add_cells(mu, of_residue(addable_cells(mu), m, k)); }

Partition remove_all(const Partition& mu, int m, int k) {
  return remove_cells(mu, of_residue(removable_cells(mu), m, k));
}

Partition modify_residue(const Partition& mu, int m, int k) {
  const AddRemove ar = addable_removable(mu, m, k);
  const int diff = ar.addable - ar.removable;
  if (diff >= 0) {
    auto cs = of_residue(addable_cells(mu), m, k);
    return add_cells(mu, std::vector<Cell>(cs.end() - diff, cs.end()));
  }
  auto cs = of_residue(removable_cells(mu), m, k);
  return remove_cells(mu, std::vector<Cell>(cs.end() + diff, cs.end()));
}

Partition core_ladder_step(const Partition& lambda, int m, int k) {
  if (!is_m_restricted(lambda, m)) throw DomainError("partition is not m-restricted");
  const Partition kappa = m_core(lambda, m);
  if (addable_removable(kappa, m, k).addable == 0) throw DomainError("core has no addable k-cells");
  const AddRemove ar = addable_removable(lambda, m, k);
  const int need = ar.addable - ar.removable;
  const auto con = conormal_cells(lambda, m, k, CellKind::addable);
  if (need < 0 || static_cast<int>(con.size()) < need) throw DomainError("not enough conormal cells");
  return add_cells(lambda, std::vector<Cell>(con.end() - need, con.end()));
}

Partition core_ladder_inverse(const Partition& mu, int m, int k) {
  if (!is_m_restricted(mu, m)) throw DomainError("partition is not m-restricted");
  const Partition kappa = m_core(mu, m);
  if (addable_removable(kappa, m, k).removable == 0) throw DomainError("core has no removable k-cells");
  const AddRemove ar = addable_removable(mu, m, k);
  const int need = ar.removable - ar.addable;
  const auto con = conormal_cells(mu, m, k, CellKind::removable);
  if (need < 0 || static_cast<int>(con.size()) < need) throw DomainError("not enough conormal cells");
  return remove_cells(mu, std::vector<Cell>(con.begin(), con.begin() + need));
}

namespace {

std::map<int, int, std::greater<>> multiplicities(const Partition& p) {
  std::map<int, int, std::greater<>> mult;
  for (int v : p.parts()) ++mult[v];
  return mult;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// Odd-multiplicity values split off; paired copies of j merge into 2j, then transpose.
Partition pair_merge(const Partition& rho) {
  std::vector<int> singles, merged;
  for (const auto& [v, b] : multiplicities(rho)) {
    if (b % 2 == 1) singles.push_back(v);
    merged.insert(merged.end(), static_cast<std::size_t>(b / 2), 2 * v);
  }
  const Partition mu = conjugate(sorted_partition(merged));
  singles.insert(singles.end(), mu.parts().begin(), mu.parts().end());
  return sorted_partition(singles);
}

Partition pair_split(const Partition& sigma) {
  std::vector<int> singles, rest;
  for (const auto& [v, b] : multiplicities(sigma)) {
    if (b % 2 == 1) singles.push_back(v);
    rest.insert(rest.end(), static_cast<std::size_t>(b - b % 2), v);
  }
  const Partition t = conjugate(Partition(rest));
  for (int part : t.parts()) {
    if (part % 2 != 0) throw DomainError("paired remainder does not transpose to even parts");
    singles.push_back(part / 2);
    singles.push_back(part / 2);
  }
  return sorted_partition(singles);
}

}  // namespace

Partition h20_a2_map(const Partition& lambda) { return pair_merge(conjugate(lambda)); }

Partition h20_a2_inverse(const Partition& image) { return conjugate(pair_split(image)); }

BigCoreResult big_core_stat(const Partition& core, const std::vector<Partition>& quotient, int m, int l) {
  check_m(m);
  if (l < 1 || l > m) throw DomainError("l must lie in 1..m");
  if (static_cast<int>(quotient.size()) != m) throw DomainError("quotient needs m components");
  BigCoreResult res;
  res.composed = compose(core, quotient, m);
  const auto shift = quotient_and_shift(core, m).shift;

  std::vector<std::pair<long long, int>> s;
  for (int j = 0; j < m; ++j) s.emplace_back(static_cast<long long>(m) * shift[static_cast<std::size_t>(j)] + j, j);
  std::sort(s.begin(), s.end());
  long long n = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) n = std::max<long long>(n, quotient[static_cast<std::size_t>(a)].size() + quotient[static_cast<std::size_t>(b)].size());

  const auto& pivot = s[static_cast<std::size_t>(l - 1)];
  res.component = pivot.second;
  res.hypothesis_met = true;
  for (int r = 0; r < m; ++r)
    if (r != l - 1 && std::llabs(pivot.first - s[static_cast<std::size_t>(r)].first) < m * n) res.hypothesis_met = false;
  res.statistic = h_stat(res.composed, StatParams(l, m - l));
  res.predicted = quotient[static_cast<std::size_t>(res.component)].largest();
  return res;
}

}  // namespace hookdiff
