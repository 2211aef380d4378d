#include "hookdiff/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hookdiff {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

StatParams::StatParams(int a, int b) : alpha(a), beta(b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw DomainError("statistic weights must be nonnegative and not both zero");
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-") return Partition();

  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw ParseError("invalid partition token '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw ParseError("zero part before a positive part");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParseError("partition is not weakly decreasing");
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) out.push_back({r, c});
  return out;
}

ArmLeg arm_leg(const Partition& p, Cell v) {
  if (!p.contains(v.row, v.col)) throw DomainError("cell lies outside the partition");
  int leg = 0;
  while (p.row(v.row + leg + 1) >= v.col) ++leg;
  return {p.row(v.row) - v.col, leg};
}

namespace {

template <typename Fn>
void for_each_arm_leg(const Partition& p, Fn&& fn) {
  const Partition t = conjugate(p);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) fn(Cell{r, c}, p.row(r) - c, t.row(c) - r);
}

}  // namespace

std::vector<Cell> hook_set(const Partition& p, StatParams params) {
  std::vector<Cell> out;
  const int m = params.m();
  for_each_arm_leg(p, [&](Cell v, int arm, int leg) {
    if (params.alpha * leg == params.beta * (arm + 1) && (arm + leg + 1) % m == 0) out.push_back(v);
  });
  return out;
}

int h_stat(const Partition& p, StatParams params) {
  int count = 0;
  const int m = params.m();
  for_each_arm_leg(p, [&](Cell, int arm, int leg) {
    if (params.alpha * leg == params.beta * (arm + 1) && (arm + leg + 1) % m == 0) ++count;
  });
  return count;
}

int h_zero(const Partition& p) {
  int count = 0;
  for_each_arm_leg(p, [&](Cell, int arm, int leg) { count += arm == leg; });
  return count;
}

int largest_repeated(const Partition& p, int m) {
  if (m < 1) throw DomainError("multiplicity threshold must be at least 1");
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (static_cast<int>(j - i) >= m) return parts[i];
    i = j;
  }
  return 0;
}

bool is_m_regular(const Partition& p, int m) { return largest_repeated(p, m) == 0; }

bool is_m_restricted(const Partition& p, int m) {
  // a_m of the conjugate is 0 iff consecutive parts differ by less than m.
  for (int r = 1; r <= p.length(); ++r)
    if (p.row(r) - p.row(r + 1) >= m) return false;
  return true;
}

bool has_distinct_parts(const Partition& p) { return is_m_regular(p, 2); }

std::vector<int> diagonal_pattern(const Partition& p, StatParams params) {
  std::vector<int> d;
  const int offset = params.alpha + params.beta;
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.row(r); ++c) {
      auto k = static_cast<std::size_t>(params.alpha * r + params.beta * c - offset);
      if (k >= d.size()) d.resize(k + 1, 0);
      ++d[k];
    }
  }
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

PartitionsOf::PartitionsOf(int n) : n_(n) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
}

PartitionsOf::iterator::iterator(int n) : done_(false) {
  if (n > 0) parts_.push_back(n);
  current_ = Partition(parts_);
}

PartitionsOf::iterator& PartitionsOf::iterator::operator++() {
  // Drop trailing ones, decrement the last part above one, refill greedily.
  int freed = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++freed;
  }
  if (parts_.empty()) {
    done_ = true;
    return *this;
  }
  const int v = --parts_.back();
  ++freed;
  while (freed > 0) {
    const int take = std::min(v, freed);
    parts_.push_back(take);
    freed -= take;
  }
  current_ = Partition(parts_);
  return *this;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : PartitionsOf(n)) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& p : PartitionsOf(n)) out.push_back(p);
  return out;
}

}  // namespace hookdiff
