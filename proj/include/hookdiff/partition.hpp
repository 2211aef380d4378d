#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookdiff {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation's precondition does not hold for its input.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing finite list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; any other zero or an increase throws DomainError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition staircase(int k);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return size_; }

  /// Length of row `r` (1-based); 0 past the last row.
  int row(int r) const {
    return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }

  bool contains(int r, int c) const { return r >= 1 && c >= 1 && c <= row(r); }

  /// "5,4,1", or "-" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weights of the (alpha, beta)-label alpha*row + beta*col.
struct StatParams {
  int alpha = 1;
  int beta = 1;
  StatParams(int a, int b);
  int m() const { return alpha + beta; }
};

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// Accepts comma separated nonnegative integers; "" and "-" give the empty partition.
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& p);

std::vector<Cell> cells(const Partition& p);

ArmLeg arm_leg(const Partition& p, Cell v);

/// Cells with alpha*leg == beta*(arm+1) and (alpha+beta) | hook length, row-major.
std::vector<Cell> hook_set(const Partition& p, StatParams params);
int h_stat(const Partition& p, StatParams params);

/// Number of cells whose arm equals their leg.
int h_zero(const Partition& p);

/// Largest part occurring at least `m` times, 0 if none.
int largest_repeated(const Partition& p, int m);
bool is_m_regular(const Partition& p, int m);
bool is_m_restricted(const Partition& p, int m);
bool has_distinct_parts(const Partition& p);

/// Entry k (0-based) counts cells with label alpha*i + beta*j == k + alpha + beta.
/// Trailing zeros are trimmed.
std::vector<int> diagonal_pattern(const Partition& p, StatParams params);

/// Partitions of n in reverse-lexicographic order, starting from (n).
class PartitionsOf {
 public:
  explicit PartitionsOf(int n);

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }

   private:
    friend class PartitionsOf;
    explicit iterator(int n);
    std::vector<int> parts_;
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

std::vector<Partition> enumerate_partitions(int n);

/// Every partition of size 0..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace hookdiff
