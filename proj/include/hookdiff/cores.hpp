#pragma once

#include "hookdiff/partition.hpp"

#include <optional>
#include <vector>

namespace hookdiff {

/// Finite window of a doubly infinite 0/1 sequence (0 = north, 1 = east).
/// Bits before the window are 0 and bits after it are 1.
struct EdgeSequence {
  std::vector<int> window;
  int anchor = 0;  // index of window[0]

  int bit(long long i) const;
  friend bool operator==(const EdgeSequence&, const EdgeSequence&) = default;
};

EdgeSequence edge_sequence(const Partition& p);

/// Reads the boundary back; any anchor is accepted (the shape ignores it).
Partition partition_from_edges(const EdgeSequence& e);

/// Strips leading zeros and trailing ones and moves the anchor to the
/// canonical position.
EdgeSequence normalize(const EdgeSequence& e);

struct QuotientShift {
  std::vector<Partition> quotient;
  std::vector<int> shift;
  int quotient_size() const;
  friend bool operator==(const QuotientShift&, const QuotientShift&) = default;
};

QuotientShift quotient_and_shift(const Partition& p, int m);

/// Inverse of quotient_and_shift; shift must sum to zero.
Partition from_quotient_and_shift(const std::vector<Partition>& quotient, const std::vector<int>& shift, int m);

Partition m_core(const Partition& p, int m);
bool is_m_core(const Partition& p, int m);

/// The partition with m-core `core` and m-quotient `quotient`.
Partition compose(const Partition& core, const std::vector<Partition>& quotient, int m);

/// m-shift read off the diagram: N_i counts cells with col - row = i (mod m).
std::vector<int> shift_from_diagram(const Partition& p, int m);

/// The 2-core for shift (j, -j): staircase of height max(-2j, 2j-1).
Partition two_core_for_shift(int j);

/// Alternating sum of 1, 2, ..., t_1, t_2, ..., t_k for a diagonal-pattern tail t,
/// computed three ways.
struct AltSumForms {
  long long direct = 0;
  long long folded = 0;
  long long parity = 0;
};
AltSumForms alt_sum_forms(const Partition& tail);
long long alt_sum(const Partition& tail);

/// binom(2j, 2) where j is the alternating sum of the 2-diagonal tail of mu.
long long two_core_size(const Partition& mu);

/// w_k = number of cells (i, j) with i - j = k (mod m).
std::vector<int> residue_counts(const Partition& mu, int m);
long long core_size_formula(const std::vector<int>& w, int m);

std::vector<Cell> addable_cells(const Partition& mu);
std::vector<Cell> removable_cells(const Partition& mu);
int residue(Cell c, int m);

struct AddRemove {
  int addable = 0;
  int removable = 0;
};
AddRemove addable_removable(const Partition& mu, int m, int k);

enum class CellKind { addable, removable };

/// Conormal k-cells of the given kind, top to bottom.
std::vector<Cell> conormal_cells(const Partition& mu, int m, int k, CellKind kind);

Partition add_cells(const Partition& mu, const std::vector<Cell>& cells);
Partition remove_cells(const Partition& mu, const std::vector<Cell>& cells);

/// Adds every addable k-cell (or removes every removable one) of mu.
Partition add_all(const Partition& mu, int m, int k);
Partition remove_all(const Partition& mu, int m, int k);

/// Adds A_k - R_k addable k-cells (or removes R_k - A_k removable ones),
/// taking the lowest cells first.
Partition modify_residue(const Partition& mu, int m, int k);

/// Bijection between m-restricted partitions with core kappa and those with
/// core add_all(kappa, m, k); requires A_k(kappa) > 0.
Partition core_ladder_step(const Partition& lambda, int m, int k);
Partition core_ladder_inverse(const Partition& mu, int m, int k);

/// Bijection with a_2(image) = h_{2,0}(lambda) preserving size and 2-core.
Partition h20_a2_map(const Partition& lambda);
Partition h20_a2_inverse(const Partition& image);

struct BigCoreResult {
  bool hypothesis_met = false;
  Partition composed;
  int component = -1;  // i_l
  int statistic = 0;   // h_{l, m-l}(composed)
  int predicted = 0;   // largest part of quotient component i_l
};

/// Evaluates the large-core prediction h_{l,m-l} = a(lambda_{i_l}) for l in 1..m.
BigCoreResult big_core_stat(const Partition& core, const std::vector<Partition>& quotient, int m, int l);

}  // namespace hookdiff
