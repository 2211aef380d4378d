#pragma once

#include "hookdiff/partition.hpp"
#include "hookdiff/qseries.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hookdiff {

/// Coprime positive label weights for border-path walks.
struct WalkParams {
  int alpha = 1;
  int beta = 1;
  WalkParams(int a, int b);
  /// The (m-1, 1) walk.
  static WalkParams for_m(int m);
  int m() const { return alpha + beta; }
};

struct OrderLabel {
  int order = 0;      // n_lambda
  int max_label = 0;  // k_lambda
  friend bool operator==(const OrderLabel&, const OrderLabel&) = default;
};

OrderLabel order_and_maxlabel(const Partition& p, WalkParams w);

/// Staircase walk from (0, -beta*n) to (alpha*n, 0) as a string over {N, E}.
std::string border_path(const Partition& p, WalkParams w);

/// Word i lists the letters of the steps leaving vertex i, in tour order.
struct DepartureWords {
  std::vector<std::string> words;
  friend bool operator==(const DepartureWords&, const DepartureWords&) = default;
};

DepartureWords departure_words(const Partition& p, WalkParams w);
inline DepartureWords departure_words(const Partition& p, int m) {
  return departure_words(p, WalkParams::for_m(m));
}

/// Inverse of departure_words; throws DomainError for families that are not
/// the departure words of any partition.
Partition rebuild(const DepartureWords& dw, WalkParams w);
inline Partition rebuild(const DepartureWords& dw, int m) { return rebuild(dw, WalkParams::for_m(m)); }

/// Total number of pairs E...N over all words.
int inversion_total(const DepartureWords& dw);

struct NorthEastPatterns {
  std::vector<int> north;
  std::vector<int> east;
  friend bool operator==(const NorthEastPatterns&, const NorthEastPatterns&) = default;
};

NorthEastPatterns patterns(const Partition& p, WalkParams w);
inline NorthEastPatterns patterns(const Partition& p, int m) { return patterns(p, WalkParams::for_m(m)); }
NorthEastPatterns patterns_of(const DepartureWords& dw);

/// |lambda| recovered from the north pattern alone.
long long size_from_pattern(const NorthEastPatterns& np, WalkParams w);

/// Tail of an m-diagonal pattern after its forced staircase prefix.
using SSequence = std::vector<int>;

bool in_S(const SSequence& s, int m);

/// Diagonal counts for labels 1, 2, ... of the (m-1, 1) labelling (leading zeros kept).
std::vector<int> full_diagonal_pattern(const Partition& p, int m);

SSequence diagonal_to_s(const std::vector<int>& full, int m);
std::vector<int> s_to_diagonal(const SSequence& s, int m);

SSequence pattern_to_s(const NorthEastPatterns& np, int m);
NorthEastPatterns s_to_pattern(const SSequence& s, int m);

inline SSequence s_of(const Partition& p, int m) { return diagonal_to_s(full_diagonal_pattern(p, m), m); }

/// (m-1)*binom(s_1, 2) + sum s_i, the common size of the class members.
long long class_weight(const SSequence& s, int m);

/// Generating polynomial in t of h_{m-1,1} over the class.
Poly class_gen_poly(const SSequence& s, int m);

/// Number of class members, prod binom(E_j + N_j - 1, N_j).
BigInt class_size(const SSequence& s, int m);

/// Class members in lexicographic order of their departure-word families.
std::vector<Partition> enumerate_class(const SSequence& s, int m);

/// Calls fn for every s in S_m with class_weight <= max_weight.
void for_each_s(int m, long long max_weight, const std::function<void(const SSequence&)>& fn);

/// sum_{s in S_m} q^{weight} class_gen_poly(s) up to qmax.
QTSeries multisum_series(int m, int qmax);

/// Multisum restricted to 2-diagonal tails with largest part + length <= n.
QTSeries restricted_multisum(int n);

/// q^{binom(n,2)} C_n(1/q, t): sum over lambda with n_lambda <= n of q^|lambda| t^{h_{1,1}},
/// truncated exactly at its top degree binom(n,2).
QTSeries qt_catalan(int n);

}  // namespace hookdiff
