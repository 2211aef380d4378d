#pragma once

#include "hookdiff/partition.hpp"
#include "hookdiff/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hookdiff {

enum class Statistic { none, h, h_zero, a_m, h11_plus_h0 };

enum class FilterKind { all, two_core_size, m_core, fits_staircase, distinct_parts, m_restricted };

struct Filter {
  FilterKind kind = FilterKind::all;
  long long j = 0;     // two_core_size: core size binom(2j, 2)
  int m = 2;           // m_core, m_restricted
  int n = 0;           // fits_staircase
  Partition core;      // m_core

  static Filter all() { return {}; }
  static Filter two_core(long long j);
  static Filter with_m_core(Partition core, int m);
  static Filter staircase(int n);
  static Filter distinct();
  static Filter restricted(int m);

  bool accepts(const Partition& p) const;
};

/// A statistic together with a conjunction of filters.
struct StatSpec {
  Statistic statistic = Statistic::none;
  int alpha = 1;  // for h
  int beta = 1;
  int m = 2;  // for a_m
  std::vector<Filter> filters;

  static StatSpec hook(int alpha, int beta, std::vector<Filter> filters = {});
  static StatSpec repeated(int m, std::vector<Filter> filters = {});
  static StatSpec count(std::vector<Filter> filters = {});

  int value(const Partition& p) const;
  bool accepts(const Partition& p) const;
};

/// sum over accepted partitions of size <= qmax of t^stat q^size. Sizes are
/// independent shards; the merge order is fixed so the result does not depend
/// on the thread count.
QTSeries statistic_series(const StatSpec& spec, int qmax, int threads = 1);

enum class Status { verified, counterexample, hypothesis_unmet, holds_to_bound };
std::string_view status_name(Status s);

struct Mismatch {
  int q = 0;
  int t = 0;
  BigInt lhs;
  BigInt rhs;
};

std::optional<Mismatch> first_mismatch(const QTSeries& a, const QTSeries& b);

using Params = std::map<std::string, std::string, std::less<>>;

struct VerificationReport {
  std::string id;
  int qmax = 0;
  Params params;
  Status status = Status::verified;
  std::optional<Mismatch> mismatch;
  std::optional<QTSeries> lhs;
  std::optional<QTSeries> rhs;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool ok() const { return status == Status::verified || status == Status::holds_to_bound; }
};

enum class IdentityKind { theorem, conjecture };

struct IdentityInfo {
  std::string id;
  IdentityKind kind = IdentityKind::theorem;
  std::vector<std::pair<std::string, std::string>> params;  // name, default
  std::string statement;
};

const std::vector<IdentityInfo>& identity_registry();

/// Runs a registered theorem check. Unknown ids and bad parameters throw DomainError.
VerificationReport verify(std::string_view id, int qmax, const Params& params = {}, int threads = 1);

/// Runs a conjecture scan ("cj1" or "mcore") for all sizes up to nmax.
VerificationReport conjecture_scan(std::string_view name, const Params& params, int nmax, int threads = 1);

/// Compares the f- and g-distributions (each with its own filters) size by size.
VerificationReport equidistribution_check(const StatSpec& f, const StatSpec& g, int nmax, int threads = 1);

/// Structured form of a report; keys are sorted so the dump is stable.
std::string report_to_json(const VerificationReport& r, bool with_series, bool zero_time, int indent = 2);

}  // namespace hookdiff
