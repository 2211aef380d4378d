#include "hookdiff/verifier.hpp"

#include "hookdiff/cores.hpp"
#include "hookdiff/walks.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <functional>
#include <thread>

namespace hookdiff {

Filter Filter::two_core(long long j) {
  Filter f;
  f.kind = FilterKind::two_core_size;
  f.j = j;
  return f;
}

Filter Filter::with_m_core(Partition core, int m) {
  if (!is_m_core(core, m)) throw DomainError(core.to_string() + " is not a " + std::to_string(m) + "-core");
  Filter f;
  f.kind = FilterKind::m_core;
  f.core = std::move(core);
  f.m = m;
  return f;
}

Filter Filter::staircase(int n) {
  if (n < 0) throw DomainError("staircase size must be nonnegative");
  Filter f;
  f.kind = FilterKind::fits_staircase;
  f.n = n;
  return f;
}

Filter Filter::distinct() {
  Filter f;
  f.kind = FilterKind::distinct_parts;
  return f;
}

Filter Filter::restricted(int m) {
  if (m < 1) throw DomainError("m must be positive");
  Filter f;
  f.kind = FilterKind::m_restricted;
  f.m = m;
  return f;
}

bool Filter::accepts(const Partition& p) const {
  switch (kind) {
    case FilterKind::all:
      return true;
    case FilterKind::two_core_size:
      return m_core(p, 2).size() == two_core_size_for(j);
    case FilterKind::m_core:
      return m_core(p, m) == core;
    case FilterKind::fits_staircase:
      for (int r = 1; r <= p.length(); ++r)
        if (p.row(r) + r > n) return false;
      return true;
    case FilterKind::distinct_parts:
      return has_distinct_parts(p);
    case FilterKind::m_restricted:
      return is_m_restricted(p, m);
  }
  return false;
}

StatSpec StatSpec::hook(int alpha, int beta, std::vector<Filter> filters) {
  StatParams check(alpha, beta);
  StatSpec s;
  s.statistic = Statistic::h;
  s.alpha = check.alpha;
  s.beta = check.beta;
  s.filters = std::move(filters);
  return s;
}

StatSpec StatSpec::repeated(int m, std::vector<Filter> filters) {
  if (m < 1) throw DomainError("m must be positive");
  StatSpec s;
  s.statistic = Statistic::a_m;
  s.m = m;
  s.filters = std::move(filters);
  return s;
}

StatSpec StatSpec::count(std::vector<Filter> filters) {
  StatSpec s;
  s.filters = std::move(filters);
  return s;
}

int StatSpec::value(const Partition& p) const {
  switch (statistic) {
    case Statistic::none:
      return 0;
    case Statistic::h:
      return h_stat(p, StatParams(alpha, beta));
    case Statistic::h_zero:
      return h_zero(p);
    case Statistic::a_m:
      return largest_repeated(p, m);
    case Statistic::h11_plus_h0:
      return h_stat(p, StatParams(1, 1)) + h_zero(p);
  }
  return 0;
}

bool StatSpec::accepts(const Partition& p) const {
  return std::all_of(filters.begin(), filters.end(), [&](const Filter& f) { return f.accepts(p); });
}

QTSeries statistic_series(const StatSpec& spec, int qmax, int threads) {
  if (qmax < 0) throw DomainError("qmax must be nonnegative");
  std::vector<Poly> rows(static_cast<std::size_t>(qmax) + 1);
  auto shard = [&](int n) {
    std::vector<BigInt> counts;
    for (const auto& p : PartitionsOf(n)) {
      if (!spec.accepts(p)) continue;
      const auto v = static_cast<std::size_t>(spec.value(p));
      if (v >= counts.size()) counts.resize(v + 1);
      counts[v] += 1;
    }
    rows[static_cast<std::size_t>(n)] = Poly(std::move(counts));
  };

  const int workers = std::clamp(threads, 1, qmax + 1);
  if (workers == 1) {
    for (int n = 0; n <= qmax; ++n) shard(n);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int n = next++; n <= qmax; n = next++) shard(n);
      });
    for (auto& t : pool) t.join();
  }

  QTSeries out(qmax);
  for (int n = 0; n <= qmax; ++n) out.add_row(n, rows[static_cast<std::size_t>(n)]);
  return out;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::counterexample:
      return "counterexample";
    case Status::hypothesis_unmet:
      return "hypothesis-unmet";
    case Status::holds_to_bound:
      return "holds-to-bound";
  }
  return "?";
}

std::optional<Mismatch> first_mismatch(const QTSeries& a, const QTSeries& b) {
  const int qmax = std::min(a.qmax(), b.qmax());
  for (int q = 0; q <= qmax; ++q) {
    const Poly& x = a.coeff(q);
    const Poly& y = b.coeff(q);
    if (x == y) continue;
    const int top = std::max(x.degree(), y.degree());
    for (int t = 0; t <= top; ++t)
      if (x.coeff(t) != y.coeff(t)) return Mismatch{q, t, x.coeff(t), y.coeff(t)};
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

long long get_int(const Params& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing parameter '" + std::string(name) + "'");
  const std::string& s = it->second;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("parameter '" + std::string(name) + "' must be an integer");
  return v;
}

Partition get_partition(const Params& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing parameter '" + std::string(name) + "'");
  return parse_partition(it->second);
}

int get_m(const Params& p) {
  const long long m = get_int(p, "m");
  if (m < 2 || m > 64) throw DomainError("m must lie in 2..64");
  return static_cast<int>(m);
}

void compare_into(VerificationReport& r, QTSeries lhs, QTSeries rhs) {
  r.mismatch = first_mismatch(lhs, rhs);
  r.status = r.mismatch ? Status::counterexample : Status::verified;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
}

// Multisum over 2-diagonal tails whose alternating sum is j, at t = 1.
QTSeries tail_multisum_with_alt_sum(long long j, int qmax) {
  QTSeries out(qmax);
  for_each_s(2, qmax, [&](const SSequence& s) {
    if (alt_sum(Partition(s)) == j) out.add_row(static_cast<int>(class_weight(s, 2)), class_gen_poly(s, 2));
  });
  return out.at_t_one();
}

using Runner = std::function<VerificationReport(int, const Params&, int)>;

struct Entry {
  IdentityInfo info;
  Runner run;
};

VerificationReport make_report(std::string_view id, int qmax, const Params& params) {
  VerificationReport r;
  r.id = std::string(id);
  r.qmax = qmax;
  r.params = params;
  return r;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&](std::string id, std::vector<std::pair<std::string, std::string>> params, std::string statement,
                   Runner run) {
      t.push_back({{std::move(id), IdentityKind::theorem, std::move(params), std::move(statement)}, std::move(run)});
    };

    add("bf-main", {{"mutate", "0"}},
        "sum_lambda t^{h_{1,1}} q^|lambda| = prod_i 1/((1-q^{2i-1})(1-t q^{2i}))",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("bf-main", qmax, p);
          SeriesParams sp{{"mutate", get_int(p, "mutate")}};
          compare_into(r, statistic_series(StatSpec::hook(1, 1), qmax, threads), rhs_series("bf-main", sp, qmax));
          return r;
        });

    add("a2-product", {},
        "sum_lambda t^{a_2} q^|lambda| = prod_i 1/((1-q^{2i-1})(1-t q^{2i}))",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("a2-product", qmax, p);
          compare_into(r, statistic_series(StatSpec::repeated(2), qmax, threads), rhs_series("bf-main", {}, qmax));
          return r;
        });

    add("multisum", {{"m", "2"}},
        "sum_lambda t^{h_{m-1,1}} q^|lambda| = sum_{s in S_m} q^{(m-1)binom(s_1,2)+sum s} prod_j "
        "[s_j - s_{j+m} + chi(m-1|j), s_{j+1} - s_{j+m}]_t",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("multisum", qmax, p);
          const int m = get_m(p);
          compare_into(r, statistic_series(StatSpec::hook(m - 1, 1), qmax, threads), multisum_series(m, qmax));
          return r;
        });

    add("multisum-t1", {{"m", "2"}}, "the S_m multisum at t = 1 equals prod_i 1/(1-q^i)",
        [](int qmax, const Params& p, int) {
          auto r = make_report("multisum-t1", qmax, p);
          const int m = get_m(p);
          compare_into(r, multisum_series(m, qmax).at_t_one(), rhs_series("partition-count", {}, qmax));
          return r;
        });

    add("k012-series", {},
        "[t^r] of the m = 2 multisum equals [t^r] prod_i 1/((1-q^{2i-1})(1-t q^{2i})) for r = 0, 1, 2",
        [](int qmax, const Params& p, int) {
          auto r = make_report("k012-series", qmax, p);
          const QTSeries full_lhs = multisum_series(2, qmax);
          const QTSeries full_rhs = rhs_series("bf-main", {}, qmax);
          compare_into(r, full_lhs.t_truncated(2), full_rhs.t_truncated(2));
          const auto rest = first_mismatch(full_lhs, full_rhs);
          r.notes.push_back(std::string("conjectural remainder (all t-degrees): ") +
                            (rest ? "differs at q^" + std::to_string(rest->q) + " t^" + std::to_string(rest->t)
                                  : "agrees to qmax"));
          return r;
        });

    add("k012-class", {},
        "in every 2-diagonal class, #{h_{1,1} = r} = #{a_2 = r} for r = 0, 1, 2",
        [](int qmax, const Params& p, int) {
          auto r = make_report("k012-class", qmax, p);
          QTSeries lhs(qmax), rhs(qmax);
          for_each_s(2, qmax, [&](const SSequence& s) {
            const int w = static_cast<int>(class_weight(s, 2));
            std::array<int, 3> ch{}, ca{};
            for (const auto& mu : enumerate_class(s, 2)) {
              const int h = h_stat(mu, StatParams(1, 1));
              const int a = largest_repeated(mu, 2);
              if (h <= 2) ++ch[static_cast<std::size_t>(h)];
              if (a <= 2) ++ca[static_cast<std::size_t>(a)];
            }
            for (int v = 0; v < 3; ++v) {
              lhs.add_term(w, v, ch[static_cast<std::size_t>(v)]);
              rhs.add_term(w, v, ca[static_cast<std::size_t>(v)]);
              if (ch[static_cast<std::size_t>(v)] != ca[static_cast<std::size_t>(v)] && !r.mismatch) {
                r.mismatch = Mismatch{w, v, ch[static_cast<std::size_t>(v)], ca[static_cast<std::size_t>(v)]};
                r.notes.push_back("first failing class tail " + Partition(s).to_string());
              }
            }
          });
          r.status = r.mismatch ? Status::counterexample : Status::verified;
          r.lhs = std::move(lhs);
          r.rhs = std::move(rhs);
          return r;
        });

    add("catalan", {{"n", "4"}},
        "q^{binom(n,2)} C_n(1/q) = sum_{lambda_1 + l(lambda) <= n} prod_i binom(lambda_i - lambda_{i+2} + 1, "
        "lambda_{i+1} - lambda_{i+2}) q^{binom(lambda_1,2)+|lambda|}",
        [](int, const Params& p, int) {
          const long long n = get_int(p, "n");
          if (n < 0 || n > 40) throw DomainError("n must lie in 0..40");
          const int top = static_cast<int>(std::max(0LL, n * (n - 1) / 2));
          auto r = make_report("catalan", top, p);
          const Poly c = carlitz_catalan(static_cast<int>(n));
          compare_into(r, restricted_multisum(static_cast<int>(n)).at_t_one(),
                       QTSeries::from_poly_in_q(c.reversed(top), top));
          return r;
        });

    add("qt-catalan", {{"n", "4"}},
        "sum_{n_lambda <= n} q^|lambda| t^{h_{1,1}} = sum_{lambda_1 + l(lambda) <= n} prod_i [lambda_i - "
        "lambda_{i+2} + 1, lambda_{i+1} - lambda_{i+2}]_t q^{binom(lambda_1,2)+|lambda|}",
        [](int, const Params& p, int) {
          const long long n = get_int(p, "n");
          if (n < 0 || n > 12) throw DomainError("n must lie in 0..12");
          const int top = static_cast<int>(std::max(0LL, n * (n - 1) / 2));
          auto r = make_report("qt-catalan", top, p);
          compare_into(r, qt_catalan(static_cast<int>(n)), restricted_multisum(static_cast<int>(n)));
          return r;
        });

    add("two-core-count", {{"j", "0"}},
        "partitions with 2-core size binom(2j,2): generating function q^{binom(2j,2)}/prod_i (1-q^{2i})^2, "
        "also as the multisum over tails with alternating sum j",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("two-core-count", qmax, p);
          const long long j = get_int(p, "j");
          const QTSeries rhs = rhs_series("two-core-count", {{"j", j}}, qmax);
          const QTSeries multisum = tail_multisum_with_alt_sum(j, qmax);
          const QTSeries brute = statistic_series(StatSpec::count({Filter::two_core(j)}), qmax, threads);
          compare_into(r, multisum, rhs);
          if (auto mm = first_mismatch(brute, multisum); mm && r.status == Status::verified) {
            r.status = Status::counterexample;
            r.mismatch = mm;
            r.notes.push_back("brute-force count disagrees with the multisum");
          }
          return r;
        });

    add("distinct-two-core", {{"j", "0"}},
        "distinct-part partitions with 2-core size binom(2j,2): q^{binom(2j,2)}/prod_i (1-q^{2i})",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("distinct-two-core", qmax, p);
          const long long j = get_int(p, "j");
          compare_into(r, statistic_series(StatSpec::count({Filter::distinct(), Filter::two_core(j)}), qmax, threads),
                       rhs_series("distinct-two-core", {{"j", j}}, qmax));
          return r;
        });

    add("genhook20", {{"j", "0"}},
        "sum over 2-core size binom(2j,2) of t^{h_{2,0}} q^|mu| = q^{binom(2j,2)}/prod_i (1-q^{2i})(1-t q^{2i})",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("genhook20", qmax, p);
          const long long j = get_int(p, "j");
          compare_into(r, statistic_series(StatSpec::hook(2, 0, {Filter::two_core(j)}), qmax, threads),
                       rhs_series("genhook20", {{"j", j}}, qmax));
          return r;
        });

    add("h20-a2", {{"j", "0"}}, "h_{2,0} and a_2 are equidistributed on partitions of n with 2-core size binom(2j,2)",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("h20-a2", qmax, p);
          const long long j = get_int(p, "j");
          compare_into(r, statistic_series(StatSpec::hook(2, 0, {Filter::two_core(j)}), qmax, threads),
                       statistic_series(StatSpec::repeated(2, {Filter::two_core(j)}), qmax, threads));
          return r;
        });

    add("bfn", {{"alpha", "1"}, {"beta", "1"}},
        "sum_lambda t^{h_{alpha,beta}} q^|lambda| = prod_{(alpha+beta) does not divide i} 1/(1-q^i) prod_i "
        "1/(1-t q^{(alpha+beta)i})",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("bfn", qmax, p);
          const long long a = get_int(p, "alpha"), b = get_int(p, "beta");
          if (a < 0 || b < 0 || a + b == 0 || a + b > 64) throw DomainError("alpha, beta must be nonnegative, not both zero");
          compare_into(r, statistic_series(StatSpec::hook(static_cast<int>(a), static_cast<int>(b)), qmax, threads),
                       rhs_series("bfn", {{"alpha", a}, {"beta", b}}, qmax));
          return r;
        });

    add("two-core-equidist", {},
        "h_{1,1} and a_2 are equidistributed on partitions of n with 2-core size binom(k+1,2) whenever "
        "k >= (n - binom(k+1,2))/2",
        [](int qmax, const Params& p, int) {
          auto r = make_report("two-core-equidist", qmax, p);
          QTSeries lhs(qmax), rhs(qmax);
          for (int n = 0; n <= qmax; ++n) {
            // Distributions keyed by core height k.
            std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_k;
            for (const auto& mu : PartitionsOf(n)) {
              const Partition core = m_core(mu, 2);
              const int k = core.length();
              if (2 * k < n - core.size()) continue;
              auto& [hs, as] = by_k[k];
              const auto h = static_cast<std::size_t>(h_stat(mu, StatParams(1, 1)));
              const auto a = static_cast<std::size_t>(largest_repeated(mu, 2));
              if (h >= hs.size()) hs.resize(h + 1, 0);
              if (a >= as.size()) as.resize(a + 1, 0);
              ++hs[h];
              ++as[a];
              lhs.add_term(n, static_cast<int>(h), 1);
              rhs.add_term(n, static_cast<int>(a), 1);
            }
            for (auto& [k, d] : by_k) {
              auto& [hs, as] = d;
              const std::size_t len = std::max(hs.size(), as.size());
              hs.resize(len, 0);
              as.resize(len, 0);
              for (std::size_t v = 0; v < len && !r.mismatch; ++v)
                if (hs[v] != as[v]) {
                  r.mismatch = Mismatch{n, static_cast<int>(v), hs[v], as[v]};
                  r.notes.push_back("core height " + std::to_string(k));
                }
            }
          }
          r.status = r.mismatch ? Status::counterexample : Status::verified;
          r.lhs = std::move(lhs);
          r.rhs = std::move(rhs);
          return r;
        });

    add("prestrict", {{"m", "2"}, {"core", "-"}},
        "m-restricted partitions with m-core kappa: q^|kappa|/prod_i (1-q^{mi})^{m-1}",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("prestrict", qmax, p);
          const int m = get_m(p);
          const Partition core = get_partition(p, "core");
          compare_into(r,
                       statistic_series(StatSpec::count({Filter::with_m_core(core, m), Filter::restricted(m)}), qmax,
                                        threads),
                       rhs_series("prestrict", {{"m", m}, {"core_size", core.size()}}, qmax));
          return r;
        });

    add("hookp0", {{"m", "2"}, {"core", "-"}},
        "sum over m-core kappa of t^{h_{m,0}} q^|mu| = q^|kappa|/prod_i (1-q^{mi})^{m-1}(1-t q^{mi})",
        [](int qmax, const Params& p, int threads) {
          auto r = make_report("hookp0", qmax, p);
          const int m = get_m(p);
          const Partition core = get_partition(p, "core");
          compare_into(r, statistic_series(StatSpec::hook(m, 0, {Filter::with_m_core(core, m)}), qmax, threads),
                       rhs_series("mcore", {{"m", m}, {"core_size", core.size()}}, qmax));
          return r;
        });

    auto conj = [&](std::string id, std::vector<std::pair<std::string, std::string>> params, std::string statement) {
      t.push_back({{std::move(id), IdentityKind::conjecture, std::move(params), std::move(statement)}, nullptr});
    };
    conj("cj1", {{"j", "all"}},
         "on partitions of n with 2-core size binom(2j,2), h_{1,1}, h_{2,0} and a_2 are equidistributed and "
         "#{h_{1,1} = m} = A((n - binom(2j,2))/2, m) where sum A(n,m) q^n t^m = prod_i 1/((1-q^i)(1-t q^i))");
    conj("mcore", {{"m", "2"}, {"core", "-"}, {"alpha", "1"}, {"beta", "1"}},
         "for alpha + beta = m, sum over m-core kappa of t^{h_{alpha,beta}} q^|mu| = q^|kappa|/prod_i "
         "(1-q^{mi})^{m-1}(1-t q^{mi})");
    return t;
  }();
  return table;
}

const Entry& find_entry(std::string_view id) {
  if (id == "k012") id = "k012-series";
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw DomainError("unknown identity '" + std::string(id) + "'");
}

Params with_defaults(const IdentityInfo& info, const Params& given) {
  Params out;
  for (const auto& [k, v] : given) {
    const bool known = std::any_of(info.params.begin(), info.params.end(), [&](const auto& kv) { return kv.first == k; });
    if (!known) throw DomainError("identity '" + info.id + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  for (const auto& [k, v] : info.params) out.emplace(k, v);
  return out;
}

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

VerificationReport verify(std::string_view id, int qmax, const Params& params, int threads) {
  if (qmax < 0) throw DomainError("qmax must be nonnegative");
  const Entry& e = find_entry(id);
  if (e.info.kind != IdentityKind::theorem) throw DomainError("'" + std::string(id) + "' is a conjecture; use a scan");
  const auto start = Clock::now();
  VerificationReport r = e.run(qmax, with_defaults(e.info, params), threads);
  r.elapsed_ms = since(start);
  return r;
}

namespace {

VerificationReport scan_cj1(const Params& params, int nmax, int threads) {
  VerificationReport r = make_report("cj1", nmax, params);
  std::vector<long long> js;
  if (params.at("j") == "all") {
    for (long long j = 0; two_core_size_for(j) <= nmax; ++j) js.push_back(j);
    for (long long j = -1; two_core_size_for(j) <= nmax; --j) js.push_back(j);
    std::sort(js.begin(), js.end());
  } else {
    js.push_back(get_int(params, "j"));
  }

  const QTSeries A = rhs_series("cj1-A", {}, std::max(0, nmax / 2));
  for (long long j : js) {
    const std::vector<Filter> f{Filter::two_core(j)};
    const QTSeries h11 = statistic_series(StatSpec::hook(1, 1, f), nmax, threads);
    const QTSeries h20 = statistic_series(StatSpec::hook(2, 0, f), nmax, threads);
    const QTSeries a2 = statistic_series(StatSpec::repeated(2, f), nmax, threads);
    QTSeries predicted(nmax);
    const long long base = two_core_size_for(j);
    for (long long n = base, i = 0; n <= nmax; n += 2, ++i) predicted.add_row(static_cast<int>(n), A.coeff(static_cast<int>(i)));

    std::optional<Mismatch> mm;
    std::string what;
    if ((mm = first_mismatch(h11, h20))) what = "h_{1,1} vs h_{2,0}";
    else if ((mm = first_mismatch(h11, a2))) what = "h_{1,1} vs a_2";
    else if ((mm = first_mismatch(h11, predicted))) what = "h_{1,1} vs A-row prediction";
    if (mm) {
      r.status = Status::counterexample;
      r.mismatch = mm;
      r.notes.push_back("j = " + std::to_string(j) + ": " + what);
      r.lhs = h11;
      r.rhs = predicted;
      return r;
    }
    r.notes.push_back("j = " + std::to_string(j) + ": holds");
    if (js.size() == 1) {
      r.lhs = h11;
      r.rhs = predicted;
    }
  }
  r.status = Status::holds_to_bound;
  return r;
}

VerificationReport scan_mcore(const Params& params, int nmax, int threads) {
  VerificationReport r = make_report("mcore", nmax, params);
  const int m = get_m(params);
  const long long a = get_int(params, "alpha"), b = get_int(params, "beta");
  if (a < 0 || b < 0 || a + b != m) throw DomainError("alpha and beta must be nonnegative with alpha + beta = m");
  const Partition core = get_partition(params, "core");
  compare_into(r, statistic_series(StatSpec::hook(static_cast<int>(a), static_cast<int>(b), {Filter::with_m_core(core, m)}), nmax, threads),
               rhs_series("mcore", {{"m", m}, {"core_size", core.size()}}, nmax));
  if (r.status == Status::verified) r.status = Status::holds_to_bound;
  return r;
}

}  // namespace

VerificationReport conjecture_scan(std::string_view name, const Params& params, int nmax, int threads) {
  if (nmax < 0) throw DomainError("nmax must be nonnegative");
  const Entry& e = find_entry(name);
  if (e.info.kind != IdentityKind::conjecture) throw DomainError("'" + std::string(name) + "' is not a conjecture");
  const Params full = with_defaults(e.info, params);
  const auto start = Clock::now();
  VerificationReport r = name == "cj1" ? scan_cj1(full, nmax, threads) : scan_mcore(full, nmax, threads);
  r.elapsed_ms = since(start);
  return r;
}

VerificationReport equidistribution_check(const StatSpec& f, const StatSpec& g, int nmax, int threads) {
  const auto start = Clock::now();
  VerificationReport r = make_report("equidistribution", nmax, {});
  compare_into(r, statistic_series(f, nmax, threads), statistic_series(g, nmax, threads));
  r.elapsed_ms = since(start);
  return r;
}

std::string report_to_json(const VerificationReport& r, bool with_series, bool zero_time, int indent) {
  using nlohmann::json;
  json params = json::object();
  for (const auto& [k, v] : r.params) {
    long long n = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (!v.empty() && ec == std::errc() && ptr == v.data() + v.size()) params[k] = n;
    else params[k] = v;
  }
  json doc = {
      {"id", r.id},
      {"qmax", r.qmax},
      {"params", params},
      {"status", std::string(status_name(r.status))},
      {"elapsed_ms", zero_time ? 0LL : static_cast<long long>(r.elapsed_ms)},
  };
  if (r.mismatch)
    doc["first_mismatch"] = {{"q", r.mismatch->q},
                             {"t", r.mismatch->t},
                             {"lhs", r.mismatch->lhs.str()},
                             {"rhs", r.mismatch->rhs.str()}};
  if (!r.notes.empty()) doc["notes"] = r.notes;
  auto triples = [](const QTSeries& s) {
    json arr = json::array();
    for (const auto& t : s.triples()) arr.push_back(json::array({t.q, t.t, t.coeff.str()}));
    return arr;
  };
  if (with_series && r.lhs) doc["lhs_triples"] = triples(*r.lhs);
  if (with_series && r.rhs) doc["rhs_triples"] = triples(*r.rhs);
  return doc.dump(indent);
}

}  // namespace hookdiff
