#include "hookdiff/qseries.hpp"

#include "hookdiff/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hookdiff {

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(BigInt c) { return Poly(std::vector<BigInt>{std::move(c)}); }

Poly Poly::monomial(int degree, BigInt c) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

BigInt Poly::at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

Poly Poly::substitute_power(int k) const {
  if (k < 1) throw DomainError("substitution power must be positive");
  if (c_.empty()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(degree() * k) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::reversed(int top) const {
  if (top < degree()) throw DomainError("reversal degree below polynomial degree");
  if (c_.empty()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(top) - i] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::truncated(int d) const {
  if (d < 0) return {};
  if (d >= degree()) return *this;
  return Poly(std::vector<BigInt>(c_.begin(), c_.begin() + d + 1));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

QTSeries::QTSeries(int qmax) {
  if (qmax < 0) throw DomainError("truncation order must be nonnegative");
  rows_.resize(static_cast<std::size_t>(qmax) + 1);
}

QTSeries QTSeries::one(int qmax) {
  QTSeries s(qmax);
  s.rows_[0] = Poly::constant(1);
  return s;
}

QTSeries QTSeries::from_poly_in_q(const Poly& p, int qmax) {
  QTSeries s(qmax);
  for (int i = 0; i <= std::min(qmax, p.degree()); ++i) {
    auto c = p.coeff(i);
    if (c != 0) s.rows_[static_cast<std::size_t>(i)] = Poly::constant(c);
  }
  return s;
}

const Poly& QTSeries::coeff(int qexp) const {
  static const Poly zero;
  if (qexp < 0 || qexp > qmax()) return zero;
  return rows_[static_cast<std::size_t>(qexp)];
}

BigInt QTSeries::coeff(int qexp, int texp) const { return coeff(qexp).coeff(texp); }

void QTSeries::add_term(int qexp, int texp, const BigInt& c) {
  if (qexp < 0 || texp < 0) throw DomainError("negative exponent in series term");
  if (qexp > qmax() || c == 0) return;
  rows_[static_cast<std::size_t>(qexp)] += Poly::monomial(texp, c);
}

void QTSeries::add_row(int qexp, const Poly& p) {
  if (qexp < 0) throw DomainError("negative exponent in series term");
  if (qexp > qmax()) return;
  rows_[static_cast<std::size_t>(qexp)] += p;
}

QTSeries QTSeries::at_t_one() const {
  QTSeries s(qmax());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto v = rows_[i].at_one();
    if (v != 0) s.rows_[i] = Poly::constant(v);
  }
  return s;
}

QTSeries QTSeries::t_truncated(int d) const {
  QTSeries s(qmax());
  for (std::size_t i = 0; i < rows_.size(); ++i) s.rows_[i] = rows_[i].truncated(d);
  return s;
}

QTSeries QTSeries::truncated(int new_qmax) const {
  QTSeries s(std::min(new_qmax, qmax()));
  for (std::size_t i = 0; i < s.rows_.size(); ++i) s.rows_[i] = rows_[i];
  return s;
}

QTSeries QTSeries::q_shifted(int k) const {
  if (k < 0) throw DomainError("negative q shift");
  QTSeries s(qmax());
  for (int i = 0; i + k <= qmax(); ++i)
    s.rows_[static_cast<std::size_t>(i + k)] = rows_[static_cast<std::size_t>(i)];
  return s;
}

std::vector<SeriesTerm> QTSeries::triples() const {
  std::vector<SeriesTerm> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& c = rows_[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), c[j]});
  }
  return out;
}

QTSeries QTSeries::from_triples(int qmax, std::span<const SeriesTerm> terms) {
  QTSeries s(qmax);
  for (const auto& t : terms) s.add_term(t.q, t.t, t.coeff);
  return s;
}

QTSeries& QTSeries::operator+=(const QTSeries& o) {
  if (o.qmax() < qmax()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] += o.rows_[i];
  return *this;
}

QTSeries& QTSeries::operator-=(const QTSeries& o) {
  if (o.qmax() < qmax()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] -= o.rows_[i];
  return *this;
}

QTSeries operator*(const QTSeries& a, const QTSeries& b) {
  QTSeries s(std::min(a.qmax(), b.qmax()));
  const int n = s.qmax();
  for (int i = 0; i <= n; ++i) {
    const Poly& x = a.rows_[static_cast<std::size_t>(i)];
    if (x.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Poly& y = b.rows_[static_cast<std::size_t>(j)];
      if (!y.is_zero()) s.rows_[static_cast<std::size_t>(i + j)] += x * y;
    }
  }
  return s;
}

std::string QTSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << rows_[i].to_string("t") << ")";
    if (i > 0) out << "*q" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) out << '0';
  out << " + O(q^" << qmax() + 1 << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

Poly gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // Row-by-row q-Pascal: [i, j] = [i-1, j-1] + q^j [i-1, j].
  std::vector<Poly> row(static_cast<std::size_t>(k) + 1);
  row[0] = Poly::constant(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void apply_factor(QTSeries& s, const Factor& f) {
  if (f.qexp < 1) throw DomainError("factor must carry a positive power of q");
  if (f.texp < 0) throw DomainError("factor t-exponent must be nonnegative");
  const int n = s.qmax();
  const int a = f.qexp;
  for (int rep = 0; rep < std::abs(f.power); ++rep) {
    if (f.power > 0) {
      // s *= (1 - q^a t^b): descend so each row reads the unmodified lower row.
      for (int i = n; i >= a; --i) s.add_row(i, Poly() - s.coeff(i - a).shifted(f.texp));
    } else {
      // s /= (1 - q^a t^b): ascend so each row sees the already-divided lower row.
      for (int i = a; i <= n; ++i) s.add_row(i, s.coeff(i - a).shifted(f.texp));
    }
  }
}

QTSeries geometric_product(std::span<const Factor> factors, int qmax) {
  QTSeries s = QTSeries::one(qmax);
  for (const auto& f : factors) apply_factor(s, f);
  return s;
}

long long two_core_size_for(long long j) { return j * (2 * j - 1); }

namespace {

long long param(const SeriesParams& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing parameter '" + std::string(name) + "'");
  return it->second;
}

long long param_or(const SeriesParams& p, std::string_view name, long long fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

// prod_{i>=1} (1 - q^{step*i} t^texp)^power, only the factors that matter below qmax.
void apply_family(QTSeries& s, int step, int texp, int power) {
  for (int i = 1; step * i <= s.qmax(); ++i) apply_factor(s, {step * i, texp, power});
}

QTSeries shifted_by_core(QTSeries s, long long core) {
  if (core < 0) throw DomainError("core size must be nonnegative");
  if (core > s.qmax()) return QTSeries(s.qmax());
  return s.q_shifted(static_cast<int>(core));
}

using Builder = std::function<QTSeries(const SeriesParams&, int)>;

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"bf-main",
       [](const SeriesParams& p, int qmax) {
         // prod 1/((1-q^{2i-1})(1-t q^{2i})); "mutate" perturbs the t-factor exponent.
         const int bump = param_or(p, "mutate", 0) != 0 ? 1 : 0;
         QTSeries s = QTSeries::one(qmax);
         for (int i = 1; 2 * i - 1 <= qmax; ++i) apply_factor(s, {2 * i - 1, 0, -1});
         for (int i = 1; 2 * i + bump <= qmax; ++i) apply_factor(s, {2 * i + bump, 1, -1});
         return s;
       }},
      {"partition-count",
       [](const SeriesParams&, int qmax) {
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, 1, 0, -1);
         return s;
       }},
      {"bfn",
       [](const SeriesParams& p, int qmax) {
         const long long a = param(p, "alpha"), b = param(p, "beta");
         if (a < 0 || b < 0 || a + b == 0) throw DomainError("alpha, beta must be nonnegative, not both zero");
         const int m = static_cast<int>(a + b);
         QTSeries s = QTSeries::one(qmax);
         for (int i = 1; i <= qmax; ++i)
           if (i % m != 0) apply_factor(s, {i, 0, -1});
         apply_family(s, m, 1, -1);
         return s;
       }},
      {"two-core-count",
       [](const SeriesParams& p, int qmax) {
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, 2, 0, -2);
         return shifted_by_core(std::move(s), two_core_size_for(param(p, "j")));
       }},
      {"distinct-two-core",
       [](const SeriesParams& p, int qmax) {
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, 2, 0, -1);
         return shifted_by_core(std::move(s), two_core_size_for(param(p, "j")));
       }},
      {"genhook20",
       [](const SeriesParams& p, int qmax) {
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, 2, 0, -1);
         apply_family(s, 2, 1, -1);
         return shifted_by_core(std::move(s), two_core_size_for(param(p, "j")));
       }},
      {"cj1-A",
       [](const SeriesParams&, int qmax) {
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, 1, 0, -1);
         apply_family(s, 1, 1, -1);
         return s;
       }},
      {"prestrict",
       [](const SeriesParams& p, int qmax) {
         const long long m = param(p, "m");
         if (m < 2) throw DomainError("m must be at least 2");
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, static_cast<int>(m), 0, -static_cast<int>(m - 1));
         return shifted_by_core(std::move(s), param(p, "core_size"));
       }},
      {"mcore",
       [](const SeriesParams& p, int qmax) {
         const long long m = param(p, "m");
         if (m < 2) throw DomainError("m must be at least 2");
         QTSeries s = QTSeries::one(qmax);
         apply_family(s, static_cast<int>(m), 0, -static_cast<int>(m - 1));
         apply_family(s, static_cast<int>(m), 1, -1);
         return shifted_by_core(std::move(s), param(p, "core_size"));
       }},
  };
  return table;
}

}  // namespace

QTSeries rhs_series(std::string_view id, const SeriesParams& params, int qmax) {
  const auto& table = builders();
  auto it = table.find(id);
  if (it == table.end()) throw DomainError("unknown series id '" + std::string(id) + "'");
  return it->second(params, qmax);
}

std::vector<std::string> rhs_series_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builders()) out.push_back(k);
  return out;
}

std::vector<Poly> carlitz_catalan_upto(int n) {
  if (n < 0) throw DomainError("Catalan index must be nonnegative");
  std::vector<Poly> c{Poly::constant(1)};
  for (int k = 0; k < n; ++k) {
    Poly next;
    for (int l = 0; l <= k; ++l)
      next += (c[static_cast<std::size_t>(l)] * c[static_cast<std::size_t>(k - l)]).shifted(l);
    c.push_back(std::move(next));
  }
  return c;
}

Poly carlitz_catalan(int n) { return carlitz_catalan_upto(n).back(); }

Poly pq_product(std::span<const int> k) {
  for (int v : k)
    if (v < 0) return {};
  Poly out = Poly::constant(1);
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    out = out * gauss_binomial(k[i - 1] + k[i] - 1, k[i]);
    if (out.is_zero()) break;
  }
  return out;
}

bool vandermonde_convolution_check(std::span<const int> k, int tau0) {
  if (k.empty() || tau0 < 0 || tau0 > k[0]) throw DomainError("need 0 <= tau0 <= k_0");
  const std::size_t n = k.size();
  std::vector<int> tau(n, 0), rest(n, 0);
  tau[0] = tau0;
  Poly rhs;
  // Odometer over tau_1..tau_{n-1} in [0, k_i].
  while (true) {
    int expo = 0;
    for (std::size_t i = 0; i < n; ++i) rest[i] = k[i] - tau[i];
    for (std::size_t i = 0; i + 1 < n; ++i) expo += tau[i] * rest[i + 1];
    rhs += (pq_product(tau) * pq_product(rest)).shifted(expo);
    std::size_t pos = 1;
    while (pos < n && tau[pos] == k[pos]) tau[pos++] = 0;
    if (pos >= n) break;
    ++tau[pos];
  }
  return rhs == pq_product(k);
}

Poly f_ab(int a, int b) {
  if (a < 0 || b < 0) return {};
  if (b < a) return {};
  // floor((b-a)/2) with b >= a is ordinary integer division.
  Poly g = gauss_binomial(b, (b - a) / 2).substitute_power(2);
  return g.shifted(a * (a + 1) / 2);
}

}  // namespace hookdiff
