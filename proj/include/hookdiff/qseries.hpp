#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hookdiff {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, no trailing zeros.
/// Used for polynomials in t (class polynomials) and in q (q-binomials, Catalan).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly constant(BigInt c);
  static Poly monomial(int degree, BigInt c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;

  BigInt at_one() const;
  /// x -> x^k
  Poly substitute_power(int k) const;
  /// Multiply by x^k, k >= 0.
  Poly shifted(int k) const;
  /// x^top * p(1/x); requires top >= degree().
  Poly reversed(int top) const;
  /// Coefficients of degree <= d only.
  Poly truncated(int d) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// "1 + 2*x + x^2"
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct SeriesTerm {
  int q = 0;
  int t = 0;
  BigInt coeff;
  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// Power series in q truncated at q^qmax (inclusive) whose coefficients are
/// polynomials in t.
class QTSeries {
 public:
  explicit QTSeries(int qmax = 0);
  static QTSeries one(int qmax);
  static QTSeries from_poly_in_q(const Poly& p, int qmax);

  int qmax() const { return static_cast<int>(rows_.size()) - 1; }
  const Poly& coeff(int qexp) const;
  BigInt coeff(int qexp, int texp) const;

  /// Adds c * q^qexp * t^texp; terms above qmax are dropped.
  void add_term(int qexp, int texp, const BigInt& c);
  /// Adds q^qexp * p(t).
  void add_row(int qexp, const Poly& p);

  QTSeries at_t_one() const;
  /// Keeps only t-degrees <= d.
  QTSeries t_truncated(int d) const;
  QTSeries truncated(int qmax) const;
  /// Multiply by q^k (k >= 0), dropping overflow.
  QTSeries q_shifted(int k) const;

  /// Nonzero coefficients sorted by (q, t).
  std::vector<SeriesTerm> triples() const;
  static QTSeries from_triples(int qmax, std::span<const SeriesTerm> terms);

  // Binary operations truncate to the smaller qmax.
  QTSeries& operator+=(const QTSeries& o);
  QTSeries& operator-=(const QTSeries& o);
  friend QTSeries operator+(QTSeries a, const QTSeries& b) { return a += b; }
  friend QTSeries operator-(QTSeries a, const QTSeries& b) { return a -= b; }
  friend QTSeries operator*(const QTSeries& a, const QTSeries& b);
  friend bool operator==(const QTSeries& a, const QTSeries& b) { return a.rows_ == b.rows_; }

  std::string to_string() const;

 private:
  std::vector<Poly> rows_;
};

/// Gaussian binomial [n, k] in one variable; zero if n < 0, k < 0 or k > n.
Poly gauss_binomial(int n, int k);

/// Ordinary binomial coefficient with the same vanishing conventions.
BigInt binomial(int n, int k);

/// Factor (1 - q^qexp t^texp)^power; negative power means the reciprocal.
struct Factor {
  int qexp = 1;
  int texp = 0;
  int power = -1;
};

/// Exact expansion of a product of factors up to q^qmax.
QTSeries geometric_product(std::span<const Factor> factors, int qmax);

/// Multiplies `s` in place by one factor.
void apply_factor(QTSeries& s, const Factor& f);

/// Named closed-form sides. Integer parameters are looked up by name.
using SeriesParams = std::map<std::string, long long, std::less<>>;
QTSeries rhs_series(std::string_view id, const SeriesParams& params, int qmax);
std::vector<std::string> rhs_series_ids();

/// binom(2j, 2) for any integer j.
long long two_core_size_for(long long j);

/// Carlitz q-Catalan number via C_{n+1} = sum_l q^l C_l C_{n-l}.
Poly carlitz_catalan(int n);
std::vector<Poly> carlitz_catalan_upto(int n);

/// prod_{i>=1} [k_{i-1} + k_i - 1, k_i]_q, where a factor with k_i == 0 is 1
/// and any negative entry makes the product vanish.
Poly pq_product(std::span<const int> k);

/// Checks the convolution P(k) = sum_tau P(tau) P(k - tau) q^{sum tau_i (k_{i+1} - tau_{i+1})}
/// for a fixed tau_0.
bool vandermonde_convolution_check(std::span<const int> k, int tau0);

/// Generating function of distinct-part partitions with 2-core of height a and
/// largest part at most b: [b, floor((b-a)/2)]_{q^2} q^{binom(a+1, 2)}.
Poly f_ab(int a, int b);

}  // namespace hookdiff
