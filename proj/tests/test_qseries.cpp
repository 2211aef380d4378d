#include "doctest.h"
#include "oracles.hpp"

#include "hookdiff/qseries.hpp"
#include "hookdiff/walks.hpp"

using namespace hookdiff;

namespace {

Poly poly(std::vector<long long> c) {
  std::vector<BigInt> b;
  for (auto v : c) b.emplace_back(v);
  return Poly(std::move(b));
}

Poly poly(const std::vector<oracle::i64>& c, int) {
  std::vector<BigInt> b;
  for (auto v : c) b.emplace_back(v);
  return Poly(std::move(b));
}

void require_matches(const QTSeries& s, const oracle::Series& ref) {
  for (int q = 0; q <= s.qmax(); ++q)
    for (int t = 0; t <= s.qmax(); ++t) REQUIRE(s.coeff(q, t) == ref.at(q, t));
}

}  // namespace

TEST_CASE("Poly basics") {
  CHECK(Poly().is_zero());
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK((poly({1, 1}) * poly({1, -1})) == poly({1, 0, -1}));
  CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
  CHECK(poly({1, 2, 1}).to_string("q") == "1 + 2*q + q^2");
  CHECK(poly({0, 0, 3}).reversed(3) == poly({0, 3}));
  CHECK(poly({1, 1}).substitute_power(2) == poly({1, 0, 1}));
  CHECK(poly({1, 1}).shifted(2) == poly({0, 0, 1, 1}));
  CHECK(poly({1, 2, 3}).truncated(1) == poly({1, 2}));
  CHECK(poly({1, 2, 3}).at_one() == 6);
}

TEST_CASE("gauss_binomial") {
  CHECK(gauss_binomial(2, 1) == poly({1, 1}));
  CHECK(gauss_binomial(3, 1) == poly({1, 1, 1}));
  CHECK(gauss_binomial(5, 0) == poly({1}));
  CHECK(gauss_binomial(5, 5) == poly({1}));
  CHECK(gauss_binomial(-1, 0).is_zero());
  CHECK(gauss_binomial(3, -1).is_zero());
  CHECK(gauss_binomial(3, 4).is_zero());
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const Poly g = gauss_binomial(n, k);
      REQUIRE(g == poly(oracle::gauss_by_words(n, k), 0));
      REQUIRE(g.at_one() == binomial(n, k));
      REQUIRE(g.degree() == k * (n - k));
      auto c = g.coeffs();
      REQUIRE(std::equal(c.begin(), c.end(), c.rbegin()));
      if (n >= 1) {
        REQUIRE(g == gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k).shifted(k));
        REQUIRE(g == gauss_binomial(n - 1, k) + gauss_binomial(n - 1, k - 1).shifted(n - k));
      }
    }
}

TEST_CASE("geometric_product") {
  std::vector<Factor> euler;
  for (int i = 1; i <= 10; ++i) euler.push_back({i, 0, -1});
  const QTSeries p = geometric_product(euler, 10);
  const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(p.coeff(n, 0) == expected[n]);
  CHECK(geometric_product({}, 5) == QTSeries::one(5));

  std::vector<Factor> bf;
  for (int i = 1; i <= 4; ++i) {
    bf.push_back({2 * i - 1, 0, -1});
    bf.push_back({2 * i, 1, -1});
  }
  CHECK(geometric_product(bf, 4).coeff(4) == poly({2, 2, 1}));
  CHECK_THROWS_AS(geometric_product(std::vector<Factor>{{0, 1, -1}}, 4), DomainError);

  // A factor followed by its inverse is the identity.
  QTSeries s = rhs_series("bf-main", {}, 14);
  const QTSeries before = s;
  apply_factor(s, {3, 1, -2});
  apply_factor(s, {3, 1, 2});
  CHECK(s == before);
}

TEST_CASE("series arithmetic") {
  const QTSeries a = rhs_series("bf-main", {}, 12);
  const QTSeries b = rhs_series("cj1-A", {}, 12);
  const QTSeries c = rhs_series("genhook20", {{"j", 0}}, 10);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(((a * b) * c).qmax() == 10);
  CHECK((a + b) - b == a);
  CHECK(a.at_t_one().coeff(4) == poly({5}));
  CHECK(a.t_truncated(1).coeff(4) == poly({2, 2}));
  CHECK(a.q_shifted(3).coeff(3) == poly({1}));

  const auto triples = a.triples();
  CHECK(QTSeries::from_triples(12, triples) == a);
  CHECK(std::is_sorted(triples.begin(), triples.end(),
                       [](const SeriesTerm& x, const SeriesTerm& y) { return std::pair(x.q, x.t) < std::pair(y.q, y.t); }));
  CHECK(QTSeries::one(2).to_string() == "(1) + O(q^3)");
}

TEST_CASE("rhs_series against independent expansions") {
  const int N = 16;
  SUBCASE("bf-main") {
    CHECK(rhs_series("bf-main", {}, 4).coeff(4) == poly({2, 2, 1}));
    auto ref = oracle::Series::one(N);
    for (int i = 1; 2 * i - 1 <= N; ++i) ref.divide_by(2 * i - 1, 0);
    for (int i = 1; 2 * i <= N; ++i) ref.divide_by(2 * i, 1);
    require_matches(rhs_series("bf-main", {}, N), ref);
  }
  SUBCASE("two-core-count") {
    const QTSeries s = rhs_series("two-core-count", {{"j", 1}}, 6);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == poly({1}));
    CHECK(s.coeff(3) == poly({2}));
    for (int j = -2; j <= 2; ++j) {
      auto ref = oracle::Series::one(N);
      for (int i = 1; 2 * i <= N; ++i) {
        ref.divide_by(2 * i, 0);
        ref.divide_by(2 * i, 0);
      }
      require_matches(rhs_series("two-core-count", {{"j", j}}, N), ref.shifted(j * (2 * j - 1)));
    }
  }
  SUBCASE("cj1-A rows") {
    const QTSeries s = rhs_series("cj1-A", {}, 10);
    CHECK(s.coeff(1) == poly({1, 1}));
    CHECK(s.coeff(2) == poly({2, 2, 1}));
    for (int n = 0; n <= 10; ++n)
      for (int m = 0; m <= n; ++m) REQUIRE(s.coeff(n, m) == oracle::a_row_count(n, m));
  }
  SUBCASE("bfn") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 0}, {1, 3}}) {
      const int m = a + b;
      auto ref = oracle::Series::one(N);
      for (int i = 1; i <= N; ++i)
        if (i % m) ref.divide_by(i, 0);
      for (int i = 1; m * i <= N; ++i) ref.divide_by(m * i, 1);
      require_matches(rhs_series("bfn", {{"alpha", a}, {"beta", b}}, N), ref);
    }
    CHECK(rhs_series("bfn", {{"alpha", 1}, {"beta", 1}}, N) == rhs_series("bf-main", {}, N));
  }
  SUBCASE("cores") {
    for (int m = 2; m <= 4; ++m) {
      auto ref = oracle::Series::one(N);
      for (int i = 1; m * i <= N; ++i)
        for (int k = 0; k < m - 1; ++k) ref.divide_by(m * i, 0);
      require_matches(rhs_series("prestrict", {{"m", m}, {"core_size", 2}}, N), ref.shifted(2));
      for (int i = 1; m * i <= N; ++i) ref.divide_by(m * i, 1);
      require_matches(rhs_series("mcore", {{"m", m}, {"core_size", 3}}, N), ref.shifted(3));
    }
  }
  CHECK_THROWS_AS(rhs_series("nope", {}, 4), DomainError);
  CHECK_THROWS_AS(rhs_series("bfn", {{"alpha", 1}}, 4), DomainError);
  CHECK(rhs_series("bf-main", {}, 0) == QTSeries::one(0));
}

TEST_CASE("Carlitz q-Catalan") {
  CHECK(carlitz_catalan(0) == poly({1}));
  CHECK(carlitz_catalan(2) == poly({1, 1}));
  CHECK(carlitz_catalan(3) == poly({1, 2, 1, 1}));
  const auto cat = oracle::catalan_numbers(10);
  const auto upto = carlitz_catalan_upto(10);
  for (int n = 0; n <= 10; ++n) {
    REQUIRE(upto[static_cast<std::size_t>(n)] == carlitz_catalan(n));
    REQUIRE(carlitz_catalan(n).at_one() == cat[static_cast<std::size_t>(n)]);
    REQUIRE(carlitz_catalan(n) == poly(oracle::carlitz_by_dyck(n), 0));
  }
}

TEST_CASE("q,t-Catalan statistic sum") {
  CHECK(qt_catalan(0) == QTSeries::one(0));
  const QTSeries two = qt_catalan(2);
  CHECK(two.qmax() == 1);
  CHECK(two.coeff(0) == poly({1}));
  CHECK(two.coeff(1) == poly({1}));
  for (int n = 0; n <= 8; ++n) {
    const int top = n * (n - 1) / 2;
    REQUIRE(qt_catalan(n).at_t_one() == QTSeries::from_poly_in_q(carlitz_catalan(n).reversed(top), top));
  }
}

TEST_CASE("pq_product and the q-Vandermonde convolution") {
  CHECK(pq_product(std::vector<int>{1}) == poly({1}));
  CHECK(pq_product(std::vector<int>{1, 1}) == poly({1}));
  CHECK(pq_product(std::vector<int>{2, 1}) == poly({1, 1}));
  CHECK(pq_product(std::vector<int>{2, -1}).is_zero());
  CHECK(vandermonde_convolution_check(std::vector<int>{1, 1}, 1));
  for (int t0 = 0; t0 <= 2; ++t0) CHECK(vandermonde_convolution_check(std::vector<int>{2, 1, 1}, t0));

  // Every k with sum at most 5 (k_0 >= 1), every tau_0.
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& k, int budget) {
    if (!k.empty() && k.front() >= 1)
      for (int t0 = 0; t0 <= k.front(); ++t0) REQUIRE(vandermonde_convolution_check(k, t0));
    if (k.size() >= 5) return;
    for (int v = (k.empty() ? 1 : 0); v <= budget; ++v) {
      k.push_back(v);
      rec(k, budget - v);
      k.pop_back();
    }
  };
  std::vector<int> k;
  rec(k, 5);
}

TEST_CASE("f_ab") {
  CHECK(f_ab(0, 0) == poly({1}));
  CHECK(f_ab(1, 2) == poly({0, 1}));
  CHECK(f_ab(2, 3) == poly({0, 0, 0, 1}));
  CHECK(f_ab(3, 1).is_zero());
  for (int a = 1; a <= 8; ++a) CHECK(f_ab(a, 0).is_zero());

  // Removing the largest part b moves the core height to a - 1 when a = b (mod 2),
  // to a + 1 otherwise. Height -1 is the same (empty) core as height 0, so the
  // a = 0, b even case takes the first branch with f_{-1, b-1} = f_{0, b-1}.
  auto f_height = [](int a, int b) { return f_ab(a < 0 ? 0 : a, b); };
  for (int a = 0; a <= 8; ++a)
    for (int b = 1; b <= 12; ++b) {
      const Poly step = ((a - b) % 2 == 0) ? f_height(a - 1, b - 1) : f_ab(a + 1, b - 1);
      REQUIRE(f_ab(a, b) == f_ab(a, b - 1) + step.shifted(b));
    }
  // Restricting the first branch to a > 0 breaks at a = 0: f_{0,2} = 1 + q^2, not 1 + q^3.
  CHECK(f_ab(0, 2) == poly({1, 0, 1}));
  CHECK_FALSE(f_ab(0, 2) == f_ab(0, 1) + f_ab(1, 1).shifted(2));

  // Direct enumeration: subsets of {1..b} read as distinct-part partitions.
  for (int b = 0; b <= 10; ++b) {
    std::map<int, std::vector<oracle::i64>> by_height;
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
      std::vector<int> parts;
      for (int v = b; v >= 1; --v)
        if ((mask >> (v - 1)) & 1) parts.push_back(v);
      const Partition p(parts);
      const int a = oracle::core_by_rim_hooks(p, 2).length();
      auto& c = by_height[a];
      if (c.size() <= static_cast<std::size_t>(p.size())) c.resize(static_cast<std::size_t>(p.size()) + 1, 0);
      ++c[static_cast<std::size_t>(p.size())];
    }
    for (int a = 0; a <= 6; ++a) REQUIRE(f_ab(a, b) == poly(by_height[a], 0));
  }
}
