#include <doctest.h>

#include "flc/errors.hpp"
#include "flc/formulas.hpp"
#include "flc/gf.hpp"

using namespace flc;

TEST_CASE("expansion of a scalar series") {
  const RationalSeries fibs{.numerator = {{1}}, .denominator = {{1}, {-1}, {-1}}, .correction = {}};
  const auto c = expand(fibs, 8);
  const std::vector<long long> want{1, 1, 2, 3, 5, 8, 13, 21};
  REQUIRE(c.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(c[i] == IntPoly{want[i]});
  CHECK(expand(fibs, 0).empty());

  const RationalSeries bad{.numerator = {{1}}, .denominator = {{2}, {-1}}, .correction = {}};
  CHECK_THROWS_AS(expand(bad, 3), InvalidArgument);
  const RationalSeries empty_den{.numerator = {{1}}, .denominator = {}, .correction = {}};
  CHECK_THROWS_AS(expand(empty_den, 3), InvalidArgument);
}

TEST_CASE("rank series") {
  const auto a = expand(gf_A(), 3);
  CHECK(a[0] == IntPoly{1});
  CHECK(a[2] == IntPoly{1, 1, 1, 2, 1});
  CHECK(expand(gf_B(), 1)[0] == IntPoly{1, 1});
  const auto r = expand(gf_R(), 10);
  CHECK(r[0] == IntPoly{1});
  CHECK(r[3] == IntPoly{1, 1, 1, 1});
  CHECK(r[6] == printed_table(Family::Rank)[6]);
  CHECK(r[9] == IntPoly{1, 4, 7, 10, 12, 12, 10, 7, 4, 1});

  // Interleaving for m = 0..20.
  const auto rr = expand(gf_R(), 42);
  const auto aa = expand(gf_A(), 21);
  const auto bb = expand(gf_B(), 21);
  for (std::size_t m = 0; m <= 20; ++m) {
    CHECK(rr[2 * m] == aa[m]);
    CHECK(rr[2 * m + 1] == bb[m]);
  }
  for (std::size_t n = 3; n < rr.size(); ++n) CHECK(rr[n].evaluate(1) == 2 * fib(n));
}

TEST_CASE("cube, maxcube, degree and indegree series") {
  const auto q = expand(gf_Q(), 8);
  CHECK(q[1] == IntPoly{2, 1});
  CHECK(q[3] == IntPoly{4, 3});
  CHECK(q[4] == IntPoly{6, 6, 1});
  CHECK(q[7] == IntPoly{26, 48, 28, 5});
  const auto h = expand(gf_H(), 8);
  CHECK(h[1] == IntPoly{0, 1});
  CHECK(h[4] == IntPoly{0, 2, 1});
  CHECK(h[7] == IntPoly{0, 0, 2, 5});
  const auto d = expand(gf_D(), 8);
  CHECK(d[1] == IntPoly{0, 2});
  CHECK(d[2] == IntPoly{0, 2, 1});
  CHECK(d[5] == IntPoly{0, 0, 5, 4, 1});
  const auto dm = expand(gf_Dm(), 8);
  CHECK(dm[2] == IntPoly{1, 2});
  CHECK(dm[4] == IntPoly{1, 4, 1});
  CHECK(dm[7] == IntPoly{1, 7, 13, 5});
}

TEST_CASE("series agree with the recurrences through n = 40") {
  const auto r = expand(gf_R(), 41);
  const auto q = expand(gf_Q(), 41);
  const auto h = expand(gf_H(), 41);
  const auto d = expand(gf_D(), 41);
  const auto dm = expand(gf_Dm(), 41);
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(r[n] == rank_poly_rec(n));
    CHECK(q[n] == cube_poly_rec(n));
    CHECK(h[n] == maxcube_poly_rec(n));
    CHECK(d[n] == degree_poly_rec(n));
    CHECK(dm[n] == indegree_poly_rec(n));
  }
}

TEST_CASE("expansions are exact") {
  for (const auto& gf : {gf_A(), gf_B(), gf_R(), gf_Q(), gf_H(), gf_D(), gf_Dm()}) {
    for (std::size_t count : {1, 2, 5, 41, 64}) CHECK(reproduces_numerator(gf, count));
    CHECK(gf.denominator.front() == IntPoly{1});
  }
  // A tampered expansion is caught.
  auto e = expand(gf_Q(), 10);
  e[6] += IntPoly{0, 1};
  const auto back = multiply_back(gf_Q(), e);
  CHECK(back[6] != IntPoly{});
}

TEST_CASE("bivariate series two ways") {
  const auto t = f_xy_expand(64);
  REQUIRE(t.size() == 64);
  CHECK(t[0][0] == 1);
  CHECK(t[1][1] == 1);
  CHECK(t[3][2] == f_xy_binomial(3, 2));
  for (long n = 0; n < 64; ++n) {
    for (long k = 0; k <= n; ++k) {
      const BigInt series = static_cast<std::size_t>(k) < t[n].size() ? t[n][k] : BigInt{0};
      CHECK(series == f_xy_binomial(n, k));
    }
    CHECK(t[n].size() <= static_cast<std::size_t>(n + 1));
  }
  CHECK_THROWS_AS(f_xy_expand(65), CapacityError);
}
