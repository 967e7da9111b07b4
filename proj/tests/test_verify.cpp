#include <doctest.h>

#include <sstream>

#include "flc/errors.hpp"
#include "flc/verify.hpp"

using namespace flc;

namespace {

constexpr Family kAll[] = {Family::Rank,   Family::Cube,     Family::MaxCube,
                           Family::Degree, Family::Indegree, Family::Outdegree};
constexpr Method kMethodsAll[] = {Method::Census, Method::Recurrence, Method::Closed, Method::Gf};

}  // namespace

TEST_CASE("method coverage") {
  CHECK(method_covers(Family::Rank, Method::Census, 18));
  CHECK_FALSE(method_covers(Family::Rank, Method::Census, 19));
  CHECK(method_covers(Family::Rank, Method::Gf, 40));
  CHECK_FALSE(method_covers(Family::Rank, Method::Gf, 41));
  CHECK_FALSE(method_covers(Family::Rank, Method::Closed, 1));
  CHECK(method_covers(Family::Rank, Method::Closed, 2));
  CHECK(method_covers(Family::Cube, Method::Closed, 0));
  CHECK_FALSE(method_covers(Family::MaxCube, Method::Closed, 2));
  CHECK_FALSE(method_covers(Family::Degree, Method::Closed, 2));
  CHECK(method_covers(Family::Indegree, Method::Closed, 0));
  CHECK_FALSE(method_covers(Family::Indegree, Method::Closed, 1));
  CHECK_FALSE(method_covers(Family::Indegree, Method::Closed, 2));
  CHECK(method_covers(Family::Outdegree, Method::Census, 5));
  for (auto m : {Method::Recurrence, Method::Closed, Method::Gf}) {
    CHECK_FALSE(method_covers(Family::Outdegree, m, 5));
  }
  CHECK_FALSE(method_covers(Family::Rank, Method::Census, -1));
  CHECK_THROWS_AS(family_polynomial(Family::Outdegree, Method::Gf, 3), InvalidArgument);
  CHECK_THROWS_AS(family_polynomial(Family::MaxCube, Method::Closed, 1), InvalidArgument);
}

TEST_CASE("every covering method gives the same polynomial") {
  const auto census = census_table(kCensusMaxN);
  REQUIRE(census.size() == 19);
  for (auto f : kAll) {
    for (long n = 0; n <= kFormulaMaxN; ++n) {
      std::vector<IntPoly> seen;
      for (auto m : kMethodsAll) {
        if (!method_covers(f, m, n)) continue;
        seen.push_back(m == Method::Census ? census_family(census[n], f) : family_polynomial(f, m, n));
      }
      for (const auto& p : seen) CHECK(p == seen.front());
    }
  }
  CHECK(family_polynomial(Family::Outdegree, Method::Census, 1) == IntPoly{1, 1});
  CHECK(fibonacci_like_cube(18).size() == 5168);
}

TEST_CASE("verification report") {
  const auto report = run_verification(12);
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::Fail) == 0);
  CHECK(report.count(CheckStatus::Erratum) == 4);
  CHECK(report.count(CheckStatus::Pass) > 50);
  std::ostringstream out;
  report.print(out);
  const auto text = out.str();
  CHECK(text.find("7+8x+2x^2") != std::string::npos);
  CHECK(text.find("6+6x+x^2") != std::string::npos);
  CHECK(text.find("summary: ") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  const auto trivial = run_verification(0);
  CHECK(trivial.ok());
  CHECK(trivial.count(CheckStatus::Erratum) == 0);

  // Printing is stable.
  std::ostringstream again;
  run_verification(12).print(again);
  CHECK(again.str() == text);
}

TEST_CASE("a failing record fails the report") {
  VerificationReport r;
  r.records.push_back({"rank", "0..1", "a", "b", CheckStatus::Erratum, "x"});
  CHECK(r.ok());
  r.records.push_back({"rank", "0..1", "a", "b", CheckStatus::Fail, "first mismatch"});
  CHECK_FALSE(r.ok());
  std::ostringstream out;
  r.print(out);
  CHECK(out.str().find("FAIL    rank | a vs b | n=0..1 | first mismatch") != std::string::npos);
}
