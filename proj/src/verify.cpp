#include "flc/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "flc/errors.hpp"
#include "flc/gf.hpp"
#include "flc/lattice.hpp"
#include "flc/poset.hpp"

namespace flc {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Census: return "census";
    case Method::Recurrence: return "recurrence";
    case Method::Closed: return "closed";
    case Method::Gf: return "gf";
  }
  return "?";
}

bool method_covers(Family family, Method method, long n) {
  if (n < 0) return false;
  if (method == Method::Census) return n <= kCensusMaxN;
  if (family == Family::Outdegree || n > kFormulaMaxN) return false;
  if (method != Method::Closed) return true;
  switch (family) {
    case Family::Rank: return n >= kRankClosedFrom;
    case Family::Cube: return true;
    case Family::MaxCube: return n >= kMaxCubeClosedFrom;
    case Family::Degree: return n >= kDegreeClosedFrom;
    case Family::Indegree: return dm_closed_valid(n);
    case Family::Outdegree: return false;
  }
  return false;
}

LatticeDiagram fibonacci_like_cube(std::size_t n) { return filter_lattice(make_sfence(n)); }

IntPoly census_family(const PolynomialCensus& c, Family f) {
  switch (f) {
    case Family::Rank: return c.rank;
    case Family::Cube: return c.cube;
    case Family::MaxCube: return c.maxcube;
    case Family::Degree: return c.degree;
    case Family::Indegree: return c.indegree;
    case Family::Outdegree: return c.outdegree;
  }
  return {};
}

namespace {

RationalSeries series_of(Family f) {
  switch (f) {
    case Family::Rank: return gf_R();
    case Family::Cube: return gf_Q();
    case Family::MaxCube: return gf_H();
    case Family::Degree: return gf_D();
    case Family::Indegree: return gf_Dm();
    case Family::Outdegree: break;
  }
  throw InvalidArgument("no generating function for the outdegree family");
}

IntPoly recurrence_of(Family f, std::size_t n) {
  switch (f) {
    case Family::Rank: return rank_poly_rec(n);
    case Family::Cube: return cube_poly_rec(n);
    case Family::MaxCube: return maxcube_poly_rec(n);
    case Family::Degree: return degree_poly_rec(n);
    case Family::Indegree: return indegree_poly_rec(n);
    case Family::Outdegree: break;
  }
  throw InvalidArgument("no recurrence for the outdegree family");
}

IntPoly closed_of(Family f, long n) {
  switch (f) {
    case Family::Rank: return rank_poly_closed(n);
    case Family::Cube: return cube_poly_closed(n);
    case Family::MaxCube: return maxcube_poly_closed(n);
    case Family::Degree: return degree_poly_closed(n);
    case Family::Indegree: return indegree_poly_closed(n);
    case Family::Outdegree: break;
  }
  throw InvalidArgument("no closed form for the outdegree family");
}

}  // namespace

IntPoly family_polynomial(Family family, Method method, long n) {
  if (!method_covers(family, method, n)) {
    throw InvalidArgument(std::string(method_name(method)) + " does not cover family " +
                          std::string(family_name(family)) + " at n = " + std::to_string(n));
  }
  switch (method) {
    case Method::Census: return census_family(take_census(fibonacci_like_cube(static_cast<std::size_t>(n))), family);
    case Method::Recurrence: return recurrence_of(family, static_cast<std::size_t>(n));
    case Method::Closed: return closed_of(family, n);
    case Method::Gf: return expand(series_of(family), static_cast<std::size_t>(n) + 1).back();
  }
  throw InvalidArgument("unknown method");
}

std::vector<PolynomialCensus> census_table(std::size_t max_n) {
  std::vector<std::future<PolynomialCensus>> jobs;
  for (std::size_t n = 0; n <= max_n; ++n) {
    jobs.push_back(std::async(std::launch::async, [n] { return take_census(fibonacci_like_cube(n)); }));
  }
  std::vector<PolynomialCensus> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

void VerificationReport::print(std::ostream& out) const {
  for (const auto& r : records) {
    switch (r.status) {
      case CheckStatus::Pass: out << "PASS    "; break;
      case CheckStatus::Fail: out << "FAIL    "; break;
      case CheckStatus::Erratum: out << "ERRATUM "; break;
    }
    out << r.family << " | " << r.method_a << " vs " << r.method_b << " | n=" << r.n_range;
    if (!r.detail.empty()) out << " | " << r.detail;
    out << '\n';
  }
  out << "summary: " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
      << count(CheckStatus::Erratum) << " errata\n";
}

namespace {

std::string range(long lo, long hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}

  // Compares two polynomial sources over [lo, hi]; skipped when empty.
  void compare(const std::string& family, const std::string& a, const std::string& b, long lo, long hi,
               const std::function<IntPoly(long)>& left, const std::function<IntPoly(long)>& right) {
    if (lo > hi) return;
    std::string detail;
    for (long n = lo; n <= hi && detail.empty(); ++n) {
      const IntPoly x = left(n);
      const IntPoly y = right(n);
      if (x != y) detail = "first mismatch at n=" + std::to_string(n) + ": " + x.to_string() + " vs " + y.to_string();
    }
    add(family, range(lo, hi), a, b, detail);
  }

  // Checks a predicate over [lo, hi].
  void holds(const std::string& family, const std::string& a, const std::string& b, long lo, long hi,
             const std::function<std::optional<std::string>(long)>& failure) {
    if (lo > hi) return;
    std::string detail;
    for (long n = lo; n <= hi && detail.empty(); ++n) {
      if (auto f = failure(n)) detail = "n=" + std::to_string(n) + ": " + *f;
    }
    add(family, range(lo, hi), a, b, detail);
  }

  void add(const std::string& family, const std::string& n_range, const std::string& a, const std::string& b,
           const std::string& failure_detail) {
    report_.records.push_back(
        {family, n_range, a, b, failure_detail.empty() ? CheckStatus::Pass : CheckStatus::Fail, failure_detail});
  }

  void erratum(const std::string& family, const std::string& n_range, const std::string& a, const std::string& b,
               bool confirmed, const std::string& detail) {
    report_.records.push_back({family, n_range, a, b, confirmed ? CheckStatus::Erratum : CheckStatus::Fail,
                               confirmed ? detail : "expected a disagreement, found none: " + detail});
  }

 private:
  VerificationReport& report_;
};

constexpr Family kFormulaFamilies[] = {Family::Rank, Family::Cube, Family::MaxCube, Family::Degree, Family::Indegree};

std::string fam(Family f) { return std::string(family_name(f)); }

// Start of the contiguous tail of n covered by the closed form.
long first_closed(Family f) {
  long n = kFormulaMaxN;
  while (n > 0 && method_covers(f, Method::Closed, n - 1)) --n;
  return n;
}

void check_golden(Checker& c, const std::vector<PolynomialCensus>& census) {
  const long top = static_cast<long>(census.size()) - 1;
  for (auto f : kFormulaFamilies) {
    const auto& printed = printed_table(f);
    c.compare(fam(f), "census", "reference list", 0, std::min(top, static_cast<long>(printed.size()) - 1),
              [&](long n) { return census_family(census[n], f); }, [&](long n) { return printed[n]; });
  }
}

void check_vertex_counts(Checker& c, const std::vector<PolynomialCensus>& census) {
  const long top = static_cast<long>(census.size()) - 1;
  c.holds("vertices", "census |V|", "1, 2, 3", 0, std::min(top, 2L), [&](long n) -> std::optional<std::string> {
    if (census[n].vertices == static_cast<std::size_t>(n + 1)) return std::nullopt;
    return std::to_string(census[n].vertices);
  });
  c.holds("vertices", "census |V|", "2F(n)", 3, top, [&](long n) -> std::optional<std::string> {
    if (BigInt(census[n].vertices) == 2 * fib(static_cast<std::size_t>(n))) return std::nullopt;
    return std::to_string(census[n].vertices);
  });
}

void check_methods(Checker& c, const std::vector<PolynomialCensus>& census, long nf) {
  const long nc = static_cast<long>(census.size()) - 1;
  for (auto f : kFormulaFamilies) {
    const std::string name = fam(f);
    const auto cen = [&](long n) { return census_family(census[n], f); };
    const auto rec = [&](long n) { return recurrence_of(f, static_cast<std::size_t>(n)); };
    const auto clo = [&](long n) { return closed_of(f, n); };
    const auto series = expand(series_of(f), static_cast<std::size_t>(nf) + 1);
    const auto gf = [&](long n) { return series[n]; };

    c.compare(name, "census", "recurrence", 0, nc, cen, rec);
    c.compare(name, "census", "gf", 0, nc, cen, gf);
    c.compare(name, "recurrence", "gf", 0, nf, rec, gf);
    // Closed forms over their domain; the indegree one skips n = 1, 2.
    const long lo = first_closed(f);
    if (f == Family::Indegree) {
      c.compare(name, "census", "closed", 0, std::min(nc, 0L), cen, clo);
      c.compare(name, "recurrence", "closed", 0, std::min(nf, 0L), rec, clo);
      c.compare(name, "gf", "closed", 0, std::min(nf, 0L), gf, clo);
    }
    c.compare(name, "census", "closed", lo, nc, cen, clo);
    c.compare(name, "recurrence", "closed", lo, nf, rec, clo);
    c.compare(name, "gf", "closed", lo, nf, gf, clo);
  }
  c.compare("rank", "census", "g-polynomials", 0, nc, [&](long n) { return census[n].rank; }, rank_poly_from_g);
  c.compare("rank", "gf", "g-polynomials", 0, nf, [&](long n) { return family_polynomial(Family::Rank, Method::Gf, n); },
            rank_poly_from_g);

  // Even and odd rank series interleave into the rank series.
  const auto r = expand(gf_R(), static_cast<std::size_t>(nf) + 1);
  const auto a = expand(gf_A(), static_cast<std::size_t>(nf / 2) + 1);
  const auto b = expand(gf_B(), static_cast<std::size_t>(nf / 2) + 1);
  c.compare("rank", "gf R(2m)", "gf A(m)", 0, nf / 2, [&](long m) { return r[2 * m]; }, [&](long m) { return a[m]; });
  c.compare("rank", "gf R(2m+1)", "gf B(m)", 0, nf >= 1 ? (nf - 1) / 2 : -1, [&](long m) { return r[2 * m + 1]; },
            [&](long m) { return b[m]; });

  // Outdegree has no formulas; check it against the order-dual indegree.
  c.holds("outdegree", "census", "indegree of order dual", 0, nc, [&](long n) -> std::optional<std::string> {
    const auto dual_in = indegree_polynomial(fibonacci_like_cube(static_cast<std::size_t>(n)).order_dual());
    if (dual_in == census[n].outdegree) return std::nullopt;
    return census[n].outdegree.to_string() + " vs " + dual_in.to_string();
  });
}

void check_coefficient_recurrences(Checker& c, const std::vector<PolynomialCensus>& census) {
  const long nc = static_cast<long>(census.size()) - 1;
  const CoeffRecurrence all[] = {CoeffRecurrence::Cube,     CoeffRecurrence::MaxCube,  CoeffRecurrence::Degree,
                                 CoeffRecurrence::Indegree, CoeffRecurrence::RankEven, CoeffRecurrence::RankOdd};
  for (auto r : all) {
    // Index -> census row for this recurrence.
    std::function<std::optional<IntPoly>(long)> row = [&, r](long n) -> std::optional<IntPoly> {
      long idx = n;
      if (r == CoeffRecurrence::RankEven) idx = 2 * n;
      if (r == CoeffRecurrence::RankOdd) idx = 2 * n + 1;
      if (idx > nc) return std::nullopt;
      const auto& cen = census[idx];
      switch (r) {
        case CoeffRecurrence::Cube: return cen.cube;
        case CoeffRecurrence::MaxCube: return cen.maxcube;
        case CoeffRecurrence::Degree: return cen.degree;
        case CoeffRecurrence::Indegree: return cen.indegree;
        case CoeffRecurrence::RankEven:
        case CoeffRecurrence::RankOdd: return cen.rank;
      }
      return std::nullopt;
    };
    const long from = validated_from(r);
    long top = from - 1;
    while (row(top + 1)) ++top;
    if (top < from) continue;
    // Iterate from census-seeded base rows, never re-reading the census.
    std::vector<IntPoly> rows;
    for (long i = 0; i < from; ++i) rows.push_back(*row(i));
    for (long m = from; m <= top; ++m) {
      std::vector<IntPoly> prev;
      for (long back = 1; back <= 3 && m - back >= 0; ++back) prev.push_back(rows[m - back]);
      rows.push_back(apply_recurrence(r, prev));
    }
    c.compare(std::string(recurrence_name(r)), "census", "coefficient recurrence", from, top,
              [&](long n) { return *row(n); }, [&](long n) { return rows[n]; });
    // The public entry point, seeded from the printed rows, agrees too.
    c.holds(std::string(recurrence_name(r)), "census", "coeff_recurrence()", from, top,
            [&](long n) -> std::optional<std::string> {
              const IntPoly expected = *row(n);
              for (long k = 0; k <= 2 * n + 2; ++k) {
                if (coeff_recurrence(r, n, k) != expected.coeff(k)) return "k=" + std::to_string(k);
              }
              return std::nullopt;
            });
  }
}

void check_errata(Checker& c, const std::vector<PolynomialCensus>& census) {
  const long nc = static_cast<long>(census.size()) - 1;
  auto probe = [&](CoeffRecurrence r, Family f, std::vector<long> indices, long min_k) {
    indices.erase(std::remove_if(indices.begin(), indices.end(), [&](long n) { return n > nc; }), indices.end());
    if (indices.empty()) return;
    bool all_fail = true;
    std::string detail = "stated from n>=" + std::to_string(stated_from(r)) + ";";
    for (long n : indices) {
      std::vector<IntPoly> prev;
      for (long back = 1; back <= 3 && n - back >= 0; ++back) prev.push_back(census_family(census[n - back], f));
      const IntPoly got = apply_recurrence(r, prev);
      const IntPoly want = census_family(census[n], f);
      bool differs = false;
      for (long k = min_k; k <= std::max(got.degree(), want.degree()); ++k) differs |= got.coeff(k) != want.coeff(k);
      all_fail &= differs;
      detail += " n=" + std::to_string(n) + ": recurrence gives " + got.to_string() + ", census " + want.to_string() + ";";
    }
    std::string span = std::to_string(indices.front());
    if (indices.size() > 1) span += "," + std::to_string(indices.back());
    c.erratum(std::string(recurrence_name(r)), span, "recurrence", "census", all_fail, detail);
  };
  probe(CoeffRecurrence::Cube, Family::Cube, {4}, 0);
  probe(CoeffRecurrence::Indegree, Family::Indegree, {3, 4}, 1);
  probe(CoeffRecurrence::Degree, Family::Degree, {4, 5}, 0);

  // The indegree closed form is stated for every n >= 0.
  std::vector<long> bad;
  for (long n : {1L, 2L}) {
    if (n <= nc) bad.push_back(n);
  }
  if (!bad.empty()) {
    bool all_fail = true;
    std::string detail = "stated for n>=0;";
    for (long n : bad) {
      IntPoly formula;
      {
        std::vector<BigInt> v;
        for (long k = 0; k <= n; ++k) v.push_back(binom(n - k - 2, k - 1) + binom(n - k, k));
        formula = IntPoly(std::move(v));
      }
      all_fail &= formula != census[n].indegree;
      detail += " n=" + std::to_string(n) + ": formula gives " + formula.to_string() + ", census " +
                census[n].indegree.to_string() + ";";
    }
    c.erratum("indegree closed form C(n-k-2,k-1)+C(n-k,k)", bad.size() > 1 ? "1,2" : "1", "closed", "census",
              all_fail, detail);
  }
}

void check_identities(Checker& c, const std::vector<PolynomialCensus>& census, long nf) {
  const long nc = static_cast<long>(census.size()) - 1;
  const IntPoly one_plus_x{1, 1};
  c.compare("indegree/cube", "census D-(1+x)", "census Q(x)", 0, nc,
            [&](long n) { return census[n].indegree.compose(one_plus_x); }, [&](long n) { return census[n].cube; });
  c.compare("indegree/cube", "recurrence D-(1+x)", "recurrence Q(x)", 0, nf,
            [&](long n) { return indegree_poly_rec(n).compose(one_plus_x); },
            [&](long n) { return cube_poly_rec(n); });
  c.holds("maxcube", "H(1)", "padovan p(n-2)", 3, nf, [&](long n) -> std::optional<std::string> {
    const BigInt h = maxcube_poly_rec(n).evaluate(1);
    if (h == padovan133(static_cast<std::size_t>(n - 2))) return std::nullopt;
    return h.str();
  });
  c.holds("maxcube", "census H(1)", "padovan p(n-2)", 3, nc, [&](long n) -> std::optional<std::string> {
    const BigInt h = census[n].maxcube.evaluate(1);
    if (h == padovan133(static_cast<std::size_t>(n - 2))) return std::nullopt;
    return h.str();
  });
  auto row_sum = [&](auto coeff, long n) {
    BigInt s = 0;
    for (long k = 0; k <= 2 * n; ++k) s += coeff(n, k);
    return s;
  };
  c.holds("sums", "sum r, sum d, sum d-", "2F(n)", 3, nf, [&](long n) -> std::optional<std::string> {
    const BigInt want = 2 * fib(static_cast<std::size_t>(n));
    const BigInt r = row_sum(r_coeff, n);
    const BigInt d = row_sum(d_coeff, n);
    const BigInt dm = row_sum(dm_coeff, n);
    const BigInt q0 = q_coeff(n, 0);
    if (r == want && d == want && dm == want && q0 == want) return std::nullopt;
    return r.str() + "," + d.str() + "," + dm.str() + "," + q0.str() + " vs " + want.str();
  });
  c.holds("sums", "gf R(1)", "2F(n)", 3, nf, [&](long n) -> std::optional<std::string> {
    const BigInt v = family_polynomial(Family::Rank, Method::Gf, n).evaluate(1);
    if (v == 2 * fib(static_cast<std::size_t>(n))) return std::nullopt;
    return v.str();
  });
  c.holds("fibonacci", "sum C(n-k,k)", "F(n+1)", 0, nf, [&](long n) -> std::optional<std::string> {
    BigInt s = 0;
    for (long k = 0; 2 * k <= n; ++k) s += binom(n - k, k);
    if (s == fib(static_cast<std::size_t>(n + 1))) return std::nullopt;
    return s.str();
  });
  c.holds("trinomial", "binomial sum", "row of (1+x+x^2)^n", 0, nf, [&](long n) -> std::optional<std::string> {
    for (long k = 0; k <= 2 * n; ++k) {
      BigInt s = 0;
      for (long i = 0; 2 * i <= k; ++i) s += binom(n, k - i) * binom(k - i, i);
      if (s != trinomial(n, k)) return "k=" + std::to_string(k);
    }
    return std::nullopt;
  });
}

void check_gf_exactness(Checker& c, long nf) {
  const std::pair<const char*, RationalSeries> all[] = {
      {"gf A", gf_A()}, {"gf B", gf_B()}, {"gf R", gf_R()},   {"gf Q", gf_Q()},
      {"gf H", gf_H()}, {"gf D", gf_D()}, {"gf D-", gf_Dm()},
  };
  for (const auto& [name, gf] : all) {
    const bool exact = reproduces_numerator(gf, static_cast<std::size_t>(nf) + 1);
    c.add(name, range(0, nf), "expansion x denominator", "numerator", exact ? "" : "product differs");
  }
  const auto table = f_xy_expand(static_cast<std::size_t>(nf) + 1);
  c.holds("f(x,y)", "series", "double binomial sum", 0, nf, [&](long n) -> std::optional<std::string> {
    for (long k = 0; k <= n; ++k) {
      const BigInt s = static_cast<std::size_t>(k) < table[n].size() ? table[n][k] : BigInt{0};
      if (s != f_xy_binomial(n, k)) return "k=" + std::to_string(k);
    }
    if (static_cast<long>(table[n].size()) > n + 1) return std::string("degree exceeds n");
    return std::nullopt;
  });
}

// Rank generating function of an expansion when K touches an end of L.
std::optional<IntPoly> expected_expansion_rank(const LatticeDiagram& l, Interval k) {
  const IntPoly rl = rank_polynomial(l);
  const IntPoly rk = rank_polynomial(interval_diagram(l, k));
  if (k.top == l.maximum()) return rl + rk.shifted(l.rank(k.bottom) + 1);
  if (k.bottom == l.minimum()) return rk + rl.shifted(1);
  return std::nullopt;
}

// Cube split and rank case split of an expansion against its pieces.
std::optional<std::string> expansion_identities(const LatticeDiagram& l, Interval k, const LatticeDiagram& e) {
  const IntPoly ql = cube_polynomial(l);
  const IntPoly qk = cube_polynomial(interval_diagram(l, k));
  const IntPoly want = ql + qk + qk.shifted(1);
  const IntPoly got = cube_polynomial(e);
  if (got != want) return "cube split " + got.to_string() + " vs " + want.to_string();
  if (auto r = expected_expansion_rank(l, k)) {
    if (rank_polynomial(e) != *r) return "rank split " + rank_polynomial(e).to_string() + " vs " + r->to_string();
  }
  return std::nullopt;
}

void check_structure(Checker& c, long max_n) {
  const long top = std::min(max_n, 9L);
  c.holds("structure", "Phi(n)", "Gamma*(n-1) (+) Gamma*(n-4)", 5, top, [&](long n) -> std::optional<std::string> {
    const auto phi = fibonacci_like_cube(static_cast<std::size_t>(n));
    const auto dec = convex_decomposition(make_sfence(static_cast<std::size_t>(n)), 3);
    const auto gamma_base = filter_lattice(dual(make_fence(static_cast<std::size_t>(n - 1))));
    const auto gamma_small = filter_lattice(dual(make_fence(static_cast<std::size_t>(n - 4))));
    const auto piece = interval_diagram(dec.base, dec.cutting);
    const auto e = convex_expansion(dec.base, dec.cutting);
    if (!iso_check(dec.base, gamma_base)) return std::string("base is not Gamma*(n-1)");
    if (!iso_check(piece, filter_lattice(dec.star))) return std::string("interval is not F(P*x)");
    // Gamma*(m) and Gamma(m) are order duals; for odd m the interval is the latter.
    if (!iso_check(piece, gamma_small) && !iso_check(piece, gamma_small.order_dual())) {
      return std::string("interval is not Gamma*(n-4) up to duality");
    }
    if (!iso_check(phi, e)) return std::string("expansion not isomorphic to Phi(n)");
    return expansion_identities(dec.base, dec.cutting, e);
  });
  c.holds("structure", "Phi(n)", "Phi(n-1) (+) Phi(n-2)", 6, top, [&](long n) -> std::optional<std::string> {
    const auto phi = fibonacci_like_cube(static_cast<std::size_t>(n));
    const auto dec = convex_decomposition(make_sfence(static_cast<std::size_t>(n)), static_cast<Label>(n));
    const auto piece = interval_diagram(dec.base, dec.cutting);
    const auto e = convex_expansion(dec.base, dec.cutting);
    if (!iso_check(dec.base, fibonacci_like_cube(static_cast<std::size_t>(n - 1)))) {
      return std::string("base is not Phi(n-1)");
    }
    if (!iso_check(piece, fibonacci_like_cube(static_cast<std::size_t>(n - 2)))) {
      return std::string("interval is not Phi(n-2)");
    }
    if (!iso_check(phi, e)) return std::string("expansion not isomorphic to Phi(n)");
    return expansion_identities(dec.base, dec.cutting, e);
  });
}

void check_filter_split(Checker& c, long max_n) {
  const long top = std::min(max_n, 12L);
  auto split = [](const Poset& p) -> std::optional<std::string> {
    const std::size_t total = enumerate_filters(p).size();
    for (auto label : p.labels()) {
      const std::size_t a = enumerate_filters(remove_element(p, label)).size();
      const std::size_t b = enumerate_filters(star_remove(p, label)).size();
      if (a + b != total) return "x" + std::to_string(label);
    }
    return std::nullopt;
  };
  c.holds("filters", "|F(P)|", "|F(P-x)| + |F(P*x)|, P = S-fence", 0, top,
          [&](long n) { return split(make_sfence(static_cast<std::size_t>(n))); });
  c.holds("filters", "|F(P)|", "|F(P-x)| + |F(P*x)|, P = fence", 0, top,
          [&](long n) { return split(make_fence(static_cast<std::size_t>(n))); });
}

void check_generic_cubes(Checker& c, const std::vector<PolynomialCensus>& census) {
  const long top = std::min(static_cast<long>(census.size()) - 1, 6L);
  c.holds("cube", "interval census", "induced subgraph search", 0, top, [&](long n) -> std::optional<std::string> {
    const auto g = underlying_graph(fibonacci_like_cube(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k <= 3; ++k) {
      const BigInt generic = generic_cube_count(g, k);
      if (generic != census[n].cube[k]) return "k=" + std::to_string(k) + ": " + generic.str();
    }
    return std::nullopt;
  });
}

}  // namespace

VerificationReport run_verification(std::size_t max_n) {
  VerificationReport report;
  Checker c(report);
  const long n = static_cast<long>(max_n);
  const long nc = std::min(n, kCensusMaxN);
  const long nf = std::min(n, kFormulaMaxN);
  const auto census = census_table(static_cast<std::size_t>(nc));

  check_golden(c, census);
  check_vertex_counts(c, census);
  check_methods(c, census, nf);
  check_coefficient_recurrences(c, census);
  check_identities(c, census, nf);
  check_gf_exactness(c, nf);
  check_structure(c, n);
  check_filter_split(c, n);
  check_generic_cubes(c, census);
  check_errata(c, census);
  return report;
}

}  // namespace flc
