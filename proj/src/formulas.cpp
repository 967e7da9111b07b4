#include "flc/formulas.hpp"

#include <string>

#include "flc/errors.hpp"

namespace flc {

namespace {

// Floor division for possibly negative numerators (sum limits like (m-1)/2).
long floor_half(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

BigInt sign(long i) { return (i % 2 == 0) ? BigInt{1} : BigInt{-1}; }

const IntPoly kOnePlusXPlusX2{1, 1, 1};

}  // namespace

BigInt SeqCache::fib(std::size_t n) {
  std::lock_guard lock(mutex_);
  while (fib_.size() <= n) fib_.push_back(fib_[fib_.size() - 1] + fib_[fib_.size() - 2]);
  return fib_[n];
}

BigInt SeqCache::padovan133(std::size_t n) {
  std::lock_guard lock(mutex_);
  while (padovan_.size() <= n) {
    const std::size_t m = padovan_.size();
    padovan_.push_back(padovan_[m - 2] + padovan_[m - 3]);
  }
  return padovan_[n];
}

BigInt SeqCache::binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard lock(mutex_);
  while (pascal_.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = pascal_.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt{1});
    for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    pascal_.push_back(std::move(row));
  }
  return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt SeqCache::trinomial(long n, long k) {
  if (n < 0 || k < 0 || k > 2 * n) return 0;
  std::lock_guard lock(mutex_);
  while (trinomial_rows_.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = trinomial_rows_.back();
    std::vector<BigInt> row(prev.size() + 2, BigInt{0});
    for (std::size_t i = 0; i < prev.size(); ++i) {
      row[i] += prev[i];
      row[i + 1] += prev[i];
      row[i + 2] += prev[i];
    }
    trinomial_rows_.push_back(std::move(row));
  }
  return trinomial_rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

IntPoly SeqCache::g_poly(long n) {
  if (n < 0) return {};
  {
    std::lock_guard lock(mutex_);
    if (static_cast<std::size_t>(n) < g_.size()) return g_[static_cast<std::size_t>(n)];
  }
  // Build outside the lock: binom() takes it too.
  std::vector<IntPoly> built;
  long start = 0;
  {
    std::lock_guard lock(mutex_);
    start = static_cast<long>(g_.size());
  }
  for (long m = start; m <= n; ++m) {
    IntPoly g;
    for (long i = 0; i <= m / 2; ++i) {
      IntPoly term = kOnePlusXPlusX2.pow(static_cast<unsigned>(m - 2 * i)).shifted(static_cast<std::size_t>(2 * i));
      g += (sign(i) * binom(m - i, i)) * term;
    }
    built.push_back(std::move(g));
  }
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (static_cast<std::size_t>(start) + i == g_.size()) g_.push_back(std::move(built[i]));
  }
  return g_[static_cast<std::size_t>(n)];
}

SeqCache& default_cache() {
  static SeqCache cache;
  return cache;
}

BigInt fib(std::size_t n) { return default_cache().fib(n); }
BigInt padovan133(std::size_t n) { return default_cache().padovan133(n); }
BigInt binom(long n, long k) { return default_cache().binom(n, k); }
BigInt trinomial(long n, long k) { return default_cache().trinomial(n, k); }

BigInt r_coeff(long n, long k) {
  if (n < kRankClosedFrom) throw DomainError("r_coeff is stated for n >= 2, got n = " + std::to_string(n));
  if (k < 0) return 0;
  BigInt r = 0;
  if (n % 2 == 0) {
    const long m = n / 2;
    if (m == 1 && k == 0) r += 1;
    for (long i = 0; i <= floor_half(m); ++i) r += sign(i) * binom(m - i, i) * trinomial(m - 2 * i, k - 2 * i);
    for (long i = 0; i <= floor_half(m - 1); ++i) {
      r -= sign(i) * binom(m - i - 1, i) * trinomial(m - 2 * i - 1, k - 2 * i);
    }
    for (long i = 0; i <= floor_half(m - 2); ++i) {
      r += sign(i) * binom(m - i - 2, i) * trinomial(m - 2 * i - 2, k - 2 * i);
    }
  } else {
    const long m = (n - 1) / 2;
    for (long i = 0; i <= floor_half(m); ++i) {
      r += sign(i) * binom(m - i, i) *
           (trinomial(m - 2 * i, k - 2 * i) + trinomial(m - 2 * i, k - 2 * i - 1));
    }
    for (long i = 0; i <= floor_half(m - 1); ++i) {
      r -= sign(i) * binom(m - i - 1, i) *
           (trinomial(m - 2 * i - 1, k - 2 * i - 1) + trinomial(m - 2 * i - 1, k - 2 * i - 2));
    }
  }
  return r;
}

BigInt q_coeff(long n, long k) {
  if (n < 0) throw DomainError("q_coeff needs n >= 0");
  BigInt q = 0;
  for (long j = 0; j <= floor_half(n + 1); ++j) q += binom(n - j + 1, j) * binom(j, k);
  for (long j = 2; j <= floor_half(n + 1); ++j) q -= binom(n - j - 1, j - 2) * binom(j, k);
  for (long j = 2; j <= floor_half(n); ++j) q -= binom(n - j - 2, j - 2) * binom(j, k);
  return q;
}

BigInt h_coeff(long n, long k) {
  if (n < kMaxCubeClosedFrom) throw DomainError("h_coeff is stated for n >= 3, got n = " + std::to_string(n));
  if (k < 0) return 0;
  return binom(k + 1, n - 2 * k) + binom(k, n - 2 * k - 1);
}

BigInt d_coeff(long n, long k) {
  if (n < kDegreeClosedFrom) throw DomainError("d_coeff is stated for n >= 3, got n = " + std::to_string(n));
  BigInt d = 0;
  for (long j = 0; j <= k; ++j) {
    d += binom(n - 2 * j, k - j) * binom(j, n - k - j);
    d += binom(n - 2 * j - 1, k - j) * binom(j, n - k - j - 1);
    d -= binom(n - 2 * j - 2, k - j - 2) * binom(j, n - k - j);
  }
  return d;
}

bool dm_closed_valid(long n) { return n == 0 || n >= 3; }

BigInt dm_coeff(long n, long k) {
  if (!dm_closed_valid(n)) {
    throw DomainError("dm_coeff disagrees with the indegree census at n = 1, 2; got n = " + std::to_string(n));
  }
  return binom(n - k - 2, k - 1) + binom(n - k, k);
}

namespace {

template <typename Coeff>
IntPoly assemble(long n, Coeff coeff) {
  std::vector<BigInt> c;
  for (long k = 0; k <= 2 * n; ++k) c.push_back(coeff(n, k));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly rank_poly_closed(long n) { return assemble(n, r_coeff); }
IntPoly cube_poly_closed(long n) { return assemble(n, q_coeff); }
IntPoly maxcube_poly_closed(long n) { return assemble(n, h_coeff); }
IntPoly degree_poly_closed(long n) { return assemble(n, d_coeff); }
IntPoly indegree_poly_closed(long n) { return assemble(n, dm_coeff); }

IntPoly rank_poly_from_g(long n) {
  if (n < 0) throw DomainError("rank_poly_from_g needs n >= 0");
  auto& cache = default_cache();
  if (n % 2 == 0) {
    const long m = n / 2;
    IntPoly a = cache.g_poly(m) - cache.g_poly(m - 1) + cache.g_poly(m - 2);
    if (m == 1) a += IntPoly{1};
    return a;
  }
  const long m = (n - 1) / 2;
  return IntPoly{1, 1} * cache.g_poly(m) - IntPoly{0, 1, 1} * cache.g_poly(m - 1);
}

const std::vector<IntPoly>& printed_table(Family f) {
  static const std::vector<IntPoly> rank{
      {1},
      {1, 1},
      {1, 1, 1},
      {1, 1, 1, 1},
      {1, 1, 1, 2, 1},
      {1, 2, 2, 2, 2, 1},
      {1, 2, 3, 3, 3, 3, 1},
      {1, 3, 4, 5, 5, 4, 3, 1},
      {1, 3, 5, 7, 8, 7, 6, 4, 1},
      {1, 4, 7, 10, 12, 12, 10, 7, 4, 1},
  };
  static const std::vector<IntPoly> cube{
      {1}, {2, 1}, {3, 2}, {4, 3}, {6, 6, 1}, {10, 13, 4}, {16, 25, 11, 1}, {26, 48, 28, 5},
  };
  static const std::vector<IntPoly> maxcube{
      {1}, {0, 1}, {0, 2}, {0, 3}, {0, 2, 1}, {0, 0, 4}, {0, 0, 5, 1}, {0, 0, 2, 5},
  };
  static const std::vector<IntPoly> degree{
      {1},
      {0, 2},
      {0, 2, 1},
      {0, 2, 2},
      {0, 1, 4, 1},
      {0, 0, 5, 4, 1},
      {0, 0, 3, 9, 3, 1},
      {0, 0, 1, 11, 10, 3, 1},
  };
  static const std::vector<IntPoly> indegree{
      {1}, {1, 1}, {1, 2}, {1, 3}, {1, 4, 1}, {1, 5, 4}, {1, 6, 8, 1}, {1, 7, 13, 5},
  };
  switch (f) {
    case Family::Rank: return rank;
    case Family::Cube: return cube;
    case Family::MaxCube: return maxcube;
    case Family::Degree: return degree;
    case Family::Indegree: return indegree;
    case Family::Outdegree: break;
  }
  throw RangeError("no printed table for the outdegree family");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Rank: return "rank";
    case Family::Cube: return "cube";
    case Family::MaxCube: return "maxcube";
    case Family::Degree: return "degree";
    case Family::Indegree: return "indegree";
    case Family::Outdegree: return "outdegree";
  }
  return "?";
}

namespace {

// Iterates `step` from the printed base rows 0..first-1.
template <typename Step>
IntPoly iterate(Family f, std::size_t first, std::size_t n, Step step) {
  const auto& base = printed_table(f);
  std::vector<IntPoly> rows(base.begin(), base.begin() + static_cast<long>(first));
  if (n < first) return rows[n];
  for (std::size_t m = first; m <= n; ++m) rows.push_back(step(rows, m));
  return rows[n];
}

}  // namespace

IntPoly rank_poly_rec(std::size_t n) {
  return iterate(Family::Rank, 5, n, [](const std::vector<IntPoly>& r, std::size_t m) {
    if (m % 2 == 1) return r[m - 1].shifted(1) + r[m - 2];
    return r[m - 1] + r[m - 2].shifted(2);
  });
}

IntPoly cube_poly_rec(std::size_t n) {
  return iterate(Family::Cube, 5, n, [](const std::vector<IntPoly>& q, std::size_t m) {
    return q[m - 1] + IntPoly{1, 1} * q[m - 2];
  });
}

IntPoly maxcube_poly_rec(std::size_t n) {
  return iterate(Family::MaxCube, 6, n, [](const std::vector<IntPoly>& h, std::size_t m) {
    return (h[m - 2] + h[m - 3]).shifted(1);
  });
}

IntPoly degree_poly_rec(std::size_t n) {
  return iterate(Family::Degree, 6, n, [](const std::vector<IntPoly>& d, std::size_t m) {
    return (d[m - 1] + d[m - 2]).shifted(1) + IntPoly{0, 1, -1} * d[m - 3];
  });
}

IntPoly indegree_poly_rec(std::size_t n) {
  return iterate(Family::Indegree, 5, n, [](const std::vector<IntPoly>& d, std::size_t m) {
    return d[m - 1] + d[m - 2].shifted(1);
  });
}

std::string_view recurrence_name(CoeffRecurrence r) {
  switch (r) {
    case CoeffRecurrence::Cube: return "cube q(n,k) = q(n-1,k) + q(n-2,k) + q(n-2,k-1)";
    case CoeffRecurrence::MaxCube: return "maxcube h(n,k) = h(n-2,k-1) + h(n-3,k-1)";
    case CoeffRecurrence::Degree: return "degree d(n,k) = d(n-2,k-1) + d(n-1,k-1) - d(n-3,k-2) + d(n-3,k-1)";
    case CoeffRecurrence::Indegree: return "indegree d-(n,k) = d-(n-1,k) + d-(n-2,k-1)";
    case CoeffRecurrence::RankEven: return "rank-even A(m) = (1+x+x^2) A(m-1) - x^2 A(m-2)";
    case CoeffRecurrence::RankOdd: return "rank-odd B(m) = (1+x+x^2) B(m-1) - x^2 B(m-2)";
  }
  return "?";
}

long stated_from(CoeffRecurrence r) {
  switch (r) {
    case CoeffRecurrence::Cube: return 4;
    case CoeffRecurrence::MaxCube: return 6;
    case CoeffRecurrence::Degree: return 4;
    case CoeffRecurrence::Indegree: return 3;
    case CoeffRecurrence::RankEven: return 4;
    case CoeffRecurrence::RankOdd: return 2;
  }
  return 0;
}

long validated_from(CoeffRecurrence r) {
  switch (r) {
    case CoeffRecurrence::Cube: return 5;
    case CoeffRecurrence::MaxCube: return 6;
    case CoeffRecurrence::Degree: return 6;
    case CoeffRecurrence::Indegree: return 5;
    case CoeffRecurrence::RankEven: return 4;
    case CoeffRecurrence::RankOdd: return 2;
  }
  return 0;
}

IntPoly apply_recurrence(CoeffRecurrence r, const std::vector<IntPoly>& previous_rows) {
  auto row = [&](std::size_t i) -> const IntPoly& {
    if (i >= previous_rows.size()) throw InvalidArgument("apply_recurrence: missing previous row");
    return previous_rows[i];
  };
  switch (r) {
    case CoeffRecurrence::Cube: return row(0) + IntPoly{1, 1} * row(1);
    case CoeffRecurrence::MaxCube: return (row(1) + row(2)).shifted(1);
    case CoeffRecurrence::Degree: return (row(0) + row(1)).shifted(1) + IntPoly{0, 1, -1} * row(2);
    case CoeffRecurrence::Indegree: return row(0) + row(1).shifted(1);
    case CoeffRecurrence::RankEven:
    case CoeffRecurrence::RankOdd: return kOnePlusXPlusX2 * row(0) - row(1).shifted(2);
  }
  throw InvalidArgument("unknown recurrence");
}

BigInt coeff_recurrence(CoeffRecurrence r, long n, long k) {
  const long first = validated_from(r);
  if (n < first) {
    throw RangeError("recurrence '" + std::string(recurrence_name(r)) + "' holds from index " +
                     std::to_string(first) + ", requested " + std::to_string(n));
  }
  // Base rows for indices below `first`.
  std::vector<IntPoly> rows;
  const auto& rank = printed_table(Family::Rank);
  for (long i = 0; i < first; ++i) {
    switch (r) {
      case CoeffRecurrence::Cube: rows.push_back(printed_table(Family::Cube).at(i)); break;
      case CoeffRecurrence::MaxCube: rows.push_back(printed_table(Family::MaxCube).at(i)); break;
      case CoeffRecurrence::Degree: rows.push_back(printed_table(Family::Degree).at(i)); break;
      case CoeffRecurrence::Indegree: rows.push_back(printed_table(Family::Indegree).at(i)); break;
      case CoeffRecurrence::RankEven: rows.push_back(rank.at(static_cast<std::size_t>(2 * i))); break;
      case CoeffRecurrence::RankOdd: rows.push_back(rank.at(static_cast<std::size_t>(2 * i + 1))); break;
    }
  }
  for (long m = first; m <= n; ++m) {
    std::vector<IntPoly> previous;
    for (long back = 1; back <= 3 && m - back >= 0; ++back) previous.push_back(rows[static_cast<std::size_t>(m - back)]);
    rows.push_back(apply_recurrence(r, previous));
  }
  return rows[static_cast<std::size_t>(n)].coeff(k);
}

}  // namespace flc
