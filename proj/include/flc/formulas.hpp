#pragma once

// Recurrences and closed-form coefficient formulas for the rank, cube,
// maximal-cube, degree and indegree polynomials of the Fibonacci-like cubes.
//
// Every binomial goes through `binom`, which is zero whenever 0 <= k <= n
// fails; several formulas below depend on negative-argument terms vanishing.

#include <cstddef>
#include <mutex>
#include <string_view>
#include <vector>

#include "flc/int_poly.hpp"

namespace flc {

/// Memo tables for the integer sequences and auxiliary polynomials. Tables
/// only grow; access is serialised by an internal mutex.
class SeqCache {
 public:
  BigInt fib(std::size_t n);
  BigInt padovan133(std::size_t n);
  BigInt binom(long n, long k);
  BigInt trinomial(long n, long k);
  /// g_n(x) = sum_i (-1)^i C(n-i, i) x^{2i} (1+x+x^2)^{n-2i}; zero for n < 0.
  IntPoly g_poly(long n);

 private:
  std::mutex mutex_;
  std::vector<BigInt> fib_{0, 1};
  std::vector<BigInt> padovan_{1, 3, 3};
  std::vector<std::vector<BigInt>> pascal_{{1}};
  std::vector<std::vector<BigInt>> trinomial_rows_{{1}};
  std::vector<IntPoly> g_;
};

/// Process-wide cache used by the free functions below.
SeqCache& default_cache();

BigInt fib(std::size_t n);
/// p0 = 1, p1 = 3, p2 = 3, p_n = p_{n-2} + p_{n-3}.
BigInt padovan133(std::size_t n);
/// Zero unless 0 <= k <= n.
BigInt binom(long n, long k);
/// Coefficient of x^k in (1+x+x^2)^n.
BigInt trinomial(long n, long k);

// Closed forms. Each throws DomainError outside the n it is valid for.

/// n >= 2. Alternating sums of trinomial coefficients, split by parity.
BigInt r_coeff(long n, long k);
/// n >= 0. Three binomial sums over j.
BigInt q_coeff(long n, long k);
/// n >= 3. C(k+1, n-2k) + C(k, n-2k-1).
BigInt h_coeff(long n, long k);
/// n >= 3. Three-product sum over j.
BigInt d_coeff(long n, long k);
/// n = 0 or n >= 3. C(n-k-2, k-1) + C(n-k, k).
BigInt dm_coeff(long n, long k);

/// Smallest n accepted by each closed form.
inline constexpr long kRankClosedFrom = 2;
inline constexpr long kMaxCubeClosedFrom = 3;
inline constexpr long kDegreeClosedFrom = 3;
bool dm_closed_valid(long n);

/// Polynomial assembled from a closed-form coefficient function for k = 0..2n.
IntPoly rank_poly_closed(long n);
IntPoly cube_poly_closed(long n);
IntPoly maxcube_poly_closed(long n);
IntPoly degree_poly_closed(long n);
IntPoly indegree_poly_closed(long n);

/// Rank polynomial through g_n: R_{2m} = [m = 1] + g_m - g_{m-1} + g_{m-2},
/// R_{2m+1} = (1+x) g_m - (x+x^2) g_{m-1}. Valid for every n >= 0.
IntPoly rank_poly_from_g(long n);

// Polynomial recurrences seeded with the printed base rows.

/// R_n = x R_{n-1} + R_{n-2} (n odd), R_{n-1} + x^2 R_{n-2} (n even), n >= 5.
IntPoly rank_poly_rec(std::size_t n);
/// Q_n = Q_{n-1} + (1+x) Q_{n-2}, n >= 5.
IntPoly cube_poly_rec(std::size_t n);
/// H_n = x H_{n-2} + x H_{n-3}, n >= 6.
IntPoly maxcube_poly_rec(std::size_t n);
/// D_n = x D_{n-1} + x D_{n-2} + (x - x^2) D_{n-3}, n >= 6.
IntPoly degree_poly_rec(std::size_t n);
/// D-_n = D-_{n-1} + x D-_{n-2}, n >= 5.
IntPoly indegree_poly_rec(std::size_t n);

enum class Family { Rank, Cube, MaxCube, Degree, Indegree, Outdegree };

std::string_view family_name(Family f);

/// The printed lists: R_0..R_9, Q_0..Q_7, H_0..H_7, D_0..D_7, D-_0..D-_7.
/// Throws RangeError for an index past the list or for Outdegree.
const std::vector<IntPoly>& printed_table(Family f);

/// Coefficient-level recurrences.
enum class CoeffRecurrence {
  Cube,      // q_{n,k} = q_{n-1,k} + q_{n-2,k} + q_{n-2,k-1}
  MaxCube,   // h_{n,k} = h_{n-2,k-1} + h_{n-3,k-1}
  Degree,    // d_{n,k} = d_{n-2,k-1} + d_{n-1,k-1} - d_{n-3,k-2} + d_{n-3,k-1}
  Indegree,  // d-_{n,k} = d-_{n-1,k} + d-_{n-2,k-1}
  RankEven,  // A_m = (1+x+x^2) A_{m-1} - x^2 A_{m-2}, index m with A_m = R_{2m}
  RankOdd,   // B_m = (1+x+x^2) B_{m-1} - x^2 B_{m-2}, index m with B_m = R_{2m+1}
};

std::string_view recurrence_name(CoeffRecurrence r);
/// Index the recurrence is stated from.
long stated_from(CoeffRecurrence r);
/// Index from which the recurrence actually holds against the census.
long validated_from(CoeffRecurrence r);

/// One step of the recurrence applied to caller-supplied rows:
/// rows[i] is the polynomial for index n-1-i (i = 0, 1, 2). Used to probe a
/// recurrence at an index where it may fail.
IntPoly apply_recurrence(CoeffRecurrence r, const std::vector<IntPoly>& previous_rows);

/// Coefficient of x^k at index n, computed by iterating the recurrence from
/// the printed base rows. Throws RangeError below validated_from(r).
BigInt coeff_recurrence(CoeffRecurrence r, long n, long k);

}  // namespace flc
