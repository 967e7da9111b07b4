#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "flc/census.hpp"
#include "flc/formulas.hpp"
#include "flc/int_poly.hpp"

namespace flc {

enum class Method { Census, Recurrence, Closed, Gf };

std::string_view method_name(Method m);

inline constexpr long kCensusMaxN = 18;
inline constexpr long kFormulaMaxN = 40;

/// Whether `method` is defined for `family` at index n.
bool method_covers(Family family, Method method, long n);

/// The polynomial of Phi_n by one method. Throws InvalidArgument when the
/// method does not cover (family, n).
IntPoly family_polynomial(Family family, Method method, long n);

/// Phi_n = filter lattice of the S-fence on n elements.
LatticeDiagram fibonacci_like_cube(std::size_t n);

/// Census of Phi_0 .. Phi_max, computed concurrently.
std::vector<PolynomialCensus> census_table(std::size_t max_n);

IntPoly census_family(const PolynomialCensus& c, Family f);

enum class CheckStatus { Pass, Fail, Erratum };

struct CheckRecord {
  std::string family;
  std::string n_range;
  std::string method_a;
  std::string method_b;
  CheckStatus status = CheckStatus::Pass;
  /// First mismatch, or the disagreeing values of an erratum.
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const;
  /// No Fail records. Errata do not fail a run.
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  void print(std::ostream& out) const;
};

/// Runs every cross-check: census against formulas (n <= min(max_n, 18)),
/// formulas against series (n <= min(max_n, 40)), identities, structural
/// isomorphisms (n <= 9), the filter-count split, the generic cube oracle
/// (n <= 6), series exactness, and the probes of recurrences below their
/// working range.
VerificationReport run_verification(std::size_t max_n);

}  // namespace flc
