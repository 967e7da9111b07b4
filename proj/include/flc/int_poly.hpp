#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace flc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over the integers. coeffs()[k] is the
/// coefficient of x^k; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }
  /// c * x^k
  static IntPoly monomial(std::size_t k, BigInt c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^k, zero outside the stored range.
  BigInt operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt{0}; }
  BigInt coeff(long k) const { return k < 0 ? BigInt{0} : (*this)[static_cast<std::size_t>(k)]; }

  BigInt evaluate(const BigInt& x) const;
  /// p(q(x)).
  IntPoly compose(const IntPoly& q) const;
  /// x^k * p.
  IntPoly shifted(std::size_t k) const;
  IntPoly pow(unsigned e) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator-(IntPoly a);
  friend IntPoly operator*(const BigInt& c, IntPoly p);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "1+2x+3x^2" style; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace flc
