#pragma once

#include <cstddef>
#include <vector>

#include "flc/int_poly.hpp"

namespace flc {

/// correction(y) + numerator(y) / denominator(y), where every y-coefficient
/// is a polynomial in x. The denominator's y^0 coefficient must be 1, so the
/// series has integer coefficients given by the usual recurrence.
struct RationalSeries {
  std::vector<IntPoly> numerator;
  std::vector<IntPoly> denominator;
  std::vector<IntPoly> correction;
};

/// Coefficients c_0(x) .. c_{count-1}(x) of y^n. Throws InvalidArgument when
/// the denominator's constant term is not 1.
std::vector<IntPoly> expand(const RationalSeries& gf, std::size_t count);

/// (expansion - correction) * denominator, truncated to `count` terms.
/// Equal to the numerator (padded with zeros) when the expansion is exact.
std::vector<IntPoly> multiply_back(const RationalSeries& gf, const std::vector<IntPoly>& expansion);

/// True iff multiply_back reproduces the numerator through y^{count-1}.
bool reproduces_numerator(const RationalSeries& gf, std::size_t count);

/// Even-index rank polynomials R_{2m} in powers of z.
RationalSeries gf_A();
/// Odd-index rank polynomials R_{2m+1} in powers of z.
RationalSeries gf_B();
RationalSeries gf_R();
RationalSeries gf_Q();
RationalSeries gf_H();
RationalSeries gf_D();
RationalSeries gf_Dm();

/// table[n][k] = [x^k][y^n] of 1 / ((1-xy)(1-xy^2) - xy^3), by series
/// expansion. count <= 64.
std::vector<std::vector<BigInt>> f_xy_expand(std::size_t count);

/// The same coefficient as a double binomial sum:
/// sum_j C(n-2j, k-j) C(j, n-k-j).
BigInt f_xy_binomial(long n, long k);

}  // namespace flc
