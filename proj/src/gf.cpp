#include "flc/gf.hpp"

#include "flc/errors.hpp"
#include "flc/formulas.hpp"

namespace flc {

namespace {

const IntPoly& at(const std::vector<IntPoly>& v, std::size_t i) {
  static const IntPoly zero;
  return i < v.size() ? v[i] : zero;
}

}  // namespace

std::vector<IntPoly> expand(const RationalSeries& gf, std::size_t count) {
  if (gf.denominator.empty() || gf.denominator.front() != IntPoly{1}) {
    throw InvalidArgument("generating function denominator must have constant term 1");
  }
  std::vector<IntPoly> c;
  c.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    IntPoly term = at(gf.numerator, n);
    for (std::size_t i = 1; i <= n && i < gf.denominator.size(); ++i) term -= gf.denominator[i] * c[n - i];
    c.push_back(std::move(term));
  }
  for (std::size_t n = 0; n < count; ++n) c[n] += at(gf.correction, n);
  return c;
}

std::vector<IntPoly> multiply_back(const RationalSeries& gf, const std::vector<IntPoly>& expansion) {
  const std::size_t count = expansion.size();
  std::vector<IntPoly> fraction(count);
  for (std::size_t n = 0; n < count; ++n) fraction[n] = expansion[n] - at(gf.correction, n);
  std::vector<IntPoly> product(count);
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t i = 0; i <= n && i < gf.denominator.size(); ++i) product[n] += gf.denominator[i] * fraction[n - i];
  }
  return product;
}

bool reproduces_numerator(const RationalSeries& gf, std::size_t count) {
  const auto product = multiply_back(gf, expand(gf, count));
  for (std::size_t n = 0; n < count; ++n) {
    if (product[n] != at(gf.numerator, n)) return false;
  }
  return true;
}

// Literal coefficient data, one IntPoly in x per power of the series variable.

RationalSeries gf_A() {
  return {
      .numerator = {{1}, {-1}, {1}},
      .denominator = {{1}, {-1, -1, -1}, {0, 0, 1}},
      .correction = {{}, {1}},
  };
}

RationalSeries gf_B() {
  return {
      .numerator = {{1, 1}, {0, -1, -1}},
      .denominator = {{1}, {-1, -1, -1}, {0, 0, 1}},
      .correction = {},
  };
}

RationalSeries gf_R() {
  return {
      .numerator = {{1}, {1, 1}, {}, {0, -1, -1}, {0, -1, -1}, {}, {0, 0, 1}},
      .denominator = {{1}, {}, {-1, -1, -1}, {}, {0, 0, 1}},
      .correction = {},
  };
}

RationalSeries gf_Q() {
  return {
      .numerator = {{1}, {1, 1}, {}, {-1, -2, -1}, {-1, -2, -1}},
      .denominator = {{1}, {-1}, {-1, -1}},
      .correction = {},
  };
}

RationalSeries gf_H() {
  return {
      .numerator = {{1}, {2}},
      .denominator = {{1}, {}, {0, -1}, {0, -1}},
      .correction = {{}, {-2, 1}, {0, 1}},
  };
}

RationalSeries gf_D() {
  // (1 - xy)(1 - xy^2) - xy^3 = 1 - xy - xy^2 + (x^2 - x) y^3
  return {
      .numerator = {{1}, {1}, {0, 0, -1}},
      .denominator = {{1}, {0, -1}, {0, -1}, {0, -1, 1}},
      .correction = {{}, {-1, 1}, {0, 0, 1}},
  };
}

RationalSeries gf_Dm() {
  return {
      .numerator = {{1}, {0, 1}, {}, {0, 0, -1}, {0, 0, -1}},
      .denominator = {{1}, {-1}, {0, -1}},
      .correction = {},
  };
}

std::vector<std::vector<BigInt>> f_xy_expand(std::size_t count) {
  if (count > 64) throw CapacityError("f_xy_expand is bounded to 64 terms");
  const RationalSeries f{
      .numerator = {{1}},
      .denominator = gf_D().denominator,
      .correction = {},
  };
  std::vector<std::vector<BigInt>> table;
  for (const auto& p : expand(f, count)) {
    std::vector<BigInt> row(p.coeffs().begin(), p.coeffs().end());
    table.push_back(std::move(row));
  }
  return table;
}

BigInt f_xy_binomial(long n, long k) {
  BigInt s = 0;
  for (long j = 0; j <= k; ++j) s += binom(n - 2 * j, k - j) * binom(j, n - k - j);
  return s;
}

}  // namespace flc
