#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrc/qseries.hpp"

namespace rrc {

/// (1 - q^exponent)^multiplicity. The exponent may be negative before normalization.
struct FiniteFactor {
  int exponent;
  int multiplicity;
  friend bool operator==(const FiniteFactor&, const FiniteFactor&) = default;
};

/// (q^base; q^step)_inf^multiplicity.
struct InfiniteFactor {
  int base;
  int step;
  int multiplicity;
  friend bool operator==(const InfiniteFactor&, const InfiniteFactor&) = default;
};

/// Symbolic product  sign * q^shift * prod (1 - q^e)^mult * prod (q^a; q^m)_inf^mult.
///
/// Product sides of identities are kept in this form and expanded once, late.
struct FactoredProduct {
  int sign = 1;
  int shift = 0;
  std::vector<FiniteFactor> finite;
  std::vector<InfiniteFactor> infinite;

  FactoredProduct& times_q(int s);
  FactoredProduct& times_one_minus(int exponent, int multiplicity = 1);
  FactoredProduct& times_poch_infinite(int base, int step, int multiplicity = 1);
  FactoredProduct& negate();

  /// True when every finite exponent is >= 1 and factors are merged and sorted.
  bool is_normalized() const;

  friend FactoredProduct operator*(FactoredProduct lhs, const FactoredProduct& rhs);
  friend bool operator==(const FactoredProduct&, const FactoredProduct&) = default;
};

/// Rewrites 1 - q^{-e} = -q^{-e} (1 - q^e), merges equal factors, drops
/// multiplicity-zero factors and sorts.
FactoredProduct normalize(const FactoredProduct& p);

/// Truncated expansion; throws NegativeShift if the normalized product has a
/// negative power of q in front.
QSeries expand(const FactoredProduct& p, int order);

/// Exact rational function (numerator, denominator) of a product without
/// infinite families.
std::pair<Polynomial, Polynomial> as_rational(const FactoredProduct& p);

std::string to_string(const FactoredProduct& p);

}  // namespace rrc
