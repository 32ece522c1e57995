#pragma once

#include <map>
#include <optional>
#include <utility>

#include "rrc/qseries.hpp"

namespace rrc {

enum class Marker { X, Y };

/// Polynomial in two markers x, y (total degree <= degree_cap) whose
/// coefficients are truncated q-series sharing one order.
class XYSeries {
 public:
  using Key = std::pair<int, int>;  // (x-degree, y-degree)

  XYSeries(int order, int degree_cap);
  static XYSeries one(int order, int degree_cap);

  int order() const noexcept { return order_; }
  int degree_cap() const noexcept { return degree_cap_; }
  const std::map<Key, QSeries>& terms() const noexcept { return terms_; }

  /// Coefficient of x^alpha y^beta (zero series if absent).
  QSeries coefficient(int alpha, int beta) const;
  /// Adds c * x^alpha y^beta; silently dropped when alpha + beta > degree_cap.
  void add_term(int alpha, int beta, const QSeries& c);

  /// Specialization x = y = 1; exact only when degree_cap >= order.
  QSeries collapse() const;

  friend XYSeries operator+(const XYSeries& lhs, const XYSeries& rhs);
  friend XYSeries operator*(const XYSeries& lhs, const XYSeries& rhs);

 private:
  int order_;
  int degree_cap_;
  std::map<Key, QSeries> terms_;
};

/// Expansion of 1 / (marker * q^a; q^m)_inf.
XYSeries xy_from_pochhammer(Marker marker, int a, int m, int order, int degree_cap);

struct XYMismatch {
  int alpha;
  int beta;
  Mismatch at;
};

/// Mismatch with the smallest q-exponent over all (alpha, beta); ties go to
/// the smaller total degree, then the smaller alpha.
std::optional<XYMismatch> first_mismatch(const XYSeries& lhs, const XYSeries& rhs);

}  // namespace rrc
