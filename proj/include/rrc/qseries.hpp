#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rrc {

using Rational = mpq_class;

/// Truncated power series in q with exact rational coefficients.
///
/// A value tracks the coefficients of q^0 .. q^order exactly; everything above
/// `order` is unknown. Binary arithmetic yields the smaller of the two orders,
/// so agreement is never claimed beyond what both operands actually know.
class QSeries {
 public:
  /// Zero series known through q^order.
  explicit QSeries(int order = 0);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  QSeries(int order, std::vector<Rational> coeffs);

  static QSeries one(int order);
  static QSeries monomial(int exponent, const Rational& coeff, int order);

  int order() const noexcept { return order_; }
  const Rational& operator[](int exponent) const { return coeffs_[static_cast<std::size_t>(exponent)]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Smallest exponent with a nonzero coefficient.
  std::optional<int> valuation() const;

  /// Same series known through a smaller order.
  QSeries truncated(int order) const;
  /// Multiplication by q^shift (shift >= 0).
  QSeries shifted(int shift) const;

  /// In-place multiplication by (1 - c q^e)^{+1}, e >= 1.
  void mul_one_minus(int e, const Rational& c = 1);
  /// In-place multiplication by (1 - c q^e)^{-1}, e >= 1.
  void div_one_minus(int e, const Rational& c = 1);

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const QSeries& rhs);
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
  friend QSeries operator*(QSeries lhs, const Rational& s) { return lhs *= s; }
  friend QSeries operator*(const Rational& s, QSeries rhs) { return rhs *= s; }
  friend QSeries operator-(QSeries f);

  /// Exact equality: same order and same coefficients.
  friend bool operator==(const QSeries& lhs, const QSeries& rhs) = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse up to order; throws ZeroConstantTerm.
QSeries invert(const QSeries& f);

struct Mismatch {
  int exponent;
  Rational lhs;
  Rational rhs;
};

/// Smallest exponent <= min(f.order, g.order) where the two disagree.
std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g);

/// Human-readable form, e.g. "1 + q - 2/3*q^4 + O(q^7)".
std::string to_string(const QSeries& f);

/// (q^a; q^m)_n truncated at order.
QSeries poch_finite(int a, int m, int n, int order);
/// (q^a; q^m)_inf truncated at order.
QSeries poch_infinite(int a, int m, int order);

/// Dense univariate polynomial over the rationals, always trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int exponent, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coefficient(int exponent) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  QSeries to_series(int order) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
std::string to_string(const Polynomial& p);

/// Exact (q^a; q^m)_n.
Polynomial poch_polynomial(int a, int m, int n);

/// q-binomial coefficient [N choose M]_q by the q-Pascal recurrence; zero
/// outside 0 <= M <= N.
Polynomial gauss_binomial(int n, int m);

}  // namespace rrc
