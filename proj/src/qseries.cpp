#include "rrc/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rrc/error.hpp"

namespace rrc {

namespace {

// Indices of nonzero coefficients; series in this library are often sparse
// (everything in q^5 steps, say), so products iterate over these only.
std::vector<int> support(std::span<const Rational> c, int limit) {
  std::vector<int> out;
  for (int e = 0; e <= limit; ++e) {
    if (sgn(c[static_cast<std::size_t>(e)]) != 0) out.push_back(e);
  }
  return out;
}

bool all_integral(std::span<const Rational> c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.get_den() == 1; });
}

// Truncated Cauchy product of a and b into exponents 0..limit.
std::vector<Rational> truncated_product(std::span<const Rational> a, std::span<const Rational> b,
                                        int limit) {
  std::vector<Rational> out(static_cast<std::size_t>(limit + 1));
  const int la = std::min(limit, static_cast<int>(a.size()) - 1);
  const int lb = std::min(limit, static_cast<int>(b.size()) - 1);
  if (la < 0 || lb < 0) return out;
  const auto sa = support(a, la);
  const auto sb = support(b, lb);
  if (sa.empty() || sb.empty()) return out;

  if (all_integral(a.first(static_cast<std::size_t>(la + 1))) &&
      all_integral(b.first(static_cast<std::size_t>(lb + 1)))) {
    std::vector<mpz_class> acc(static_cast<std::size_t>(limit + 1));
    for (int i : sa) {
      const mpz_srcptr ai = a[static_cast<std::size_t>(i)].get_num_mpz_t();
      for (int j : sb) {
        if (i + j > limit) break;
        mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), ai,
                   b[static_cast<std::size_t>(j)].get_num_mpz_t());
      }
    }
    for (std::size_t e = 0; e < acc.size(); ++e) out[e] = Rational(acc[e]);
    return out;
  }

  Rational t;
  for (int i : sa) {
    for (int j : sb) {
      if (i + j > limit) break;
      mpq_mul(t.get_mpq_t(), a[static_cast<std::size_t>(i)].get_mpq_t(),
              b[static_cast<std::size_t>(j)].get_mpq_t());
      out[static_cast<std::size_t>(i + j)] += t;
    }
  }
  return out;
}

}  // namespace

QSeries::QSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(int exponent, const Rational& coeff, int order) {
  if (exponent < 0) throw std::invalid_argument("QSeries::monomial: negative exponent");
  QSeries s(order);
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool QSeries::is_integral() const { return all_integral(coeffs_); }

std::optional<int> QSeries::valuation() const {
  for (int e = 0; e <= order_; ++e) {
    if (sgn(coeffs_[static_cast<std::size_t>(e)]) != 0) return e;
  }
  return std::nullopt;
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("QSeries::truncated: cannot raise order");
  return QSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::shifted(int shift) const {
  if (shift < 0) throw std::invalid_argument("QSeries::shifted: negative shift");
  QSeries out(order_);
  for (int e = order_; e >= shift; --e) {
    out.coeffs_[static_cast<std::size_t>(e)] = coeffs_[static_cast<std::size_t>(e - shift)];
  }
  return out;
}

void QSeries::mul_one_minus(int e, const Rational& c) {
  if (e < 1) throw std::invalid_argument("mul_one_minus: exponent must be >= 1");
  for (int n = order_; n >= e; --n) {
    coeffs_[static_cast<std::size_t>(n)] -= c * coeffs_[static_cast<std::size_t>(n - e)];
  }
}

void QSeries::div_one_minus(int e, const Rational& c) {
  if (e < 1) throw std::invalid_argument("div_one_minus: exponent must be >= 1");
  for (int n = e; n <= order_; ++n) {
    coeffs_[static_cast<std::size_t>(n)] += c * coeffs_[static_cast<std::size_t>(n - e)];
  }
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int e = 0; e <= order_; ++e) coeffs_[static_cast<std::size_t>(e)] += rhs[e];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int e = 0; e <= order_; ++e) coeffs_[static_cast<std::size_t>(e)] -= rhs[e];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs) { return *this = *this * rhs; }

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  const int order = std::min(lhs.order_, rhs.order_);
  return QSeries(order, truncated_product(lhs.coeffs_, rhs.coeffs_, order));
}

QSeries operator-(QSeries f) {
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

QSeries invert(const QSeries& f) {
  if (sgn(f[0]) == 0) throw Error(ErrorKind::ZeroConstantTerm, "constant coefficient is zero");
  const int order = f.order();
  const Rational inv0 = 1 / f[0];
  const auto sf = support(f.coeffs(), order);
  std::vector<Rational> g(static_cast<std::size_t>(order + 1));
  g[0] = inv0;
  Rational acc, t;
  for (int n = 1; n <= order; ++n) {
    acc = 0;
    for (int j : sf) {
      if (j == 0) continue;
      if (j > n) break;
      mpq_mul(t.get_mpq_t(), f[j].get_mpq_t(), g[static_cast<std::size_t>(n - j)].get_mpq_t());
      acc += t;
    }
    g[static_cast<std::size_t>(n)] = -inv0 * acc;
  }
  return QSeries(order, std::move(g));
}

std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g) {
  const int order = std::min(f.order(), g.order());
  for (int e = 0; e <= order; ++e) {
    if (f[e] != g[e]) return Mismatch{e, f[e], g[e]};
  }
  return std::nullopt;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, int e) {
  if (sgn(c) == 0) return;
  Rational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  first = false;
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string to_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= f.order(); ++e) append_term(os, first, f[e], e);
  if (first) os << "0";
  os << " + O(q^" << f.order() + 1 << ")";
  return os.str();
}

QSeries poch_finite(int a, int m, int n, int order) {
  if (a < 1 || m < 1 || n < 0) throw std::invalid_argument("poch_finite: need a >= 1, m >= 1, n >= 0");
  QSeries s = QSeries::one(order);
  for (int i = 0; i < n; ++i) {
    const long e = a + static_cast<long>(i) * m;
    if (e > order) break;
    s.mul_one_minus(static_cast<int>(e));
  }
  return s;
}

QSeries poch_infinite(int a, int m, int order) {
  if (a < 1 || m < 1) throw std::invalid_argument("poch_infinite: need a >= 1, m >= 1");
  QSeries s = QSeries::one(order);
  for (int e = a; e <= order; e += m) s.mul_one_minus(e);
  return s;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int exponent, const Rational& c) {
  if (exponent < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(exponent + 1));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

QSeries Polynomial::to_series(int order) const {
  std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + std::min<long>(order + 1, static_cast<long>(coeffs_.size())));
  return QSeries(order, std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int deg = lhs.degree() + rhs.degree();
  return Polynomial(truncated_product(lhs.coeffs_, rhs.coeffs_, deg));
}

Polynomial operator*(Polynomial lhs, const Rational& s) {
  for (auto& c : lhs.coeffs_) c *= s;
  lhs.trim();
  return lhs;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  const int qd = num.degree() - dd;
  if (qd < 0) return {Polynomial{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(qd + 1));
  for (int k = qd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / den.leading();
    quot[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= c * den.coefficient(j);
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (1 / x.leading());
}

std::string to_string(const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) append_term(os, first, p.coefficient(e), e);
  if (first) os << "0";
  return os.str();
}

Polynomial poch_polynomial(int a, int m, int n) {
  if (a < 1 || m < 1 || n < 0) throw std::invalid_argument("poch_polynomial: need a >= 1, m >= 1, n >= 0");
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) {
    p = p * (Polynomial::constant(1) - Polynomial::monomial(a + i * m));
  }
  return p;
}

Polynomial gauss_binomial(int n, int m) {
  if (n < 0 || m < 0 || m > n) return {};
  // q-Pascal: [N, M] = [N-1, M-1] + q^M [N-1, M]; one row of the triangle at a time.
  std::vector<Polynomial> row{Polynomial::constant(1)};
  for (int nn = 1; nn <= n; ++nn) {
    std::vector<Polynomial> next(static_cast<std::size_t>(nn + 1));
    next[0] = Polynomial::constant(1);
    next[static_cast<std::size_t>(nn)] = Polynomial::constant(1);
    for (int mm = 1; mm < nn; ++mm) {
      next[static_cast<std::size_t>(mm)] =
          row[static_cast<std::size_t>(mm - 1)] + Polynomial::monomial(mm) * row[static_cast<std::size_t>(mm)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace rrc
