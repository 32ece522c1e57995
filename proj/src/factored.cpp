#include "rrc/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rrc/error.hpp"

namespace rrc {

FactoredProduct& FactoredProduct::times_q(int s) {
  shift += s;
  return *this;
}

FactoredProduct& FactoredProduct::times_one_minus(int exponent, int multiplicity) {
  if (exponent == 0) throw std::invalid_argument("factor 1 - q^0 vanishes");
  finite.push_back({exponent, multiplicity});
  return *this;
}

FactoredProduct& FactoredProduct::times_poch_infinite(int base, int step, int multiplicity) {
  if (base < 1 || step < 1) throw std::invalid_argument("infinite family needs base >= 1 and step >= 1");
  infinite.push_back({base, step, multiplicity});
  return *this;
}

FactoredProduct& FactoredProduct::negate() {
  sign = -sign;
  return *this;
}

bool FactoredProduct::is_normalized() const { return normalize(*this) == *this; }

FactoredProduct operator*(FactoredProduct lhs, const FactoredProduct& rhs) {
  lhs.sign *= rhs.sign;
  lhs.shift += rhs.shift;
  lhs.finite.insert(lhs.finite.end(), rhs.finite.begin(), rhs.finite.end());
  lhs.infinite.insert(lhs.infinite.end(), rhs.infinite.begin(), rhs.infinite.end());
  return lhs;
}

FactoredProduct normalize(const FactoredProduct& p) {
  FactoredProduct out;
  out.sign = p.sign;
  out.shift = p.shift;

  std::map<int, int> finite;
  for (const auto& f : p.finite) {
    if (f.exponent == 0) throw std::invalid_argument("factor 1 - q^0 vanishes");
    if (f.exponent > 0) {
      finite[f.exponent] += f.multiplicity;
      continue;
    }
    // (1 - q^{-e})^m = (-1)^m q^{-e m} (1 - q^e)^m
    const int e = -f.exponent;
    if (f.multiplicity % 2 != 0) out.sign = -out.sign;
    out.shift -= e * f.multiplicity;
    finite[e] += f.multiplicity;
  }
  for (const auto& [e, m] : finite) {
    if (m != 0) out.finite.push_back({e, m});
  }

  std::map<std::pair<int, int>, int> infinite;
  for (const auto& f : p.infinite) infinite[{f.base, f.step}] += f.multiplicity;
  for (const auto& [key, m] : infinite) {
    if (m != 0) out.infinite.push_back({key.first, key.second, m});
  }
  return out;
}

QSeries expand(const FactoredProduct& p, int order) {
  const FactoredProduct n = normalize(p);
  if (n.shift < 0) {
    throw Error(ErrorKind::NegativeShift, "net power of q is " + std::to_string(n.shift));
  }
  QSeries s = QSeries::one(order);
  for (const auto& f : n.finite) {
    for (int k = 0; k < std::abs(f.multiplicity); ++k) {
      if (f.multiplicity > 0) {
        s.mul_one_minus(f.exponent);
      } else {
        s.div_one_minus(f.exponent);
      }
    }
  }
  for (const auto& f : n.infinite) {
    for (int e = f.base; e <= order; e += f.step) {
      for (int k = 0; k < std::abs(f.multiplicity); ++k) {
        if (f.multiplicity > 0) {
          s.mul_one_minus(e);
        } else {
          s.div_one_minus(e);
        }
      }
    }
  }
  if (n.sign < 0) s = -s;
  return s.shifted(n.shift);
}

std::pair<Polynomial, Polynomial> as_rational(const FactoredProduct& p) {
  const FactoredProduct n = normalize(p);
  if (!n.infinite.empty()) throw std::invalid_argument("as_rational: product has infinite families");
  Polynomial num = Polynomial::constant(n.sign);
  Polynomial den = Polynomial::constant(1);
  if (n.shift >= 0) {
    num = num * Polynomial::monomial(n.shift);
  } else {
    den = den * Polynomial::monomial(-n.shift);
  }
  for (const auto& f : n.finite) {
    const Polynomial factor = Polynomial::constant(1) - Polynomial::monomial(f.exponent);
    for (int k = 0; k < std::abs(f.multiplicity); ++k) {
      if (f.multiplicity > 0) {
        num = num * factor;
      } else {
        den = den * factor;
      }
    }
  }
  return {num, den};
}

std::string to_string(const FactoredProduct& p) {
  std::ostringstream os;
  os << (p.sign < 0 ? "-" : "") << "q^" << p.shift;
  for (const auto& f : p.finite) os << " * (1-q^" << f.exponent << ")^" << f.multiplicity;
  for (const auto& f : p.infinite) os << " * (q^" << f.base << ";q^" << f.step << ")_inf^" << f.multiplicity;
  return os.str();
}

}  // namespace rrc
