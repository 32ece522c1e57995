#include "rrc/xyseries.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rrc {

XYSeries::XYSeries(int order, int degree_cap) : order_(order), degree_cap_(degree_cap) {
  if (order < 0 || degree_cap < 0) throw std::invalid_argument("XYSeries: negative order or degree cap");
}

XYSeries XYSeries::one(int order, int degree_cap) {
  XYSeries s(order, degree_cap);
  s.terms_.emplace(Key{0, 0}, QSeries::one(order));
  return s;
}

QSeries XYSeries::coefficient(int alpha, int beta) const {
  auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? QSeries(order_) : it->second.truncated(order_);
}

void XYSeries::add_term(int alpha, int beta, const QSeries& c) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("XYSeries: negative degree");
  if (alpha + beta > degree_cap_) return;
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, QSeries(order_));
  it->second += c;
}

QSeries XYSeries::collapse() const {
  QSeries s(order_);
  for (const auto& [key, c] : terms_) s += c;
  return s;
}

XYSeries operator+(const XYSeries& lhs, const XYSeries& rhs) {
  XYSeries out(std::min(lhs.order_, rhs.order_), std::min(lhs.degree_cap_, rhs.degree_cap_));
  for (const auto& [k, c] : lhs.terms_) out.add_term(k.first, k.second, c.truncated(out.order_));
  for (const auto& [k, c] : rhs.terms_) out.add_term(k.first, k.second, c.truncated(out.order_));
  return out;
}

XYSeries operator*(const XYSeries& lhs, const XYSeries& rhs) {
  XYSeries out(std::min(lhs.order_, rhs.order_), std::min(lhs.degree_cap_, rhs.degree_cap_));
  for (const auto& [ka, a] : lhs.terms_) {
    for (const auto& [kb, b] : rhs.terms_) {
      const int alpha = ka.first + kb.first;
      const int beta = ka.second + kb.second;
      if (alpha + beta > out.degree_cap_) continue;
      out.add_term(alpha, beta, a * b);
    }
  }
  return out;
}

XYSeries xy_from_pochhammer(Marker marker, int a, int m, int order, int degree_cap) {
  if (a < 1 || m < 1) throw std::invalid_argument("xy_from_pochhammer: need a >= 1, m >= 1");
  // slices[d] = coefficient of marker^d; each factor 1/(1 - marker q^e)
  // updates slices[d] += q^e slices[d-1] in increasing d.
  std::vector<QSeries> slices(static_cast<std::size_t>(degree_cap + 1), QSeries(order));
  slices[0] = QSeries::one(order);
  for (int e = a; e <= order; e += m) {
    for (int d = 1; d <= degree_cap; ++d) {
      slices[static_cast<std::size_t>(d)] += slices[static_cast<std::size_t>(d - 1)].shifted(e);
    }
  }
  XYSeries out(order, degree_cap);
  for (int d = 0; d <= degree_cap; ++d) {
    const auto& c = slices[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (marker == Marker::X) {
      out.add_term(d, 0, c);
    } else {
      out.add_term(0, d, c);
    }
  }
  return out;
}

std::optional<XYMismatch> first_mismatch(const XYSeries& lhs, const XYSeries& rhs) {
  std::set<XYSeries::Key> keys;
  for (const auto& [k, c] : lhs.terms()) keys.insert(k);
  for (const auto& [k, c] : rhs.terms()) keys.insert(k);
  std::optional<XYMismatch> best;
  auto rank = [](const XYMismatch& m) {
    return std::make_tuple(m.at.exponent, m.alpha + m.beta, m.alpha);
  };
  for (const auto& [alpha, beta] : keys) {
    if (alpha + beta > std::min(lhs.degree_cap(), rhs.degree_cap())) continue;
    auto mm = first_mismatch(lhs.coefficient(alpha, beta), rhs.coefficient(alpha, beta));
    if (!mm) continue;
    XYMismatch cand{alpha, beta, *mm};
    if (!best || rank(cand) < rank(*best)) best = cand;
  }
  return best;
}

}  // namespace rrc
