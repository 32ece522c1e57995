#include "rrc/schur.hpp"

#include <optional>
#include <stdexcept>

#include "rrc/error.hpp"
#include "rrc/factored.hpp"

namespace rrc {

std::string_view to_string(SchurStrategy s) {
  switch (s) {
    case SchurStrategy::SsytSum: return "SsytSum";
    case SchurStrategy::JacobiTrudi: return "JacobiTrudi";
    case SchurStrategy::ClosedForm: return "ClosedForm";
  }
  return "Unknown";
}

std::vector<QSeries> h_complete_table(int max_m, const Alphabet& a, int order) {
  if (max_m < 0) throw std::invalid_argument("h_complete_table: negative index");
  std::vector<QSeries> h(static_cast<std::size_t>(max_m + 1), QSeries(order));
  h[0] = QSeries::one(order);

  if (!a.is_finite()) {
    // h_m(q^b, q^{b+s}, ...) = q^{bm} / (q^s; q^s)_m
    for (int m = 1; m <= max_m; ++m) {
      QSeries next = h[static_cast<std::size_t>(m - 1)];
      next.div_one_minus(a.step() * m);
      h[static_cast<std::size_t>(m)] = next.shifted(a.base());
    }
    return h;
  }

  // Adjoin letters one at a time: h_m(new) = h_m(old) + (sign q^w) h_{m-1}(new).
  for (const Letter& l : a.letters()) {
    for (int m = 1; m <= max_m; ++m) {
      QSeries term = h[static_cast<std::size_t>(m - 1)].shifted(std::min(l.weight, order + 1));
      if (l.sign < 0) {
        h[static_cast<std::size_t>(m)] -= term;
      } else {
        h[static_cast<std::size_t>(m)] += term;
      }
    }
  }
  return h;
}

QSeries h_complete(int m, const Alphabet& a, int order) {
  if (m < 0) throw std::invalid_argument("h_complete: negative index");
  return h_complete_table(m, a, order)[static_cast<std::size_t>(m)];
}

namespace {

// Laplace expansion along rows, memoized on the set of columns already used.
QSeries jacobi_trudi_det(const Partition& shape, const std::vector<QSeries>& h, int order) {
  const int r = shape.length();
  if (r == 0) return QSeries::one(order);
  auto entry = [&](int i, int j) -> const QSeries* {
    const int idx = shape.part(i) - i + j;
    if (idx < 0) return nullptr;
    if (idx >= static_cast<int>(h.size())) throw std::out_of_range("Jacobi-Trudi: h table too small");
    return &h[static_cast<std::size_t>(idx)];
  };
  std::vector<std::optional<QSeries>> memo(std::size_t{1} << r);
  memo[(std::size_t{1} << r) - 1] = QSeries::one(order);

  // minor(mask) = determinant of rows popcount(mask).. r-1 over the columns not in mask.
  auto minor = [&](auto&& self, std::size_t mask) -> const QSeries& {
    if (memo[mask]) return *memo[mask];
    const int row = __builtin_popcountll(mask);
    QSeries total(order);
    int free_before = 0;
    for (int c = 0; c < r; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const QSeries* e = entry(row, c);
      if (e != nullptr && !e->is_zero()) {
        const QSeries& sub = self(self, mask | (std::size_t{1} << c));
        if (!sub.is_zero()) {
          QSeries prod = *e * sub;
          if (free_before % 2 == 0) {
            total += prod;
          } else {
            total -= prod;
          }
        }
      }
      ++free_before;
    }
    memo[mask] = std::move(total);
    return *memo[mask];
  };
  return minor(minor, 0);
}

bool has_more_rows_than_letters(const Partition& shape, const Alphabet& a) {
  return a.is_finite() && shape.length() > *a.size();
}

QSeries signed_power(const Letter& l, int n, int order) {
  const long e = static_cast<long>(l.weight) * n;
  const int sgn = (l.sign < 0 && n % 2 != 0) ? -1 : 1;
  return e > order ? QSeries(order) : QSeries::monomial(static_cast<int>(e), sgn, order);
}

}  // namespace

QSeries schur_jacobi_trudi(const Partition& shape, const Alphabet& a, int order) {
  if (has_more_rows_than_letters(shape, a)) return QSeries(order);
  const int max_index = shape.part(0) + shape.length();
  return jacobi_trudi_det(shape, h_complete_table(max_index, a, order), order);
}

QSeries schur_principal_2row(int a, int b, int order, int step) {
  if (a < 0 || b < 0 || step < 1) throw std::invalid_argument("schur_principal_2row: need a, b >= 0, step >= 1");
  FactoredProduct p;
  p.times_q(step * a);
  for (int t = 1; t <= a; ++t) p.times_one_minus(step * t, -1);
  for (int t = 1; t <= b; ++t) p.times_one_minus(step * t, -1);
  for (int t = 0; t < a; ++t) p.times_one_minus(step * (b + 2 + t), -1);
  return expand(p, order);
}

Polynomial schur_y_2row(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("schur_y_2row: need a, b >= 0");
  Polynomial p;
  for (int k = 0; k <= b; ++k) p += Polynomial::monomial(5 * a + b + 3 * k);
  return p;
}

QSeries schur_closed_form(const Partition& shape, const Alphabet& a, int order) {
  if (shape.empty()) return QSeries::one(order);
  if (has_more_rows_than_letters(shape, a)) return QSeries(order);

  if (!a.is_finite()) {
    const int shift = a.base() * shape.weight();
    if (shape.length() <= 2) {
      const int lower = shape.part(1);
      const QSeries principal = schur_principal_2row(lower, shape.part(0) - lower, order, a.step());
      return principal.shifted(std::min(shift, order + 1));
    }
    // Hook-content: s_shape(1, t, t^2, ...) = t^{n(shape)} / prod (1 - t^hook), t = q^step.
    const Partition cols = conjugate(shape);
    FactoredProduct p;
    int n_shape = 0;
    for (int i = 0; i < shape.length(); ++i) {
      n_shape += i * shape.part(i);
      for (int j = 0; j < shape.part(i); ++j) {
        const int hook = (shape.part(i) - j - 1) + (cols.part(j) - i - 1) + 1;
        p.times_one_minus(a.step() * hook, -1);
      }
    }
    p.times_q(shift + a.step() * n_shape);
    return expand(p, order);
  }

  const int letters = *a.size();
  if (letters == 1) {
    return signed_power(a.letter(0), shape.part(0), order);
  }
  if (letters == 2) {
    // s_{(l+b, l)}(x1, x2) = (x1 x2)^l sum_k x1^{b-k} x2^k
    const int lower = shape.part(1);
    const int b = shape.part(0) - lower;
    const QSeries both = signed_power(a.letter(0), lower, order) * signed_power(a.letter(1), lower, order);
    QSeries sum(order);
    for (int k = 0; k <= b; ++k) sum += signed_power(a.letter(0), b - k, order) * signed_power(a.letter(1), k, order);
    return both * sum;
  }
  throw Error(ErrorKind::UnsupportedClosedForm,
              "no product formula for shape " + to_string(shape) + " over " + a.describe());
}

QSeries schur(const Partition& shape, const Alphabet& a, int order, SchurStrategy strategy) {
  switch (strategy) {
    case SchurStrategy::SsytSum: return weight_genfun(shape, a, order);
    case SchurStrategy::JacobiTrudi: return schur_jacobi_trudi(shape, a, order);
    case SchurStrategy::ClosedForm: return schur_closed_form(shape, a, order);
  }
  throw std::invalid_argument("unknown Schur strategy");
}

JacobiTrudiEvaluator::JacobiTrudiEvaluator(const Alphabet& a, int order, int max_index)
    : order_(order), h_(h_complete_table(max_index, a, order)) {
  if (a.is_finite()) letters_ = *a.size();
}

QSeries JacobiTrudiEvaluator::operator()(const Partition& shape) const {
  if (letters_ && shape.length() > *letters_) return QSeries(order_);
  return jacobi_trudi_det(shape, h_, order_);
}

}  // namespace rrc
