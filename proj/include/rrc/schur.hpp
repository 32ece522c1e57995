#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rrc/partitions.hpp"
#include "rrc/qseries.hpp"
#include "rrc/tableaux.hpp"

namespace rrc {

/// Independent routes to a specialized Schur function.
enum class SchurStrategy { SsytSum, JacobiTrudi, ClosedForm };

std::string_view to_string(SchurStrategy s);

/// Complete homogeneous symmetric function h_m at the alphabet.
QSeries h_complete(int m, const Alphabet& a, int order);
/// h_0 .. h_max_m in one pass.
std::vector<QSeries> h_complete_table(int max_m, const Alphabet& a, int order);

/// Evaluates s_shape at the alphabet, truncated at order.
QSeries schur(const Partition& shape, const Alphabet& a, int order, SchurStrategy strategy);

/// det(h_{shape_i - i + j}); h with negative index is zero.
QSeries schur_jacobi_trudi(const Partition& shape, const Alphabet& a, int order);

/// Product formulas; throws UnsupportedClosedForm outside the supported
/// patterns (geometric alphabets, finite alphabets with at most two letters,
/// and shapes with more rows than a finite alphabet has letters).
QSeries schur_closed_form(const Partition& shape, const Alphabet& a, int order);

/// s_{(a+b,a)}(1, q^step, q^{2 step}, ...)
///   = q^{step a} / ((q^step;q^step)_a (q^step;q^step)_b (q^{step(b+2)};q^step)_a).
QSeries schur_principal_2row(int a, int b, int order, int step = 5);

/// s_{(a+b,a)}(q, q^4) = q^{5a+b} sum_{k=0}^{b} q^{3k}.
Polynomial schur_y_2row(int a, int b);

/// Jacobi-Trudi evaluation sharing one table of h_m across many shapes.
class JacobiTrudiEvaluator {
 public:
  /// Shapes with first part + length <= max_index + 1 can be evaluated.
  JacobiTrudiEvaluator(const Alphabet& a, int order, int max_index);

  QSeries operator()(const Partition& shape) const;
  int order() const noexcept { return order_; }

 private:
  int order_;
  std::optional<int> letters_;
  std::vector<QSeries> h_;
};

}  // namespace rrc
