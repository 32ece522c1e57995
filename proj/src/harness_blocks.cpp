#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rrc/error.hpp"
#include "rrc/harness.hpp"
#include "rrc/parallel.hpp"
#include "rrc/schur.hpp"

namespace rrc {

QSeries rr_sum_side(RrWhich which, int order) {
  const int extra = which == RrWhich::First ? 0 : 1;
  QSeries sum(order);
  for (int n = 0; n * n + extra * n <= order; ++n) {
    FactoredProduct term;
    term.times_q(n * n + extra * n);
    for (int j = 1; j <= n; ++j) term.times_one_minus(j, -1);
    sum += expand(term, order);
  }
  return sum;
}

FactoredProduct rr_product_side(RrWhich which) {
  const int a = which == RrWhich::First ? 1 : 2;
  FactoredProduct p;
  p.times_poch_infinite(a, 5, -1).times_poch_infinite(5 - a, 5, -1);
  return p;
}

QSeries rewrite_term(int n, int order, int top_power) {
  if (n < 0) throw std::invalid_argument("rewrite_term: n must be >= 0");
  FactoredProduct head;
  head.times_q(n * n);
  for (int j = 1; j <= n; ++j) head.times_one_minus(5 * j, -1);
  QSeries term = expand(head, order);
  for (int j = 1; j <= n; ++j) {
    Polynomial inner;
    for (int p = 0; p <= top_power; ++p) inner += Polynomial::monomial(j * p);
    term *= inner.to_series(order);
  }
  return term;
}

std::vector<int> allowed_residues(int k, int i) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be >= 1");
  const int modulus = 2 * k + 3;
  if (i < 1 || i > 2 * k + 2) {
    throw Error(ErrorKind::InvalidParams, "i must lie in 1.." + std::to_string(2 * k + 2));
  }
  if (i == modulus - i) throw Error(ErrorKind::InvalidParams, "i and 2k+3-i coincide");
  std::vector<int> out;
  for (int j = 1; j <= 2 * k + 2; ++j) {
    if (j != i && j != modulus - i) out.push_back(j);
  }
  return out;
}

Alphabet modulus_x_alphabet(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be >= 1");
  return Alphabet::geometric(0, 2 * k + 3);
}

Alphabet modulus_y_alphabet(int k, int i) { return Alphabet::finite_weights(allowed_residues(k, i)); }

std::vector<Partition> shapes_within(const Alphabet& x, const Alphabet& y, int max_rows, int order) {
  if (max_rows < 0) throw Error(ErrorKind::InvalidParams, "max_rows must be >= 0");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Cheapest weight of one cell in row r of a (P, Q) pair.
  auto row_cost = [&](int r) -> std::optional<long> {
    auto wx = x.min_weight_from(r);
    auto wy = y.min_weight_from(r);
    if (!wx || !wy) return std::nullopt;
    return static_cast<long>(*wx) + *wy;
  };
  std::function<void(long)> rec = [&](long used) {
    out.emplace_back(parts);
    const int r = static_cast<int>(parts.size());
    if (r >= max_rows) return;
    auto cost = row_cost(r);
    if (!cost) return;
    if (*cost == 0) throw Error(ErrorKind::InvalidParams, "zero-weight cells make the shape sum infinite");
    const int cap = r == 0 ? order : parts.back();
    for (int len = 1; len <= cap && used + *cost * len <= order; ++len) {
      parts.push_back(len);
      rec(used + *cost * len);
      parts.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

QSeries row_restricted_cauchy_sum(const Alphabet& x, const Alphabet& y, int max_rows, int order, int jobs) {
  const auto shapes = shapes_within(x, y, max_rows, order);
  int max_index = 1;
  for (const auto& s : shapes) max_index = std::max(max_index, s.part(0) + s.length());
  const JacobiTrudiEvaluator sx(x, order, max_index);
  const JacobiTrudiEvaluator sy(y, order, max_index);
  const auto terms = parallel_map(shapes.size(), jobs, [&](std::size_t n) {
    QSeries b = sy(shapes[n]);
    if (b.is_zero()) return b;
    return sx(shapes[n]) * b;
  });
  QSeries sum(order);
  for (const auto& t : terms) sum += t;
  return sum;
}

namespace {

std::vector<Letter> letters_up_to(const Alphabet& a, int order) {
  std::vector<Letter> out;
  if (a.is_finite()) {
    for (const auto& l : a.letters()) {
      if (l.weight <= order) out.push_back(l);
    }
    return out;
  }
  for (int idx = 0; a.letter(idx).weight <= order; ++idx) out.push_back(a.letter(idx));
  return out;
}

}  // namespace

QSeries cauchy_product(const Alphabet& x, const Alphabet& y, int order) {
  QSeries s = QSeries::one(order);
  for (const auto& lx : letters_up_to(x, order)) {
    for (const auto& ly : letters_up_to(y, order)) {
      const int w = lx.weight + ly.weight;
      if (w == 0) throw Error(ErrorKind::InvalidParams, "factor 1/(1 - x_i y_j) with x_i y_j = 1");
      if (w > order) continue;
      s.div_one_minus(w, lx.sign * ly.sign);
    }
  }
  return s;
}

FactoredProduct genthm_coefficient(int k, int i, int p) {
  const auto residues = allowed_residues(k, i);
  if (std::find(residues.begin(), residues.end(), p) == residues.end()) {
    throw Error(ErrorKind::InvalidParams, "p = " + std::to_string(p) + " is not an allowed residue");
  }
  FactoredProduct a;
  for (int j : residues) {
    if (j != p) a.times_one_minus(j - p, -1);
  }
  return normalize(a);
}

bool same_rational(const Polynomial& n1, const Polynomial& d1, const Polynomial& n2, const Polynomial& d2) {
  return n1 * d2 == n2 * d1;
}

// ---------------------------------------------------------------------------
// Tables of (P, Q) classes

namespace {

using Rows = std::vector<std::vector<int>>;

PatternCell zero() { return {0, 0}; }
PatternCell free_cell(int at_least = 0) { return {-1, at_least}; }

// Row pattern (0, ..., 0, y, x) of the given length: `zeros` fixed zeros followed by free cells.
std::vector<PatternCell> zeros_then_free(int zeros, int free, int first_free_at_least = 0) {
  std::vector<PatternCell> row(static_cast<std::size_t>(zeros), zero());
  for (int f = 0; f < free; ++f) row.push_back(free_cell(f == 0 ? first_free_at_least : 0));
  return row;
}

// Q row made of `ones` 1s followed by `fours` 4s.
std::vector<int> q_row(int ones, int fours) {
  std::vector<int> r(static_cast<std::size_t>(ones), 1);
  r.insert(r.end(), static_cast<std::size_t>(fours), 4);
  return r;
}

FactoredProduct denominator_5() {
  FactoredProduct d;
  d.times_one_minus(5, -1);
  return d;
}

FactoredProduct denominator_5_10() {
  FactoredProduct d;
  d.times_one_minus(5, -1).times_one_minus(10, -1);
  return d;
}

// One table2 class; `a` is the printed A value.
TableClass class_n2(const std::string& label, const Partition& shape, std::vector<std::vector<PatternCell>> pattern,
                    Rows q, int a) {
  return TableClass{label, shape, std::move(pattern), {std::move(q)}, Polynomial::monomial(a), denominator_5_10()};
}

}  // namespace

std::vector<TableClass> table1_classes() {
  return {
      {"1", Partition{1}, {{free_cell()}}, {{{1}}, {{4}}},
       Polynomial::monomial(1) + Polynomial::monomial(4), denominator_5()},
      {"2", Partition{2}, {zeros_then_free(1, 1)}, {{q_row(2, 0)}, {q_row(1, 1)}},
       Polynomial::monomial(2) + Polynomial::monomial(5), denominator_5()},
      {"3", Partition{3}, {zeros_then_free(2, 1)}, {{q_row(3, 0)}}, Polynomial::monomial(3), denominator_5()},
  };
}

std::vector<TableClass> table2_classes() {
  std::vector<TableClass> out;
  // lambda = 2: ((y,x), (1,1) or (1,4)) with y >= 5, A = 12, 15; ((y,x), (4,4)), A = 8.
  out.push_back(class_n2("2", Partition{2}, {zeros_then_free(0, 2, 5)}, {q_row(2, 0)}, 12));
  out.push_back(class_n2("2", Partition{2}, {zeros_then_free(0, 2, 5)}, {q_row(1, 1)}, 15));
  out.push_back(class_n2("2", Partition{2}, {zeros_then_free(0, 2)}, {q_row(0, 2)}, 8));
  // lambda = 3: ((0,y,x), (1,1,4) or (1,4,4) or (4,4,4)), A = 6, 9, 12.
  const int a3[] = {6, 9, 12};
  for (int fours = 1; fours <= 3; ++fours) {
    out.push_back(class_n2("3", Partition{3}, {zeros_then_free(1, 2)}, {q_row(3 - fours, fours)}, a3[fours - 1]));
  }
  // lambda = 4: ((0,0,y,x), 1111 .. 4444), A = 4, 7, 10, 13, 16.
  const int a4[] = {4, 7, 10, 13, 16};
  for (int fours = 0; fours <= 4; ++fours) {
    out.push_back(class_n2("4", Partition{4}, {zeros_then_free(2, 2)}, {q_row(4 - fours, fours)}, a4[fours]));
  }
  // lambda = 5: ((0,0,0,y,x), 11111 .. 11444), A = 5, 8, 11, 14.
  const int a5[] = {5, 8, 11, 14};
  for (int fours = 0; fours <= 3; ++fours) {
    out.push_back(class_n2("5", Partition{5}, {zeros_then_free(3, 2)}, {q_row(5 - fours, fours)}, a5[fours]));
  }
  // lambda = 6, 7, 8: zeros then (y,x), Q with at most two 4s.
  const int a678[3][3] = {{6, 9, 12}, {7, 10, 13}, {8, 11, 14}};
  for (int len = 6; len <= 8; ++len) {
    for (int fours = 0; fours <= 2; ++fours) {
      out.push_back(class_n2(std::to_string(len), Partition(std::vector<int>{len}), {zeros_then_free(len - 2, 2)},
                             {q_row(len - fours, fours)}, a678[len - 6][fours]));
    }
  }
  // lambda = (1,1): (transpose (y,x), x > y, transpose (1,4)), A = 10.
  out.push_back(class_n2("(1,1)", Partition{1, 1}, {{free_cell()}, {free_cell()}}, {{1}, {4}}, 10));
  return out;
}

Polynomial table2_numerator() {
  // q^4 + q^5 + 2q^6 + 2q^7 + 3q^8 + 2q^9 + 3q^10 + 2q^11 + 3q^12 + 2q^13 + 2q^14 + q^15 + q^16
  const int coeffs[] = {1, 1, 2, 2, 3, 2, 3, 2, 3, 2, 2, 1, 1};
  Polynomial p;
  for (int e = 4; e <= 16; ++e) p += Polynomial::monomial(e, coeffs[e - 4]);
  return p;
}

QSeries class_genfun(const TableClass& c, int order) {
  QSeries p_side(order);
  for (const auto& t : enumerate_ssyt(c.shape, Alphabet::geometric(0, 5), order)) {
    bool match = true;
    for (std::size_t r = 0; r < c.pattern.size() && match; ++r) {
      for (std::size_t col = 0; col < c.pattern[r].size() && match; ++col) {
        const PatternCell& cell = c.pattern[r][col];
        const int v = t.rows[r][col];
        match = cell.fixed >= 0 ? v == cell.fixed : v >= cell.at_least;
      }
    }
    if (match) p_side += QSeries::monomial(t.entry_sum(), 1, order);
  }
  QSeries q_side(order);
  for (const auto& rows : c.q_fillings) {
    const Tableau q{c.shape, rows};
    if (!validate(q)) throw std::invalid_argument("class " + c.label + ": Q filling is not column-strict");
    q_side += QSeries::monomial(q.entry_sum(), 1, order);
  }
  return p_side * q_side;
}

}  // namespace rrc
