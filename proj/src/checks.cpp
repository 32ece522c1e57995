#include <chrono>
#include <set>
#include <sstream>
#include <utility>

#include "rrc/error.hpp"
#include "rrc/harness.hpp"
#include "rrc/parallel.hpp"
#include "rrc/rsk.hpp"
#include "rrc/schur.hpp"
#include "rrc/xyseries.hpp"

namespace rrc {

namespace {

// Runs body(report) and stamps the wall time.
template <class Body>
IdentityReport timed(std::string name, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r;
  r.identity = std::move(name);
  body(r);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Compares two series and records the first mismatch; returns true on agreement.
bool record(IdentityReport& r, const QSeries& lhs, const QSeries& rhs) {
  if (auto m = first_mismatch(lhs, rhs)) {
    r.fail(*m);
    return false;
  }
  return true;
}

std::optional<Mismatch> first_mismatch(const Polynomial& a, const Polynomial& b) {
  for (int e = 0; e <= std::max(a.degree(), b.degree()); ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return Mismatch{e, a.coefficient(e), b.coefficient(e)};
  }
  return std::nullopt;
}

// Same alphabet with its largest letter moved up by one.
Alphabet raise_largest_letter(const Alphabet& y) {
  auto letters = y.letters();
  letters.back().label += 1;
  letters.back().weight += 1;
  return Alphabet::finite(std::move(letters));
}

}  // namespace

IdentityReport verify_rr(RrWhich which, int order, const CheckOptions& opt) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "order must be >= 0");
  return timed("rr", [&](IdentityReport& r) {
    r.params["which"] = which == RrWhich::First ? 1 : 2;
    r.order = order;
    FactoredProduct product = rr_product_side(which);
    if (opt.mutate) {
      product = FactoredProduct{};
      if (which == RrWhich::First) {
        product.times_poch_infinite(1, 5, -1).times_poch_infinite(3, 5, -1);
      } else {
        product.times_poch_infinite(2, 5, -1).times_poch_infinite(4, 5, -1);
      }
    }
    record(r, rr_sum_side(which, order), expand(product, order));
  });
}

IdentityReport verify_rr_sum_rewrite(int order, const CheckOptions& opt) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "order must be >= 0");
  return timed("rr-rewrite", [&](IdentityReport& r) {
    r.order = order;
    const int top = opt.mutate ? 3 : 4;
    QSeries rewritten(order);
    for (int n = 0; n * n <= order; ++n) {
      FactoredProduct term;
      term.times_q(n * n);
      for (int j = 1; j <= n; ++j) term.times_one_minus(j, -1);
      const QSeries f_n = rewrite_term(n, order, top);
      rewritten += f_n;
      if (!record(r, expand(term, order), f_n)) {
        r.details.push_back("term n=" + std::to_string(n) + " differs");
        return;
      }
      r.details.push_back("term n=" + std::to_string(n) + " agrees");
    }
    record(r, rr_sum_side(RrWhich::First, order), rewritten);
  });
}

IdentityReport verify_cauchy_restricted(const Alphabet& x, const Alphabet& y, int order, int max_rows,
                                        const CheckOptions& opt) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "order must be >= 0");
  if (!y.is_finite() || *y.size() > max_rows) {
    throw Error(ErrorKind::InvalidParams, "y must be finite with at most max_rows letters");
  }
  return timed("cauchy", [&](IdentityReport& r) {
    r.params["rows"] = max_rows;
    r.order = order;
    const Alphabet schur_y = opt.mutate && *y.size() > 0 ? raise_largest_letter(y) : y;
    r.details.push_back("x = " + x.describe() + ", y = " + y.describe() + ", shapes = " +
                        std::to_string(shapes_within(x, schur_y, max_rows, order).size()));
    record(r, row_restricted_cauchy_sum(x, schur_y, max_rows, order, opt.jobs), cauchy_product(x, y, order));
  });
}

namespace {

void check_table(IdentityReport& r, const std::vector<TableClass>& classes, int order, bool show_a) {
  for (const auto& c : classes) {
    const QSeries expected = c.expected_numerator.to_series(order) * expand(c.expected_denominator, order);
    const QSeries got = class_genfun(c, order);
    std::ostringstream line;
    line << "lambda=" << c.label << " Q=";
    for (std::size_t f = 0; f < c.q_fillings.size(); ++f) {
      line << (f ? " or " : "") << to_string(Tableau{c.shape, c.q_fillings[f]});
    }
    if (show_a) {
      line << " A=" << c.expected_numerator.degree();
    } else {
      line << " numerator=" << to_string(c.expected_numerator);
    }
    const bool ok = record(r, got, expected);
    line << (ok ? " ok" : " MISMATCH");
    r.details.push_back(line.str());
    if (!ok) return;
  }
}

}  // namespace

IdentityReport verify_table1(const CheckOptions& opt) {
  return timed("table1", [&](IdentityReport& r) {
    const int order = 60;
    r.order = order;
    auto classes = table1_classes();
    if (opt.mutate) classes[0].expected_numerator = Polynomial::monomial(1) + Polynomial::monomial(3);
    check_table(r, classes, order, false);
    if (r.status == Status::Fail) return;
    // The rows together make up the n = 1 term q/(1-q).
    QSeries total(order);
    for (const auto& c : classes) total += class_genfun(c, order);
    FactoredProduct n1;
    n1.times_q(1).times_one_minus(1, -1);
    if (record(r, total, expand(n1, order))) r.details.push_back("sum of rows = q/(1-q)");
  });
}

IdentityReport verify_table2(const CheckOptions& opt) {
  return timed("table2", [&](IdentityReport& r) {
    const int order = 60;
    r.order = order;
    auto classes = table2_classes();
    if (opt.mutate) classes.back().expected_numerator = Polynomial::monomial(11);
    r.params["classes"] = static_cast<long long>(classes.size());
    check_table(r, classes, order, true);
    if (r.status == Status::Fail) return;

    Polynomial a_values;
    QSeries total(order);
    for (const auto& c : classes) {
      a_values += c.expected_numerator;
      total += class_genfun(c, order);
    }
    if (auto m = first_mismatch(a_values, table2_numerator())) {
      r.fail(*m);
      r.details.push_back("A values do not reproduce the n=2 numerator");
      return;
    }
    r.details.push_back("sum of q^A = " + to_string(a_values));
    FactoredProduct n2;
    n2.times_q(4).times_one_minus(1, -1).times_one_minus(2, -1);
    FactoredProduct den;
    den.times_one_minus(5, -1).times_one_minus(10, -1);
    if (!record(r, table2_numerator().to_series(order) * expand(den, order), expand(n2, order))) return;
    if (record(r, total, expand(n2, order))) r.details.push_back("sum of classes = q^4/((1-q)(1-q^2))");
  });
}

IdentityReport verify_proposition_rsk(int n_max, const CheckOptions& opt) {
  if (n_max < 0) throw Error(ErrorKind::InvalidParams, "n_max must be >= 0");
  return timed("rsk", [&](IdentityReport& r) {
    r.params["n_max"] = n_max;
    r.order = n_max;
    const PartitionConstraint mod5 = residues_mod(5, {1, 4});
    std::vector<Rational> good(static_cast<std::size_t>(n_max + 1));
    std::vector<Rational> expected(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
      std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
      for (const auto& p : generate(n, mod5)) {
        TableauPair pq = partition_to_pq(p);
        if (opt.mutate) {
          for (auto& row : pq.q.rows) std::fill(row.begin(), row.end(), 1);
        }
        bool ok = pq.p.shape == pq.q.shape && pq.p.shape.length() <= 2 && validate(pq.p) && validate(pq.q) &&
                  pq.p.entry_sum() + pq.q.entry_sum() == n;
        for (const auto& row : pq.p.rows) {
          for (int v : row) ok = ok && v % 5 == 0;
        }
        for (const auto& row : pq.q.rows) {
          for (int v : row) ok = ok && (v == 1 || v == 4);
        }
        if (ok) {
          try {
            ok = pq_to_partition(pq) == p;
          } catch (const Error&) {
            ok = false;
          }
        }
        if (ok) images.emplace(pq.p.rows, pq.q.rows);
      }
      good[static_cast<std::size_t>(n)] = static_cast<long>(images.size());
      expected[static_cast<std::size_t>(n)] = mpz_class(std::to_string(count(n, mod5)));
    }
    if (record(r, QSeries(n_max, good), QSeries(n_max, expected))) {
      r.details.push_back("bijective, weight-preserving and round-tripping for all n <= " + std::to_string(n_max));
    }
  });
}

IdentityReport verify_xyrr(int order, int degree_cap, const CheckOptions& opt) {
  if (order < 0 || degree_cap < 0) throw Error(ErrorKind::InvalidParams, "order and degree cap must be >= 0");
  return timed("xyrr", [&](IdentityReport& r) {
    r.params["degree_cap"] = degree_cap;
    r.order = order;
    const XYSeries lhs = xy_from_pochhammer(Marker::X, 1, 5, order, degree_cap) *
                        xy_from_pochhammer(Marker::Y, 4, 5, order, degree_cap);
    const int step = opt.mutate ? 2 : 3;
    XYSeries rhs(order, degree_cap);
    for (int a = 0; 2 * a <= degree_cap && 10 * a <= order; ++a) {
      for (int b = 0; 2 * a + b <= degree_cap && 10 * a + b <= order; ++b) {
        const QSeries base = schur_principal_2row(a, b, order).shifted(5 * a + b);
        for (int k = 0; k <= b; ++k) rhs.add_term(a + b - k, a + k, base.shifted(std::min(step * k, order + 1)));
      }
    }
    if (auto m = first_mismatch(lhs, rhs)) {
      r.fail(m->at);
      r.details.push_back("coefficient of x^" + std::to_string(m->alpha) + " y^" + std::to_string(m->beta) +
                          " differs");
    } else {
      r.details.push_back(std::to_string(lhs.terms().size()) + " (x,y)-coefficients agree");
    }
  });
}

IdentityReport verify_finite_identity(int n_max, const CheckOptions& opt) {
  if (n_max < 1) throw Error(ErrorKind::InvalidParams, "N_max must be >= 1");
  return timed("finite", [&](IdentityReport& r) {
    r.params["n_max"] = n_max;
    int max_degree = 0;
    // (q;q)_j for j <= n_max and the current row of the q-Pascal triangle.
    std::vector<Polynomial> poch{Polynomial::constant(1)};
    for (int j = 1; j <= n_max; ++j) {
      poch.push_back(poch.back() * (Polynomial::constant(1) - Polynomial::monomial(j)));
    }
    std::vector<Polynomial> binom{Polynomial::constant(1)};
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Polynomial> next(static_cast<std::size_t>(n + 1), Polynomial::constant(1));
      for (int a = 1; a < n; ++a) {
        next[static_cast<std::size_t>(a)] =
            binom[static_cast<std::size_t>(a - 1)] + Polynomial::monomial(a) * binom[static_cast<std::size_t>(a)];
      }
      binom = std::move(next);
      Polynomial lhs;
      for (int m = 0; m <= n - 1; ++m) {
        lhs += binom[static_cast<std::size_t>(m)] * (Polynomial::monomial(m) - Polynomial::monomial(n - m));
        const int tail = opt.mutate ? n - m : n - m - 1;
        // lhs = (q;q)_N / ((q;q)_M (q;q)_tail), checked without dividing.
        const Polynomial crossed = lhs * (poch[static_cast<std::size_t>(m)] * poch[static_cast<std::size_t>(tail)]);
        const Polynomial& numerator = poch[static_cast<std::size_t>(n)];
        const int deg = std::max(crossed.degree(), numerator.degree());
        max_degree = std::max(max_degree, deg);
        r.order = max_degree;
        if (auto mm = first_mismatch(crossed, numerator)) {
          r.fail(*mm);
          r.details.push_back("first failure at N=" + std::to_string(n) + " M=" + std::to_string(m) +
                              " (compared after clearing denominators)");
          return;
        }
      }
    }
    r.details.push_back("all pairs 1 <= N <= " + std::to_string(n_max) + ", 0 <= M <= N-1 agree");
  });
}

IdentityReport verify_genthm(int k, int i, int order, const CheckOptions& opt) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "order must be >= 0");
  const auto residues = allowed_residues(k, i);
  return timed("genthm", [&](IdentityReport& r) {
    r.params["k"] = k;
    r.params["i"] = i;
    r.order = order;
    const int modulus = 2 * k + 3;
    const Alphabet x = modulus_x_alphabet(k);
    const Alphabet y = modulus_y_alphabet(k, i);
    const Alphabet schur_y = opt.mutate ? raise_largest_letter(y) : y;

    // One-row shapes: sum_N s_(N)(x) s_(N)(y).
    const int n_top = order / *schur_y.min_weight_from(0);
    const JacobiTrudiEvaluator sx(x, order, n_top + 1);
    const JacobiTrudiEvaluator sy(schur_y, order, n_top + 1);
    QSeries lhs(order);
    for (int n = 0; n <= n_top; ++n) {
      const Partition row = n == 0 ? Partition{} : Partition{n};
      lhs += sx(row) * sy(row);
    }

    QSeries rhs(order);
    std::vector<QSeries> coefficient_series;
    for (int p : residues) {
      const FactoredProduct a_p = genthm_coefficient(k, i, p);
      r.details.push_back("A_" + std::to_string(p) + " = " + to_string(a_p));
      FactoredProduct term = a_p;
      term.times_poch_infinite(p, modulus, -1);
      rhs += expand(term, order);
      coefficient_series.push_back(expand(a_p, order));
    }
    if (!record(r, lhs, rhs)) return;

    // Partial fractions: sum_p A_p q^{pN} = s_(N)(y).
    const JacobiTrudiEvaluator hy(y, order, 11);
    for (int n = 0; n <= 10; ++n) {
      QSeries pf(order);
      for (std::size_t t = 0; t < residues.size(); ++t) {
        pf += coefficient_series[t].shifted(std::min(residues[t] * n, order + 1));
      }
      if (!record(r, pf, hy(n == 0 ? Partition{} : Partition{n}))) {
        r.details.push_back("partial fractions fail at N=" + std::to_string(n));
        return;
      }
    }
    r.details.push_back("partial fractions agree for N <= 10");
  });
}

IdentityReport verify_borwein(int n_max, int order, const CheckOptions& opt) {
  if (n_max < 0 || order < 0) throw Error(ErrorKind::InvalidParams, "n_max and order must be >= 0");
  return timed("borwein", [&](IdentityReport& r) {
    r.params["n_max"] = n_max;
    r.order = order;
    const Alphabet y = Alphabet::finite_weights({1, 2});
    for (int n = 0; n <= n_max; ++n) {
      std::vector<int> xs;
      for (int t = 0; t < n; ++t) xs.push_back(3 * t);
      const Alphabet x = Alphabet::finite_weights(xs);
      const JacobiTrudiEvaluator sx(x, order, n + 3);
      const JacobiTrudiEvaluator sy(y, order, n + 3);
      QSeries lhs(order);
      // lambda = (2^a, 1^b) with a + b <= n; its conjugate is (a + b, a).
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
          std::vector<int> parts(static_cast<std::size_t>(a), 2);
          parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
          const Partition lambda(parts);
          const Partition dual = conjugate(lambda);
          QSeries term = sx(lambda) * sy(dual);
          if (!opt.mutate && lambda.weight() % 2 != 0) term = -term;
          lhs += term;
        }
      }
      const QSeries rhs = poch_finite(1, 3, n, order) * poch_finite(2, 3, n, order);
      if (!record(r, lhs, rhs)) {
        r.details.push_back("fails at n=" + std::to_string(n));
        return;
      }
    }
    r.details.push_back("all n <= " + std::to_string(n_max) + " agree");
  });
}

IdentityReport verify_macmahon(int n_max, const CheckOptions& opt) {
  if (n_max < 0) throw Error(ErrorKind::InvalidParams, "n_max must be >= 0");
  return timed("macmahon", [&](IdentityReport& r) {
    r.params["n_max"] = n_max;
    r.order = n_max;
    const int gap = opt.mutate ? 1 : 2;
    if (!record(r, counting_series(residues_mod(5, {1, 4}), n_max), counting_series(gap_at_least(gap), n_max))) {
      r.details.push_back("first identity classes differ");
      return;
    }
    r.details.push_back("parts = +-1 mod 5 vs gap >= 2: equal");
    if (!record(r, counting_series(residues_mod(5, {2, 3}), n_max), counting_series(gap_at_least(gap, 2), n_max))) {
      r.details.push_back("second identity classes differ");
      return;
    }
    r.details.push_back("parts = +-2 mod 5 vs gap >= 2, parts >= 2: equal");
  });
}

}  // namespace rrc
