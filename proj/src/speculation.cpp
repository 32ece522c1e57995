#include <chrono>
#include <cmath>
#include <functional>

#include "rrc/error.hpp"
#include "rrc/harness.hpp"
#include "rrc/linsolve.hpp"

namespace rrc {

namespace {

// All R-element subsets of `from` (multisets when repeats are allowed), in
// lexicographic order.
std::vector<std::vector<int>> choose(const std::vector<int>& from, int r, bool repeats) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    for (std::size_t t = start; t < from.size(); ++t) {
      current.push_back(from[t]);
      rec(repeats ? t : t + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

IdentityReport probe_speculation(const SpeculationConfig& cfg) {
  const auto residues = allowed_residues(cfg.k, cfg.i);
  if (cfg.rows < 1 || cfg.rows > 2 * cfg.k) {
    throw Error(ErrorKind::InvalidParams, "rows must lie in 1.." + std::to_string(2 * cfg.k));
  }
  if (cfg.order < 1) throw Error(ErrorKind::InvalidParams, "order must be >= 1");
  if (!(cfg.margin_fraction > 0.0 && cfg.margin_fraction < 1.0)) {
    throw Error(ErrorKind::InvalidParams, "margin fraction must lie strictly between 0 and 1");
  }
  const int modulus = 2 * cfg.k + 3;
  const int den_degree = cfg.denominator_degree >= 0 ? cfg.denominator_degree : 2 * cfg.k + 1;
  const int num_degree = cfg.numerator_degree >= 0 ? cfg.numerator_degree : den_degree * (den_degree + 1) / 2;

  const auto start = std::chrono::steady_clock::now();
  IdentityReport r;
  r.identity = "speculation";
  r.params = {{"k", cfg.k}, {"i", cfg.i}, {"rows", cfg.rows}, {"denominator_degree", den_degree},
              {"numerator_degree", num_degree}, {"allow_repeats", cfg.allow_repeats ? 1 : 0}};
  r.order = cfg.order;
  r.status = Status::Inconclusive;

  const QSeries target =
      row_restricted_cauchy_sum(modulus_x_alphabet(cfg.k), modulus_y_alphabet(cfg.k, cfg.i), cfg.rows, cfg.order, cfg.jobs);

  // basis[T] = 1/(q;q)_D * prod_{j in T} 1/(q^j; q^modulus)_inf
  const auto subsets = choose(residues, cfg.rows, cfg.allow_repeats);
  std::vector<QSeries> basis;
  for (const auto& subset : subsets) {
    FactoredProduct b;
    for (int d = 1; d <= den_degree; ++d) b.times_one_minus(d, -1);
    for (int j : subset) b.times_poch_infinite(j, modulus, -1);
    basis.push_back(expand(b, cfg.order));
  }

  const int margin = std::max(1, static_cast<int>(std::floor(cfg.order * cfg.margin_fraction)));
  const int fit_top = cfg.order - margin;
  const int width = num_degree + 1;
  const int unknowns = static_cast<int>(subsets.size()) * width;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(fit_top + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(unknowns)));
  std::vector<Rational> rhs(static_cast<std::size_t>(fit_top + 1));
  for (int e = 0; e <= fit_top; ++e) {
    rhs[static_cast<std::size_t>(e)] = target[e];
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      for (int t = 0; t <= num_degree && t <= e; ++t) {
        a[static_cast<std::size_t>(e)][s * static_cast<std::size_t>(width) + static_cast<std::size_t>(t)] =
            basis[s][e - t];
      }
    }
  }
  const LinearSolution sol = solve_exact(std::move(a), std::move(rhs));

  r.details.push_back("ansatz: " + std::to_string(subsets.size()) + " subsets x " + std::to_string(width) +
                      " numerator coefficients, trial denominator (q;q)_" + std::to_string(den_degree));
  r.details.push_back("fitted exponents 0.." + std::to_string(fit_top) + ", withheld " +
                      std::to_string(fit_top + 1) + ".." + std::to_string(cfg.order));

  auto finish = [&]() -> IdentityReport {
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  if (!sol.consistent) {
    r.details.push_back("no member of the ansatz family matches the fitted coefficients");
    return finish();
  }

  SpeculationSolution found;
  found.k = cfg.k;
  found.i = cfg.i;
  found.rows = cfg.rows;
  found.unknowns = unknowns;
  found.equations = fit_top + 1;
  found.rank = sol.rank;
  found.unique = sol.rank == unknowns;

  const Polynomial trial_den = poch_polynomial(1, 1, den_degree);
  QSeries model(cfg.order);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::vector<Rational> coeffs(sol.x.begin() + static_cast<long>(s) * width,
                                 sol.x.begin() + static_cast<long>(s + 1) * width);
    const Polynomial numerator(std::move(coeffs));
    model += numerator.to_series(cfg.order) * basis[s];
    if (numerator.is_zero()) continue;
    // Present c_T in lowest terms with denominator constant term 1.
    const Polynomial g = gcd(numerator, trial_den);
    Polynomial num = divmod(numerator, g).first;
    Polynomial den = divmod(trial_den, g).first;
    const Rational scale = 1 / den.coefficient(0);
    found.subsets.push_back({subsets[s], num * scale, den * scale});
  }

  if (auto m = first_mismatch(model, target)) {
    r.details.push_back("fitted solution fails on withheld coefficient q^" + std::to_string(m->exponent));
    return finish();
  }
  found.residual_order = cfg.order;
  r.solution = found;
  if (found.unique) {
    r.status = Status::Pass;
    r.details.push_back("unique solution reproduces all coefficients through q^" + std::to_string(cfg.order));
  } else {
    r.details.push_back("a solution reproduces all coefficients but the fit is underdetermined (rank " +
                        std::to_string(sol.rank) + " < " + std::to_string(unknowns) + ")");
  }
  return finish();
}

}  // namespace rrc
