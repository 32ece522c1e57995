#pragma once

#include <string>
#include <vector>

#include "rrc/factored.hpp"
#include "rrc/partitions.hpp"
#include "rrc/qseries.hpp"
#include "rrc/report.hpp"
#include "rrc/tableaux.hpp"

namespace rrc {

/// Settings shared by every check.
///
/// `mutate` swaps in a deliberately wrong variant of the identity (one
/// exponent or parameter changed, documented per check) so the failure path
/// can be exercised; `jobs` bounds worker threads (<= 0: all cores).
struct CheckOptions {
  bool mutate = false;
  int jobs = 1;
};

enum class RrWhich { First, Second };

// ---------------------------------------------------------------------------
// Building blocks

/// sum_n q^{n^2 (+n)} / (q;q)_n.
QSeries rr_sum_side(RrWhich which, int order);
/// 1 / ((q^a;q^5)_inf (q^{5-a};q^5)_inf) with a = 1 (first) or 2 (second).
FactoredProduct rr_product_side(RrWhich which);

/// q^{n^2} prod_{j=1}^{n} (1 + q^j + ... + q^{4j}) / (q^5;q^5)_n.
QSeries rewrite_term(int n, int order, int top_power = 4);

/// Residues 1..2k+2 with i and 2k+3-i removed.
std::vector<int> allowed_residues(int k, int i);
/// (1, q^{2k+3}, q^{2(2k+3)}, ...)
Alphabet modulus_x_alphabet(int k);
/// (q^j) for j in allowed_residues(k, i).
Alphabet modulus_y_alphabet(int k, int i);

/// Shapes with at most max_rows rows whose cheapest (P, Q) pair over x and y
/// weighs at most order.
std::vector<Partition> shapes_within(const Alphabet& x, const Alphabet& y, int max_rows, int order);

/// sum over shapes with <= max_rows rows of s(x) s(y).
QSeries row_restricted_cauchy_sum(const Alphabet& x, const Alphabet& y, int max_rows, int order, int jobs = 1);

/// prod over letters of 1 / (1 - x_i y_j), truncated.
QSeries cauchy_product(const Alphabet& x, const Alphabet& y, int order);

/// A_p = prod_{j in J, j != p} 1/(1 - q^{j-p}), normalized.
FactoredProduct genthm_coefficient(int k, int i, int p);

/// A cell of a tableau class pattern for P: either a fixed entry or a free
/// entry bounded below.
struct PatternCell {
  int fixed = -1;  // -1: free
  int at_least = 0;
};

/// One class of (P, Q) pairs: every column-strict P over multiples of 5
/// matching the pattern, paired with one listed Q.
struct TableClass {
  std::string label;
  Partition shape;
  std::vector<std::vector<PatternCell>> pattern;
  std::vector<std::vector<std::vector<int>>> q_fillings;
  /// Expected generating function as numerator / denominator product.
  Polynomial expected_numerator;
  FactoredProduct expected_denominator;
};

std::vector<TableClass> table1_classes();
/// One class per Q filling: 25 classes.
std::vector<TableClass> table2_classes();
/// The n = 2 numerator q^4 + q^5 + 2q^6 + ... + q^16 as printed.
Polynomial table2_numerator();
QSeries class_genfun(const TableClass& c, int order);

// ---------------------------------------------------------------------------
// Checks

/// Mutation: product residue 4 -> 3 (first) or 3 -> 4 (second).
IdentityReport verify_rr(RrWhich which, int order, const CheckOptions& opt = {});
/// Mutation: inner sums stop at q^{3j} instead of q^{4j}.
IdentityReport verify_rr_sum_rewrite(int order, const CheckOptions& opt = {});
/// Mutation: the largest y letter is raised by one on the Schur side.
IdentityReport verify_cauchy_restricted(const Alphabet& x, const Alphabet& y, int order, int max_rows,
                                        const CheckOptions& opt = {});
/// Mutation: the lambda = 1 numerator q + q^4 becomes q + q^3.
IdentityReport verify_table1(const CheckOptions& opt = {});
/// Mutation: the A value of the (1,1) class becomes 11.
IdentityReport verify_table2(const CheckOptions& opt = {});
/// Mutation: record letters are discarded (Q filled with 1s).
IdentityReport verify_proposition_rsk(int n_max, const CheckOptions& opt = {});
/// Mutation: q^{3k} -> q^{2k} in the double sum.
IdentityReport verify_xyrr(int order, int degree_cap, const CheckOptions& opt = {});
/// Mutation: (q;q)_{N-M-1} -> (q;q)_{N-M} on the right.
IdentityReport verify_finite_identity(int n_max, const CheckOptions& opt = {});
/// Mutation: the largest y letter is raised by one on the Schur side.
IdentityReport verify_genthm(int k, int i, int order, const CheckOptions& opt = {});
/// Mutation: the signs of (-q, -q^2) are dropped.
IdentityReport verify_borwein(int n_max, int order, const CheckOptions& opt = {});
/// Mutation: minimum gap 2 -> 1.
IdentityReport verify_macmahon(int n_max, const CheckOptions& opt = {});

struct SpeculationConfig {
  int k = 1;
  int i = 2;
  int rows = 1;
  int order = 60;
  int denominator_degree = -1;  // -1: 2k + 1
  int numerator_degree = -1;    // -1: D (D + 1) / 2
  double margin_fraction = 0.2;
  bool allow_repeats = false;
  int jobs = 1;
};

/// Fits the row-restricted Cauchy sum to
///   sum_T N_T(q) / (q;q)_D * prod_{j in T} 1/(q^j; q^{2k+3})_inf
/// by exact coefficient matching, then checks the withheld top coefficients.
/// Status is Pass with a solution, or Inconclusive; never Fail.
IdentityReport probe_speculation(const SpeculationConfig& cfg);

/// Rational-function equality n1/d1 == n2/d2 by cross-multiplication.
bool same_rational(const Polynomial& n1, const Polynomial& d1, const Polynomial& n2, const Polynomial& d2);

}  // namespace rrc
