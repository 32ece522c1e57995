#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrc/partitions.hpp"
#include "rrc/qseries.hpp"

namespace rrc {

/// A letter of a weighted alphabet: `label` is what a tableau cell stores
/// (and defines the tableau order), `weight` is the exponent of q it
/// contributes, `sign` its sign.
struct Letter {
  int label;
  int weight;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Ordered weighted alphabet, either finite or the infinite geometric family
/// base, base + step, base + 2 step, ... (each letter weighing q^letter).
class Alphabet {
 public:
  /// Labels must strictly increase; weights must be >= 0; signs +-1.
  static Alphabet finite(std::vector<Letter> letters);
  /// Letters labelled by their own weight, all with the same sign.
  static Alphabet finite_weights(const std::vector<int>& weights, int sign = 1);
  static Alphabet geometric(int base, int step);

  bool is_finite() const noexcept { return !geometric_; }
  /// Number of letters; nullopt for geometric alphabets.
  std::optional<int> size() const;
  Letter letter(int index) const;
  /// Index of the letter with this label, if present.
  std::optional<int> index_of(int label) const;
  /// Smallest weight among letters with index >= from; nullopt past the end.
  std::optional<int> min_weight_from(int from) const;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  int base() const noexcept { return base_; }
  int step() const noexcept { return step_; }

  std::string describe() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  bool geometric_ = false;
  std::vector<Letter> letters_;
  std::vector<int> suffix_min_;
  int base_ = 0;
  int step_ = 1;
};

/// Filling of a Young diagram by letter labels.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int entry_sum() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

std::string to_string(const Tableau& t);

/// True iff row lengths match the shape, rows weakly increase and columns
/// strictly increase.
bool validate(const Tableau& t);

/// Sum of letter weights; throws std::invalid_argument for labels outside the alphabet.
int weight_exponent(const Tableau& t, const Alphabet& a);
int sign(const Tableau& t, const Alphabet& a);

/// Calls visit(tableau, weight_exponent, sign) for every column-strict
/// filling of shape over a with weight <= max_weight.
void for_each_ssyt(const Partition& shape, const Alphabet& a, int max_weight,
                   const std::function<void(const Tableau&, int, int)>& visit);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Alphabet& a, int max_weight);

/// sum over column-strict fillings of sign * q^weight, truncated at order.
QSeries weight_genfun(const Partition& shape, const Alphabet& a, int order);

/// Lower bound on the weight of any filling of shape over a (exact when
/// weights increase with the letter order); nullopt if no filling exists.
std::optional<long> min_tableau_weight(const Partition& shape, const Alphabet& a);

}  // namespace rrc
