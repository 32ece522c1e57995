#include "rrc/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace rrc {

Alphabet Alphabet::finite(std::vector<Letter> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].weight < 0) throw std::invalid_argument("letter weights must be >= 0");
    if (letters[i].sign != 1 && letters[i].sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (i > 0 && letters[i].label <= letters[i - 1].label) {
      throw std::invalid_argument("finite alphabet labels must strictly increase");
    }
  }
  Alphabet a;
  a.letters_ = std::move(letters);
  a.suffix_min_.assign(a.letters_.size(), INT_MAX);
  for (std::size_t i = a.letters_.size(); i-- > 0;) {
    a.suffix_min_[i] = std::min(a.letters_[i].weight, i + 1 < a.letters_.size() ? a.suffix_min_[i + 1] : INT_MAX);
  }
  return a;
}

Alphabet Alphabet::finite_weights(const std::vector<int>& weights, int sign) {
  std::vector<Letter> letters;
  letters.reserve(weights.size());
  for (int w : weights) letters.push_back({w, w, sign});
  return finite(std::move(letters));
}

Alphabet Alphabet::geometric(int base, int step) {
  if (base < 0 || step < 1) throw std::invalid_argument("geometric alphabet needs base >= 0 and step >= 1");
  Alphabet a;
  a.geometric_ = true;
  a.base_ = base;
  a.step_ = step;
  return a;
}

std::optional<int> Alphabet::size() const {
  if (geometric_) return std::nullopt;
  return static_cast<int>(letters_.size());
}

Letter Alphabet::letter(int index) const {
  if (index < 0) throw std::out_of_range("negative letter index");
  if (geometric_) {
    const int v = base_ + index * step_;
    return {v, v, 1};
  }
  return letters_.at(static_cast<std::size_t>(index));
}

std::optional<int> Alphabet::index_of(int label) const {
  if (geometric_) {
    if (label < base_ || (label - base_) % step_ != 0) return std::nullopt;
    return (label - base_) / step_;
  }
  auto it = std::lower_bound(letters_.begin(), letters_.end(), label,
                             [](const Letter& l, int v) { return l.label < v; });
  if (it == letters_.end() || it->label != label) return std::nullopt;
  return static_cast<int>(it - letters_.begin());
}

std::optional<int> Alphabet::min_weight_from(int from) const {
  if (geometric_) return base_ + std::max(from, 0) * step_;
  if (from >= static_cast<int>(letters_.size())) return std::nullopt;
  return suffix_min_[static_cast<std::size_t>(std::max(from, 0))];
}

std::string Alphabet::describe() const {
  std::ostringstream os;
  if (geometric_) {
    os << "{" << base_ << "," << base_ + step_ << "," << base_ + 2 * step_ << ",...}";
    return os.str();
  }
  os << "{";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    os << (i ? "," : "") << (l.sign < 0 ? "-" : "") << "q^" << l.weight;
  }
  os << "}";
  return os.str();
}

int Tableau::entry_sum() const {
  int s = 0;
  for (const auto& row : rows) {
    for (int v : row) s += v;
  }
  return s;
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << (i ? "/" : "");
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) os << (j ? "," : "") << t.rows[i][j];
  }
  os << "]";
  return os.str();
}

bool validate(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) != t.shape.length()) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (static_cast<int>(row.size()) != t.shape.part(static_cast<int>(i))) return false;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] < row[j - 1]) return false;
    }
    if (i == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= t.rows[i - 1][j]) return false;
    }
  }
  return true;
}

int weight_exponent(const Tableau& t, const Alphabet& a) {
  int w = 0;
  for (const auto& row : t.rows) {
    for (int v : row) {
      auto idx = a.index_of(v);
      if (!idx) throw std::invalid_argument("tableau entry " + std::to_string(v) + " not in alphabet");
      w += a.letter(*idx).weight;
    }
  }
  return w;
}

int sign(const Tableau& t, const Alphabet& a) {
  int s = 1;
  for (const auto& row : t.rows) {
    for (int v : row) {
      auto idx = a.index_of(v);
      if (!idx) throw std::invalid_argument("tableau entry " + std::to_string(v) + " not in alphabet");
      s *= a.letter(*idx).sign;
    }
  }
  return s;
}

std::optional<long> min_tableau_weight(const Partition& shape, const Alphabet& a) {
  long total = 0;
  for (int i = 0; i < shape.length(); ++i) {
    auto w = a.min_weight_from(i);
    if (!w) return std::nullopt;
    total += static_cast<long>(*w) * shape.part(i);
  }
  return total;
}

void for_each_ssyt(const Partition& shape, const Alphabet& a, int max_weight,
                   const std::function<void(const Tableau&, int, int)>& visit) {
  if (!min_tableau_weight(shape, a)) return;

  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) cells.push_back({i, j});
  }
  const Partition columns = conjugate(shape);
  // rest[c] bounds the weight still needed by cells c, c+1, ...
  std::vector<long> rest(cells.size() + 1, 0);
  for (std::size_t c = cells.size(); c-- > 0;) rest[c] = rest[c + 1] + *a.min_weight_from(cells[c].row);

  const std::optional<int> size = a.size();
  std::vector<std::vector<int>> idx(static_cast<std::size_t>(shape.length()));
  for (int i = 0; i < shape.length(); ++i) idx[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.part(i)), 0);

  Tableau t{shape, {}};
  t.rows.resize(static_cast<std::size_t>(shape.length()));
  for (int i = 0; i < shape.length(); ++i) t.rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.part(i)), 0);

  std::function<void(std::size_t, long, int)> rec = [&](std::size_t c, long used, int sgn) {
    if (c == cells.size()) {
      visit(t, static_cast<int>(used), sgn);
      return;
    }
    const auto [i, j] = cells[c];
    int lo = 0;
    if (j > 0) lo = std::max(lo, idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    if (i > 0) lo = std::max(lo, idx[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    // Room for the strictly larger entries further down this column.
    int hi = INT_MAX;
    if (size) hi = *size - (columns.part(j) - i);
    for (int k = lo; k <= hi; ++k) {
      auto floor_w = a.min_weight_from(k);
      if (!floor_w || used + *floor_w + rest[c + 1] > max_weight) break;
      const Letter l = a.letter(k);
      if (used + l.weight + rest[c + 1] > max_weight) continue;
      idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l.label;
      rec(c + 1, used + l.weight, sgn * l.sign);
    }
  };
  if (rest[0] <= max_weight) rec(0, 0, 1);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Alphabet& a, int max_weight) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, a, max_weight, [&](const Tableau& t, int, int) { out.push_back(t); });
  return out;
}

QSeries weight_genfun(const Partition& shape, const Alphabet& a, int order) {
  std::vector<long> counts(static_cast<std::size_t>(order + 1), 0);
  for_each_ssyt(shape, a, order, [&](const Tableau&, int w, int sg) { counts[static_cast<std::size_t>(w)] += sg; });
  std::vector<Rational> coeffs;
  coeffs.reserve(counts.size());
  for (long c : counts) coeffs.emplace_back(c);
  return QSeries(order, std::move(coeffs));
}

}  // namespace rrc
