#include "rrc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rrc/error.hpp"

namespace rrc {

bool Biword::is_sorted() const { return std::is_sorted(pairs.begin(), pairs.end()); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ")";
  return os.str();
}

namespace {

bool residue_ok(const PartitionConstraint& c, int part) {
  if (!c.allowed_residues) return true;
  return c.allowed_residues->residues.contains(part % c.allowed_residues->modulus);
}

void check_constraint(const PartitionConstraint& c) {
  if (c.allowed_residues) {
    if (c.allowed_residues->modulus < 1) throw std::invalid_argument("residue modulus must be >= 1");
    for (int r : c.allowed_residues->residues) {
      if (r < 0 || r >= c.allowed_residues->modulus) throw std::invalid_argument("residue out of range");
    }
  }
  if (c.min_gap && *c.min_gap < 0) throw std::invalid_argument("min_gap must be >= 0");
  if (c.max_length && *c.max_length < 0) throw std::invalid_argument("max_length must be >= 0");
}

int lowest_part(const PartitionConstraint& c) { return std::max(1, c.min_part.value_or(1)); }

// Largest part allowed after a part of size prev (or as the first part when prev is unset).
int next_upper(const PartitionConstraint& c, int remaining, std::optional<int> prev) {
  int upper = remaining;
  if (prev) upper = std::min(upper, *prev - c.min_gap.value_or(0));
  if (c.max_part) upper = std::min(upper, *c.max_part);
  return upper;
}

}  // namespace

bool PartitionConstraint::admits(const Partition& p) const {
  const auto& parts = p.parts();
  if (max_length && p.length() > *max_length) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (min_part && parts[i] < *min_part) return false;
    if (max_part && parts[i] > *max_part) return false;
    if (!residue_ok(*this, parts[i])) return false;
    if (min_gap && i > 0 && parts[i - 1] - parts[i] < *min_gap) return false;
  }
  return true;
}

PartitionConstraint residues_mod(int modulus, std::set<int> residues) {
  PartitionConstraint c;
  c.allowed_residues = ResidueClass{modulus, std::move(residues)};
  return c;
}

PartitionConstraint gap_at_least(int gap, std::optional<int> min_part) {
  PartitionConstraint c;
  c.min_gap = gap;
  c.min_part = min_part;
  return c;
}

std::vector<Partition> generate(int n, const PartitionConstraint& c) {
  if (n < 0) throw std::invalid_argument("generate: n must be >= 0");
  check_constraint(c);
  std::vector<Partition> out;
  std::vector<int> current;
  const int lo = lowest_part(c);
  const int max_len = c.max_length.value_or(n);

  std::function<void(int, std::optional<int>)> rec = [&](int remaining, std::optional<int> prev) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int part = next_upper(c, remaining, prev); part >= lo; --part) {
      if (!residue_ok(c, part)) continue;
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, std::nullopt);
  return out;
}

std::uint64_t count(int n, const PartitionConstraint& c) {
  if (n < 0) throw std::invalid_argument("count: n must be >= 0");
  check_constraint(c);
  const int lo = lowest_part(c);
  const int max_len = c.max_length.value_or(n);
  // State: (remaining weight, upper bound for the next part, parts still allowed).
  std::map<std::tuple<int, int, int>, std::uint64_t> memo;

  std::function<std::uint64_t(int, int, int)> rec = [&](int remaining, int upper, int slots) -> std::uint64_t {
    if (remaining == 0) return 1;
    if (slots == 0 || upper < lo) return 0;
    const auto key = std::make_tuple(remaining, upper, slots);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int part = std::min(upper, remaining); part >= lo; --part) {
      if (!residue_ok(c, part)) continue;
      total += rec(remaining - part, next_upper(c, remaining - part, part), slots - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(n, next_upper(c, n, std::nullopt), max_len);
}

QSeries counting_series(const PartitionConstraint& c, int order) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n) coeffs.emplace_back(mpz_class(std::to_string(count(n, c))));
  return QSeries(order, std::move(coeffs));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition{};
  out.reserve(static_cast<std::size_t>(p.part(0)));
  for (int j = 1; j <= p.part(0); ++j) {
    int len = 0;
    while (len < p.length() && p.part(len) >= j) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

Biword mod5_decompose(const Partition& p) {
  Biword w;
  for (int part : p.parts()) {
    const int r = part % 5;
    if (r != 1 && r != 4) {
      throw Error(ErrorKind::BadResidue, "part " + std::to_string(part) + " is not 1 or 4 mod 5");
    }
    w.pairs.push_back({r, part - r});
  }
  std::sort(w.pairs.begin(), w.pairs.end());
  return w;
}

}  // namespace rrc
