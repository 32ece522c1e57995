#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rrc/biword.hpp"
#include "rrc/qseries.hpp"

namespace rrc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const;
  /// Part i (0-based), zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

struct ResidueClass {
  int modulus;
  std::set<int> residues;
};

/// Every field is an additional restriction; an empty constraint admits all partitions.
struct PartitionConstraint {
  std::optional<ResidueClass> allowed_residues;
  std::optional<int> min_gap;  // consecutive parts differ by at least this
  std::optional<int> min_part;
  std::optional<int> max_length;
  std::optional<int> max_part;

  bool admits(const Partition& p) const;
};

PartitionConstraint residues_mod(int modulus, std::set<int> residues);
PartitionConstraint gap_at_least(int gap, std::optional<int> min_part = std::nullopt);

/// All partitions of n satisfying c, largest first part first, then
/// lexicographically decreasing.
std::vector<Partition> generate(int n, const PartitionConstraint& c);

/// Number of partitions generate() would return, without materializing them.
std::uint64_t count(int n, const PartitionConstraint& c);

/// sum_{n <= order} count(n, c) q^n.
QSeries counting_series(const PartitionConstraint& c, int order);

Partition conjugate(const Partition& p);

/// Splits every part 5m + r (r in {1, 4}) into the letter pair (record r,
/// insert 5m); the result is sorted. Throws BadResidue.
Biword mod5_decompose(const Partition& p);

}  // namespace rrc
