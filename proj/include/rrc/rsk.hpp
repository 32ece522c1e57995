#pragma once

#include "rrc/biword.hpp"
#include "rrc/partitions.hpp"
#include "rrc/tableaux.hpp"

namespace rrc {

/// Insertion tableau P and recording tableau Q of one shape.
struct TableauPair {
  Tableau p;
  Tableau q;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Row-inserts the insert letters (bumping the leftmost strictly larger
/// entry) and records the record letters where P grows. Throws UnsortedBiword.
TableauPair rsk_forward(const Biword& w);

/// Inverse of rsk_forward. Throws ShapeMismatch or InvalidTableau.
Biword rsk_inverse(const TableauPair& pq);

/// RSK image of a partition into parts congruent to 1 or 4 mod 5: P holds
/// multiples of 5, Q holds 1s and 4s. Throws BadResidue.
TableauPair partition_to_pq(const Partition& p);

/// Inverse of partition_to_pq; throws DomainViolation naming the failed condition.
Partition pq_to_partition(const TableauPair& pq);

}  // namespace rrc
