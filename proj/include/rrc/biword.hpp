#pragma once

#include <compare>
#include <vector>

namespace rrc {

/// One biword letter: the record letter goes to the recording tableau Q,
/// the insert letter is row-inserted into P.
struct LetterPair {
  int record;
  int insert;
  friend auto operator<=>(const LetterPair&, const LetterPair&) = default;
};

/// Sequence of letter pairs; valid input to RSK when sorted by (record, insert).
struct Biword {
  std::vector<LetterPair> pairs;

  bool is_sorted() const;
  friend bool operator==(const Biword&, const Biword&) = default;
};

}  // namespace rrc
