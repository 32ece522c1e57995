#include "rrc/rsk.hpp"

#include <algorithm>
#include <functional>

#include "rrc/error.hpp"

namespace rrc {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) {
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  }
  return Partition(std::move(parts));
}

}  // namespace

TableauPair rsk_forward(const Biword& w) {
  if (!w.is_sorted()) throw Error(ErrorKind::UnsortedBiword, "biword pairs must be sorted by (record, insert)");
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (const auto& [record, insert] : w.pairs) {
    int z = insert;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto& r = p[row];
      auto it = std::upper_bound(r.begin(), r.end(), z);
      if (it == r.end()) {
        r.push_back(z);
        q[row].push_back(record);
        break;
      }
      std::swap(z, *it);
    }
  }
  const Partition shape = shape_of(p);
  return {Tableau{shape, std::move(p)}, Tableau{shape, std::move(q)}};
}

Biword rsk_inverse(const TableauPair& pq) {
  if (pq.p.shape != pq.q.shape) throw Error(ErrorKind::ShapeMismatch, "P and Q have different shapes");
  if (!validate(pq.p)) throw Error(ErrorKind::InvalidTableau, "P is not column-strict");
  if (!validate(pq.q)) throw Error(ErrorKind::InvalidTableau, "Q is not column-strict");

  auto p = pq.p.rows;
  auto q = pq.q.rows;
  std::vector<LetterPair> reversed;
  for (;;) {
    // Largest record letter, rightmost occurrence.
    int best_row = -1;
    int best_val = 0;
    std::size_t best_col = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].empty()) continue;
      const int v = q[i].back();
      const std::size_t col = q[i].size() - 1;
      if (best_row < 0 || v > best_val || (v == best_val && col > best_col)) {
        best_row = static_cast<int>(i);
        best_val = v;
        best_col = col;
      }
    }
    if (best_row < 0) break;

    q[static_cast<std::size_t>(best_row)].pop_back();
    int y = p[static_cast<std::size_t>(best_row)].back();
    p[static_cast<std::size_t>(best_row)].pop_back();
    for (int i = best_row - 1; i >= 0; --i) {
      auto& r = p[static_cast<std::size_t>(i)];
      // rightmost entry strictly smaller than y
      auto it = std::lower_bound(r.begin(), r.end(), y);
      --it;
      std::swap(y, *it);
    }
    reversed.push_back({best_val, y});
  }
  std::reverse(reversed.begin(), reversed.end());
  return Biword{std::move(reversed)};
}

TableauPair partition_to_pq(const Partition& p) { return rsk_forward(mod5_decompose(p)); }

Partition pq_to_partition(const TableauPair& pq) {
  auto violation = [](const std::string& what) { throw Error(ErrorKind::DomainViolation, what); };
  if (pq.p.shape != pq.q.shape) violation("P and Q must have the same shape");
  if (pq.p.shape.length() > 2) violation("shape must have at most two rows");
  if (!validate(pq.p)) violation("P must be column-strict");
  if (!validate(pq.q)) violation("Q must be column-strict");
  for (const auto& row : pq.p.rows) {
    for (int v : row) {
      if (v < 0 || v % 5 != 0) violation("P entries must be nonnegative multiples of 5");
    }
  }
  for (const auto& row : pq.q.rows) {
    for (int v : row) {
      if (v != 1 && v != 4) violation("Q entries must be 1 or 4");
    }
  }
  std::vector<int> parts;
  for (const auto& [record, insert] : rsk_inverse(pq).pairs) parts.push_back(record + insert);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace rrc
