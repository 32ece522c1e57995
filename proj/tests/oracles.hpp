#pragma once

// Slow, obviously-correct reference implementations used to derive expected
// values. Nothing here calls into the library.

#include <functional>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

// Every partition of n, parts weakly decreasing.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline long count_if(int n, const std::function<bool(const Parts&)>& keep) {
  long c = 0;
  for (const auto& p : partitions(n)) c += keep(p) ? 1 : 0;
  return c;
}

inline bool parts_in(const Parts& p, const std::function<bool(int)>& ok) {
  for (int x : p) {
    if (!ok(x)) return false;
  }
  return true;
}

inline bool gap_at_least(const Parts& p, int gap, int min_part) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < min_part) return false;
    if (i + 1 < p.size() && p[i] - p[i + 1] < gap) return false;
  }
  return true;
}

// Coefficients 0..order of the generating function of partitions whose parts
// all satisfy ok.
inline std::vector<long> partition_counts(int order, const std::function<bool(int)>& ok) {
  std::vector<long> c;
  for (int n = 0; n <= order; ++n) c.push_back(count_if(n, [&](const Parts& p) { return parts_in(p, ok); }));
  return c;
}

// Dense product of two integer sequences truncated to order.
inline std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b, int order) {
  std::vector<long> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) {
      c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return c;
}

struct Cell {
  int row;
  int col;
};

// Signed weight generating function of column-strict fillings of `shape`
// with letters[0] < letters[1] < ..., each letter t weighing weights[t] and
// carrying signs[t]. Tries every filling and keeps the valid ones.
inline std::vector<long> ssyt_genfun(const Parts& shape, const std::vector<int>& weights,
                                     const std::vector<int>& signs, int order) {
  std::vector<Cell> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.push_back({r, c});
  }
  std::vector<long> out(static_cast<std::size_t>(order + 1));
  const int letters = static_cast<int>(weights.size());
  std::vector<int> fill(cells.size());
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == cells.size()) {
      std::vector<std::vector<int>> grid(shape.size());
      for (std::size_t t = 0; t < cells.size(); ++t) grid[static_cast<std::size_t>(cells[t].row)].push_back(fill[t]);
      long weight = 0;
      int sgn = 1;
      for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
          if (c > 0 && grid[r][c - 1] > grid[r][c]) return;
          if (r > 0 && grid[r - 1][c] >= grid[r][c]) return;
          weight += weights[static_cast<std::size_t>(grid[r][c])];
          sgn *= signs[static_cast<std::size_t>(grid[r][c])];
        }
      }
      if (weight <= order) out[static_cast<std::size_t>(weight)] += sgn;
      return;
    }
    for (int v = 0; v < letters; ++v) {
      fill[at] = v;
      rec(at + 1);
    }
  };
  rec(0);
  return out;
}

// Geometric alphabet base, base+step, ... cut at weight order.
inline std::vector<int> geometric_weights(int base, int step, int order) {
  std::vector<int> w;
  for (int e = base; e <= order; e += step) w.push_back(e);
  return w;
}

}  // namespace oracle
