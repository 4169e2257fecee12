#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <random>
#include <vector>

#include "atlas/scalar.hpp"

namespace oracle {

using atlas::Index;
using atlas::RatMatrix;
using atlas::Rational;

// Textbook Gaussian elimination with rational pivots.
inline Index rank(RatMatrix m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline RatMatrix random_integer(Index rows, Index cols, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Jordan type from ranks of powers: the number of blocks of size >= k is
// rank(x^{k-1}) - rank(x^k).
inline std::vector<int> jordan_type(const RatMatrix& x) {
  const Index n = x.rows();
  std::vector<Index> ranks{n};
  RatMatrix p = RatMatrix::Identity(n, n);
  while (ranks.back() > 0) {
    p = p * x;
    ranks.push_back(rank(p));
    if (ranks.size() > static_cast<std::size_t>(n) + 1) return {};
  }
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  std::vector<int> parts;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) parts.push_back(static_cast<int>(k + 1));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// All partitions of n, descending parts.
inline void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(n, n, cur, out);
  return out;
}

}  // namespace oracle
