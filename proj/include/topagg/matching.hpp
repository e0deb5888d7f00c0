// Exact minimum-cost perfect matching on a square cost matrix (assignment
// problem), solved with the Hungarian algorithm in its O(n^3) potentials
// form. The solver is templated on the cost type so callers can run on
// native 64-bit integers when the values fit and on BigInt otherwise.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "topagg/errors.hpp"
#include "topagg/rational.hpp"

namespace topagg {

template <class Cost>
class CostMatrix {
 public:
  explicit CostMatrix(int size) : n_(size), cost_(0) {
    if (size < 1) throw ArgumentError("cost matrix needs at least one row");
    cost_.assign(static_cast<std::size_t>(size) * size, Cost(0));
  }

  // Rows must form a square matrix with nonnegative entries.
  static CostMatrix from_rows(const std::vector<std::vector<Cost>>& rows) {
    CostMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (rows[i].size() != static_cast<std::size_t>(m.n_)) {
        throw DimensionError("cost matrix is not square");
      }
      for (int j = 0; j < m.n_; ++j) {
        if (rows[i][j] < Cost(0)) {
          throw ArgumentError("cost matrix entries must be nonnegative");
        }
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  int size() const { return n_; }

  Cost& at(int row, int col) {
    return cost_[static_cast<std::size_t>(row) * n_ + col];
  }
  const Cost& at(int row, int col) const {
    return cost_[static_cast<std::size_t>(row) * n_ + col];
  }

 private:
  int n_;
  std::vector<Cost> cost_;
};

template <class Cost>
struct Assignment {
  std::vector<int> column_of;  // row -> assigned column
  Cost total_cost;
};

// Deterministic: rows are processed in index order and ties between equally
// cheap columns go to the lowest index, so equal-cost optima always resolve
// the same way.
template <class Cost>
Assignment<Cost> min_cost_assignment(const CostMatrix<Cost>& matrix) {
  const int n = matrix.size();

  Cost max_entry(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (matrix.at(i, j) > max_entry) max_entry = matrix.at(i, j);
    }
  }
  // Strictly above any reduced cost reachable through the potentials.
  const Cost infinite = (max_entry + Cost(1)) * Cost(2 * n + 3);

  // 1-based arrays; column 0 is the virtual source of each augmentation.
  std::vector<Cost> row_potential(n + 1, Cost(0));
  std::vector<Cost> col_potential(n + 1, Cost(0));
  std::vector<int> matched_row(n + 1, 0);  // matched_row[j] = row on column j
  std::vector<int> parent_col(n + 1, 0);

  for (int row = 1; row <= n; ++row) {
    matched_row[0] = row;
    int j0 = 0;
    std::vector<Cost> min_reduced(n + 1, infinite);
    std::vector<char> visited(n + 1, 0);
    do {
      visited[j0] = 1;
      const int i0 = matched_row[j0];
      int j_next = -1;
      Cost delta = infinite;
      for (int j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const Cost reduced =
            matrix.at(i0 - 1, j - 1) - row_potential[i0] - col_potential[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          parent_col[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j_next = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (visited[j]) {
          row_potential[matched_row[j]] += delta;
          col_potential[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j_next;
    } while (matched_row[j0] != 0);

    // Walk the augmenting path back to the source.
    while (j0 != 0) {
      const int j_prev = parent_col[j0];
      matched_row[j0] = matched_row[j_prev];
      j0 = j_prev;
    }
  }

  Assignment<Cost> result;
  result.column_of.assign(n, -1);
  result.total_cost = Cost(0);
  for (int j = 1; j <= n; ++j) {
    const int row = matched_row[j];
    result.column_of[row - 1] = j - 1;
    result.total_cost += matrix.at(row - 1, j - 1);
  }
  return result;
}

// True when the Hungarian intermediate values provably fit in int64.
inline bool fits_int64(const CostMatrix<BigInt>& matrix) {
  const int n = matrix.size();
  BigInt max_entry = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (matrix.at(i, j) > max_entry) max_entry = matrix.at(i, j);
    }
  }
  const BigInt bound = (max_entry + 1) * (2 * n + 3);
  return bound < (BigInt(1) << 62);
}

// Runs the solver on int64 when safe, otherwise on BigInt.
inline Assignment<BigInt> min_cost_assignment_auto(
    const CostMatrix<BigInt>& matrix) {
  const int n = matrix.size();
  if (!fits_int64(matrix)) return min_cost_assignment(matrix);
  CostMatrix<std::int64_t> narrow(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      narrow.at(i, j) = matrix.at(i, j).convert_to<std::int64_t>();
    }
  }
  const Assignment<std::int64_t> solved = min_cost_assignment(narrow);
  return {solved.column_of, BigInt(solved.total_cost)};
}

}  // namespace topagg
