#pragma once

// Sparse exact linear algebra over Q: incremental row echelon bases used for
// ranks, normal forms and quotient functionals.

#include <gmpxx.h>

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace moykit::linalg {

/// Sparse row, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

void normalize(SparseRow& row);

class EchelonBasis {
 public:
  /// Reduces `row` against the basis and keeps it if independent.
  /// Returns true iff the rank grew.
  bool insert(SparseRow row);
  /// Unique representative of `row` modulo the row space, supported on
  /// non-pivot columns.
  SparseRow normal_form(SparseRow row) const;

  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(int col) const { return pivots_.count(col) != 0; }

 private:
  // Reduce until the leading column is not a pivot (or the row vanishes).
  void reduce_leading(SparseRow& row) const;

  std::unordered_map<int, SparseRow> pivots_;  // leading column -> monic row
};

/// row <- row + c * other (both sorted).
void axpy(SparseRow& row, const mpq_class& c, const SparseRow& other);

std::size_t rank(const std::vector<SparseRow>& rows);

}  // namespace moykit::linalg
