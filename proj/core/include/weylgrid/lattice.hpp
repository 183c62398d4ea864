#pragma once

#include <span>
#include <vector>

#include "weylgrid/common.hpp"

namespace weylgrid {

/// Canonical representatives of Z^n / Lambda for a full-rank integer lattice
/// Lambda given by generator columns.
///
/// The generators are brought to lower-triangular Hermite normal form H; a
/// vector v is then reduced column by column so that 0 <= v_i < H_ii. Two
/// vectors are congruent mod Lambda iff their reductions are equal.
class LatticeReducer {
 public:
  explicit LatticeReducer(const IntMatrix& generators);

  std::vector<std::int64_t> reduce(std::span<const std::int64_t> v) const;
  bool congruent(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

  /// |Z^n / Lambda| = product of the HNF diagonal.
  std::int64_t index() const;
  const IntMatrix& hnf() const noexcept { return hnf_; }

 private:
  IntMatrix hnf_;
};

/// Lower-triangular column Hermite normal form of a square nonsingular matrix.
IntMatrix column_hnf(IntMatrix generators);

}  // namespace weylgrid
