// SPDX-License-Identifier: Apache-2.0
#ifndef MPCHOM_RING_MATRIX_HPP
#define MPCHOM_RING_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mpchom/pir.hpp"

namespace mpchom {

/// Immutable m x l matrix over a product ring, entries row-major.
class RingMatrix {
 public:
  RingMatrix(PirPtr ring, std::size_t rows, std::size_t cols,
             std::vector<Elem> entries);

  static RingMatrix identity(PirPtr ring, std::size_t m);
  /// Anti-diagonal ones; an involution (J * J = I).
  static RingMatrix reversal(PirPtr ring, std::size_t m);

  const PirPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }

  RingMatrix transpose() const;
  RingMatrix mul(const RingMatrix& rhs) const;
  /// Reorders columns: result column j = this column perm[j].
  RingMatrix permute_columns(const std::vector<std::size_t>& perm) const;
  RingMatrix submatrix(std::size_t row_count,
                       const std::vector<std::size_t>& cols) const;

  bool operator==(const RingMatrix& rhs) const;

 private:
  PirPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

/// Laplace-expansion determinant; square, size guarded at 8.
Elem det(const RingMatrix& a);

/// First failing minor of the non-singular-by-columns test:
/// k and the (1-based) column set whose minor is not a unit.
struct NscFailure {
  std::size_t k = 0;
  std::vector<std::size_t> cols;
};

struct NscResult {
  bool ok = false;
  std::optional<NscFailure> failure;
  explicit operator bool() const { return ok; }
};

/// Non-singular by columns: every k x k minor within the first k rows is a
/// unit, for k = 1..m. Requires m <= l.
NscResult is_nsc(const RingMatrix& a);

/// Entrywise residue projection of component t (0-based) onto its residue
/// field, returned as a matrix over the single-component field ring.
RingMatrix project(const RingMatrix& a, std::size_t t);

/// NSC via the residue-field route: true iff every projection is NSC.
/// Agrees with is_nsc on every matrix; kept as an independent route.
bool nsc_via_residue_fields(const RingMatrix& a);

/// Adjugate-based inverse; requires det(a) to be a unit.
RingMatrix inverse(const RingMatrix& a);

/// Column permutation sigma such that permute_columns(sigma) is upper
/// triangular (zero strictly below the diagonal in the first m columns),
/// or nullopt when no permutation works. Greedy on column heights: sort
/// heights ascending, feasible iff the j-th smallest height is <= j.
std::optional<std::vector<std::size_t>> cput_check(const RingMatrix& a);

/// Deterministic NSC matrix: all-ones row for m == 1; otherwise Vandermonde
/// rows over lifts of the first l residue representatives of every
/// component, which requires l <= min q_t.
RingMatrix build_nsc(PirPtr ring, std::size_t m, std::size_t cols);

/// Row-reduce an NSC matrix by unipotent lower-triangular operations into
/// upper-triangular form; the result is still NSC (first-k-rows minors are
/// unchanged).
RingMatrix upper_triangularize(const RingMatrix& a);

}  // namespace mpchom

#endif
