// SPDX-License-Identifier: Apache-2.0
#include "mpchom/ring_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {
constexpr std::size_t kDetGuard = 8;
}

RingMatrix::RingMatrix(PirPtr ring, std::size_t rows, std::size_t cols,
                       std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    fail(Errc::InvalidArgument, "matrix needs at least one row and column");
  }
  if (a_.size() != rows_ * cols_) {
    fail(Errc::ShapeMismatch, "entry count does not match the shape");
  }
  for (const Elem x : a_) {
    if (x >= ring_->size()) fail(Errc::OutOfRange, "entry out of range");
  }
}

RingMatrix RingMatrix::identity(PirPtr ring, std::size_t m) {
  std::vector<Elem> entries(m * m, ring->zero());
  for (std::size_t i = 0; i < m; ++i) entries[i * m + i] = ring->one();
  return RingMatrix(std::move(ring), m, m, std::move(entries));
}

RingMatrix RingMatrix::reversal(PirPtr ring, std::size_t m) {
  std::vector<Elem> entries(m * m, ring->zero());
  for (std::size_t i = 0; i < m; ++i) entries[i * m + (m - 1 - i)] = ring->one();
  return RingMatrix(std::move(ring), m, m, std::move(entries));
}

RingMatrix RingMatrix::transpose() const {
  std::vector<Elem> entries(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      entries[j * rows_ + i] = at(i, j);
    }
  }
  return RingMatrix(ring_, cols_, rows_, std::move(entries));
}

RingMatrix RingMatrix::mul(const RingMatrix& rhs) const {
  require_same_spec(*ring_, *rhs.ring_, "matrix product");
  if (cols_ != rhs.rows_) {
    fail(Errc::ShapeMismatch, "inner dimensions do not match");
  }
  std::vector<Elem> entries(rows_ * rhs.cols_, ring_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        entries[i * rhs.cols_ + j] = ring_->add(
            entries[i * rhs.cols_ + j], ring_->mul(aik, rhs.at(k, j)));
      }
    }
  }
  return RingMatrix(ring_, rows_, rhs.cols_, std::move(entries));
}

RingMatrix RingMatrix::permute_columns(
    const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_) {
    fail(Errc::ShapeMismatch, "permutation length does not match columns");
  }
  std::vector<Elem> entries(rows_ * cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (perm[j] >= cols_) fail(Errc::BadIndex, "permutation index out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      entries[i * cols_ + j] = at(i, perm[j]);
    }
  }
  return RingMatrix(ring_, rows_, cols_, std::move(entries));
}

RingMatrix RingMatrix::submatrix(std::size_t row_count,
                                 const std::vector<std::size_t>& cols) const {
  std::vector<Elem> entries;
  entries.reserve(row_count * cols.size());
  for (std::size_t i = 0; i < row_count; ++i) {
    for (const std::size_t j : cols) entries.push_back(at(i, j));
  }
  return RingMatrix(ring_, row_count, cols.size(), std::move(entries));
}

bool RingMatrix::operator==(const RingMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         ring_->same_spec(*rhs.ring_) && a_ == rhs.a_;
}

namespace {

Elem det_recursive(const Pir& ring, const std::vector<Elem>& a, std::size_t n) {
  if (n == 1) return a[0];
  if (n == 2) {
    return ring.sub(ring.mul(a[0], a[3]), ring.mul(a[1], a[2]));
  }
  Elem acc = ring.zero();
  std::vector<Elem> minor((n - 1) * (n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] != 0) {
      std::size_t idx = 0;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k == j) continue;
          minor[idx++] = a[i * n + k];
        }
      }
      const Elem term = ring.mul(a[j], det_recursive(ring, minor, n - 1));
      acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
  }
  return acc;
}

}  // namespace

Elem det(const RingMatrix& a) {
  if (a.rows() != a.cols()) {
    fail(Errc::NotSquare, "determinant of a non-square matrix");
  }
  if (a.rows() > kDetGuard) {
    fail(Errc::TooLarge, "determinant guard: size capped at 8");
  }
  return det_recursive(*a.ring(), a.entries(), a.rows());
}

NscResult is_nsc(const RingMatrix& a) {
  const std::size_t m = a.rows(), l = a.cols();
  if (m > l) {
    fail(Errc::WideMatrix, "non-singular by columns requires m <= l");
  }
  for (std::size_t k = 1; k <= m; ++k) {
    // all k-subsets of columns, lexicographic
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
      const Elem minor = det(a.submatrix(k, cols));
      if (!a.ring()->is_unit(minor)) {
        NscFailure f;
        f.k = k;
        for (const std::size_t c : cols) f.cols.push_back(c + 1);
        return {false, f};
      }
      // advance combination
      std::size_t i = k;
      while (i > 0 && cols[i - 1] == l - k + (i - 1)) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  return {true, std::nullopt};
}

RingMatrix project(const RingMatrix& a, std::size_t t) {
  if (t >= a.ring()->component_count()) {
    fail(Errc::BadIndex, "component index out of range");
  }
  const ChainRing& comp = a.ring()->component(t);
  auto field = Pir::product({comp.residue_field()});
  std::vector<Elem> entries;
  entries.reserve(a.entries().size());
  for (const Elem x : a.entries()) {
    entries.push_back(comp.residue(a.ring()->part(x, t)));
  }
  return RingMatrix(std::move(field), a.rows(), a.cols(), std::move(entries));
}

bool nsc_via_residue_fields(const RingMatrix& a) {
  if (a.rows() > a.cols()) {
    fail(Errc::WideMatrix, "non-singular by columns requires m <= l");
  }
  for (std::size_t t = 0; t < a.ring()->component_count(); ++t) {
    if (!is_nsc(project(a, t)).ok) return false;
  }
  return true;
}

RingMatrix inverse(const RingMatrix& a) {
  if (a.rows() != a.cols()) fail(Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const Pir& ring = *a.ring();
  const Elem d = det(a);
  if (!ring.is_unit(d)) {
    fail(Errc::SingularMatrix, "determinant is not a unit");
  }
  const Elem dinv = ring.unit_inverse(d);
  std::vector<Elem> entries(n * n);
  if (n == 1) {
    entries[0] = dinv;
    return RingMatrix(a.ring(), 1, 1, std::move(entries));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj[i][j] = (-1)^(i+j) * det(minor of a with row j, column i removed)
      std::vector<Elem> minor;
      minor.reserve((n - 1) * (n - 1));
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor.push_back(a.at(r, c));
        }
      }
      Elem cof = det_recursive(ring, minor, n - 1);
      if ((i + j) % 2 == 1) cof = ring.neg(cof);
      entries[i * n + j] = ring.mul(dinv, cof);
    }
  }
  return RingMatrix(a.ring(), n, n, std::move(entries));
}

std::optional<std::vector<std::size_t>> cput_check(const RingMatrix& a) {
  const std::size_t m = a.rows(), l = a.cols();
  if (m > l) {
    fail(Errc::WideMatrix, "column-permutable triangularity requires m <= l");
  }
  // column height: largest (1-based) row index with a nonzero entry
  std::vector<std::size_t> height(l, 0);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = m; i-- > 0;) {
      if (a.at(i, j) != 0) {
        height[j] = i + 1;
        break;
      }
    }
  }
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return height[x] < height[y];
  });
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (height[order[pos]] > pos + 1) return std::nullopt;
  }
  return order;
}

RingMatrix build_nsc(PirPtr ring, std::size_t m, std::size_t cols) {
  if (m < 1 || cols < 1) {
    fail(Errc::InvalidArgument, "shape must be at least 1 x 1");
  }
  if (m > cols) {
    fail(Errc::WideMatrix, "build_nsc requires m <= l");
  }
  if (m > 1 && cols > ring->min_q()) {
    fail(Errc::InfeasibleShape,
         "no m x l NSC matrix with m > 1 exists unless l <= min q_t (here l = " +
             std::to_string(cols) + ", min q = " + std::to_string(ring->min_q()) +
             ")");
  }
  std::vector<Elem> entries(m * cols);
  if (m == 1) {
    for (std::size_t j = 0; j < cols; ++j) entries[j] = ring->one();
    return RingMatrix(std::move(ring), 1, cols, std::move(entries));
  }
  // beta_j lifts the j-th residue representative in every component, so each
  // projection is a Vandermonde matrix with distinct nodes
  std::vector<Elem> beta(cols);
  const std::size_t s = ring->component_count();
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<ChainVal> parts(s);
    for (std::size_t t = 0; t < s; ++t) {
      parts[t] = ring->component(t).residue_reps()[j];
    }
    beta[j] = ring->from_parts(parts);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Elem power = ring->one();
    for (std::size_t i = 0; i < m; ++i) {
      entries[i * cols + j] = power;
      power = ring->mul(power, beta[j]);
    }
  }
  return RingMatrix(std::move(ring), m, cols, std::move(entries));
}

RingMatrix upper_triangularize(const RingMatrix& a) {
  const std::size_t m = a.rows(), l = a.cols();
  const Pir& ring = *a.ring();
  std::vector<Elem> w = a.entries();
  for (std::size_t c = 0; c + 1 < m; ++c) {
    const Elem pivot = w[c * l + c];
    if (!ring.is_unit(pivot)) {
      fail(Errc::NotNsc, "pivot is not a unit; matrix is not NSC");
    }
    const Elem pinv = ring.unit_inverse(pivot);
    for (std::size_t i = c + 1; i < m; ++i) {
      const Elem factor = ring.mul(w[i * l + c], pinv);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < l; ++j) {
        w[i * l + j] =
            ring.sub(w[i * l + j], ring.mul(factor, w[c * l + j]));
      }
    }
  }
  return RingMatrix(a.ring(), m, l, std::move(w));
}

}  // namespace mpchom
