// Matrices over a generic ring: dense when both dimensions are finite, and
// lazy (a pure index function plus a declared lower-triangularity bound)
// when a dimension is infinite. Products over an infinite inner dimension
// reduce to finite window sums through the declared bounds.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commat/errors.hpp"
#include "commat/ring.hpp"

namespace commat {

// A matrix dimension: a natural number or infinity. Valid indices for a
// dimension d are {0, 1, ..., d-1}, which is all of N when d is infinite.
class Dim {
public:
  Dim(std::size_t n) : n_(n) {}
  static Dim inf() { return Dim(); }

  bool is_finite() const { return n_.has_value(); }

  std::size_t count() const {
    if (!n_) throw shape_error("count() on an infinite dimension");
    return *n_;
  }

  // True when index i is valid for this dimension.
  bool admits(std::size_t i) const { return !n_ || i < *n_; }

  friend bool operator==(const Dim& a, const Dim& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Dim& a, const Dim& b) { return a.n_ != b.n_; }

  std::string str() const { return n_ ? std::to_string(*n_) : "inf"; }

private:
  Dim() = default;
  std::optional<std::size_t> n_;
};

// An optional certificate k meaning: entry(i, j) = 0 whenever i < j + k.
// Declared by builders for lazy matrices, recomputed by scan for dense ones.
// Products over an infinite inner dimension require it on both factors.
using TriBound = std::optional<long long>;

template <Ring R>
class Mat {
public:
  using EntryFn = std::function<R(std::size_t, std::size_t)>;

  static Mat dense(std::size_t rows, std::size_t cols, std::vector<R> entries) {
    if (entries.size() != rows * cols)
      throw shape_error("dense matrix: expected " + std::to_string(rows * cols) +
                        " entries, got " + std::to_string(entries.size()));
    Mat m{Dim(rows), Dim(cols)};
    m.dense_ = std::make_shared<const std::vector<R>>(std::move(entries));
    m.tri_ = scan_tri_bound(rows, cols, *m.dense_);
    return m;
  }

  static Mat lazy(Dim rows, Dim cols, TriBound tri, EntryFn fn) {
    Mat m{rows, cols};
    m.tri_ = tri;
    m.fn_ = std::move(fn);
    return m;
  }

  static Mat identity(Dim d) {
    if (d.is_finite()) {
      const std::size_t n = d.count();
      std::vector<R> v(n * n, R::zero());
      for (std::size_t i = 0; i < n; ++i) v[i * n + i] = R::one();
      return dense(n, n, std::move(v));
    }
    return lazy(d, d, 0, [](std::size_t i, std::size_t j) {
      return i == j ? R::one() : R::zero();
    });
  }

  Dim rows() const { return rows_; }
  Dim cols() const { return cols_; }
  TriBound tri_bound() const { return tri_; }
  bool is_dense() const { return dense_ != nullptr; }

  R entry(std::size_t i, std::size_t j) const {
    if (!rows_.admits(i) || !cols_.admits(j))
      throw std::out_of_range("matrix entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") out of range for " + shape_str());
    if (dense_) return (*dense_)[i * cols_.count() + j];
    return fn_(i, j);
  }

  std::string shape_str() const { return rows_.str() + "x" + cols_.str(); }

private:
  Mat(Dim rows, Dim cols) : rows_(rows), cols_(cols) {}

  // Tightest valid bound: min of i - j over nonzero entries. For the
  // all-zero matrix any bound is valid; `rows` keeps windows empty.
  static long long scan_tri_bound(std::size_t rows, std::size_t cols,
                                  const std::vector<R>& entries) {
    const R z = R::zero();
    bool any = false;
    long long best = 0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (entries[i * cols + j] == z) continue;
        const long long d = static_cast<long long>(i) - static_cast<long long>(j);
        best = any ? std::min(best, d) : d;
        any = true;
      }
    return any ? best : static_cast<long long>(rows);
  }

  Dim rows_, cols_;
  TriBound tri_;
  std::shared_ptr<const std::vector<R>> dense_;
  EntryFn fn_;
};

namespace detail {

template <Ring R, class Fn>
Mat<R> materialize(std::size_t rows, std::size_t cols, Fn&& fn) {
  std::vector<R> v;
  v.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) v.push_back(fn(i, j));
  return Mat<R>::dense(rows, cols, std::move(v));
}

} // namespace detail

// (AB)_{i,q} = sum_j A_{i,j} B_{j,q}. For a finite inner dimension the sum
// runs over all of it; for an infinite one it is restricted to the window
// q + tri_bound(B) <= j <= i - tri_bound(A), outside of which every summand
// vanishes by triangularity. The result carries tri_bound(A) + tri_bound(B).
template <Ring R>
Mat<R> operator*(const Mat<R>& A, const Mat<R>& B) {
  if (A.cols() != B.rows())
    throw shape_error("product shape mismatch: " + A.shape_str() + " * " + B.shape_str());
  const Dim u = A.rows(), v = A.cols(), w = B.cols();

  if (v.is_finite()) {
    const std::size_t inner = v.count();
    auto ent = [A, B, inner](std::size_t i, std::size_t q) {
      const R z = R::zero();
      R s = z;
      for (std::size_t j = 0; j < inner; ++j) {
        const R aij = A.entry(i, j);
        if (aij == z) continue;
        s = s + aij * B.entry(j, q);
      }
      return s;
    };
    if (u.is_finite() && w.is_finite())
      return detail::materialize<R>(u.count(), w.count(), ent);
    TriBound tb;
    if (A.tri_bound() && B.tri_bound()) tb = *A.tri_bound() + *B.tri_bound();
    return Mat<R>::lazy(u, w, tb, ent);
  }

  if (!A.tri_bound() || !B.tri_bound())
    throw tameness_error("product over an infinite inner dimension requires "
                         "declared tri bounds on both factors");
  const long long ka = *A.tri_bound(), kb = *B.tri_bound();
  auto ent = [A, B, ka, kb](std::size_t i, std::size_t q) {
    R s = R::zero();
    const long long lo = std::max<long long>(0, static_cast<long long>(q) + kb);
    const long long hi = static_cast<long long>(i) - ka;
    for (long long j = lo; j <= hi; ++j)
      s = s + A.entry(i, static_cast<std::size_t>(j)) * B.entry(static_cast<std::size_t>(j), q);
    return s;
  };
  if (u.is_finite() && w.is_finite())
    return detail::materialize<R>(u.count(), w.count(), ent);
  return Mat<R>::lazy(u, w, ka + kb, ent);
}

// Entry-caching wrapper for lazy matrices; dense matrices pass through.
// Concurrent lookups are synchronized and inserts are idempotent.
template <Ring R>
Mat<R> memoized(const Mat<R>& A) {
  if (A.is_dense()) return A;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<std::size_t, std::size_t>, R> entries;
  };
  auto cache = std::make_shared<Cache>();
  return Mat<R>::lazy(A.rows(), A.cols(), A.tri_bound(),
                      [A, cache](std::size_t i, std::size_t j) {
                        {
                          std::lock_guard<std::mutex> lk(cache->mu);
                          auto it = cache->entries.find({i, j});
                          if (it != cache->entries.end()) return it->second;
                        }
                        R v = A.entry(i, j);
                        std::lock_guard<std::mutex> lk(cache->mu);
                        return cache->entries.emplace(std::make_pair(i, j), std::move(v))
                            .first->second;
                      });
}

// n-fold product; n = 0 yields the identity. Lazy intermediates are
// memoized so that powers of lazy products do not recompute entries.
template <Ring R>
Mat<R> pow(const Mat<R>& A, unsigned n) {
  if (A.rows() != A.cols())
    throw shape_error("pow on non-square matrix " + A.shape_str());
  Mat<R> result = Mat<R>::identity(A.rows());
  if (n == 0) return result;
  Mat<R> base = memoized(A);
  bool have_result = false;
  for (;;) {
    if (n & 1u) {
      result = have_result ? memoized(result * base) : base;
      have_result = true;
    }
    n >>= 1u;
    if (n == 0) break;
    base = memoized(base * base);
  }
  return result;
}

// The i-th row as a 1 x cols matrix; lazy when the column count is infinite.
template <Ring R>
Mat<R> row(const Mat<R>& A, std::size_t i) {
  if (!A.rows().admits(i))
    throw std::out_of_range("row " + std::to_string(i) + " out of range for " + A.shape_str());
  if (A.cols().is_finite()) {
    const std::size_t c = A.cols().count();
    std::vector<R> v;
    v.reserve(c);
    for (std::size_t q = 0; q < c; ++q) v.push_back(A.entry(i, q));
    return Mat<R>::dense(1, c, std::move(v));
  }
  TriBound tb;
  if (A.tri_bound()) tb = *A.tri_bound() - static_cast<long long>(i);
  return Mat<R>::lazy(Dim(1), Dim::inf(), tb,
                      [A, i](std::size_t, std::size_t q) { return A.entry(i, q); });
}

// Finite matrices only; infinite transposes generally leave the
// quasi-lower-triangular class.
template <Ring R>
Mat<R> transpose(const Mat<R>& A) {
  if (!A.rows().is_finite() || !A.cols().is_finite())
    throw shape_error("transpose requires a finite matrix, got " + A.shape_str());
  const std::size_t r = A.rows().count(), c = A.cols().count();
  return detail::materialize<R>(c, r, [&A](std::size_t i, std::size_t j) {
    return A.entry(j, i);
  });
}

// The unique entry of a 1x1 matrix, equated with a ring element.
template <Ring R>
R scalar(const Mat<R>& A) {
  if (!(A.rows() == Dim(1) && A.cols() == Dim(1)))
    throw shape_error("scalar collapse requires a 1x1 matrix, got " + A.shape_str());
  return A.entry(0, 0);
}

// True iff all entries with i < rows, j < cols agree.
template <Ring R>
bool window_eq(const Mat<R>& A, const Mat<R>& B, std::size_t rows, std::size_t cols) {
  if ((rows > 0 && (!A.rows().admits(rows - 1) || !B.rows().admits(rows - 1))) ||
      (cols > 0 && (!A.cols().admits(cols - 1) || !B.cols().admits(cols - 1))))
    throw shape_error("comparison window exceeds a matrix shape");
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!(A.entry(i, j) == B.entry(i, j))) return false;
  return true;
}

// True iff every entry with i < j + k inside the window is zero.
template <Ring R>
bool check_tri_bound(const Mat<R>& A, long long k, std::size_t window) {
  const R z = R::zero();
  for (std::size_t i = 0; i < window && A.rows().admits(i); ++i)
    for (std::size_t j = 0; j < window && A.cols().admits(j); ++j) {
      if (static_cast<long long>(i) >= static_cast<long long>(j) + k) continue;
      if (!(A.entry(i, j) == z)) return false;
    }
  return true;
}

} // namespace commat
