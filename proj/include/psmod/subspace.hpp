#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "psmod/errors.hpp"
#include "psmod/matrix.hpp"

namespace psmod {

// ---------------------------------------------------------------------------
// Echelon forms
// ---------------------------------------------------------------------------

// Reduced column echelon form of the column space: pivot rows strictly
// increasing, pivot entries 1, pivot rows zero in every other column, zero
// columns dropped.  This form is unique per column space, so it doubles as a
// canonical key for subspaces.
template <class F>
Matrix<F> rcef(const Matrix<F>& gens) {
  const F& k = gens.field();
  Matrix<F> w = gens;
  const std::size_t r = w.rows(), c = w.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < r && col < c; ++row) {
    std::size_t j = col;
    while (j < c && k.is_zero(w.at(row, j))) ++j;
    if (j == c) continue;
    if (j != col)
      for (std::size_t i = 0; i < r; ++i) std::swap(w.at(i, col), w.at(i, j));
    typename F::Elem scale = k.inv(w.at(row, col));
    for (std::size_t i = row; i < r; ++i) w.at(i, col) = k.mul(w.at(i, col), scale);
    for (std::size_t j2 = 0; j2 < c; ++j2) {
      if (j2 == col || k.is_zero(w.at(row, j2))) continue;
      typename F::Elem f = w.at(row, j2);
      for (std::size_t i = row; i < r; ++i)
        w.at(i, j2) = k.sub(w.at(i, j2), k.mul(f, w.at(i, col)));
    }
    ++col;
  }
  std::vector<std::size_t> keep(col);
  for (std::size_t j = 0; j < col; ++j) keep[j] = j;
  return w.columns(keep);
}

// Reduced row echelon form in place; returns the pivot column indices.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t i = row;
    while (i < m.rows() && k.is_zero(m.at(i, col))) ++i;
    if (i == m.rows()) continue;
    if (i != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(i, j));
    typename F::Elem scale = k.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = k.mul(m.at(row, j), scale);
    for (std::size_t i2 = 0; i2 < m.rows(); ++i2) {
      if (i2 == row || k.is_zero(m.at(i2, col))) continue;
      typename F::Elem f = m.at(i2, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i2, j) = k.sub(m.at(i2, j), k.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> w = m;
  return row_reduce(w).size();
}

// ---------------------------------------------------------------------------
// Subspace: canonical representation of a linear subspace of k^n
// ---------------------------------------------------------------------------

template <class F>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<F> basis;  // ambient x rank matrix in RCEF

  Subspace() = default;
  Subspace(std::size_t ambient_dim, Matrix<F> rcef_basis)
      : ambient(ambient_dim), basis(std::move(rcef_basis)) {}

  static Subspace zero(F field, std::size_t n) { return Subspace(n, Matrix<F>(field, n, 0)); }
  static Subspace full(F field, std::size_t n) {
    return Subspace(n, Matrix<F>::identity(field, n));
  }

  std::size_t rank() const { return basis.cols(); }
  const F& field() const { return basis.field(); }

  // First nonzero row of each basis column.
  std::vector<std::size_t> pivot_rows() const {
    std::vector<std::size_t> p(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      std::size_t i = 0;
      while (i < basis.rows() && basis.field().is_zero(basis.at(i, j))) ++i;
      p[j] = i;
    }
    return p;
  }

  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Deterministic total order: by rank, then canonical basis data.
  int compare(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient ? -1 : 1;
    if (rank() != o.rank()) return rank() < o.rank() ? -1 : 1;
    return basis.compare(o.basis);
  }
  bool operator<(const Subspace& o) const { return compare(o) < 0; }
};

template <class F>
Subspace<F> canonical_span(const Matrix<F>& generators) {
  return Subspace<F>(generators.rows(), rcef(generators));
}

template <class F>
Subspace<F> image(const Matrix<F>& m) {
  return canonical_span(m);
}

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  const F& k = m.field();
  Matrix<F> r = m;
  std::vector<std::size_t> pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<F> basis(k, m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(f, out) = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(pivots[i], out) = k.neg(r.at(i, f));
    ++out;
  }
  return Subspace<F>(m.cols(), rcef(basis));
}

// True iff every column of m lies in sub.
template <class F>
bool contains(const Subspace<F>& sub, const Matrix<F>& m) {
  if (m.rows() != sub.ambient) throw MalformedInput("ambient dimension mismatch");
  const F& k = m.field();
  std::vector<std::size_t> piv = sub.pivot_rows();
  for (std::size_t col = 0; col < m.cols(); ++col) {
    Matrix<F> v = m.column(col);
    for (std::size_t b = 0; b < sub.rank(); ++b) {
      typename F::Elem coeff = v.at(piv[b], 0);
      if (k.is_zero(coeff)) continue;
      for (std::size_t i = 0; i < v.rows(); ++i)
        v.at(i, 0) = k.sub(v.at(i, 0), k.mul(coeff, sub.basis.at(i, b)));
    }
    if (!v.is_zero()) return false;
  }
  return true;
}

template <class F>
bool contains(const Subspace<F>& big, const Subspace<F>& small) {
  return contains(big, small.basis);
}

// Coordinates of the columns of m in sub's basis; requires containment.
template <class F>
Matrix<F> coordinates_in(const Subspace<F>& sub, const Matrix<F>& m) {
  const F& k = m.field();
  std::vector<std::size_t> piv = sub.pivot_rows();
  Matrix<F> coords(k, sub.rank(), m.cols());
  for (std::size_t col = 0; col < m.cols(); ++col) {
    Matrix<F> v = m.column(col);
    for (std::size_t b = 0; b < sub.rank(); ++b) {
      typename F::Elem coeff = v.at(piv[b], 0);
      coords.at(b, col) = coeff;
      if (k.is_zero(coeff)) continue;
      for (std::size_t i = 0; i < v.rows(); ++i)
        v.at(i, 0) = k.sub(v.at(i, 0), k.mul(coeff, sub.basis.at(i, b)));
    }
    if (!v.is_zero()) throw InternalCheckFailure("coordinates_in: vector outside subspace");
  }
  return coords;
}

template <class F>
Subspace<F> span_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw MalformedInput("ambient dimension mismatch");
  return Subspace<F>(a.ambient, rcef(a.basis.hstack(b.basis)));
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw MalformedInput("ambient dimension mismatch");
  const F& k = a.basis.field();
  if (a.rank() == 0 || b.rank() == 0) return Subspace<F>::zero(k, a.ambient);
  Subspace<F> pairs = kernel(a.basis.hstack(b.basis));
  Matrix<F> u = pairs.basis.top_rows(a.rank());
  return canonical_span(a.basis * u);
}

// {v : m v in w}.
template <class F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& w) {
  if (m.rows() != w.ambient) throw MalformedInput("preimage shape mismatch");
  if (w.rank() == 0) return kernel(m);
  Subspace<F> pairs = kernel(m.hstack(w.basis.negated()));
  Matrix<F> x = pairs.basis.top_rows(m.cols());
  return canonical_span(x);
}

// Deterministic complement of w1 inside w2 built from RCEF pivots: the columns
// of w2 whose pivot rows are not pivot rows of w1.  Works over any field.
template <class F>
Subspace<F> complement_in(const Subspace<F>& w1, const Subspace<F>& w2) {
  if (!contains(w2, w1)) throw MalformedInput("complement_in: first argument is not contained in second");
  std::vector<std::size_t> p1 = w1.pivot_rows();
  std::vector<std::size_t> p2 = w2.pivot_rows();
  std::vector<bool> in1(w1.ambient + 1, false);
  for (std::size_t p : p1) in1[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < p2.size(); ++j)
    if (!in1[p2[j]]) keep.push_back(j);
  if (keep.size() != w2.rank() - w1.rank())
    throw InternalCheckFailure("complement_in: pivot rows of the smaller space not nested in the larger");
  return Subspace<F>(w2.ambient, w2.basis.columns(keep));
}

// Solve A X = B; returns one exact solution or nothing if inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw MalformedInput("solve shape mismatch");
  const F& k = a.field();
  Matrix<F> aug = a.hstack(b);
  std::vector<std::size_t> pivots = row_reduce(aug);
  for (std::size_t c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix<F> x(k, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
  return x;
}

template <class F>
typename F::Elem det(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw MalformedInput("determinant of a non-square matrix");
  const F& k = m.field();
  Matrix<F> w = m;
  const std::size_t n = w.rows();
  typename F::Elem d = k.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t i = col;
    while (i < n && k.is_zero(w.at(i, col))) ++i;
    if (i == n) return k.zero();
    if (i != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(col, j), w.at(i, j));
      d = k.neg(d);
    }
    d = k.mul(d, w.at(col, col));
    typename F::Elem scale = k.inv(w.at(col, col));
    for (std::size_t i2 = col + 1; i2 < n; ++i2) {
      if (k.is_zero(w.at(i2, col))) continue;
      typename F::Elem f = k.mul(w.at(i2, col), scale);
      for (std::size_t j = col; j < n; ++j)
        w.at(i2, j) = k.sub(w.at(i2, j), k.mul(f, w.at(col, j)));
    }
  }
  return d;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw MalformedInput("inverse of a non-square matrix");
  std::optional<Matrix<F>> x = solve(m, Matrix<F>::identity(m.field(), m.rows()));
  if (!x || !(m * *x == Matrix<F>::identity(m.field(), m.rows())))
    throw Error("matrix is not invertible");
  return *x;
}

template <class F>
bool is_symmetric(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return false;
  const F& k = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!k.eq(m.at(i, j), m.at(j, i))) return false;
  return true;
}

// Exact positive-definiteness via elimination pivots (equivalent to all
// leading principal minors being positive).  Ordered fields only.
template <class F>
bool is_positive_definite(const Matrix<F>& g) {
  static_assert(F::ordered, "positive definiteness needs an ordered field");
  if (g.rows() != g.cols()) throw MalformedInput("Gram matrix must be square");
  const F& k = g.field();
  Matrix<F> w = g;
  const std::size_t n = w.rows();
  for (std::size_t col = 0; col < n; ++col) {
    if (k.sign(w.at(col, col)) <= 0) return false;
    typename F::Elem scale = k.inv(w.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (k.is_zero(w.at(i, col))) continue;
      typename F::Elem f = k.mul(w.at(i, col), scale);
      for (std::size_t j = col; j < n; ++j)
        w.at(i, j) = k.sub(w.at(i, j), k.mul(f, w.at(col, j)));
    }
  }
  return true;
}

// Orthogonal complement of w1 inside w2 with respect to the inner product g
// on the ambient space: { v in w2 : <w1, v>_g = 0 }.  Ordered fields only;
// prime fields use complement_in instead (isotropic vectors break the
// direct-sum property there).
template <class F>
Subspace<F> rel_orth_complement(const Subspace<F>& w1, const Subspace<F>& w2,
                                const Matrix<F>& g) {
  static_assert(F::ordered, "orthogonal complements need an ordered field");
  if (!is_symmetric(g) || !is_positive_definite(g))
    throw MalformedInput("rel_orth_complement needs a symmetric positive-definite Gram");
  if (!contains(w2, w1))
    throw MalformedInput("rel_orth_complement: first argument is not contained in second");
  if (w1.rank() == 0) return w2;
  Subspace<F> orth = kernel(w1.basis.transpose() * g);
  Subspace<F> res = intersect(w2, orth);
  if (res.rank() != w2.rank() - w1.rank())
    throw InternalCheckFailure("rel_orth_complement: Gram degenerate on the subspace");
  return res;
}

// G with the directions of K crushed out: the matrix of the quadratic form
// q(v) = min over k in K of g(v - k, v - k).  Vanishes exactly on K, agrees
// with g on the g-orthogonal complement of K, and expresses the target-side
// prescription of an isometry-off-the-kernel condition.
template <class F>
Matrix<F> schur_kill(const Matrix<F>& g, const Subspace<F>& k_space) {
  if (k_space.rank() == 0) return g;
  const Matrix<F>& b = k_space.basis;
  Matrix<F> gb = g * b;
  Matrix<F> core = inverse(b.transpose() * gb);
  return g - gb * core * gb.transpose();
}

}  // namespace psmod
