#pragma once

// Shared helpers for the unit and acceptance test suites.

#include "psmod/field.hpp"
#include "psmod/matrix.hpp"
#include "psmod/rng.hpp"
#include "psmod/subspace.hpp"

namespace testutil {

template <class F>
psmod::Matrix<F> rand_matrix(F field, std::size_t rows, std::size_t cols, psmod::Rng& rng) {
  psmod::Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field.from_long(rng.pool_scalar());
  return m;
}

template <class F>
psmod::Matrix<F> rand_invertible(F field, std::size_t n, psmod::Rng& rng) {
  for (;;) {
    psmod::Matrix<F> m = rand_matrix(field, n, n, rng);
    if (!field.is_zero(psmod::det(m))) return m;
  }
}

// Random symmetric positive-definite Gram: A^T A + I with pool entries.
inline psmod::Matrix<psmod::RationalField> rand_pd_gram(std::size_t n, psmod::Rng& rng) {
  psmod::RationalField q;
  psmod::Matrix<psmod::RationalField> a = rand_matrix(q, n, n, rng);
  return a.transpose() * a + psmod::Matrix<psmod::RationalField>::identity(q, n);
}

}  // namespace testutil
