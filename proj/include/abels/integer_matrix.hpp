#pragma once

// Dense integer linear algebra over Eigen matrices of an exact integer
// scalar (BigInt in practice): Smith normal form with transforms, integer
// kernels and lattice comparison.

#include "abels/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace abels {

template <typename S>
struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<S> divisors;
  int rank = 0;
  /// U * M * V = D when transforms were requested. V_inverse is V^{-1}.
  std::optional<MatrixX<S>> U;
  std::optional<MatrixX<S>> V;
  std::optional<MatrixX<S>> V_inverse;
};

namespace detail {

template <typename S>
S abs_value(const S& x) {
  return x < 0 ? S(-x) : x;
}

// Floor division for integers of either sign.
template <typename S>
S floor_quotient(const S& a, const S& b) {
  S q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename S>
void swap_rows(MatrixX<S>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename S>
void swap_cols(MatrixX<S>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// row[dst] += f * row[src]
template <typename S>
void add_row(MatrixX<S>& m, Eigen::Index dst, Eigen::Index src, const S& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

template <typename S>
void add_col(MatrixX<S>& m, Eigen::Index dst, Eigen::Index src, const S& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace detail

/// Plain triple-loop product. Eigen's operator* over boost::multiprecision
/// scalars trips a trait ambiguity in older Boost releases, so products of
/// exact integer matrices go through here.
template <typename S>
MatrixX<S> multiply(const MatrixX<S>& a, const MatrixX<S>& b) {
  MatrixX<S> out = MatrixX<S>::Constant(a.rows(), b.cols(), S(0));
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (b(k, j) == 0) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, k) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

/// Smith normal form by repeated minimal-pivot elimination.
template <typename S>
SmithForm<S> smith_normal_form(MatrixX<S> a, bool with_transforms = false) {
  using detail::abs_value;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  MatrixX<S> u, v, vinv;
  if (with_transforms) {
    u = MatrixX<S>::Identity(rows, rows);
    v = MatrixX<S>::Identity(cols, cols);
    vinv = MatrixX<S>::Identity(cols, cols);
  }
  auto row_swap = [&](Eigen::Index x, Eigen::Index y) {
    detail::swap_rows(a, x, y);
    if (with_transforms) detail::swap_rows(u, x, y);
  };
  auto col_swap = [&](Eigen::Index x, Eigen::Index y) {
    detail::swap_cols(a, x, y);
    if (with_transforms) {
      detail::swap_cols(v, x, y);
      detail::swap_rows(vinv, x, y);
    }
  };
  auto row_add = [&](Eigen::Index dst, Eigen::Index src, const S& f) {
    detail::add_row(a, dst, src, f);
    if (with_transforms) detail::add_row(u, dst, src, f);
  };
  // col[dst] += f col[src]; the inverse gets row[src] -= f row[dst].
  auto col_add = [&](Eigen::Index dst, Eigen::Index src, const S& f) {
    detail::add_col(a, dst, src, f);
    if (with_transforms) {
      detail::add_col(v, dst, src, f);
      detail::add_row(vinv, src, dst, S(-f));
    }
  };

  SmithForm<S> out;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index j = t; j < cols; ++j) {
      for (Eigen::Index i = t; i < rows; ++i) {
        if (a(i, j) != 0 && (pr < 0 || abs_value(a(i, j)) < abs_value(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    row_swap(t, pr);
    col_swap(t, pc);

    bool done = false;
    while (!done) {
      done = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        S q = detail::floor_quotient(a(i, t), a(t, t));
        row_add(i, t, S(-q));
        if (a(i, t) != 0) {
          row_swap(t, i);
          done = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        S q = detail::floor_quotient(a(t, j), a(t, t));
        col_add(j, t, S(-q));
        if (a(t, j) != 0) {
          col_swap(t, j);
          done = false;
        }
      }
      if (!done) continue;
      // The pivot must divide the whole trailing block.
      for (Eigen::Index i = t + 1; i < rows && done; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i, S(1));
            done = false;
            break;
          }
        }
      }
    }
    if (a(t, t) < 0) {
      for (Eigen::Index j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      if (with_transforms) {
        for (Eigen::Index j = 0; j < rows; ++j) u(t, j) = -u(t, j);
      }
    }
    out.divisors.push_back(a(t, t));
    ++t;
  }
  out.rank = static_cast<int>(out.divisors.size());
  if (with_transforms) {
    out.U = std::move(u);
    out.V = std::move(v);
    out.V_inverse = std::move(vinv);
  }
  return out;
}

/// Z-basis of {x : M x = 0}, as columns.
template <typename S>
MatrixX<S> integer_kernel(const MatrixX<S>& m) {
  SmithForm<S> f = smith_normal_form(m, true);
  return f.V->rightCols(m.cols() - f.rank);
}

/// Rank and |det| style invariant of the lattice spanned by the columns: the
/// product of the elementary divisors.
template <typename S>
std::pair<int, S> lattice_invariants(const MatrixX<S>& generators) {
  SmithForm<S> f = smith_normal_form(generators);
  S prod(1);
  for (const auto& d : f.divisors) prod *= d;
  return {f.rank, prod};
}

using BigMatrix = MatrixX<BigInt>;

}  // namespace abels
