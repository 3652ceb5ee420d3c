#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "affcl/integer.hpp"
#include "affcl/matrix.hpp"

namespace affcl {

/// U * A = H with U unimodular and H in row Hermite normal form.
struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
};

/// U * A * V = S with U, V unimodular and S diagonal.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  /// Diagonal of S, length min(rows, cols). Nonnegative, each entry divides
  /// the next, zeros last.
  IntegerVector invariant_factors;

  /// Number of nonzero invariant factors, i.e. the rank of the source.
  std::size_t rank() const {
    std::size_t r = 0;
    while (r < invariant_factors.size() && invariant_factors[r] != 0) ++r;
    return r;
  }
};

/// Row-style Hermite normal form: pivots are positive, the pivot column of
/// each pivot row is reduced into [0, pivot) above the pivot, and rows below
/// the last pivot are zero.
inline HermiteForm hermite_normal_form(const IntegerMatrix &a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  std::size_t p = 0;
  for (std::size_t col = 0; col < n && p < m; ++col) {
    bool has_pivot = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < m; ++i)
        if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col))))
          best = i;
      if (!best) break;
      has_pivot = true;
      h.swap_rows(p, *best);
      u.swap_rows(p, *best);
      bool clean = true;
      for (std::size_t i = p + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(p, col);
        h.add_row_multiple(i, p, -q);
        u.add_row_multiple(i, p, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(p, col) < 0) {
      h.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(h(i, col), h(p, col));
      h.add_row_multiple(i, p, -q);
      u.add_row_multiple(i, p, -q);
    }
    ++p;
  }
  return {std::move(h), std::move(u)};
}

inline std::size_t rank(const IntegerMatrix &a) {
  const IntegerMatrix h = hermite_normal_form(a).H;
  std::size_t r = 0;
  while (r < h.rows() && !is_zero(h.row(r))) ++r;
  return r;
}

/// Smith normal form. Pivot choice is the smallest nonzero absolute value in
/// the active submatrix, ties broken by lowest (row, col), so the transforms
/// are reproducible.
inline SmithForm smith_normal_form(const IntegerMatrix &a) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t k = std::min(m, n);
  IntegerMatrix s = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        Integer x = abs(s(i, j));
        if (!best || x < best_abs) {
          best = {i, j};
          best_abs = std::move(x);
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < k; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = find_pivot(t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      auto [pi, pj] = *pivot;
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Every remaining entry must be a multiple of the pivot; otherwise pull
      // the offending row into row t and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (exhausted) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  IntegerVector factors(k);
  for (std::size_t t = 0; t < k; ++t) factors[t] = s(t, t);
  return {std::move(u), std::move(s), std::move(v), std::move(factors)};
}

} // namespace affcl
