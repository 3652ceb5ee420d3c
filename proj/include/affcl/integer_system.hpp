#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "affcl/errors.hpp"
#include "affcl/integer.hpp"
#include "affcl/matrix.hpp"
#include "affcl/normal_form.hpp"

namespace affcl {

/// The integer solution set of a linear system: base_point + span_Z(basis),
/// or empty.
struct AffineLattice {
  std::size_t ambient_dimension = 0;
  std::optional<IntegerVector> base_point;
  std::vector<IntegerVector> basis;

  bool empty() const noexcept { return !base_point.has_value(); }

  /// base_point + sum coefficients[i] * basis[i].
  IntegerVector point(std::span<const Integer> coefficients) const {
    if (empty()) throw Error(ErrorKind::InvalidArgument, "empty lattice");
    if (coefficients.size() != basis.size())
      throw Error(ErrorKind::DimensionMismatch, "coefficient count");
    IntegerVector x = *base_point;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] += coefficients[i] * basis[i][j];
    return x;
  }

  /// Matrix with the basis vectors as columns (ambient x basis.size()).
  IntegerMatrix basis_matrix() const {
    return IntegerMatrix::from_columns(basis, ambient_dimension);
  }
};

/// Row Hermite basis of the lattice spanned by `vectors`.
inline std::vector<IntegerVector>
canonical_lattice_basis(const std::vector<IntegerVector> &vectors,
                        std::size_t dimension) {
  const IntegerMatrix h =
      hermite_normal_form(IntegerMatrix::from_rows(vectors, dimension)).H;
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < h.rows() && !is_zero(h.row(i)); ++i)
    out.push_back(h.row_vector(i));
  return out;
}

/// All integer x with A x = b. The basis is returned in row Hermite form.
inline AffineLattice solve_integer_system(const IntegerMatrix &a,
                                          std::span<const Integer> b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side has length " + std::to_string(b.size()) +
                    ", expected " + std::to_string(a.rows()));
  const std::size_t n = a.cols();
  AffineLattice result;
  result.ambient_dimension = n;

  const SmithForm snf = smith_normal_form(a);
  const IntegerVector c = snf.U * b;
  const std::size_t r = snf.rank();
  for (std::size_t i = r; i < c.size(); ++i)
    if (c[i] != 0) return result;
  IntegerVector y(n);
  for (std::size_t i = 0; i < r; ++i) {
    if (c[i] % snf.invariant_factors[i] != 0) return result;
    y[i] = c[i] / snf.invariant_factors[i];
  }
  result.base_point = snf.V * y;

  std::vector<IntegerVector> kernel;
  for (std::size_t j = r; j < n; ++j) kernel.push_back(snf.V.column_vector(j));
  result.basis = canonical_lattice_basis(kernel, n);
  return result;
}

/// Basis of {x : A x = 0}.
inline std::vector<IntegerVector> integer_kernel(const IntegerMatrix &a) {
  return solve_integer_system(a, IntegerVector(a.rows())).basis;
}

} // namespace affcl
