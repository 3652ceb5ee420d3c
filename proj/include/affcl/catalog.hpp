#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "affcl/abelian_group.hpp"
#include "affcl/errors.hpp"
#include "affcl/integer.hpp"

namespace affcl {

/// R_k = K[X_ij] / I_k, I_k generated by the k-minors of a generic m x n
/// matrix, 1 < k <= min(m, n).
struct DeterminantalDatum {
  long long m = 0;
  long long n = 0;
  long long k = 0;

  DeterminantalDatum(long long rows, long long cols, long long minor_size)
      : m(rows), n(cols), k(minor_size) {
    if (m < 1 || n < 1)
      throw Error(ErrorKind::InvalidRange, "matrix dimensions must be positive");
    if (k <= 1 || k > std::min(m, n))
      throw Error(ErrorKind::InvalidRange,
                  "minor size " + std::to_string(k) + " outside (1, " +
                      std::to_string(std::min(m, n)) + "]");
  }
};

struct CatalogReport {
  Integer dimension;
  Integer ideal_height;
  FGAbelianGroup class_group;
  FGAbelianGroup affine_class_group;
  /// Height of the image of the generating prime in the polynomial ring on
  /// the first k-1 rows; at least 2, so its complement is not affine.
  Integer witness_height;
  std::string notes;
};

inline CatalogReport determinantal_report(const DeterminantalDatum &dd) {
  const Integer m = dd.m, n = dd.n, k = dd.k;
  CatalogReport out;
  out.dimension = (m + n - k + 1) * (k - 1);
  out.ideal_height = m * n - out.dimension;
  out.class_group = FGAbelianGroup(1, {});
  out.affine_class_group = FGAbelianGroup(1, {});
  out.witness_height = n - k + 2;
  if (out.witness_height < 2)
    throw std::logic_error("witness height below 2 for a valid minor size");
  out.notes = "Cl and ACl are generated by the prime of the (k-1)-minors of the first k-1 "
              "rows; it maps onto I_{k-1} in the polynomial ring on the first k-1 rows "
              "(the convention uses the column count n; the ring is symmetric in m and n).";
  return out;
}

/// ACl A[T] = ACl A. Affine class groups are torsion free, so groups with
/// torsion are rejected.
inline FGAbelianGroup polynomial_extension_acl(const FGAbelianGroup &g) {
  if (!g.is_torsion_free())
    throw Error(ErrorKind::TorsionInput,
                to_string(g) + " has torsion and is not an affine class group");
  return g;
}

/// ACl of a normal affine cone over a geometrically ruled surface.
inline FGAbelianGroup ruled_surface_cone_acl() { return FGAbelianGroup(1, {}); }

inline constexpr const char *ruled_surface_cone_note =
    "valid for a geometrically ruled surface with a normal homogeneous coordinate ring";

} // namespace affcl
