#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "affcl/errors.hpp"
#include "affcl/integer.hpp"
#include "affcl/integer_system.hpp"
#include "affcl/matrix.hpp"
#include "affcl/normal_form.hpp"

namespace affcl {

class RationalCone;
RationalCone cone_from_generators(std::size_t rank,
                                  const std::vector<IntegerVector> &rays);

/// A pointed, full-dimensional rational polyhedral cone in Z^d, stored with
/// both descriptions. Extreme rays and inner facet normals are primitive and
/// sorted lexicographically; the facet order is the index order used for
/// divisor coefficient vectors.
class RationalCone {
public:
  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<IntegerVector> &generators() const noexcept { return rays_; }
  const std::vector<IntegerVector> &facet_normals() const noexcept { return normals_; }
  std::size_t facet_count() const noexcept { return normals_.size(); }

  bool contains(std::span<const Integer> x) const {
    for (const auto &n : normals_)
      if (dot(n, x) < 0) return false;
    return true;
  }

  friend bool operator==(const RationalCone &, const RationalCone &) = default;

private:
  RationalCone(std::size_t rank, std::vector<IntegerVector> rays,
               std::vector<IntegerVector> normals)
      : rank_(rank), rays_(std::move(rays)), normals_(std::move(normals)) {}

  friend RationalCone cone_from_generators(std::size_t,
                                           const std::vector<IntegerVector> &);

  std::size_t rank_ = 0;
  std::vector<IntegerVector> rays_;
  std::vector<IntegerVector> normals_;
};

namespace detail {

inline void validate_vectors(std::size_t rank,
                             const std::vector<IntegerVector> &vectors,
                             const char *what) {
  if (rank == 0)
    throw Error(ErrorKind::InvalidArgument, "ambient rank must be positive");
  if (vectors.empty())
    throw Error(ErrorKind::InvalidArgument, std::string("no ") + what + " given");
  for (const auto &v : vectors) {
    if (v.size() != rank)
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(what) + " " + to_string(v) + " does not have length " +
                      std::to_string(rank));
    if (is_zero(v))
      throw Error(ErrorKind::ZeroRay, std::string("zero vector among ") + what);
  }
}

inline void sort_unique(std::vector<IntegerVector> &vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Primitive inner facet normals of cone(vectors), which must span Q^d.
/// A hyperplane through d-1 independent vectors supports a facet iff all
/// vectors lie weakly on one side of it.
inline std::vector<IntegerVector>
facet_normals_of(std::size_t rank, const std::vector<IntegerVector> &vectors) {
  std::vector<IntegerVector> normals;
  const std::size_t count = vectors.size();
  const std::size_t pick = rank - 1;
  if (pick > count) return normals;
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    std::vector<IntegerVector> chosen;
    chosen.reserve(pick);
    for (std::size_t i : idx) chosen.push_back(vectors[i]);
    const auto kernel = integer_kernel(IntegerMatrix::from_rows(chosen, rank));
    if (kernel.size() == 1) {
      IntegerVector w = kernel.front();
      bool pos = false, neg = false;
      for (const auto &v : vectors) {
        Integer s = dot(w, v);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (!(pos && neg)) {
        if (neg) w = scale(-1, w);
        normals.push_back(primitive(w));
      }
    }
    // next combination
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == count - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  sort_unique(normals);
  return normals;
}

} // namespace detail

/// The cone spanned by `rays` in Z^rank. Redundant generators are dropped;
/// the stored generators are the primitive extreme rays.
inline RationalCone cone_from_generators(std::size_t rank,
                                         const std::vector<IntegerVector> &rays) {
  detail::validate_vectors(rank, rays, "ray");
  if (affcl::rank(IntegerMatrix::from_rows(rays, rank)) < rank)
    throw Error(ErrorKind::NotFullDimensional,
                "rays do not span a space of dimension " + std::to_string(rank));
  std::vector<IntegerVector> normals = detail::facet_normals_of(rank, rays);
  if (normals.empty() ||
      affcl::rank(IntegerMatrix::from_rows(normals, rank)) < rank)
    throw Error(ErrorKind::NotPointed, "cone contains a line");

  std::vector<IntegerVector> extreme;
  for (const auto &ray : rays) {
    std::vector<IntegerVector> tight;
    for (const auto &n : normals)
      if (dot(n, ray) == 0) tight.push_back(n);
    if (affcl::rank(IntegerMatrix::from_rows(tight, rank)) == rank - 1)
      extreme.push_back(primitive(ray));
  }
  detail::sort_unique(extreme);
  return RationalCone(rank, std::move(extreme), std::move(normals));
}

/// The cone {x : n . x >= 0 for all normals}. Redundant normals are dropped.
inline RationalCone cone_from_normals(std::size_t rank,
                                      const std::vector<IntegerVector> &normals) {
  detail::validate_vectors(rank, normals, "normal");
  if (affcl::rank(IntegerMatrix::from_rows(normals, rank)) < rank)
    throw Error(ErrorKind::NotPointed, "normals leave a line in the cone");
  std::vector<IntegerVector> rays = detail::facet_normals_of(rank, normals);
  if (rays.empty() || affcl::rank(IntegerMatrix::from_rows(rays, rank)) < rank)
    throw Error(ErrorKind::NotFullDimensional,
                "normals cut out a cone of dimension below " + std::to_string(rank));
  return cone_from_generators(rank, rays);
}

/// r x d matrix whose rows are the facet normals, i.e. the facet valuations.
inline IntegerMatrix valuation_matrix(const RationalCone &cone) {
  return IntegerMatrix::from_rows(cone.facet_normals(), cone.ambient_rank());
}

} // namespace affcl
