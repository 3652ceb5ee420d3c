#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affcl/abelian_group.hpp"
#include "affcl/cone.hpp"
#include "affcl/errors.hpp"
#include "affcl/feasibility.hpp"
#include "affcl/integer.hpp"
#include "affcl/integer_system.hpp"
#include "affcl/matrix.hpp"

namespace affcl {

/// K[M] for M = Z^d intersected with a pointed full-dimensional cone. Facet i
/// carries the prime divisor p_i and the valuation nu_i (row i of nu).
class MonoidRing {
public:
  explicit MonoidRing(RationalCone cone)
      : cone_(std::move(cone)), nu_(valuation_matrix(cone_)) {}

  const RationalCone &cone() const noexcept { return cone_; }
  /// r x d valuation matrix; injective as a map Z^d -> Z^r.
  const IntegerMatrix &valuations() const noexcept { return nu_; }
  std::size_t lattice_rank() const noexcept { return cone_.ambient_rank(); }
  std::size_t facet_count() const noexcept { return cone_.facet_count(); }

  /// Divisor of the monomial T^gamma: coefficient nu_i(gamma) on p_i.
  IntegerVector principal_divisor(std::span<const Integer> gamma) const {
    if (gamma.size() != lattice_rank())
      throw Error(ErrorKind::DimensionMismatch,
                  "lattice vector has length " + std::to_string(gamma.size()) +
                      ", expected " + std::to_string(lattice_rank()));
    return nu_ * gamma;
  }

private:
  RationalCone cone_;
  IntegerMatrix nu_;
};

/// n_1 p_1 + ... + n_r p_r, facets in the cone's canonical order.
struct ToricDivisor {
  IntegerVector coefficients;

  ToricDivisor() = default;
  explicit ToricDivisor(IntegerVector c) : coefficients(std::move(c)) {}
  ToricDivisor(std::initializer_list<long long> c) : coefficients(make_vector(c)) {}

  bool is_effective() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Integer &x) { return x >= 0; });
  }
  friend bool operator==(const ToricDivisor &, const ToricDivisor &) = default;
};

inline ToricDivisor operator+(const ToricDivisor &a, const ToricDivisor &b) {
  return ToricDivisor(add(a.coefficients, b.coefficients));
}
inline ToricDivisor operator-(const ToricDivisor &a) {
  return ToricDivisor(scale(-1, a.coefficients));
}
inline ToricDivisor operator*(const Integer &k, const ToricDivisor &a) {
  return ToricDivisor(scale(k, a.coefficients));
}

/// A set of facet indices (0-based, strictly increasing).
class SupportSet {
public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> facets) : facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  }
  static SupportSet from_mask(std::uint64_t mask, std::size_t r) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1U) f.push_back(i);
    return SupportSet(std::move(f));
  }
  /// {i : values[i] > 0}
  static SupportSet positive_part(std::span<const Integer> values) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] > 0) f.push_back(i);
    return SupportSet(std::move(f));
  }

  const std::vector<std::size_t> &facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }
  bool contains(std::size_t i) const {
    return std::binary_search(facets_.begin(), facets_.end(), i);
  }

  friend auto operator<=>(const SupportSet &, const SupportSet &) = default;

private:
  std::vector<std::size_t> facets_;
};

/// "{1,3}" with 1-based facet numbers.
inline std::string to_string(const SupportSet &s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.facets().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s.facets()[k] + 1);
  }
  return out + "}";
}

namespace detail {

constexpr std::size_t max_enumerated_facets = 24;

inline void check_divisor(const MonoidRing &m, const ToricDivisor &n) {
  if (n.coefficients.size() != m.facet_count())
    throw Error(ErrorKind::DimensionMismatch,
                "divisor has " + std::to_string(n.coefficients.size()) +
                    " coefficients, ring has " + std::to_string(m.facet_count()) +
                    " facets");
}

inline void check_support(const MonoidRing &m, const SupportSet &s) {
  if (!s.empty() && s.facets().back() >= m.facet_count())
    throw Error(ErrorKind::InvalidArgument, "support index out of range");
}

inline void check_enumerable(const MonoidRing &m) {
  if (m.facet_count() > max_enumerated_facets)
    throw Error(ErrorKind::InvalidArgument,
                "too many facets to enumerate support patterns");
}

/// gamma with n_i + nu_i(gamma) = 0 off s and >= 1 on s.
inline FeasibilityQuery support_query(const MonoidRing &m, const ToricDivisor &n,
                                      const SupportSet &s) {
  FeasibilityQuery q(m.lattice_rank());
  const IntegerMatrix &nu = m.valuations();
  for (std::size_t i = 0; i < m.facet_count(); ++i) {
    if (s.contains(i)) q.add_strict(nu.row_vector(i), -n.coefficients[i]);
    else q.add_equality(nu.row_vector(i), -n.coefficients[i]);
  }
  return q;
}

} // namespace detail

/// Cl K[M] = Z^r / nu(Z^d).
inline FGAbelianGroup class_group(const MonoidRing &m) {
  return cokernel(m.valuations());
}

/// ACl K[M] = Cl K[M] modulo torsion.
inline FGAbelianGroup affine_class_group(const MonoidRing &m) {
  return torsion_free_quotient(class_group(m));
}

/// Facets not containing the monomial T^gamma: {i : nu_i(gamma) > 0}.
inline SupportSet monomial_support(const MonoidRing &m,
                                   std::span<const Integer> gamma) {
  const IntegerVector v = m.principal_divisor(gamma);
  for (const auto &x : v)
    if (x < 0)
      throw Error(ErrorKind::NotInMonoid, to_string(gamma) + " is not in the monoid");
  return SupportSet::positive_part(v);
}

/// A monomial whose support is exactly s, if one exists.
inline std::optional<IntegerVector> realizing_monomial(const MonoidRing &m,
                                                       const SupportSet &s) {
  detail::check_support(m, s);
  return integer_feasible(
      detail::support_query(m, ToricDivisor(IntegerVector(m.facet_count())), s));
}

inline bool is_realizable_support(const MonoidRing &m, const SupportSet &s) {
  return realizing_monomial(m, s).has_value();
}

/// All supports of monomials, by one feasibility query per subset.
inline std::set<SupportSet> realizable_supports(const MonoidRing &m) {
  detail::check_enumerable(m);
  const std::size_t r = m.facet_count();
  std::set<SupportSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    SupportSet s = SupportSet::from_mask(mask, r);
    if (is_realizable_support(m, s)) out.insert(std::move(s));
  }
  return out;
}

/// For effective n: the complement of Supp(n) is affine iff Supp(n) is the
/// support of a monomial.
inline bool is_complement_affine(const MonoidRing &m, const ToricDivisor &n) {
  detail::check_divisor(m, n);
  if (!n.is_effective())
    throw Error(ErrorKind::NotEffective, "divisor has a negative coefficient");
  return is_realizable_support(m, SupportSet::positive_part(n.coefficients));
}

/// gamma such that n + nu(gamma) is effective with support exactly s.
inline std::optional<IntegerVector>
effective_representative(const MonoidRing &m, const ToricDivisor &n,
                         const SupportSet &s) {
  detail::check_divisor(m, n);
  detail::check_support(m, s);
  return integer_feasible(detail::support_query(m, n, s));
}

/// Supports of all effective divisors linearly equivalent to n.
inline std::set<SupportSet> effective_supports(const MonoidRing &m,
                                               const ToricDivisor &n) {
  detail::check_divisor(m, n);
  detail::check_enumerable(m);
  const std::size_t r = m.facet_count();
  std::set<SupportSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    SupportSet s = SupportSet::from_mask(mask, r);
    if (effective_representative(m, n, s)) out.insert(std::move(s));
  }
  return out;
}

struct CoaffineVerdict {
  bool coaffine = true;
  /// When not coaffine: gamma with n + nu(gamma) effective and its support
  /// not the support of any monomial.
  std::optional<IntegerVector> obstruction;
  std::optional<SupportSet> obstruction_support;
};

/// Coaffineness decided over the finitely many support patterns: n is
/// coaffine iff no effective representative has an unrealizable support. A
/// class without effective representatives is coaffine.
inline CoaffineVerdict coaffine_verdict(const MonoidRing &m, const ToricDivisor &n) {
  detail::check_divisor(m, n);
  detail::check_enumerable(m);
  const std::size_t r = m.facet_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    SupportSet s = SupportSet::from_mask(mask, r);
    auto gamma = effective_representative(m, n, s);
    if (!gamma) continue;
    if (is_realizable_support(m, s)) continue;
    return {false, std::move(gamma), std::move(s)};
  }
  return {};
}

inline bool is_coaffine(const MonoidRing &m, const ToricDivisor &n) {
  return coaffine_verdict(m, n).coaffine;
}

/// Order of the class of n in Cl K[M]; nullopt for infinite order.
inline std::optional<Integer> class_order(const MonoidRing &m, const ToricDivisor &n) {
  detail::check_divisor(m, n);
  return class_order(m.valuations(), n.coefficients);
}

/// Affine trivial iff some positive multiple of n is principal.
inline bool is_affine_trivial(const MonoidRing &m, const ToricDivisor &n) {
  return class_order(m, n).has_value();
}

/// Strong coaffineness coincides with affine triviality on monoid rings.
inline bool is_strongly_coaffine(const MonoidRing &m, const ToricDivisor &n) {
  return is_affine_trivial(m, n);
}

inline bool is_principal(const MonoidRing &m, const ToricDivisor &n) {
  detail::check_divisor(m, n);
  return !solve_integer_system(m.valuations(), n.coefficients).empty();
}

inline bool is_simplicial(const MonoidRing &m) {
  return m.facet_count() == m.lattice_rank();
}

inline bool acl_vanishes(const MonoidRing &m) {
  return affine_class_group(m).is_trivial();
}

struct SectionGenerators {
  std::vector<IntegerVector> generators;
  /// Some generator lies on the boundary of the search box, so generators
  /// outside the box may have been missed.
  bool possibly_incomplete = false;
};

/// Minimal monomial generators of {gamma : nu(gamma) >= -n} as an M-module,
/// searched in the box [-bound, bound]^d.
inline SectionGenerators section_generators(const MonoidRing &m, const ToricDivisor &n,
                                            long long bound) {
  detail::check_divisor(m, n);
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be at least 1");
  const std::size_t d = m.lattice_rank(), r = m.facet_count();

  struct Point {
    IntegerVector gamma;
    IntegerVector value; // n + nu(gamma) >= 0
    Integer weight;
  };
  std::vector<Point> points;
  IntegerVector gamma(d, Integer(-bound));
  for (;;) {
    IntegerVector value = add(n.coefficients, m.principal_divisor(gamma));
    if (std::all_of(value.begin(), value.end(), [](const Integer &x) { return x >= 0; })) {
      Integer w = 0;
      for (const auto &x : value) w += x;
      points.push_back({gamma, std::move(value), std::move(w)});
    }
    std::size_t i = 0;
    while (i < d && gamma[i] == bound) gamma[i++] = -bound;
    if (i == d) break;
    ++gamma[i];
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Point &a, const Point &b) { return a.weight < b.weight; });

  SectionGenerators out;
  std::vector<const Point *> minimal;
  for (const auto &p : points) {
    // p is redundant iff some smaller point q has nu(p - q) >= 0.
    bool dominated = false;
    for (const Point *q : minimal) {
      bool below = true;
      for (std::size_t i = 0; i < r && below; ++i)
        if (q->value[i] > p.value[i]) below = false;
      if (below) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    minimal.push_back(&p);
  }
  for (const Point *p : minimal) {
    for (const auto &x : p->gamma)
      if (abs(x) == bound) out.possibly_incomplete = true;
    out.generators.push_back(p->gamma);
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

} // namespace affcl
