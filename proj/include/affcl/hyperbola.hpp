#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcl/abelian_group.hpp"
#include "affcl/cone.hpp"
#include "affcl/errors.hpp"
#include "affcl/integer.hpp"
#include "affcl/matrix.hpp"
#include "affcl/monoid.hpp"

namespace affcl {

/// A = R[X,Y]/(XY - U_1^d_1 ... U_r^d_r) over a factorial domain R with
/// pairwise non-associated primes U_i. The prime divisors p_i = (U_i, X)
/// generate Cl A; q_i = (U_i, Y) equals -p_i there.
class HyperbolaDatum {
public:
  /// Local base ring.
  explicit HyperbolaDatum(IntegerVector exponents)
      : HyperbolaDatum(std::move(exponents), true, std::nullopt) {}

  /// comaximal[i][j] says whether U_i and U_j generate the unit ideal; it is
  /// required exactly when the base is not local.
  HyperbolaDatum(IntegerVector exponents, bool base_is_local,
                 std::optional<std::vector<std::vector<bool>>> comaximal)
      : exponents_(std::move(exponents)), local_(base_is_local),
        comaximal_(std::move(comaximal)) {
    if (exponents_.empty())
      throw Error(ErrorKind::InvalidArgument, "hyperbola needs at least one exponent");
    for (const auto &d : exponents_)
      if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "exponent " + d.str() + " is not positive");
    if (local_ && comaximal_)
      throw Error(ErrorKind::InvalidArgument,
                  "comaximality data only applies to a non-local base");
    if (!local_ && !comaximal_)
      throw Error(ErrorKind::MissingComaximalData,
                  "a non-local base needs the comaximality matrix");
    if (comaximal_) {
      const std::size_t r = exponents_.size();
      if (comaximal_->size() != r)
        throw Error(ErrorKind::DimensionMismatch, "comaximality matrix has wrong size");
      for (std::size_t i = 0; i < r; ++i) {
        if ((*comaximal_)[i].size() != r)
          throw Error(ErrorKind::DimensionMismatch, "comaximality matrix has wrong size");
        for (std::size_t j = 0; j < i; ++j)
          if ((*comaximal_)[i][j] != (*comaximal_)[j][i])
            throw Error(ErrorKind::InvalidArgument, "comaximality matrix is not symmetric");
      }
    }
  }

  const IntegerVector &exponents() const noexcept { return exponents_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  bool base_is_local() const noexcept { return local_; }
  const std::optional<std::vector<std::vector<bool>>> &comaximal() const noexcept {
    return comaximal_;
  }

private:
  IntegerVector exponents_;
  bool local_;
  std::optional<std::vector<std::vector<bool>>> comaximal_;
};

/// n_1 p_1 + ... + n_r p_r.
struct HyperbolaDivisor {
  IntegerVector coefficients;

  HyperbolaDivisor() = default;
  explicit HyperbolaDivisor(IntegerVector c) : coefficients(std::move(c)) {}
  HyperbolaDivisor(std::initializer_list<long long> c) : coefficients(make_vector(c)) {}
  friend bool operator==(const HyperbolaDivisor &, const HyperbolaDivisor &) = default;
};

inline HyperbolaDivisor operator+(const HyperbolaDivisor &a, const HyperbolaDivisor &b) {
  return HyperbolaDivisor(add(a.coefficients, b.coefficients));
}
inline HyperbolaDivisor operator-(const HyperbolaDivisor &a) {
  return HyperbolaDivisor(scale(-1, a.coefficients));
}
inline HyperbolaDivisor operator*(const Integer &k, const HyperbolaDivisor &a) {
  return HyperbolaDivisor(scale(k, a.coefficients));
}

namespace detail {

inline void require_local(const HyperbolaDatum &h) {
  if (!h.base_is_local())
    throw Error(ErrorKind::NonLocalBase,
                "the classification needs a local factorial base ring");
}

inline void check_divisor(const HyperbolaDatum &h, const HyperbolaDivisor &n) {
  if (n.coefficients.size() != h.size())
    throw Error(ErrorKind::DimensionMismatch,
                "divisor has " + std::to_string(n.coefficients.size()) +
                    " coefficients, hyperbola has " + std::to_string(h.size()) +
                    " exponents");
}

/// n_i d_j == n_j d_i for all i, j.
inline bool proportional_to_exponents(const HyperbolaDatum &h, const IntegerVector &n) {
  const auto &d = h.exponents();
  for (std::size_t i = 1; i < d.size(); ++i)
    if (n[i] * d[0] != n[0] * d[i]) return false;
  return true;
}

} // namespace detail

/// Cl A = Z^r / Z d.
inline FGAbelianGroup class_group(const HyperbolaDatum &h) {
  return cokernel(IntegerMatrix::column(h.exponents()));
}

inline FGAbelianGroup affine_class_group_local(const HyperbolaDatum &h) {
  detail::require_local(h);
  return torsion_free_quotient(class_group(h));
}

/// The multiple k with n = k d, if n is principal.
inline std::optional<Integer> principal_multiple(const HyperbolaDatum &h,
                                                 const HyperbolaDivisor &n) {
  detail::check_divisor(h, n);
  const auto &d = h.exponents();
  if (n.coefficients[0] % d[0] != 0) return std::nullopt;
  if (!detail::proportional_to_exponents(h, n.coefficients)) return std::nullopt;
  return n.coefficients[0] / d[0];
}

struct HyperbolaCoaffineVerdict {
  bool coaffine = false;
  bool principal = false;
  /// The shift k with 0 < n_i - k d_i < d_i for all i, when it exists.
  std::optional<Integer> shift;
};

/// n is coaffine iff it is principal or some n - k d lies strictly between 0
/// and d. Each coordinate with d_i not dividing n_i forces k = floor(n_i/d_i);
/// a coordinate with d_i | n_i admits no k at all.
inline HyperbolaCoaffineVerdict coaffine_verdict(const HyperbolaDatum &h,
                                                 const HyperbolaDivisor &n) {
  detail::require_local(h);
  detail::check_divisor(h, n);
  HyperbolaCoaffineVerdict v;
  if (principal_multiple(h, n)) {
    v.coaffine = v.principal = true;
    return v;
  }
  const auto &d = h.exponents();
  std::optional<Integer> k;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (n.coefficients[i] % d[i] == 0) return v;
    Integer ki = floor_div(n.coefficients[i], d[i]);
    if (k && *k != ki) return v;
    k = std::move(ki);
  }
  v.coaffine = true;
  v.shift = k;
  return v;
}

inline bool is_coaffine(const HyperbolaDatum &h, const HyperbolaDivisor &n) {
  return coaffine_verdict(h, n).coaffine;
}

/// Least k >= 1 with k n principal, or nullopt when none exists.
inline std::optional<Integer> class_order(const HyperbolaDatum &h,
                                          const HyperbolaDivisor &n) {
  detail::check_divisor(h, n);
  if (!detail::proportional_to_exponents(h, n.coefficients)) return std::nullopt;
  const Integer &d0 = h.exponents()[0];
  return d0 / gcd(d0, n.coefficients[0]);
}

/// Affine trivial iff all ratios n_i : d_i agree (some multiple is principal).
inline bool is_affine_trivial(const HyperbolaDatum &h, const HyperbolaDivisor &n) {
  detail::require_local(h);
  return class_order(h, n).has_value();
}

inline bool is_strongly_coaffine(const HyperbolaDatum &h, const HyperbolaDivisor &n) {
  return is_affine_trivial(h, n);
}

/// ACl A = 0 over a non-local base iff the U_i are pairwise comaximal.
inline bool acl_vanishes_nonlocal(const HyperbolaDatum &h) {
  if (h.base_is_local())
    throw Error(ErrorKind::InvalidArgument, "base ring is local");
  if (!h.comaximal())
    throw Error(ErrorKind::MissingComaximalData, "no comaximality matrix");
  const auto &c = *h.comaximal();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (i != j && !c[i][j]) return false;
  return true;
}

/// The hyperbola over the polynomial ring K[U_1..U_r] as a monoid ring in
/// Z^{r+1}: coordinates are the exponents of U_1..U_r and X, and the monoid
/// is generated by U_i = e_i, X = e_{r+1} and Y = U^d X^{-1} = (d, -1).
inline MonoidRing toric_model(const HyperbolaDatum &h) {
  const std::size_t r = h.size();
  std::vector<IntegerVector> rays;
  for (std::size_t i = 0; i <= r; ++i) {
    IntegerVector e(r + 1);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  IntegerVector y(h.exponents());
  y.push_back(-1);
  rays.push_back(std::move(y));
  return MonoidRing(cone_from_generators(r + 1, rays));
}

/// Facet labels of the toric model, identified by which of U_i, X, Y have
/// positive valuation.
struct ToricModelFacets {
  /// facet index of p_i = (U_i, X)
  std::vector<std::size_t> p;
  /// facet index of q_i = (U_i, Y)
  std::vector<std::size_t> q;
};

inline ToricModelFacets toric_model_facets(const HyperbolaDatum &h, const MonoidRing &model) {
  const std::size_t r = h.size();
  if (model.lattice_rank() != r + 1 || model.facet_count() != 2 * r)
    throw Error(ErrorKind::InvalidArgument, "ring is not the toric model of this hyperbola");
  IntegerVector x_vec(r + 1), y_vec(h.exponents());
  x_vec[r] = 1;
  y_vec.push_back(-1);
  const IntegerVector val_x = model.principal_divisor(x_vec);
  const IntegerVector val_y = model.principal_divisor(y_vec);
  ToricModelFacets out{std::vector<std::size_t>(r, r * 2), std::vector<std::size_t>(r, r * 2)};
  for (std::size_t i = 0; i < r; ++i) {
    IntegerVector u(r + 1);
    u[i] = 1;
    const IntegerVector val_u = model.principal_divisor(u);
    for (std::size_t f = 0; f < model.facet_count(); ++f) {
      if (val_u[f] <= 0) continue;
      if (val_x[f] > 0 && val_y[f] == 0) out.p[i] = f;
      if (val_y[f] > 0 && val_x[f] == 0) out.q[i] = f;
    }
    if (out.p[i] == 2 * r || out.q[i] == 2 * r)
      throw Error(ErrorKind::InvalidArgument, "could not label the toric model facets");
  }
  return out;
}

/// sum n_i p_i on the hyperbola -> the same divisor on the toric model.
inline ToricDivisor to_toric_model(const HyperbolaDatum &h, const MonoidRing &model,
                                   const HyperbolaDivisor &n) {
  detail::check_divisor(h, n);
  const auto facets = toric_model_facets(h, model);
  IntegerVector c(model.facet_count());
  for (std::size_t i = 0; i < h.size(); ++i) c[facets.p[i]] = n.coefficients[i];
  return ToricDivisor(std::move(c));
}

/// A toric-model divisor sum a_i P_i + b_i Q_i -> the class sum (a_i - b_i) p_i.
inline HyperbolaDivisor from_toric_model(const HyperbolaDatum &h, const MonoidRing &model,
                                         const ToricDivisor &n) {
  detail::check_divisor(model, n);
  const auto facets = toric_model_facets(h, model);
  IntegerVector c(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    c[i] = n.coefficients[facets.p[i]] - n.coefficients[facets.q[i]];
  return HyperbolaDivisor(std::move(c));
}

} // namespace affcl
