#pragma once

// Exhaustive-enumeration oracles. They deliberately avoid the feasibility
// engine and the Smith form so that they can check the production paths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affcl/errors.hpp"
#include "affcl/hyperbola.hpp"
#include "affcl/integer.hpp"
#include "affcl/monoid.hpp"

namespace affcl {

/// Coordinates range over [-bound, bound].
struct BoxBound {
  long long bound;

  explicit BoxBound(long long b) : bound(b) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "box bound must be at least 1");
  }
};

namespace detail {

inline std::vector<std::vector<long long>> small_matrix(const IntegerMatrix &a) {
  std::vector<std::vector<long long>> out(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (abs(a(i, j)) > (1LL << 30))
        throw Error(ErrorKind::InvalidArgument, "entry too large for box enumeration");
      out[i][j] = static_cast<long long>(a(i, j));
    }
  return out;
}

inline std::vector<long long> small_vector(const IntegerVector &v) {
  std::vector<long long> out;
  for (const auto &x : v) {
    if (abs(x) > (1LL << 30))
      throw Error(ErrorKind::InvalidArgument, "entry too large for box enumeration");
    out.push_back(static_cast<long long>(x));
  }
  return out;
}

/// Calls f(values) with values = offset + nu * gamma for every gamma in the
/// box.
template <class F>
void for_each_box_value(const MonoidRing &m, const std::vector<long long> &offset,
                        BoxBound box, F &&f) {
  const auto nu = small_matrix(m.valuations());
  const std::size_t d = m.lattice_rank(), r = m.facet_count();
  std::vector<long long> gamma(d, -box.bound), values(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i) {
      long long s = offset[i];
      for (std::size_t j = 0; j < d; ++j) s += nu[i][j] * gamma[j];
      values[i] = s;
    }
    f(gamma, values);
    std::size_t k = 0;
    while (k < d && gamma[k] == box.bound) gamma[k++] = -box.bound;
    if (k == d) break;
    ++gamma[k];
  }
}

inline SupportSet positive_support(const std::vector<long long> &values) {
  std::vector<std::size_t> f;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] > 0) f.push_back(i);
  return SupportSet(std::move(f));
}

} // namespace detail

/// Supports of all monomials with exponent in the box.
inline std::set<SupportSet> oracle_realizable_supports(const MonoidRing &m, BoxBound box) {
  std::set<SupportSet> out;
  detail::for_each_box_value(m, std::vector<long long>(m.facet_count()), box,
                             [&](const auto &, const std::vector<long long> &v) {
                               for (long long x : v)
                                 if (x < 0) return;
                               out.insert(detail::positive_support(v));
                             });
  return out;
}

/// Supports of the effective divisors n + nu(gamma), gamma in the box.
inline std::set<SupportSet> oracle_effective_supports(const MonoidRing &m,
                                                      const ToricDivisor &n, BoxBound box) {
  std::set<SupportSet> out;
  detail::for_each_box_value(m, detail::small_vector(n.coefficients), box,
                             [&](const auto &, const std::vector<long long> &v) {
                               for (long long x : v)
                                 if (x < 0) return;
                               out.insert(detail::positive_support(v));
                             });
  return out;
}

/// Every effective representative found in the box has a support realized by
/// a monomial found in the box.
inline bool oracle_is_coaffine(const MonoidRing &m, const ToricDivisor &n, BoxBound box) {
  const auto realizable = oracle_realizable_supports(m, box);
  for (const auto &s : oracle_effective_supports(m, n, box))
    if (!realizable.contains(s)) return false;
  return true;
}

/// Some gamma in the box with nu(gamma) = n.
inline bool oracle_is_principal(const MonoidRing &m, const ToricDivisor &n, BoxBound box) {
  const auto target = detail::small_vector(n.coefficients);
  bool found = false;
  detail::for_each_box_value(m, std::vector<long long>(m.facet_count()), box,
                             [&](const auto &, const std::vector<long long> &v) {
                               if (v == target) found = true;
                             });
  return found;
}

/// The definition of strong coaffineness, sampled: k n is coaffine or
/// principal for every |k| <= kmax.
inline bool oracle_monoid_strong(const MonoidRing &m, const ToricDivisor &n, long long kmax,
                                 BoxBound box) {
  for (long long k = -kmax; k <= kmax; ++k) {
    const ToricDivisor kn = Integer(k) * n;
    if (!oracle_is_principal(m, kn, box) && !oracle_is_coaffine(m, kn, box)) return false;
  }
  return true;
}

/// The definition of strong coaffineness on a hyperbola, sampled over
/// |k| <= kmax, using the coaffineness classification.
inline bool oracle_hyperbola_strong(const HyperbolaDatum &h, const HyperbolaDivisor &n,
                                    long long kmax) {
  for (long long k = -kmax; k <= kmax; ++k) {
    const HyperbolaDivisor kn = Integer(k) * n;
    if (!principal_multiple(h, kn) && !is_coaffine(h, kn)) return false;
  }
  return true;
}

struct CrossModelReport {
  FGAbelianGroup hyperbola_class_group;
  FGAbelianGroup model_class_group;
  std::size_t divisors_checked = 0;
  std::vector<std::string> disagreements;

  bool agrees() const { return disagreements.empty(); }
};

/// Compares the hyperbola over a polynomial base with its toric model: class
/// groups, affine class groups, and for every 0 <= n <= 2d the translated
/// divisor's coaffineness and affine triviality (production on both sides and
/// the box oracle on the model).
inline CrossModelReport oracle_cross_model(const HyperbolaDatum &h, BoxBound box) {
  const HyperbolaDatum local(h.exponents());
  const MonoidRing model = toric_model(local);
  CrossModelReport rep;
  rep.hyperbola_class_group = class_group(local);
  rep.model_class_group = class_group(model);
  if (!(rep.hyperbola_class_group == rep.model_class_group))
    rep.disagreements.push_back("class group: " + to_string(rep.hyperbola_class_group) +
                                " vs " + to_string(rep.model_class_group));
  if (!(affine_class_group_local(local) == affine_class_group(model)))
    rep.disagreements.push_back("affine class group: " +
                                to_string(affine_class_group_local(local)) + " vs " +
                                to_string(affine_class_group(model)));

  const std::size_t r = local.size();
  IntegerVector n(r);
  for (;;) {
    const HyperbolaDivisor hd(n);
    const ToricDivisor td = to_toric_model(local, model, hd);
    const std::string tag = "n = " + to_string(n);
    if (!(from_toric_model(local, model, td) == hd))
      rep.disagreements.push_back(tag + ": divisor translation does not round-trip");
    const bool hyp = is_coaffine(local, hd);
    const bool tor = is_coaffine(model, td);
    const bool box_verdict = oracle_is_coaffine(model, td, box);
    if (hyp != tor || tor != box_verdict)
      rep.disagreements.push_back(tag + ": coaffine hyperbola=" + (hyp ? "true" : "false") +
                                  " model=" + (tor ? "true" : "false") +
                                  " oracle=" + (box_verdict ? "true" : "false"));
    if (is_affine_trivial(local, hd) != is_affine_trivial(model, td))
      rep.disagreements.push_back(tag + ": affine trivial differs");
    ++rep.divisors_checked;

    std::size_t i = 0;
    while (i < r && n[i] == 2 * local.exponents()[i]) n[i++] = 0;
    if (i == r) break;
    ++n[i];
  }
  return rep;
}

} // namespace affcl
