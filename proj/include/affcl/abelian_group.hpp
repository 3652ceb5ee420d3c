#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "affcl/errors.hpp"
#include "affcl/integer.hpp"
#include "affcl/matrix.hpp"
#include "affcl/normal_form.hpp"

namespace affcl {

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
class FGAbelianGroup {
public:
  FGAbelianGroup() = default;

  FGAbelianGroup(std::size_t free_rank, IntegerVector torsion_invariants)
      : free_rank_(free_rank), torsion_(std::move(torsion_invariants)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2)
        throw Error(ErrorKind::InvalidArgument,
                    "torsion invariant " + torsion_[i].str() + " is below 2");
      if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "torsion invariants do not form a divisibility chain");
    }
  }

  /// The group Z^generators / (subgroup with the given Smith invariant
  /// factors). Unit factors are dropped, zero factors contribute free rank.
  static FGAbelianGroup from_invariant_factors(std::size_t generators,
                                               std::span<const Integer> factors) {
    std::size_t nonzero = 0;
    IntegerVector torsion;
    for (const auto &f : factors) {
      if (f == 0) continue;
      ++nonzero;
      if (abs(f) > 1) torsion.push_back(abs(f));
    }
    return FGAbelianGroup(generators - nonzero, std::move(torsion));
  }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const IntegerVector &torsion_invariants() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion_free() const noexcept { return torsion_.empty(); }

  /// Order of the torsion subgroup.
  Integer torsion_order() const {
    Integer n = 1;
    for (const auto &t : torsion_) n *= t;
    return n;
  }

  friend bool operator==(const FGAbelianGroup &, const FGAbelianGroup &) = default;

private:
  std::size_t free_rank_ = 0;
  IntegerVector torsion_;
};

/// "0", "Z", "Z^2 + Z/3", "Z/2 + Z/4".
inline std::string to_string(const FGAbelianGroup &g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.free_rank() == 1) out = "Z";
  else if (g.free_rank() > 1) out = "Z^" + std::to_string(g.free_rank());
  for (const auto &t : g.torsion_invariants()) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

/// Z^rows / image(A) for A viewed as a map Z^cols -> Z^rows.
inline FGAbelianGroup cokernel(const IntegerMatrix &a) {
  const SmithForm snf = smith_normal_form(a);
  return FGAbelianGroup::from_invariant_factors(a.rows(), snf.invariant_factors);
}

inline FGAbelianGroup torsion_free_quotient(const FGAbelianGroup &g) {
  return FGAbelianGroup(g.free_rank(), {});
}

/// Order of the class of v in coker(A): the least k >= 1 with k*v in
/// image(A), or nullopt when the class has infinite order.
inline std::optional<Integer> class_order(const IntegerMatrix &a,
                                          std::span<const Integer> v) {
  if (v.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "class vector has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(a.rows()));
  const SmithForm snf = smith_normal_form(a);
  const IntegerVector y = snf.U * v;
  const std::size_t r = snf.rank();
  for (std::size_t i = r; i < y.size(); ++i)
    if (y[i] != 0) return std::nullopt;
  Integer order = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const Integer &d = snf.invariant_factors[i];
    order = lcm(order, d / gcd(d, y[i]));
  }
  return order;
}

/// True iff some positive multiple of v lies in image(A).
inline bool is_torsion_class(const IntegerMatrix &a, std::span<const Integer> v) {
  return class_order(a, v).has_value();
}

} // namespace affcl
