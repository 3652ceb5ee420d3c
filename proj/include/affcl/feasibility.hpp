#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "affcl/errors.hpp"
#include "affcl/integer.hpp"
#include "affcl/integer_system.hpp"
#include "affcl/matrix.hpp"

namespace affcl {

/// A system over Z^dimension made of equalities (row . x = rhs), strict
/// inequalities (row . x > rhs, i.e. row . x >= rhs + 1 over the integers)
/// and weak inequalities (row . x >= rhs).
class FeasibilityQuery {
public:
  explicit FeasibilityQuery(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

  FeasibilityQuery &add_equality(IntegerVector row, Integer rhs) {
    check(row);
    equalities_.push_back({std::move(row), std::move(rhs)});
    return *this;
  }
  FeasibilityQuery &add_strict(IntegerVector row, Integer rhs) {
    check(row);
    strict_.push_back({std::move(row), std::move(rhs)});
    return *this;
  }
  FeasibilityQuery &add_nonneg(IntegerVector row, Integer rhs) {
    check(row);
    nonneg_.push_back({std::move(row), std::move(rhs)});
    return *this;
  }

  struct Row {
    IntegerVector coefficients;
    Integer rhs;
  };
  const std::vector<Row> &equalities() const noexcept { return equalities_; }
  const std::vector<Row> &strict_rows() const noexcept { return strict_; }
  const std::vector<Row> &nonneg_rows() const noexcept { return nonneg_; }

  bool is_satisfied_by(std::span<const Integer> x) const {
    if (x.size() != dimension_) return false;
    for (const auto &r : equalities_)
      if (dot(r.coefficients, x) != r.rhs) return false;
    for (const auto &r : strict_)
      if (dot(r.coefficients, x) <= r.rhs) return false;
    for (const auto &r : nonneg_)
      if (dot(r.coefficients, x) < r.rhs) return false;
    return true;
  }

private:
  void check(const IntegerVector &row) const {
    if (row.size() != dimension_)
      throw Error(ErrorKind::DimensionMismatch,
                  "query row has length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(dimension_));
  }

  std::size_t dimension_;
  std::vector<Row> equalities_;
  std::vector<Row> strict_;
  std::vector<Row> nonneg_;
};

namespace detail {

/// coefficients . t >= rhs
struct Inequality {
  IntegerVector coefficients;
  Integer rhs;
};

using InequalitySet = std::map<IntegerVector, Integer>;

/// Divides each row by its content (rounding the bound up), drops tautologies
/// and keeps the tightest bound per direction. Returns nullopt on a
/// constant contradiction.
inline std::optional<InequalitySet>
normalize(const std::vector<Inequality> &rows) {
  InequalitySet set;
  for (const auto &row : rows) {
    const Integer g = content(row.coefficients);
    if (g == 0) {
      if (row.rhs > 0) return std::nullopt;
      continue;
    }
    IntegerVector coef = row.coefficients;
    Integer rhs = row.rhs;
    if (g != 1) {
      for (auto &c : coef) c /= g;
      rhs = ceil_div(rhs, g);
    }
    auto [it, inserted] = set.emplace(std::move(coef), rhs);
    if (!inserted && it->second < rhs) it->second = rhs;
  }
  return set;
}

/// Range of variable j implied by the rows once every other coordinate is
/// fixed by `t`; picks the lowest admissible value, else the highest, else 0.
inline Integer pick_value(const InequalitySet &rows, std::size_t j,
                          const IntegerVector &t) {
  std::optional<Integer> lo, hi;
  for (const auto &[coef, rhs] : rows) {
    const Integer &c = coef[j];
    if (c == 0) continue;
    Integer rest = dot(coef, t) - c * t[j];
    if (c > 0) {
      Integer b = ceil_div(rhs - rest, c);
      if (!lo || b > *lo) lo = b;
    } else {
      Integer b = floor_div(rest - rhs, -c);
      if (!hi || b < *hi) hi = b;
    }
  }
  if (lo && hi && *lo > *hi)
    throw std::logic_error("integer elimination produced an empty range");
  if (lo) return *lo;
  if (hi) return *hi;
  return 0;
}

std::optional<IntegerVector> solve_inequalities(const std::vector<Inequality> &rows,
                                                std::size_t n);

/// Restricts to the hyperplane coefficients . t = value by parametrizing its
/// integer points, then solves the substituted system.
inline std::optional<IntegerVector>
solve_on_hyperplane(const InequalitySet &rows, const IntegerVector &coefficients,
                    const Integer &value, std::size_t n) {
  const AffineLattice plane = solve_integer_system(
      IntegerMatrix::from_rows({coefficients}, n), IntegerVector{value});
  if (plane.empty()) return std::nullopt;
  const IntegerMatrix basis = plane.basis_matrix();
  std::vector<Inequality> reduced;
  reduced.reserve(rows.size());
  for (const auto &[coef, rhs] : rows) {
    IntegerVector c(basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k)
      for (std::size_t i = 0; i < n; ++i) c[k] += coef[i] * basis(i, k);
    reduced.push_back({std::move(c), rhs - dot(coef, *plane.base_point)});
  }
  auto s = solve_inequalities(reduced, basis.cols());
  if (!s) return std::nullopt;
  return plane.point(*s);
}

/// Exact integer feasibility of {t in Z^n : rows}. Variables are eliminated
/// one at a time: unbounded variables drop their rows, unit-coefficient
/// variables use the exact shadow, anything else uses the real shadow to
/// refute, the dark shadow to confirm and finally the splinter hyperplanes.
inline std::optional<IntegerVector>
solve_inequalities(const std::vector<Inequality> &input, std::size_t n) {
  auto normalized = normalize(input);
  if (!normalized) return std::nullopt;
  InequalitySet &rows = *normalized;
  if (rows.empty()) return IntegerVector(n);

  // Opposite rows: contradiction, or an equality to substitute away.
  for (const auto &[coef, rhs] : rows) {
    auto it = rows.find(scale(-1, coef));
    if (it == rows.end()) continue;
    if (rhs > -it->second) return std::nullopt;
    if (rhs == -it->second) return solve_on_hyperplane(rows, coef, rhs, n);
  }

  struct Candidate {
    std::size_t var = 0;
    std::size_t lowers = 0, uppers = 0;
    bool exact = false;
  };
  std::optional<Candidate> best;
  for (std::size_t j = 0; j < n; ++j) {
    Candidate c{j};
    bool unit_lower = true, unit_upper = true;
    for (const auto &[coef, rhs] : rows) {
      if (coef[j] > 0) {
        ++c.lowers;
        if (coef[j] != 1) unit_lower = false;
      } else if (coef[j] < 0) {
        ++c.uppers;
        if (coef[j] != -1) unit_upper = false;
      }
    }
    if (c.lowers + c.uppers == 0) continue;
    if (c.lowers == 0 || c.uppers == 0) {
      // Unbounded in one direction: every row through j can be satisfied.
      std::vector<Inequality> rest;
      for (const auto &[coef, rhs] : rows)
        if (coef[j] == 0) rest.push_back({coef, rhs});
      auto t = solve_inequalities(rest, n);
      if (!t) return std::nullopt;
      (*t)[j] = 0;
      (*t)[j] = pick_value(rows, j, *t);
      return t;
    }
    c.exact = unit_lower || unit_upper;
    auto cost = [](const Candidate &x) {
      return std::pair{x.exact ? 0 : 1, x.lowers * x.uppers};
    };
    if (!best || cost(c) < cost(*best)) best = c;
  }
  if (!best) return IntegerVector(n);
  const std::size_t j = best->var;

  std::vector<Inequality> others;
  std::vector<const std::pair<const IntegerVector, Integer> *> lowers, uppers;
  for (const auto &entry : rows) {
    if (entry.first[j] > 0) lowers.push_back(&entry);
    else if (entry.first[j] < 0) uppers.push_back(&entry);
    else others.push_back({entry.first, entry.second});
  }

  // lower: b x + L >= l, upper: -a x + U >= u  =>  a L + b U >= a l + b u
  auto shadow = [&](bool dark) {
    std::vector<Inequality> out = others;
    for (const auto *lo : lowers)
      for (const auto *up : uppers) {
        const Integer &b = lo->first[j];
        const Integer a = -up->first[j];
        IntegerVector coef(n);
        for (std::size_t i = 0; i < n; ++i)
          coef[i] = a * lo->first[i] + b * up->first[i];
        Integer rhs = a * lo->second + b * up->second;
        if (dark) rhs += (a - 1) * (b - 1);
        out.push_back({std::move(coef), std::move(rhs)});
      }
    return out;
  };

  auto complete = [&](IntegerVector t) {
    t[j] = 0;
    t[j] = pick_value(rows, j, t);
    return t;
  };

  if (best->exact) {
    auto t = solve_inequalities(shadow(false), n);
    if (!t) return std::nullopt;
    return complete(std::move(*t));
  }
  if (!solve_inequalities(shadow(false), n)) return std::nullopt;
  if (auto t = solve_inequalities(shadow(true), n)) return complete(std::move(*t));

  // Any remaining solution lies close to one of the lower bounds.
  Integer a_max = 0;
  for (const auto *up : uppers)
    if (-up->first[j] > a_max) a_max = -up->first[j];
  for (const auto *lo : lowers) {
    const Integer &b = lo->first[j];
    const Integer limit = floor_div(a_max * b - a_max - b, a_max);
    for (Integer i = 0; i <= limit; ++i)
      if (auto t = solve_on_hyperplane(rows, lo->first, lo->second + i, n))
        return t;
  }
  return std::nullopt;
}

} // namespace detail

/// Some integer point satisfying the query, or nullopt when there is none.
/// Equalities are parametrized first; the remaining inequalities are decided
/// exactly over the parameter lattice. Deterministic.
inline std::optional<IntegerVector> integer_feasible(const FeasibilityQuery &q) {
  const std::size_t n = q.dimension();
  IntegerVector origin(n);
  IntegerMatrix param = IntegerMatrix::identity(n);
  if (!q.equalities().empty()) {
    std::vector<IntegerVector> rows;
    IntegerVector rhs;
    for (const auto &r : q.equalities()) {
      rows.push_back(r.coefficients);
      rhs.push_back(r.rhs);
    }
    const AffineLattice sol =
        solve_integer_system(IntegerMatrix::from_rows(rows, n), rhs);
    if (sol.empty()) return std::nullopt;
    origin = *sol.base_point;
    param = sol.basis_matrix();
  }

  const std::size_t p = param.cols();
  std::vector<detail::Inequality> rows;
  auto push = [&](const FeasibilityQuery::Row &r, const Integer &bound) {
    IntegerVector coef(p);
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t i = 0; i < n; ++i) coef[k] += r.coefficients[i] * param(i, k);
    rows.push_back({std::move(coef), bound - dot(r.coefficients, origin)});
  };
  for (const auto &r : q.strict_rows()) push(r, r.rhs + 1);
  for (const auto &r : q.nonneg_rows()) push(r, r.rhs);

  auto t = detail::solve_inequalities(rows, p);
  if (!t) return std::nullopt;
  IntegerVector x = add(origin, param * *t);
  if (!q.is_satisfied_by(x))
    throw std::logic_error("feasibility witness fails the query");
  return x;
}

} // namespace affcl
