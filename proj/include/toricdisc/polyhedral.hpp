#pragma once

// Exact polyhedral primitives: extreme rays of {x : A x >= 0} by the double
// description method, and lattice-point membership in a zonotope.

#include <algorithm>
#include <span>
#include <vector>

#include "arith.hpp"

namespace toricdisc {

namespace detail {

inline IntVector scale_to_integers(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  return primitive(std::move(out));
}

}  // namespace detail

/// Extreme rays of the pointed cone {x in Q^d : rows * x >= 0}, as primitive integer
/// vectors in lexicographic order. Throws DomainError when the rows do not have rank d
/// (the cone then contains a line).
inline std::vector<IntVector> extreme_rays(const IntMatrix& rows, std::size_t d) {
  for (const auto& r : rows)
    if (r.size() != d) throw std::invalid_argument("extreme_rays: row length mismatch");

  std::vector<std::size_t> start;
  IntMatrix chosen;
  for (std::size_t i = 0; i < rows.size() && start.size() < d; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) == chosen.size())
      start.push_back(i);
    else
      chosen.pop_back();
  }
  if (start.size() < d) throw DomainError("cone is not pointed");

  struct Ray {
    IntVector v;
    std::vector<bool> tight;  // over all rows
  };
  auto make_ray = [&](IntVector v) {
    Ray r{std::move(v), std::vector<bool>(rows.size())};
    for (std::size_t j = 0; j < rows.size(); ++j) r.tight[j] = dot(rows[j], r.v) == 0;
    return r;
  };

  // The simplicial cone cut out by the starting rows is spanned by the columns of
  // their inverse.
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> e(d, Rational(0));
    e[k] = 1;
    rays.push_back(make_ray(detail::scale_to_integers(*solve(chosen, e))));
  }

  std::vector<std::size_t> processed = start;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::find(start.begin(), start.end(), i) != start.end()) continue;
    std::vector<Integer> value(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) value[k] = dot(rows[i], rays[k].v);

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (value[k] >= 0) next.push_back(rays[k]);

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        std::vector<std::size_t> common;
        for (std::size_t j : processed)
          if (rays[p].tight[j] && rays[q].tight[j]) common.push_back(j);
        if (common.size() + 2 < d) continue;
        // combinatorial adjacency: no third ray is tight on all common rows
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          adjacent = !std::all_of(common.begin(), common.end(), [&](std::size_t j) { return rays[o].tight[j]; });
        }
        if (!adjacent) continue;
        IntVector v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = value[p] * rays[q].v[c] - value[q] * rays[p].v[c];
        next.push_back(make_ray(primitive(std::move(v))));
      }
    }
    rays = std::move(next);
    processed.push_back(i);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Whether `point` = sum lambda_i gens_i for some lambda in [0,1]^s. The generators
/// must span Q^d. A nonempty feasible set has a vertex, where every coordinate outside
/// some invertible d-subset sits at 0 or 1; all such basic solutions are tried.
inline bool in_zonotope(const std::vector<IntVector>& gens, std::span<const Integer> point) {
  const std::size_t d = point.size();
  const std::size_t s = gens.size();
  if (s < d) throw DomainError("zonotope generators do not span");
  std::vector<bool> pick(s, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
  bool any_basis = false;
  do {
    std::vector<std::size_t> basis, rest;
    for (std::size_t i = 0; i < s; ++i) (pick[i] ? basis : rest).push_back(i);
    IntMatrix a(d, IntVector(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) a[r][c] = gens[basis[c]][r];
    if (determinant(a) == 0) continue;
    any_basis = true;
    for (std::size_t bits = 0; bits < (std::size_t{1} << rest.size()); ++bits) {
      std::vector<Rational> rhs(point.begin(), point.end());
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (bits >> k & 1)
          for (std::size_t r = 0; r < d; ++r) rhs[r] -= gens[rest[k]][r];
      const auto lambda = solve(a, rhs);
      if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0 && x <= 1; }))
        return true;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (!any_basis) throw DomainError("zonotope generators do not span");
  return false;
}

}  // namespace toricdisc
