#pragma once

// Nef and ample divisors, nef cone generators, and section polytopes.
//
// On a smooth complete toric variety a divisor is nef (ample) when its degree on every
// torus-invariant curve is >= 0 (> 0). Those curves are the walls of the fan. The
// degree of L on the curve of wall tau is L * prod_{i in tau} D_i. For n = 1 the only
// curve is X itself and the pairing is deg L.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "chow.hpp"
#include "divisor.hpp"
#include "fan.hpp"
#include "picard.hpp"
#include "polyhedral.hpp"

namespace toricdisc {

namespace detail {

/// Curve monomials, one per wall; for n = 1 the empty monomial (the whole curve).
inline std::vector<Monomial> curve_monomials(const IntersectionOracle& oracle) {
  if (oracle.dim() == 1) return {Monomial{}};
  std::vector<Monomial> out;
  for (const auto& w : oracle.walls()) out.emplace_back(w.ray_indices);
  return out;
}

inline Integer curve_degree(const IntersectionOracle& oracle, const Monomial& curve, const TDivisor& l) {
  if (l.size() != oracle.ray_count()) throw std::invalid_argument("divisor length does not match the fan");
  Integer total = 0;
  for (std::size_t j = 0; j < l.size(); ++j)
    if (l[j] != 0) total += l[j] * oracle.intersection_number(curve.times(static_cast<int>(j)));
  return total;
}

}  // namespace detail

/// Degree of L on each torus-invariant curve, in wall order.
inline IntVector wall_pairings(const IntersectionOracle& oracle, const TDivisor& l) {
  IntVector out;
  for (const auto& c : detail::curve_monomials(oracle)) out.push_back(detail::curve_degree(oracle, c, l));
  return out;
}

inline bool is_nef(const IntersectionOracle& oracle, const TDivisor& l) {
  const auto p = wall_pairings(oracle, l);
  return std::all_of(p.begin(), p.end(), [](const Integer& x) { return x >= 0; });
}

inline bool is_ample(const IntersectionOracle& oracle, const TDivisor& l) {
  const auto p = wall_pairings(oracle, l);
  return std::all_of(p.begin(), p.end(), [](const Integer& x) { return x > 0; });
}

/// Nef cone in Picard coordinates: one inequality row per distinct curve class,
/// plus its extremal rays.
struct ConeDescription {
  std::string basis_id;
  std::size_t rank = 0;
  IntMatrix inequalities;
  std::vector<PicVector> generators;

  bool contains(const PicVector& v) const { return all_rows(v, false); }
  /// Strictly inside every inequality; this is ampleness.
  bool interior(const PicVector& v) const { return all_rows(v, true); }

 private:
  bool all_rows(const PicVector& v, bool strict) const {
    if (v.basis_id != basis_id) throw std::invalid_argument("Picard vector belongs to basis " + v.basis_id + ", not " + basis_id);
    if (v.coords.size() != rank) throw std::invalid_argument("Picard vector has wrong length");
    for (const auto& row : inequalities) {
      const Integer s = dot(row, v.coords);
      if (strict ? s <= 0 : s < 0) return false;
    }
    return true;
  }
};

/// Curve pairings as functionals on Picard coordinates, deduplicated and sorted.
inline IntMatrix nef_inequalities(const IntersectionOracle& oracle, const PicBasis& basis) {
  std::set<IntVector> rows;
  const auto& b = basis.basis_rays();
  for (const auto& c : detail::curve_monomials(oracle)) {
    IntVector row;
    for (int r : b) row.push_back(oracle.intersection_number(c.times(r)));
    rows.insert(std::move(row));
  }
  return IntMatrix(rows.begin(), rows.end());
}

/// Throws DomainError when the nef cone is not full-dimensional (the fan is not
/// projective).
inline ConeDescription nef_generators(const IntersectionOracle& oracle, const PicBasis& basis) {
  if (basis.ray_count() != oracle.ray_count()) throw std::invalid_argument("basis does not belong to this fan");
  ConeDescription cone;
  cone.basis_id = basis.id();
  cone.rank = basis.rank();
  cone.inequalities = nef_inequalities(oracle, basis);
  const auto rays = extreme_rays(cone.inequalities, cone.rank);
  if (rank(rays) < cone.rank) throw DomainError("nef cone is not full-dimensional; the fan is not projective");
  for (const auto& r : rays) cone.generators.push_back(PicVector{r, basis.id()});
  return cone;
}

// ---------------------------------------------------------------------------
// Section polytopes

/// P_D = {x : <x,u_i> >= -a_i}. Its lattice points index a basis of H^0(X, O(D)).
struct SectionPolytope {
  std::vector<IntVector> normals;  // the rays u_i
  IntVector offsets;               // the a_i
  std::vector<std::vector<Rational>> vertices;  // sorted
  std::vector<IntVector> lattice_points;        // sorted

  bool empty() const { return vertices.empty(); }
};

/// Throws DomainError when the polytope is unbounded (the rays do not positively
/// span, as happens for incomplete fans).
inline SectionPolytope polytope_of_divisor(const Fan& fan, const TDivisor& d) {
  if (d.size() != fan.ray_count()) throw std::invalid_argument("divisor length does not match the fan");
  const auto n = static_cast<std::size_t>(fan.dim());
  const IntMatrix& u = fan.rays();
  if (rank(u) < n || !extreme_rays(u, n).empty()) throw DomainError("section polytope is unbounded");

  SectionPolytope p{u, d.coeffs, {}, {}};
  std::set<std::vector<Rational>> verts;
  const std::size_t m = u.size();
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    IntMatrix a;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(u[i]);
        rhs.push_back(-d[i]);
      }
    if (determinant(a) == 0) continue;
    auto x = *solve(a, rhs);
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += x[k] * u[i][k];
      feasible = s >= -Rational(d[i]);
    }
    if (feasible) verts.insert(std::move(x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  p.vertices.assign(verts.begin(), verts.end());
  if (p.vertices.empty()) return p;

  IntVector lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational mn = p.vertices.front()[k], mx = mn;
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[k] = floor_of(mn);
    hi[k] = ceil_of(mx);
  }
  IntVector x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < m && inside; ++i) inside = dot(x, u[i]) >= -d[i];
    if (inside) p.lattice_points.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == n) break;
    ++x[k];
  }
  std::sort(p.lattice_points.begin(), p.lattice_points.end());
  return p;
}

/// h^0(X, O(D)) = number of lattice points of P_D.
inline Integer count_sections(const SectionPolytope& p) { return Integer(p.lattice_points.size()); }

/// Cartier data: for each maximal cone the unique m with <m,u_i> = -a_i on its rays,
/// deduplicated and sorted. For nef D these are the vertices of P_D.
inline std::vector<IntVector> cartier_vertices(const Fan& fan, const TDivisor& d) {
  if (d.size() != fan.ray_count()) throw std::invalid_argument("divisor length does not match the fan");
  std::set<IntVector> out;
  for (std::size_t c = 0; c < fan.sorted_cones().size(); ++c) {
    const IntMatrix inv = unimodular_inverse(fan.cone_matrix(c));
    const auto& rays = fan.sorted_cones()[c];
    const auto n = rays.size();
    IntVector m(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) m[r] -= inv[r][k] * d[static_cast<std::size_t>(rays[k])];
    out.insert(std::move(m));
  }
  return {out.begin(), out.end()};
}

}  // namespace toricdisc
