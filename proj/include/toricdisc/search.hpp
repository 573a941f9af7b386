#pragma once

// Minimization of discriminant degrees over ample classes.
//
// c_n(J_1(L)) is non-decreasing along nef directions from an ample L, so its minimum
// over ample classes is attained in the finite set
//
//     A = {sum lambda_i G_i : 0 <= lambda_i <= 1} cap Amp(X)_Z,
//
// where G_i are the nef cone generators. The dual degree has no such bound and is only
// scanned over a box.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "catalog.hpp"
#include "chow.hpp"
#include "jet.hpp"
#include "nefcone.hpp"
#include "picard.hpp"
#include "polyhedral.hpp"

namespace toricdisc {

/// Worker threads for candidate evaluation: TORICDISC_WORKERS if set and positive,
/// else the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("TORICDISC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(items[i]), evaluated on up to worker_count() threads. Exceptions are
/// rethrown for the lowest failing index, so behaviour does not depend on scheduling.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(items.size(), 1));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < items.size(); i += workers) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct SearchResult {
  Objective objective = Objective::topchern;
  Integer minimum;
  std::vector<PicVector> argmin;  // sorted
  std::size_t candidates_examined = 0;
  bool certified = false;
  /// Ample candidates whose discriminant is empty (dual-degree objective only).
  std::vector<PicVector> empty_discriminant;
};

namespace detail {

inline std::vector<IntVector> box_points(const IntVector& lo, const IntVector& hi) {
  std::vector<IntVector> out;
  const std::size_t d = lo.size();
  for (std::size_t k = 0; k < d; ++k)
    if (lo[k] > hi[k]) return out;
  IntVector x = lo;
  while (true) {
    out.push_back(x);
    std::size_t k = d;
    while (k > 0 && x[k - 1] == hi[k - 1]) x[k - 1] = lo[k - 1], --k;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;  // lexicographic
}

}  // namespace detail

/// Ample lattice points of the zonotope spanned by the nef cone generators, in
/// lexicographic order.
inline std::vector<PicVector> enumerate_A(const ConeDescription& cone) {
  if (cone.generators.empty()) throw DomainError("nef cone has no generators");
  const std::size_t d = cone.rank;
  IntVector lo(d, 0), hi(d, 0);
  std::vector<IntVector> gens;
  for (const auto& g : cone.generators) {
    gens.push_back(g.coords);
    for (std::size_t k = 0; k < d; ++k) (g.coords[k] < 0 ? lo[k] : hi[k]) += g.coords[k];
  }
  std::vector<PicVector> out;
  for (auto& p : detail::box_points(lo, hi)) {
    PicVector v{std::move(p), cone.basis_id};
    if (cone.interior(v) && in_zonotope(gens, v.coords)) out.push_back(std::move(v));
  }
  return out;
}

namespace detail {

inline void collect_minimum(SearchResult& r, const std::vector<PicVector>& points, const std::vector<std::optional<Integer>>& values) {
  bool any = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!values[i]) continue;
    if (!any || *values[i] < r.minimum) {
      r.minimum = *values[i];
      r.argmin.clear();
      any = true;
    }
    if (*values[i] == r.minimum) r.argmin.push_back(points[i]);
  }
  std::sort(r.argmin.begin(), r.argmin.end());
}

}  // namespace detail

/// Minimum of c_n(J_1(L)) over ample classes, found on the set A. Certified.
inline SearchResult min_topchern_over_A(const IntersectionOracle& oracle, const PicBasis& basis,
                                        const ConeDescription& cone) {
  if (cone.basis_id != basis.id()) throw std::invalid_argument("cone and basis differ");
  const auto points = enumerate_A(cone);
  if (points.empty()) throw DomainError("the set A is empty");
  const auto values = parallel_map(points, [&](const PicVector& v) -> std::optional<Integer> {
    return jet_top_chern(oracle, basis.from_pic(v));
  });
  SearchResult r;
  r.objective = Objective::topchern;
  r.certified = true;
  r.candidates_examined = points.size();
  detail::collect_minimum(r, points, values);
  return r;
}

/// Smallest defined dual degree over ample classes with coordinates in [-bound, bound].
/// Not certified: classes outside the box are not examined.
inline SearchResult min_dual_degree_bounded(const IntersectionOracle& oracle, const PicBasis& basis,
                                            const ConeDescription& cone, long long bound = 4) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  if (cone.basis_id != basis.id()) throw std::invalid_argument("cone and basis differ");
  const IntVector lo(cone.rank, Integer(-bound)), hi(cone.rank, Integer(bound));
  std::vector<PicVector> points;
  for (auto& p : detail::box_points(lo, hi)) {
    PicVector v{std::move(p), cone.basis_id};
    if (cone.interior(v)) points.push_back(std::move(v));
  }
  if (points.empty()) throw DomainError("no ample class within the bound");
  const auto reports = parallel_map(points, [&](const PicVector& v) { return dual_degree_defect(oracle, basis.from_pic(v)); });
  std::vector<std::optional<Integer>> values;
  SearchResult r;
  r.objective = Objective::dualdeg;
  r.certified = false;
  r.candidates_examined = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    values.push_back(reports[i].dual_degree);
    if (reports[i].empty_discriminant()) r.empty_discriminant.push_back(points[i]);
  }
  if (std::none_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); }))
    throw DomainError("every ample class within the bound has empty discriminant");
  detail::collect_minimum(r, points, values);
  return r;
}

// ---------------------------------------------------------------------------
// Family scans

enum class ScanFamily { projective_spaces, projective_bundles, rank_one_bundles, rank_two_bundles, towers };

inline const char* to_string(ScanFamily f) {
  switch (f) {
    case ScanFamily::projective_spaces: return "projective-spaces";
    case ScanFamily::projective_bundles: return "projective-bundles";
    case ScanFamily::rank_one_bundles: return "rank-one-bundles";
    case ScanFamily::rank_two_bundles: return "rank-two-bundles";
    default: return "towers";
  }
}

inline ScanFamily parse_scan_family(std::string_view s) {
  for (auto f : {ScanFamily::projective_spaces, ScanFamily::projective_bundles, ScanFamily::rank_one_bundles,
                 ScanFamily::rank_two_bundles, ScanFamily::towers})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

/// Parameter bounds: dimension, bundle twists (r, s, t) and divisor coefficients.
struct ScanBounds {
  int max_dim = 4;
  long long max_twist = 4;
  long long max_coeff = 4;
};

struct DegreePredicate {
  enum class Kind { equal, at_most };
  Kind kind = Kind::equal;
  Integer value = 0;

  bool operator()(const Integer& d) const { return kind == Kind::equal ? d == value : d <= value; }
};

struct ScanRow {
  std::string variety;
  std::vector<std::pair<std::string, long long>> params;
  TDivisor divisor;
  JetReport report;
};

namespace detail {

struct ScanCase {
  std::string variety;
  std::vector<std::pair<std::string, long long>> params;
  std::size_t fan_index;
  TDivisor divisor;
};

inline void nondecreasing_tuples(int len, long long max, std::vector<long long>& cur,
                                 std::vector<std::vector<long long>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (long long v = cur.empty() ? 0 : cur.back(); v <= max; ++v) {
    cur.push_back(v);
    nondecreasing_tuples(len, max, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every (variety, ample L) in the family within `bounds` whose dual degree is
/// defined and satisfies `pred`, with full delta sequences. Products P^a x P^b are
/// listed once, with a >= b.
inline std::vector<ScanRow> scan_predicate(ScanFamily family, const ScanBounds& bounds, const DegreePredicate& pred) {
  std::vector<IntersectionOracle> oracles;
  std::vector<detail::ScanCase> cases;
  using Params = std::vector<std::pair<std::string, long long>>;

  auto add_bundles = [&](int n, int m) {
    std::vector<std::vector<long long>> twists;
    std::vector<long long> cur;
    detail::nondecreasing_tuples(m, bounds.max_twist, cur, twists);
    for (const auto& r : twists) {
      const bool product = std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
      if (product && n - m < m) continue;
      auto e = projective_bundle_over_P(n, m, r);
      oracles.emplace_back(e.fan);
      for (long long a = 0; a <= bounds.max_coeff; ++a)
        for (long long b = 0; b <= bounds.max_coeff; ++b) {
          Params p{{"n", n}, {"m", m}};
          for (std::size_t j = 0; j < r.size(); ++j) p.emplace_back("r" + std::to_string(j + 1), r[j]);
          p.emplace_back("a", a);
          p.emplace_back("b", b);
          TDivisor l = TDivisor::zero(e.fan.ray_count());
          l.coeffs[0] = a;
          l.coeffs[static_cast<std::size_t>(n + 1)] = b;
          cases.push_back({e.name, std::move(p), oracles.size() - 1, std::move(l)});
        }
    }
  };

  switch (family) {
    case ScanFamily::projective_spaces:
      for (int n = 1; n <= bounds.max_dim; ++n) {
        auto e = projective_space(n);
        oracles.emplace_back(e.fan);
        for (long long q = 0; q <= bounds.max_coeff; ++q) {
          TDivisor l = TDivisor::zero(e.fan.ray_count());
          l.coeffs[0] = q;
          cases.push_back({e.name, {{"n", n}, {"q", q}}, oracles.size() - 1, std::move(l)});
        }
      }
      break;
    case ScanFamily::projective_bundles:
      for (int n = 2; n <= bounds.max_dim; ++n)
        for (int m = 1; m < n; ++m) add_bundles(n, m);
      break;
    case ScanFamily::rank_one_bundles:
      for (int n = 2; n <= bounds.max_dim; ++n) add_bundles(n, 1);
      break;
    case ScanFamily::rank_two_bundles:
      add_bundles(3, 2);
      break;
    case ScanFamily::towers:
      for (auto kind : {TowerKind::Y0, TowerKind::Y1})
        for (long long r = 0; r <= bounds.max_twist; ++r)
          for (long long s = kind == TowerKind::Y0 ? 0 : 1; s <= bounds.max_twist; ++s)
            for (long long t = kind == TowerKind::Y0 ? 0 : 1; t <= bounds.max_twist; ++t) {
              auto e = hirzebruch_tower(kind, r, s, t);
              oracles.emplace_back(e.fan);
              for (long long a = 0; a <= bounds.max_coeff; ++a)
                for (long long b = 0; b <= bounds.max_coeff; ++b)
                  for (long long c = 0; c <= bounds.max_coeff; ++c)
                    cases.push_back({e.name,
                                     {{"kind", kind == TowerKind::Y0 ? 0 : 1}, {"r", r}, {"s", s}, {"t", t}, {"a", a}, {"b", b}, {"c", c}},
                                     oracles.size() - 1,
                                     tower_divisor(kind, s, a, b, c)});
            }
      break;
  }

  const auto reports = parallel_map(cases, [&](const detail::ScanCase& c) -> std::optional<JetReport> {
    const auto& oracle = oracles[c.fan_index];
    if (!is_ample(oracle, c.divisor)) return std::nullopt;
    return dual_degree_defect(oracle, c.divisor);
  });
  std::vector<ScanRow> rows;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& rep = reports[i];
    if (!rep || !rep->dual_degree || !pred(*rep->dual_degree)) continue;
    rows.push_back({cases[i].variety, cases[i].params, cases[i].divisor, *rep});
  }
  return rows;
}

}  // namespace toricdisc
