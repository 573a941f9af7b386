#pragma once

// Shared fixtures for the test suites: the catalog sample every property runs over,
// a seeded generator of small test data, and a few independent reference oracles.

#include <algorithm>
#include <atomic>
#include <random>
#include <string>
#include <vector>

#include "toricdisc/toricdisc.hpp"

namespace toricdisc::fixtures {

/// Every Fano entry plus a spread of the parametrized families.
inline std::vector<CatalogEntry> catalog_sample() {
  std::vector<CatalogEntry> out;
  for (int dim : {2, 3})
    for (const auto& name : fano_names(dim)) out.push_back(lookup(name));
  for (const char* name : {"P1", "P4", "bundle(2,1,2)", "bundle(2,1,3)", "bundle(3,1,2)", "bundle(4,1,1)",
                           "bundle(3,2,1,2)", "bundle(4,2,0,1)", "product(2,2)", "product(1,1,1,1)", "blowup(2,1)",
                           "blowup(3,2)", "tower(Y0,1,2,1)", "tower(Y0,2,0,3)", "tower(Y1,1,1,2)", "join(2,3)"})
    out.push_back(lookup(name));
  return out;
}

/// Counts randomized cases, per test and across the whole run.
class CaseCount {
 public:
  CaseCount& operator++() {
    ++local_;
    ++total();
    return *this;
  }
  operator int() const { return local_; }
  static std::atomic<long long>& total() {
    static std::atomic<long long> n{0};
    return n;
  }

 private:
  int local_ = 0;
};

/// Deterministic source of small integers for randomized cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(between(0, static_cast<long long>(size) - 1)); }

  TDivisor divisor(std::size_t m, long long lo = -3, long long hi = 3) {
    TDivisor d = TDivisor::zero(m);
    for (auto& c : d.coeffs) c = between(lo, hi);
    return d;
  }

  /// Lattice functional with entries in [-2, 2].
  IntVector functional(int n) {
    IntVector m(static_cast<std::size_t>(n));
    for (auto& x : m) x = between(-2, 2);
    return m;
  }

  /// Nonnegative combination of nef cone generators, so nef by construction.
  TDivisor nef(const PicBasis& basis, const ConeDescription& cone, long long max = 2) {
    IntVector coords(basis.rank(), 0);
    for (const auto& g : cone.generators) {
      const long long k = between(0, max);
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += k * g.coords[i];
    }
    return basis.from_pic(coords);
  }

  /// Nef plus the sum of all generators, hence ample.
  TDivisor ample(const PicBasis& basis, const ConeDescription& cone, long long max = 2) {
    TDivisor d = nef(basis, cone, max);
    for (const auto& g : cone.generators) d += basis.from_pic(g);
    return d;
  }

 private:
  std::mt19937_64 rng_;
};

/// D_{i1}...D_{in} for an ordered list of ray indices.
inline Integer mono(const IntersectionOracle& o, std::vector<int> rays) {
  return o.intersection_number(Monomial(std::move(rays)));
}

/// e_k(D_1, ..., D_m) paired with `extras`, summed over every k-subset of rays with no
/// face pruning; vanishing is left to the intersection numbers.
inline Integer elementary_pairing(const IntersectionOracle& o, std::size_t k, const std::vector<TDivisor>& extras) {
  const std::size_t m = o.ray_count();
  Integer total = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<TDivisor> ds;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) ds.push_back(TDivisor::ray(m, i));
    ds.insert(ds.end(), extras.begin(), extras.end());
    total += o.intersect_divisor_classes(ds);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

/// L.C for the curve of a wall, from the linear relation among the rays of the two
/// adjacent cones: u_a + u_b + sum_{i in wall} c_i u_i = 0 gives D_a.C = D_b.C = 1
/// and D_i.C = c_i.
inline Integer wall_relation_degree(const Fan& fan, const Wall& w, const TDivisor& l) {
  const auto& ca = fan.sorted_cones()[w.cone_pair.first];
  const auto& cb = fan.sorted_cones()[w.cone_pair.second];
  int a = -1, b = -1;
  for (int r : ca)
    if (!std::binary_search(w.ray_indices.begin(), w.ray_indices.end(), r)) a = r;
  for (int r : cb)
    if (!std::binary_search(w.ray_indices.begin(), w.ray_indices.end(), r)) b = r;
  const auto n = static_cast<std::size_t>(fan.dim());
  // write -u_b in terms of the wall rays and u_a
  IntMatrix cols(n, IntVector(n, 0));
  std::vector<Rational> rhs(n);
  std::vector<int> basis = w.ray_indices;
  basis.push_back(a);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) cols[r][k] = fan.ray(static_cast<std::size_t>(basis[k]))[r];
    rhs[r] = Rational(-fan.ray(static_cast<std::size_t>(b))[r]);
  }
  const auto c = *solve(cols, rhs);
  // c[n-1] is the coefficient of u_a and comes out as 1
  Integer total = l[static_cast<std::size_t>(b)];
  for (std::size_t k = 0; k + 1 < n; ++k)
    total += l[static_cast<std::size_t>(basis[k])] * numerator(c[k]);
  total += l[static_cast<std::size_t>(a)] * numerator(c[n - 1]);
  return total;
}

}  // namespace toricdisc::fixtures
