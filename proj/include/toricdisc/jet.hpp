#pragma once

// Chern degrees of the cotangent bundle and of the first jet bundle J_1(L).
//
// From the Euler sequence c(Omega_X) = prod_i (1 - D_i), so c_k(Omega_X) is
// (-1)^k times the sum of square-free degree-k monomials on cones of the fan. The jet
// sequence 0 -> Omega_X(L) -> J_1(L) -> L -> 0 then gives
//
//     c_i(J_1(L)) = sum_{j=0}^{i} binom(n+1-j, i-j) c_j(Omega_X) L^{i-j}.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "chow.hpp"
#include "divisor.hpp"
#include "nefcone.hpp"

namespace toricdisc {

namespace detail {

inline void check_arity(const IntersectionOracle& oracle, std::size_t degree, std::size_t extras) {
  const auto n = static_cast<std::size_t>(oracle.dim());
  if (degree > n) throw std::invalid_argument("Chern index " + std::to_string(degree) + " exceeds dimension");
  if (degree + extras != n)
    throw std::invalid_argument("expected " + std::to_string(n - degree) + " extra divisors, got " +
                                std::to_string(extras));
}

inline Cycle times_all(const IntersectionOracle& oracle, Cycle c, std::span<const TDivisor> ds) {
  for (const auto& d : ds) c = c.times(oracle.fan(), d);
  return c;
}

}  // namespace detail

/// c_k(Omega_X) * extras[0] * ... * extras[n-k-1].
inline Integer chern_omega_pairing(const IntersectionOracle& oracle, std::size_t k, std::span<const TDivisor> extras) {
  detail::check_arity(oracle, k, extras.size());
  const Integer e = oracle.evaluate(detail::times_all(oracle, Cycle::face_sum(oracle.fan(), k), extras));
  return k % 2 ? Integer(-e) : e;
}

/// c_i(J_1(L)) * extras[0] * ... * extras[n-i-1].
inline Integer jet_chern_pairing(const IntersectionOracle& oracle, std::size_t i, const TDivisor& l,
                                 std::span<const TDivisor> extras) {
  detail::check_arity(oracle, i, extras.size());
  const auto n = static_cast<long long>(oracle.dim());
  Integer total = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    Cycle c = detail::times_all(oracle, Cycle::face_sum(oracle.fan(), j), extras);
    for (std::size_t t = j; t < i; ++t) c = c.times(oracle.fan(), l);
    const Integer v = oracle.evaluate(c);
    if (v == 0) continue;
    const Integer coeff = binomial(n + 1 - static_cast<long long>(j), static_cast<long long>(i - j));
    total += (j % 2 ? Integer(-coeff) : coeff) * v;
  }
  return total;
}

/// c_n(J_1(L)) = sum_k (n+1-k) c_k(Omega_X) L^{n-k}. May be negative when L is not
/// very ample.
inline Integer jet_top_chern(const IntersectionOracle& oracle, const TDivisor& l) {
  return jet_chern_pairing(oracle, static_cast<std::size_t>(oracle.dim()), l, {});
}

enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    default: return "unknown";
  }
}

/// delta[j] = c_{n-j}(J_1(L)) * L^j for j = 0..n. The defect is the first j < n with
/// delta[j] != 0 and the dual degree is delta[defect]. When delta[0..n-1] all vanish
/// the discriminant is empty (delta[n] = L^n is never zero for ample L).
struct JetReport {
  std::vector<Integer> delta;
  std::optional<int> defect;
  std::optional<Integer> dual_degree;
  bool nef = false;
  bool ample = false;
  Tri very_ample = Tri::unknown;

  bool empty_discriminant() const { return !defect.has_value(); }
  bool negative_top_chern() const { return !delta.empty() && delta.front() < 0; }

  /// Human-readable caveats attached to the numbers.
  std::vector<std::string> flags() const {
    std::vector<std::string> f;
    if (!ample) f.emplace_back("not-ample: the numbers need not be a dual variety degree");
    if (negative_top_chern()) f.emplace_back("negative-top-chern: the general singular member is singular along a positive dimensional set");
    if (empty_discriminant()) f.emplace_back("empty-discriminant");
    return f;
  }
};

inline JetReport dual_degree_defect(const IntersectionOracle& oracle, const TDivisor& l) {
  const auto n = static_cast<std::size_t>(oracle.dim());
  JetReport r;
  std::vector<TDivisor> powers;
  for (std::size_t j = 0; j <= n; ++j) {
    r.delta.push_back(jet_chern_pairing(oracle, n - j, l, powers));
    powers.push_back(l);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (r.delta[j] != 0) {
      r.defect = static_cast<int>(j);
      r.dual_degree = r.delta[j];
      break;
    }
  const auto p = wall_pairings(oracle, l);
  r.nef = std::all_of(p.begin(), p.end(), [](const Integer& x) { return x >= 0; });
  r.ample = std::all_of(p.begin(), p.end(), [](const Integer& x) { return x > 0; });
  // on smooth toric varieties ample and very ample coincide
  r.very_ample = r.ample ? Tri::yes : Tri::no;
  return r;
}

}  // namespace toricdisc
