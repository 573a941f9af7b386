#pragma once

// Intersection numbers of torus-invariant divisors on a smooth complete toric variety.
//
// A monomial D_{i1}...D_{in} vanishes unless its rays span a cone (Stanley-Reisner);
// a square-free monomial on a maximal cone is 1. A repeated factor D_i is rewritten
// through a linear relation that involves only rays outside a maximal cone sigma
// containing the support: with m in the dual lattice such that <m,u_i> = -1 and
// <m,u_j> = 0 for the other rays of sigma,
//
//     D_i ~ sum_{k not in sigma} <m,u_k> D_k.
//
// Each rewrite adds a new ray to the support, so recursion depth is at most n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "divisor.hpp"
#include "fan.hpp"

namespace toricdisc {

/// Product of ray divisors, stored as a sorted multiset of ray indices.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }

  const std::vector<int>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  RayMask support() const { return mask_of(factors_); }
  bool square_free() const { return std::adjacent_find(factors_.begin(), factors_.end()) == factors_.end(); }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int f : factors_) ++m[f];
    return m;
  }

  Monomial times(int ray) const {
    Monomial r = *this;
    r.factors_.insert(std::upper_bound(r.factors_.begin(), r.factors_.end(), ray), ray);
    return r;
  }

  /// Replaces one occurrence of `from` by `to`.
  Monomial substituted(int from, int to) const {
    Monomial r = *this;
    r.factors_.erase(std::find(r.factors_.begin(), r.factors_.end(), from));
    return r.times(to);
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> factors_;
};

/// Homogeneous polynomial in the ray divisors with all Stanley-Reisner-vanishing
/// terms dropped.
class Cycle {
 public:
  static Cycle unit() {
    Cycle c;
    c.terms_.emplace(Monomial{}, 1);
    return c;
  }

  /// Sum of the square-free monomials of degree k that live on cones of the fan,
  /// i.e. the elementary symmetric polynomial e_k(D_1, ..., D_m) modulo the
  /// Stanley-Reisner ideal.
  static Cycle face_sum(const Fan& fan, std::size_t k) {
    Cycle c;
    c.degree_ = k;
    std::set<Monomial> faces;
    for (const auto& cone : fan.sorted_cones()) {
      if (k > cone.size()) continue;
      std::vector<bool> pick(cone.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<int> f;
        for (std::size_t i = 0; i < cone.size(); ++i)
          if (pick[i]) f.push_back(cone[i]);
        faces.insert(Monomial(std::move(f)));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    for (const auto& f : faces) c.terms_.emplace(f, 1);
    return c;
  }

  static Cycle of(const Fan& fan, const Monomial& m) {
    Cycle c;
    c.degree_ = m.degree();
    if (fan.is_face(m.support())) c.terms_.emplace(m, 1);
    return c;
  }

  std::size_t degree() const { return degree_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Cycle times(const Fan& fan, const TDivisor& d) const {
    if (d.size() != fan.ray_count()) throw std::invalid_argument("divisor length does not match the fan");
    Cycle out;
    out.degree_ = degree_ + 1;
    for (const auto& [mono, coeff] : terms_) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] == 0) continue;
        const RayMask supp = mono.support() | (RayMask{1} << j);
        if (!fan.is_face(supp)) continue;
        out.add(mono.times(static_cast<int>(j)), coeff * d[j]);
      }
    }
    return out;
  }

  Cycle& operator+=(const Cycle& o) {
    if (!o.terms_.empty() && !terms_.empty() && o.degree_ != degree_)
      throw std::invalid_argument("adding cycles of different degree");
    if (terms_.empty()) degree_ = o.degree_;
    for (const auto& [mono, coeff] : o.terms_) add(mono, coeff);
    return *this;
  }

  Cycle scaled(const Integer& k) const {
    Cycle out;
    out.degree_ = degree_;
    if (k == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * k);
    return out;
  }

 private:
  void add(const Monomial& m, const Integer& c) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Integer> terms_;
  std::size_t degree_ = 0;
};

/// How the reduction picks the cone and the repeated factor to rewrite.
/// `lexicographic` takes the lexicographically smallest maximal cone containing the
/// support and the smallest repeated ray; `hashed` picks among all admissible
/// choices by a hash of the monomial and `seed`. Both give the same numbers.
struct ReductionPolicy {
  enum class Kind { lexicographic, hashed };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;
};

/// Computes degrees of 0-cycles D_{i1}...D_{in}. Memoizes per monomial; safe for
/// concurrent queries (entries are published once and never change).
class IntersectionOracle {
 public:
  explicit IntersectionOracle(Fan fan, ReductionPolicy policy = {})
      : fan_(std::move(fan)), policy_(policy), memo_(std::make_unique<Memo>()) {
    require_smooth_complete(fan_);
    for (std::size_t c = 0; c < fan_.sorted_cones().size(); ++c)
      cone_inverse_.push_back(unimodular_inverse(fan_.cone_matrix(c)));
    if (fan_.dim() >= 2) walls_ = toricdisc::walls(fan_);
  }

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim(); }
  std::size_t ray_count() const { return fan_.ray_count(); }
  /// Walls of the fan (empty when n = 1).
  const std::vector<Wall>& walls() const { return walls_; }

  Integer intersection_number(const Monomial& mono) const {
    if (mono.degree() != static_cast<std::size_t>(fan_.dim()))
      throw std::invalid_argument("monomial has degree " + std::to_string(mono.degree()) + ", expected " +
                                  std::to_string(fan_.dim()));
    for (int f : mono.factors())
      if (f < 0 || static_cast<std::size_t>(f) >= fan_.ray_count())
        throw std::invalid_argument("monomial references missing ray " + std::to_string(f));
    return reduce(mono);
  }

  /// Multilinear pairing D_1 ... D_n of n divisors.
  Integer intersect_divisor_classes(std::span<const TDivisor> divisors) const {
    if (divisors.size() != static_cast<std::size_t>(fan_.dim()))
      throw std::invalid_argument("expected " + std::to_string(fan_.dim()) + " divisors, got " +
                                  std::to_string(divisors.size()));
    Cycle c = Cycle::unit();
    for (const auto& d : divisors) c = c.times(fan_, d);
    return evaluate(c);
  }

  /// Degree of a cycle of top degree n.
  Integer evaluate(const Cycle& c) const {
    if (c.empty()) return 0;
    if (c.degree() != static_cast<std::size_t>(fan_.dim()))
      throw std::invalid_argument("cycle is not of top degree");
    Integer total = 0;
    for (const auto& [mono, coeff] : c.terms()) total += coeff * reduce(mono);
    return total;
  }

  std::size_t memo_size() const {
    std::shared_lock lock(memo_->mutex);
    return memo_->table.size();
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
      return h;
    }
  };
  struct Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::vector<int>, Integer, KeyHash> table;
  };

  std::uint64_t choice_hash(const Monomial& mono) const {
    std::uint64_t h = KeyHash{}(mono.factors()) ^ (policy_.seed * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  Integer reduce(const Monomial& mono) const {
    const RayMask supp = mono.support();
    if (!fan_.is_face(supp)) return 0;
    if (mono.square_free()) return 1;  // n distinct rays on a face: a smooth maximal cone
    {
      std::shared_lock lock(memo_->mutex);
      if (auto it = memo_->table.find(mono.factors()); it != memo_->table.end()) return it->second;
    }

    std::vector<int> repeated;
    for (const auto& [ray, mult] : mono.multiplicities())
      if (mult > 1) repeated.push_back(ray);
    std::size_t cone;
    int target;
    if (policy_.kind == ReductionPolicy::Kind::lexicographic) {
      cone = *fan_.first_cone_containing(supp);
      target = repeated.front();
    } else {
      const auto candidates = fan_.cones_containing(supp);
      const std::uint64_t h = choice_hash(mono);
      cone = candidates[h % candidates.size()];
      target = repeated[(h >> 32) % repeated.size()];
    }

    const auto& rays = fan_.sorted_cones()[cone];
    const auto pos = static_cast<std::size_t>(std::find(rays.begin(), rays.end(), target) - rays.begin());
    const auto n = static_cast<std::size_t>(fan_.dim());
    // m = -(column pos of the inverse of the cone's ray matrix)
    IntVector m(n);
    for (std::size_t r = 0; r < n; ++r) m[r] = -cone_inverse_[cone][r][pos];

    Integer total = 0;
    const RayMask cone_mask = fan_.cone_mask(cone);
    for (std::size_t k = 0; k < fan_.ray_count(); ++k) {
      if (cone_mask >> k & 1) continue;
      const Integer coeff = dot(m, fan_.ray(k));
      if (coeff == 0) continue;
      total += coeff * reduce(mono.substituted(target, static_cast<int>(k)));
    }

    std::unique_lock lock(memo_->mutex);
    memo_->table.try_emplace(mono.factors(), total);
    return total;
  }

  Fan fan_;
  ReductionPolicy policy_;
  std::vector<IntMatrix> cone_inverse_;
  std::vector<Wall> walls_;
  std::unique_ptr<Memo> memo_;
};

}  // namespace toricdisc
