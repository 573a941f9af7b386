#pragma once

// Picard lattice of a smooth complete toric variety.
//
// Pic(X) = Z^m / M, where m in M maps to div(m) = sum_j <m,u_j> D_j. A set B of
// rho = m - n ray divisors is a Z-basis of Pic exactly when the complementary rays
// C form a lattice basis of N. Coordinates of D are then obtained by subtracting the
// unique div(m) that clears the coefficients on C:
//
//     to_pic(a) = a_B - U_B U_C^{-1} a_C.

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "divisor.hpp"
#include "fan.hpp"

namespace toricdisc {

struct PicVector {
  IntVector coords;
  std::string basis_id;

  friend bool operator==(const PicVector& a, const PicVector& b) {
    a.check_same_basis(b);
    return a.coords == b.coords;
  }
  friend bool operator<(const PicVector& a, const PicVector& b) {
    a.check_same_basis(b);
    return a.coords < b.coords;
  }
  std::string str() const { return format_vector(coords); }

 private:
  void check_same_basis(const PicVector& o) const {
    if (basis_id != o.basis_id) throw std::invalid_argument("comparing Picard vectors from different bases");
  }
};

class PicBasis {
 public:
  PicBasis(std::vector<int> basis_rays, IntMatrix to_pic, std::size_t ray_count, std::string id)
      : rays_(std::move(basis_rays)), to_pic_(std::move(to_pic)), m_(ray_count), id_(std::move(id)) {}

  std::size_t rank() const { return rays_.size(); }
  std::size_t ray_count() const { return m_; }
  const std::vector<int>& basis_rays() const { return rays_; }
  /// rho x m matrix with kernel equal to the principal divisors.
  const IntMatrix& to_pic() const { return to_pic_; }
  const std::string& id() const { return id_; }

  /// m x rho section of to_pic: coordinate b goes to the ray divisor basis_rays[b].
  IntMatrix from_pic_matrix() const {
    IntMatrix f(m_, IntVector(rank(), 0));
    for (std::size_t b = 0; b < rank(); ++b) f[static_cast<std::size_t>(rays_[b])][b] = 1;
    return f;
  }

  PicVector class_of(const TDivisor& d) const {
    if (d.size() != m_) throw std::invalid_argument("divisor length does not match the fan");
    PicVector v{IntVector(rank(), 0), id_};
    for (std::size_t b = 0; b < rank(); ++b) v.coords[b] = dot(to_pic_[b], d.coeffs);
    return v;
  }

  TDivisor from_pic(const PicVector& v) const {
    check(v);
    TDivisor d = TDivisor::zero(m_);
    for (std::size_t b = 0; b < rank(); ++b) d.coeffs[static_cast<std::size_t>(rays_[b])] = v.coords[b];
    return d;
  }

  TDivisor from_pic(std::span<const Integer> coords) const { return from_pic(make(coords)); }

  PicVector make(std::span<const Integer> coords) const {
    if (coords.size() != rank())
      throw std::invalid_argument("expected " + std::to_string(rank()) + " Picard coordinates, got " +
                                  std::to_string(coords.size()));
    return PicVector{IntVector(coords.begin(), coords.end()), id_};
  }

  bool linearly_equivalent(const TDivisor& a, const TDivisor& b) const { return class_of(a) == class_of(b); }

  void check(const PicVector& v) const {
    if (v.basis_id != id_) throw std::invalid_argument("Picard vector belongs to basis " + v.basis_id + ", not " + id_);
    if (v.coords.size() != rank()) throw std::invalid_argument("Picard vector has wrong length");
  }

 private:
  std::vector<int> rays_;
  IntMatrix to_pic_;
  std::size_t m_;
  std::string id_;
};

/// Principal divisor div(m) = sum_j <m,u_j> D_j.
inline TDivisor principal_divisor(const Fan& fan, std::span<const Integer> m) {
  TDivisor d = TDivisor::zero(fan.ray_count());
  for (std::size_t j = 0; j < fan.ray_count(); ++j) d.coeffs[j] = dot(m, fan.ray(j));
  return d;
}

namespace detail {

inline std::optional<IntMatrix> basis_matrix(const Fan& fan, const std::vector<int>& basis) {
  std::vector<int> complement;
  for (std::size_t j = 0; j < fan.ray_count(); ++j)
    if (std::find(basis.begin(), basis.end(), static_cast<int>(j)) == basis.end())
      complement.push_back(static_cast<int>(j));
  IntMatrix uc;
  for (int j : complement) uc.push_back(fan.ray(static_cast<std::size_t>(j)));
  const Integer det = determinant(uc);
  if (det != 1 && det != -1) return std::nullopt;
  // inverse of U_C (rows are rays) gives m = U_C^{-1} a_C with <m,u_c> = a_c
  const IntMatrix inv = unimodular_inverse(uc);
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  IntMatrix to_pic(basis.size(), IntVector(fan.ray_count(), 0));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const IntVector& ub = fan.ray(static_cast<std::size_t>(basis[b]));
    to_pic[b][static_cast<std::size_t>(basis[b])] = 1;
    // coefficient of a_c: -(u_b . column c of inv)
    for (std::size_t c = 0; c < complement.size(); ++c) {
      Integer s = 0;
      for (std::size_t r = 0; r < n; ++r) s += ub[r] * inv[r][c];
      to_pic[b][static_cast<std::size_t>(complement[c])] = -s;
    }
  }
  return to_pic;
}

inline std::string basis_id(const Fan& fan, const std::vector<int>& basis) {
  const std::string label = fan.name().empty() ? "fan" + std::to_string(std::hash<std::string>{}(emit_fan(fan)) % 1000003)
                                                : fan.name();
  return label + ":" + format_indices(basis);
}

}  // namespace detail

/// Integral Picard basis made of ray divisors. Uses `preferred` (or the fan's
/// `pic_basis`) when given; otherwise the lexicographically first ray subset that
/// is a Z-basis.
inline PicBasis picard_basis(const Fan& fan, std::optional<std::vector<int>> preferred = std::nullopt) {
  require_smooth_complete(fan);
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  const std::size_t m = fan.ray_count();
  const std::size_t rho = m - n;
  if (!preferred) preferred = fan.info().pic_basis;
  if (preferred) {
    if (preferred->size() != rho)
      throw DomainError("preferred Picard basis has " + std::to_string(preferred->size()) + " rays, rank is " +
                        std::to_string(rho));
    for (int r : *preferred)
      if (r < 0 || static_cast<std::size_t>(r) >= m) throw DomainError("preferred basis references missing ray");
    auto to_pic = detail::basis_matrix(fan, *preferred);
    if (!to_pic) throw DomainError("rays " + format_indices(*preferred) + " do not form a basis of the Picard group");
    return PicBasis(*preferred, std::move(*to_pic), m, detail::basis_id(fan, *preferred));
  }
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(rho), true);
  do {
    std::vector<int> basis;
    for (std::size_t j = 0; j < m; ++j)
      if (pick[j]) basis.push_back(static_cast<int>(j));
    if (auto to_pic = detail::basis_matrix(fan, basis))
      return PicBasis(basis, std::move(*to_pic), m, detail::basis_id(fan, basis));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  // the complement of any maximal cone works, so this is unreachable for smooth fans
  throw DomainError("no Picard basis made of ray divisors");
}

}  // namespace toricdisc
