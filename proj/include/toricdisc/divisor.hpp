#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "arith.hpp"

namespace toricdisc {

/// Torus-invariant divisor sum_i a_i D_i, coefficients indexed by ray.
struct TDivisor {
  IntVector coeffs;

  TDivisor() = default;
  explicit TDivisor(IntVector c) : coeffs(std::move(c)) {}
  TDivisor(std::initializer_list<long long> c) : coeffs(c.begin(), c.end()) {}

  static TDivisor zero(std::size_t m) { return TDivisor(IntVector(m, 0)); }
  static TDivisor ray(std::size_t m, std::size_t i) {
    auto d = zero(m);
    d.coeffs.at(i) = 1;
    return d;
  }
  /// Sum of all ray divisors, i.e. -K_X.
  static TDivisor anticanonical(std::size_t m) { return TDivisor(IntVector(m, 1)); }

  std::size_t size() const { return coeffs.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs[i]; }

  TDivisor& operator+=(const TDivisor& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  TDivisor& operator-=(const TDivisor& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend TDivisor operator+(TDivisor a, const TDivisor& b) { return a += b; }
  friend TDivisor operator-(TDivisor a, const TDivisor& b) { return a -= b; }
  friend TDivisor operator*(const Integer& k, TDivisor d) {
    for (auto& c : d.coeffs) c *= k;
    return d;
  }
  friend TDivisor operator*(long long k, const TDivisor& d) { return Integer(k) * d; }
  friend bool operator==(const TDivisor&, const TDivisor&) = default;

 private:
  void check(const TDivisor& o) const {
    if (o.size() != size()) throw std::invalid_argument("divisor length mismatch");
  }
};

}  // namespace toricdisc
