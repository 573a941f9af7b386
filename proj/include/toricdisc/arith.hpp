#pragma once

// Exact integer and rational linear algebra on small dense matrices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricdisc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fan document or fan data violates a structural invariant.
class FanError : public Error {
 public:
  using Error::Error;
};

/// A computation was asked for outside the domain where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_value(x));
  return g;
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Divides by the content; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  const Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Binomial coefficient, zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer power(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

// Bareiss fraction-free elimination.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<Rational>> to_rational(const IntMatrix& a) {
  std::vector<std::vector<Rational>> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
  return r;
}

/// Rank over Q.
inline std::size_t rank(const IntMatrix& a) {
  auto m = to_rational(a);
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Solves the square system a x = b; nullopt when a is singular.
inline std::optional<std::vector<Rational>> solve(const IntMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: length mismatch");
  auto m = to_rational(a);
  std::vector<Rational> rhs(b.begin(), b.end());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    std::swap(rhs[c], rhs[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

/// Inverse of a matrix with determinant +-1; the result is integral.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw DomainError("matrix is not unimodular");
  IntMatrix inv(n, IntVector(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    const auto col = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = boost::multiprecision::numerator((*col)[r]);
  }
  return inv;
}

/// Normal vector of the hyperplane spanned by the d-1 rows of a (d-1) x d matrix,
/// by cofactor expansion. Zero iff the rows are dependent.
inline IntVector cofactor_normal(const IntMatrix& rows, std::size_t d) {
  if (rows.size() + 1 != d) throw std::invalid_argument("cofactor_normal: need d-1 rows");
  IntVector w(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntVector r;
      r.reserve(d - 1);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) r.push_back(row[j]);
      minor.push_back(std::move(r));
    }
    w[k] = (k % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
  }
  return w;
}

inline Integer floor_of(const Rational& x) {
  const Integer n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
  Integer q = n / d;
  if (q * d != n && n < 0) --q;
  return q;
}

inline Integer ceil_of(const Rational& x) { return -floor_of(-x); }

inline std::string format_vector(std::span<const Integer> v, char open = '(', char close = ')') {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << close;
  return os.str();
}

inline IntVector to_integers(std::span<const long long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace toricdisc
