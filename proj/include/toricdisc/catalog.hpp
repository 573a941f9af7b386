#pragma once

// Fans of the example families and of the smooth toric Fano surfaces and threefolds.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "divisor.hpp"
#include "fan.hpp"
#include "fano_data.hpp"

namespace toricdisc {

struct ExpectedValue {
  std::string quantity;
  Integer value;
  std::string source;  // "published" or "derived"
};

struct CatalogEntry {
  std::string name;
  std::string constructor;
  std::vector<long long> params;
  Fan fan;
  std::vector<ExpectedValue> expected;

  std::optional<Integer> expected_value(std::string_view quantity) const {
    for (const auto& e : expected)
      if (e.quantity == quantity) return e.value;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Fan operations

namespace detail {

inline IntVector unit(std::size_t n, std::size_t i, long long v = 1) {
  IntVector e(n, 0);
  e[i] = v;
  return e;
}

inline std::vector<std::vector<int>> omit_one_of_each(const std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<int>> cones{{}};
  for (const auto& g : groups) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cones)
      for (int skip : g) {
        auto d = c;
        for (int r : g)
          if (r != skip) d.push_back(r);
        next.push_back(std::move(d));
      }
    cones = std::move(next);
  }
  for (auto& c : cones) std::sort(c.begin(), c.end());
  return cones;
}

}  // namespace detail

/// Fan over the faces of conv(rays), for rays that are the vertices of a simplicial
/// polytope containing the origin in its interior (the Fano case).
inline Fan face_fan(int n, std::vector<IntVector> rays, FanInfo info = {}) {
  const std::size_t m = rays.size();
  const auto un = static_cast<std::size_t>(n);
  if (m < un + 1) throw FanError("too few rays for a complete fan");
  std::vector<std::vector<int>> cones;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    IntMatrix a;
    std::vector<int> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(rays[i]);
        idx.push_back(static_cast<int>(i));
      }
    if (determinant(a) == 0) continue;
    const std::vector<Rational> ones(un, Rational(1));
    const auto w = *solve(a, ones);
    bool facet = true, touching = false;
    for (std::size_t j = 0; j < m && facet; ++j) {
      if (pick[j]) continue;
      Rational s = 0;
      for (std::size_t k = 0; k < un; ++k) s += w[k] * rays[j][k];
      if (s > 1) facet = false;
      if (s == 1) touching = true;
    }
    if (!facet) continue;
    if (touching) throw FanError("convex hull of the rays has a non-simplicial facet");
    cones.push_back(std::move(idx));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Fan(n, std::move(rays), std::move(cones), std::move(info));
}

/// Star subdivision of the cone spanned by `face`: the new ray is the sum of the face's
/// rays and is appended last. For a smooth fan this is the blow-up along the orbit
/// closure of `face`.
inline Fan star_subdivide(const Fan& fan, std::vector<int> face, FanInfo info = {}) {
  std::sort(face.begin(), face.end());
  const RayMask fm = mask_of(face);
  if (face.size() < 2 || !fan.is_face(fm)) throw DomainError("star subdivision needs a cone of dimension >= 2");
  IntVector u(static_cast<std::size_t>(fan.dim()), 0);
  for (int r : face)
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += fan.ray(static_cast<std::size_t>(r))[k];
  auto rays = fan.rays();
  rays.push_back(primitive(u));
  const int added = static_cast<int>(rays.size()) - 1;
  std::vector<std::vector<int>> cones;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    if ((fan.cone_mask(c) & fm) != fm) {
      cones.push_back(fan.max_cones()[c]);
      continue;
    }
    for (int drop : face) {
      std::vector<int> d;
      for (int r : fan.max_cones()[c])
        if (r != drop) d.push_back(r);
      d.push_back(added);
      cones.push_back(std::move(d));
    }
  }
  return Fan(fan.dim(), std::move(rays), std::move(cones), std::move(info));
}

/// Product fan; rays of `a` come first.
inline Fan product(const Fan& a, const Fan& b, FanInfo info = {}) {
  const auto na = static_cast<std::size_t>(a.dim()), nb = static_cast<std::size_t>(b.dim());
  std::vector<IntVector> rays;
  for (const auto& r : a.rays()) {
    IntVector v = r;
    v.resize(na + nb, 0);
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    IntVector v(na, 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  const int shift = static_cast<int>(a.ray_count());
  std::vector<std::vector<int>> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      auto c = ca;
      for (int r : cb) c.push_back(r + shift);
      cones.push_back(std::move(c));
    }
  return Fan(a.dim() + b.dim(), std::move(rays), std::move(cones), std::move(info));
}

// ---------------------------------------------------------------------------
// Families

inline CatalogEntry projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < un; ++i) rays.push_back(detail::unit(un, i));
  rays.emplace_back(un, Integer(-1));
  std::vector<int> all(un + 1);
  for (std::size_t i = 0; i <= un; ++i) all[i] = static_cast<int>(i);
  const std::string name = "P" + std::to_string(n);
  CatalogEntry e{name, "projective_space", {n},
                 Fan(n, std::move(rays), detail::omit_one_of_each({all}), FanInfo{name, std::vector<int>{0}, ""}),
                 {}};
  return e;
}

/// P_{P^{n-m}}(O + O(r_1) + ... + O(r_m)). Rays 0..n-m-1 are the base unit vectors,
/// ray n-m is ((-1,...,-1),(r_1,...,r_m)), rays n-m+1..n the fiber unit vectors and
/// ray n+1 is (0,...,0,-1,...,-1). Picard basis {D_0, D_{n+1}}.
inline CatalogEntry projective_bundle_over_P(int n, int m, std::vector<long long> r) {
  if (m < 1 || n <= m) throw std::invalid_argument("projective bundle needs n > m >= 1");
  if (r.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("projective bundle needs m twists");
  if (r.front() < 0 || !std::is_sorted(r.begin(), r.end()))
    throw std::invalid_argument("twists must satisfy 0 <= r_1 <= ... <= r_m");
  const auto un = static_cast<std::size_t>(n), base = static_cast<std::size_t>(n - m);
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < base; ++i) rays.push_back(detail::unit(un, i));
  IntVector twist(un, 0);
  for (std::size_t i = 0; i < base; ++i) twist[i] = -1;
  for (std::size_t j = 0; j < r.size(); ++j) twist[base + j] = r[j];
  rays.push_back(std::move(twist));
  for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) rays.push_back(detail::unit(un, base + j));
  IntVector last(un, 0);
  for (std::size_t j = base; j < un; ++j) last[j] = -1;
  rays.push_back(std::move(last));

  std::vector<int> base_rays, fiber_rays;
  for (int i = 0; i <= n - m; ++i) base_rays.push_back(i);
  for (int i = n - m + 1; i <= n + 1; ++i) fiber_rays.push_back(i);
  std::ostringstream name;
  name << "bundle(" << n << "," << m;
  for (auto x : r) name << "," << x;
  name << ")";
  std::vector<long long> params{n, m};
  params.insert(params.end(), r.begin(), r.end());
  return CatalogEntry{name.str(), "projective_bundle_over_P", params,
                      Fan(n, std::move(rays), detail::omit_one_of_each({base_rays, fiber_rays}),
                          FanInfo{name.str(), std::vector<int>{0, n + 1}, ""}),
                      {}};
}

/// P^{d_1} x ... x P^{d_k}; rays of each factor are consecutive.
inline CatalogEntry product_of_projective_spaces(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty product");
  Fan f = projective_space(dims.front()).fan;
  std::vector<int> basis{0};
  std::ostringstream name;
  name << "product(" << dims.front();
  for (std::size_t i = 1; i < dims.size(); ++i) {
    basis.push_back(static_cast<int>(f.ray_count()));
    f = product(f, projective_space(dims[i]).fan);
    name << "," << dims[i];
  }
  name << ")";
  std::vector<long long> params(dims.begin(), dims.end());
  return CatalogEntry{name.str(), "product_of_projective_spaces", params,
                      f.with_info(FanInfo{name.str(), basis, ""}), {}};
}

/// Rank one bundle over P^{n-1} with the cone {rho_0, rho_{n+1}} subdivided by the ray
/// (1,0,...,0,-1), appended as ray n+2.
inline CatalogEntry blowup_bundle_example(int n, long long r1) {
  if (n < 2) throw std::invalid_argument("blow-up example needs n >= 2");
  const auto bundle = projective_bundle_over_P(n, 1, {r1});
  const std::string name = "blowup(" + std::to_string(n) + "," + std::to_string(r1) + ")";
  Fan f = star_subdivide(bundle.fan, {0, n + 1});
  return CatalogEntry{name, "blowup_bundle_example", {n, r1}, f.with_info(FanInfo{name, std::nullopt, ""}), {}};
}

enum class TowerKind { Y0, Y1 };

/// P^1-bundle over the Hirzebruch surface F_r: P(O + O(sD'_0 + tD'_3)) for Y0 and
/// P(O(sD'_0) + O(tD'_3)) for Y1. Rays (1,0,+-s), (-1,r,0), (0,1,0), (0,-1,t),
/// (0,0,1), (0,0,-1).
inline CatalogEntry hirzebruch_tower(TowerKind kind, long long r, long long s, long long t) {
  if (r < 0) throw std::invalid_argument("tower needs r >= 0");
  if (kind == TowerKind::Y0 && (s < 0 || t < 0)) throw std::invalid_argument("Y0 tower needs s, t >= 0");
  if (kind == TowerKind::Y1 && (s <= 0 || t <= 0)) throw std::invalid_argument("Y1 tower needs s, t > 0");
  std::vector<IntVector> rays{
      {1, 0, kind == TowerKind::Y0 ? s : -s}, {-1, r, 0}, {0, 1, 0}, {0, -1, t}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<int>> cones;
  for (auto [p, q] : {std::pair{0, 2}, {2, 1}, {1, 3}, {3, 0}})
    for (int f : {4, 5}) cones.push_back({p, q, f});
  const std::string name = std::string(kind == TowerKind::Y0 ? "tower(Y0," : "tower(Y1,") + std::to_string(r) + "," +
                           std::to_string(s) + "," + std::to_string(t) + ")";
  return CatalogEntry{name, kind == TowerKind::Y0 ? "hirzebruch_tower_Y0" : "hirzebruch_tower_Y1", {r, s, t},
                      Fan(3, std::move(rays), std::move(cones), FanInfo{name, std::vector<int>{0, 3, 5}, ""}),
                      {}};
}

/// L = aD_0 + bD_3 + cD_5 on Y0 and aD_0 + bD_3 + c(sD_0 + D_5) on Y1.
inline TDivisor tower_divisor(TowerKind kind, long long s, long long a, long long b, long long c) {
  TDivisor d = TDivisor::zero(6);
  d.coeffs[0] = a + (kind == TowerKind::Y1 ? c * s : 0);
  d.coeffs[3] = b;
  d.coeffs[5] = c;
  return d;
}

/// P_{P^1 x P^1}(O(sD'_0) + O(tD'_3)): the Y1 tower over F_0.
inline CatalogEntry join_bundle_example(long long s, long long t) {
  auto e = hirzebruch_tower(TowerKind::Y1, 0, s, t);
  e.name = "join(" + std::to_string(s) + "," + std::to_string(t) + ")";
  e.constructor = "join_bundle_example";
  e.params = {s, t};
  e.fan = e.fan.with_info(FanInfo{e.name, e.fan.info().pic_basis, ""});
  return e;
}

/// Tautological class sD_0 + D_5 of the join example.
inline TDivisor join_tautological(long long s) { return tower_divisor(TowerKind::Y1, s, 0, 0, 1); }

// ---------------------------------------------------------------------------
// Fano varieties

/// How the minimal degree d of a figure entry is measured: the minimum of c_n(J_1(L))
/// over the finite set A, or the smallest defined dual degree over a bounded scan.
enum class Objective { topchern, dualdeg };

inline const char* to_string(Objective o) { return o == Objective::topchern ? "topchern" : "dualdeg"; }

struct FigureEntry {
  int figure;           // 1 for surfaces, 2 for threefolds
  std::string name;     // catalog name
  std::string label;    // display label
  int rho;
  Objective objective;
  long long d;
  std::optional<std::vector<long long>> argmin;  // in the entry's Picard basis
};

inline const std::vector<FigureEntry>& figure_entries() {
  static const std::vector<FigureEntry> entries{
      {1, "P2", "P^2", 1, Objective::topchern, 0, std::nullopt},
      {1, "P1xP1", "P^1xP^1", 2, Objective::topchern, 2, std::nullopt},
      {1, "DS8", "DS_8", 2, Objective::topchern, 3, std::nullopt},
      {1, "DS7", "DS_7", 3, Objective::topchern, 12, std::nullopt},
      {1, "DS6", "DS_6", 4, Objective::topchern, 12, std::nullopt},
      {2, "P3", "P^3", 1, Objective::topchern, 0, std::nullopt},
      {2, "P2xP1", "P^2xP^1", 2, Objective::dualdeg, 3, std::nullopt},
      {2, "PP2_O_O2", "P_{P^2}(O+O(2))", 2, Objective::topchern, 10, std::nullopt},
      {2, "PP1_O_O_O1", "P_{P^1}(O+O+O(1))", 2, Objective::dualdeg, 4, std::nullopt},
      {2, "PP2_O_O1", "P_{P^2}(O+O(1))", 2, Objective::topchern, 4, std::nullopt},
      {2, "P1xP1xP1", "P^1xP^1xP^1", 3, Objective::topchern, 4, std::nullopt},
      {2, "DS8xP1", "DS_8xP^1", 3, Objective::topchern, 8, std::nullopt},
      {2, "F3_1", "F^3_1", 3, Objective::topchern, 90, std::nullopt},
      {2, "F3_2", "F^3_2", 3, Objective::topchern, 24, std::nullopt},
      {2, "F3_3", "F^3_3", 3, Objective::topchern, 18, std::nullopt},
      {2, "F3_4", "F^3_4", 3, Objective::topchern, 16, std::nullopt},
      {2, "F3_5", "F^3_5", 3, Objective::topchern, 14, std::nullopt},
      {2, "DS7xP1", "DS_7xP^1", 4, Objective::topchern, 28, std::nullopt},
      {2, "F4_1", "F^4_1", 4, Objective::topchern, 78, std::nullopt},
      {2, "F4_2", "F^4_2", 4, Objective::topchern, 82, std::nullopt},
      {2, "F4_3", "F^4_3", 4, Objective::topchern, 84, std::nullopt},
      {2, "DS6xP1", "DS_6xP^1", 5, Objective::topchern, 24, std::vector<long long>{1, 2, 2, 1, 1}},
      {2, "F5_1", "F^5_1", 5, Objective::topchern, 72, std::vector<long long>{1, 2, 2, 1, 2}},
  };
  return entries;
}

inline std::vector<std::string> fano_names(int dim) {
  std::vector<std::string> out;
  for (const auto& e : figure_entries())
    if (e.figure == dim - 1) out.push_back(e.name);
  return out;
}

namespace detail {

inline CatalogEntry fano_entry(std::string_view name, int dim) {
  for (const auto& doc : fano_documents()) {
    if (doc.name != name) continue;
    Fan f = parse_fan(doc.json);
    if (f.dim() != dim) break;
    CatalogEntry e{std::string(name), dim == 2 ? "fano_surface" : "fano3", {}, std::move(f), {}};
    for (const auto& fig : figure_entries())
      if (fig.name == name) {
        e.expected.push_back({std::string("d_") + to_string(fig.objective), fig.d, "published"});
        e.expected.push_back({"rho", fig.rho, "published"});
      }
    return e;
  }
  throw std::invalid_argument("unknown " + std::string(dim == 2 ? "Fano surface" : "Fano threefold") + " '" +
                              std::string(name) + "'");
}

}  // namespace detail

inline CatalogEntry fano_surface(std::string_view name) { return detail::fano_entry(name, 2); }
inline CatalogEntry fano3(std::string_view name) { return detail::fano_entry(name, 3); }

// ---------------------------------------------------------------------------
// Lookup by name

namespace detail {

inline std::vector<long long> parse_args(std::string_view body) {
  std::vector<long long> out;
  std::string tok;
  std::istringstream in{std::string(body)};
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size()) throw std::invalid_argument("bad catalog parameter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Resolves a catalog name: a Fano name (see fano_names), Pn, or one of the
/// parametrized forms bundle(n,m,r_1,...), product(d_1,...), blowup(n,r1),
/// tower(Y0|Y1,r,s,t), join(s,t).
inline CatalogEntry lookup(std::string_view name) {
  for (int dim : {2, 3})
    for (const auto& f : fano_names(dim))
      if (f == name) return detail::fano_entry(name, dim);
  if (name.size() >= 2 && name[0] == 'P' && name.find_first_not_of("0123456789", 1) == std::string_view::npos)
    return projective_space(std::stoi(std::string(name.substr(1))));
  const auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')')
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
  const auto head = name.substr(0, open);
  auto body = name.substr(open + 1, name.size() - open - 2);
  if (head == "tower") {
    if (body.size() < 3 || (body.substr(0, 3) != "Y0," && body.substr(0, 3) != "Y1,"))
      throw std::invalid_argument("tower needs Y0 or Y1 as first parameter");
    const auto kind = body[1] == '0' ? TowerKind::Y0 : TowerKind::Y1;
    const auto p = detail::parse_args(body.substr(3));
    if (p.size() != 3) throw std::invalid_argument("tower needs r,s,t");
    return hirzebruch_tower(kind, p[0], p[1], p[2]);
  }
  const auto p = detail::parse_args(body);
  if (head == "bundle") {
    if (p.size() < 3) throw std::invalid_argument("bundle needs n,m,r_1,...");
    return projective_bundle_over_P(static_cast<int>(p[0]), static_cast<int>(p[1]), {p.begin() + 2, p.end()});
  }
  if (head == "product") return product_of_projective_spaces(std::vector<int>(p.begin(), p.end()));
  if (head == "blowup" && p.size() == 2) return blowup_bundle_example(static_cast<int>(p[0]), p[1]);
  if (head == "join" && p.size() == 2) return join_bundle_example(p[0], p[1]);
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace toricdisc
