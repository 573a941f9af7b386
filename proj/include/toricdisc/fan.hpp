#pragma once

// Fans of smooth complete toric varieties: construction, the JSON fan document,
// validation and wall enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arith.hpp"

namespace toricdisc {

using RayMask = std::uint64_t;

inline constexpr std::size_t kMaxRays = 64;

inline RayMask mask_of(std::span<const int> rays) {
  RayMask m = 0;
  for (int r : rays) m |= RayMask{1} << r;
  return m;
}

inline std::string format_indices(std::span<const int> idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

struct FanInfo {
  std::string name;
  std::optional<std::vector<int>> pic_basis;
  std::string provenance;
};

/// A simplicial fan given by primitive ray generators and maximal cones.
/// Ray order is fixed at construction; divisor coefficient vectors index against it.
/// Immutable after construction.
class Fan {
 public:
  Fan(int dim, std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones, FanInfo info = {})
      : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)), info_(std::move(info)) {
    check_structure();
    index();
  }

  int dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  /// Maximal cones in document order.
  const std::vector<std::vector<int>>& max_cones() const { return cones_; }
  /// Maximal cones with ray indices sorted ascending, same order as max_cones().
  const std::vector<std::vector<int>>& sorted_cones() const { return sorted_; }
  RayMask cone_mask(std::size_t c) const { return masks_.at(c); }
  const FanInfo& info() const { return info_; }
  const std::string& name() const { return info_.name; }

  Fan with_info(FanInfo info) const {
    Fan f = *this;
    f.info_ = std::move(info);
    f.check_structure();
    return f;
  }

  /// Whether the rays in `mask` span a cone of the fan.
  bool is_face(RayMask mask) const { return faces_.contains(mask); }

  /// Maximal cones containing `mask`, ordered by their sorted ray-index sets.
  std::vector<std::size_t> cones_containing(RayMask mask) const {
    std::vector<std::size_t> out;
    for (std::size_t c : lex_order_)
      if ((masks_[c] & mask) == mask) out.push_back(c);
    return out;
  }

  std::optional<std::size_t> first_cone_containing(RayMask mask) const {
    for (std::size_t c : lex_order_)
      if ((masks_[c] & mask) == mask) return c;
    return std::nullopt;
  }

  IntMatrix cone_matrix(std::size_t c) const {
    IntMatrix m;
    for (int r : sorted_.at(c)) m.push_back(rays_[r]);
    return m;
  }

 private:
  void check_structure() const {
    if (dim_ < 1) throw FanError("fan dimension must be positive");
    if (rays_.size() > kMaxRays) throw FanError("at most 64 rays are supported");
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      const auto& r = rays_[i];
      if (r.size() != static_cast<std::size_t>(dim_))
        throw FanError("ray " + std::to_string(i) + " has length " + std::to_string(r.size()) + ", expected " +
                       std::to_string(dim_));
      if (is_zero(r)) throw FanError("ray " + std::to_string(i) + " is zero");
      if (gcd_of(r) != 1) throw FanError("ray " + std::to_string(i) + " " + format_vector(r) + " is not primitive");
      if (!seen.insert(r).second) throw FanError("duplicate ray " + format_vector(r));
    }
    std::set<std::vector<int>> cone_sets;
    for (std::size_t c = 0; c < cones_.size(); ++c) {
      const auto& cone = cones_[c];
      if (cone.size() != static_cast<std::size_t>(dim_))
        throw FanError("cone " + std::to_string(c) + " has " + std::to_string(cone.size()) + " rays, expected " +
                       std::to_string(dim_));
      for (int r : cone)
        if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
          throw FanError("cone " + std::to_string(c) + " references missing ray " + std::to_string(r));
      std::vector<int> s = cone;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw FanError("cone " + std::to_string(c) + " repeats a ray");
      if (!cone_sets.insert(s).second) throw FanError("duplicate cone " + format_indices(s));
    }
    if (cones_.empty()) throw FanError("fan has no maximal cones");
    if (info_.pic_basis) {
      std::set<int> b;
      for (int r : *info_.pic_basis) {
        if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
          throw FanError("pic_basis references missing ray " + std::to_string(r));
        if (!b.insert(r).second) throw FanError("pic_basis repeats ray " + std::to_string(r));
      }
    }
  }

  void index() {
    sorted_.clear();
    masks_.clear();
    for (const auto& cone : cones_) {
      auto s = cone;
      std::sort(s.begin(), s.end());
      masks_.push_back(mask_of(s));
      sorted_.push_back(std::move(s));
    }
    lex_order_.resize(cones_.size());
    for (std::size_t i = 0; i < lex_order_.size(); ++i) lex_order_[i] = i;
    std::sort(lex_order_.begin(), lex_order_.end(), [&](std::size_t a, std::size_t b) { return sorted_[a] < sorted_[b]; });
    faces_.clear();
    for (RayMask m : masks_) {
      // enumerate all submasks, including the empty face
      for (RayMask s = m;; s = (s - 1) & m) {
        faces_.insert(s);
        if (s == 0) break;
      }
    }
  }

  int dim_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<int>> cones_;
  FanInfo info_;
  std::vector<std::vector<int>> sorted_;
  std::vector<RayMask> masks_;
  std::vector<std::size_t> lex_order_;
  std::unordered_set<RayMask> faces_;
};

// ---------------------------------------------------------------------------
// Fan document

namespace detail {

struct JsonNode {
  enum class Kind { Null, Boolean, Integer, Float, String, Array, Object };
  Kind kind = Kind::Null;
  Integer integer;
  std::string text;
  std::vector<JsonNode> items;
  std::vector<std::pair<std::string, JsonNode>> fields;

  static JsonNode of(Kind k) {
    JsonNode n;
    n.kind = k;
    return n;
  }
};

// Builds a JsonNode tree. Integer literals of any length are kept exact: nlohmann
// reports out-of-range integers as floats but hands over the raw token.
class JsonTreeBuilder final : public nlohmann::json_sax<nlohmann::json> {
 public:
  bool null() override { return put(JsonNode{}); }
  bool boolean(bool) override { return put(JsonNode::of(JsonNode::Kind::Boolean)); }
  bool number_integer(number_integer_t v) override { return put_integer(Integer(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put_integer(Integer(v)); }
  bool number_float(number_float_t, const string_t& raw) override {
    static const std::regex integer_literal("-?[0-9]+");
    if (std::regex_match(raw, integer_literal)) return put_integer(Integer(raw));
    JsonNode n = JsonNode::of(JsonNode::Kind::Float);
    n.text = raw;
    return put(std::move(n));
  }
  bool string(string_t& v) override {
    JsonNode n = JsonNode::of(JsonNode::Kind::String);
    n.text = v;
    return put(std::move(n));
  }
  bool binary(binary_t&) override { return put(JsonNode{}); }
  bool start_object(std::size_t) override {
    stack_.push_back(JsonNode::of(JsonNode::Kind::Object));
    keys_.emplace_back();
    return true;
  }
  bool key(string_t& k) override {
    keys_.back() = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back(JsonNode::of(JsonNode::Kind::Array));
    keys_.emplace_back();
    return true;
  }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    error_ = ex.what();
    return false;
  }

  const JsonNode& root() const { return root_; }
  const std::string& error() const { return error_; }

 private:
  bool put_integer(Integer v) {
    JsonNode n = JsonNode::of(JsonNode::Kind::Integer);
    n.integer = std::move(v);
    return put(std::move(n));
  }
  bool close() {
    JsonNode n = std::move(stack_.back());
    stack_.pop_back();
    keys_.pop_back();
    return put(std::move(n));
  }
  bool put(JsonNode n) {
    if (stack_.empty()) {
      root_ = std::move(n);
      return true;
    }
    auto& top = stack_.back();
    if (top.kind == JsonNode::Kind::Object)
      top.fields.emplace_back(keys_.back(), std::move(n));
    else
      top.items.push_back(std::move(n));
    return true;
  }

  std::vector<JsonNode> stack_;
  std::vector<std::string> keys_;
  JsonNode root_;
  std::string error_;
};

inline const Integer& expect_integer(const JsonNode& n, std::string_view what) {
  if (n.kind != JsonNode::Kind::Integer) throw FanError(std::string(what) + " must be an integer");
  return n.integer;
}

inline int expect_small(const JsonNode& n, std::string_view what) {
  const Integer& v = expect_integer(n, what);
  if (v < 0 || v > 1'000'000) throw FanError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

inline const std::vector<JsonNode>& expect_array(const JsonNode& n, std::string_view what) {
  if (n.kind != JsonNode::Kind::Array) throw FanError(std::string(what) + " must be an array");
  return n.items;
}

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace detail

/// Parses a fan document:
/// `{"dim": n, "rays": [[...], ...], "max_cones": [[...], ...], "name": "...", "pic_basis": [...], "provenance": "..."}`.
/// The last three fields are optional.
inline Fan parse_fan(std::string_view text) {
  detail::JsonTreeBuilder builder;
  const bool ok = nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  if (!ok) throw FanError("malformed fan document: " + builder.error());
  const auto& root = builder.root();
  if (root.kind != detail::JsonNode::Kind::Object) throw FanError("fan document must be an object");

  std::optional<int> dim;
  std::optional<std::vector<IntVector>> rays;
  std::optional<std::vector<std::vector<int>>> cones;
  FanInfo info;
  std::set<std::string> seen;
  for (const auto& [key, value] : root.fields) {
    if (!seen.insert(key).second) throw FanError("duplicate field \"" + key + "\"");
    if (key == "dim") {
      dim = detail::expect_small(value, "dim");
    } else if (key == "rays") {
      rays.emplace();
      for (const auto& r : detail::expect_array(value, "rays")) {
        IntVector v;
        for (const auto& x : detail::expect_array(r, "ray")) v.push_back(detail::expect_integer(x, "ray coordinate"));
        rays->push_back(std::move(v));
      }
    } else if (key == "max_cones") {
      cones.emplace();
      for (const auto& c : detail::expect_array(value, "max_cones")) {
        std::vector<int> cone;
        for (const auto& x : detail::expect_array(c, "cone")) cone.push_back(detail::expect_small(x, "cone index"));
        cones->push_back(std::move(cone));
      }
    } else if (key == "name") {
      if (value.kind != detail::JsonNode::Kind::String) throw FanError("name must be a string");
      info.name = value.text;
    } else if (key == "pic_basis") {
      info.pic_basis.emplace();
      for (const auto& x : detail::expect_array(value, "pic_basis"))
        info.pic_basis->push_back(detail::expect_small(x, "pic_basis index"));
    } else if (key == "provenance") {
      if (value.kind != detail::JsonNode::Kind::String) throw FanError("provenance must be a string");
      info.provenance = value.text;
    } else {
      throw FanError("unknown field \"" + key + "\"");
    }
  }
  if (!dim) throw FanError("missing field \"dim\"");
  if (!rays) throw FanError("missing field \"rays\"");
  if (!cones) throw FanError("missing field \"max_cones\"");
  return Fan(*dim, std::move(*rays), std::move(*cones), std::move(info));
}

/// Canonical document: fixed field order, one ray or cone per line.
inline std::string emit_fan(const Fan& fan) {
  std::string out = "{\n  \"dim\": " + std::to_string(fan.dim()) + ",\n";
  if (!fan.name().empty()) out += "  \"name\": " + detail::quote(fan.name()) + ",\n";
  auto list = [&](const auto& rows, auto&& cell) {
    std::string s = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s += "    [";
      for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? ", " : "") + cell(rows[i][j]);
      s += i + 1 < rows.size() ? "],\n" : "]\n";
    }
    return s + "  ]";
  };
  auto integer_cell = [](const Integer& x) { return x.str(); };
  auto index_cell = [](int x) { return std::to_string(x); };
  out += "  \"rays\": " + list(fan.rays(), integer_cell);
  out += ",\n  \"max_cones\": " + list(fan.max_cones(), index_cell);
  if (const auto& b = fan.info().pic_basis) {
    out += ",\n  \"pic_basis\": [";
    for (std::size_t i = 0; i < b->size(); ++i) out += (i ? ", " : "") + std::to_string((*b)[i]);
    out += "]";
  }
  if (!fan.info().provenance.empty()) out += ",\n  \"provenance\": " + detail::quote(fan.info().provenance);
  return out + "\n}\n";
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  bool simplicial = true;
  bool smooth = true;
  bool complete = true;
  bool rays_used = true;
  /// Completeness is decided combinatorially: every facet of a maximal cone borders
  /// exactly two maximal cones lying on opposite sides of it, and the cones are
  /// connected through walls.
  std::string criterion = "wall-pairing";
  std::vector<std::string> violations;
  std::optional<std::size_t> first_bad_cone;
  std::optional<std::vector<int>> first_bad_wall;

  bool ok() const { return simplicial && smooth && complete && rays_used; }
};

struct Wall {
  std::vector<int> ray_indices;                  // sorted, n-1 entries
  std::pair<std::size_t, std::size_t> cone_pair;  // maximal cone indices, first < second
};

namespace detail {

// Facets of maximal cones, keyed by sorted ray set, with the cones they border.
inline std::map<std::vector<int>, std::vector<std::size_t>> facet_incidence(const Fan& fan) {
  std::map<std::vector<int>, std::vector<std::size_t>> inc;
  for (std::size_t c = 0; c < fan.sorted_cones().size(); ++c) {
    const auto& cone = fan.sorted_cones()[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != drop) facet.push_back(cone[k]);
      inc[facet].push_back(c);
    }
  }
  return inc;
}

inline int opposite_ray(const Fan& fan, std::size_t cone, const std::vector<int>& facet) {
  for (int r : fan.sorted_cones()[cone])
    if (!std::binary_search(facet.begin(), facet.end(), r)) return r;
  return -1;
}

}  // namespace detail

inline ValidationReport validate(const Fan& fan) {
  ValidationReport rep;
  const auto n = static_cast<std::size_t>(fan.dim());

  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const Integer det = determinant(fan.cone_matrix(c));
    if (det == 0) {
      rep.simplicial = rep.smooth = false;
      rep.violations.push_back("cone " + format_indices(fan.sorted_cones()[c]) + " is degenerate (determinant 0)");
      if (!rep.first_bad_cone) rep.first_bad_cone = c;
    } else if (det != 1 && det != -1) {
      rep.smooth = false;
      rep.violations.push_back("cone " + format_indices(fan.sorted_cones()[c]) + " is not smooth (determinant " +
                               det.str() + ")");
      if (!rep.first_bad_cone) rep.first_bad_cone = c;
    }
  }

  RayMask used = 0;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) used |= fan.cone_mask(c);
  for (std::size_t r = 0; r < fan.ray_count(); ++r) {
    if (!(used >> r & 1)) {
      rep.rays_used = false;
      rep.violations.push_back("ray " + std::to_string(r) + " lies in no maximal cone");
    }
  }

  const auto incidence = detail::facet_incidence(fan);
  std::vector<std::vector<std::size_t>> adjacent(fan.max_cones().size());
  for (const auto& [facet, cones] : incidence) {
    if (cones.size() != 2) {
      rep.complete = false;
      rep.violations.push_back("wall " + format_indices(facet) + " borders " + std::to_string(cones.size()) +
                               " maximal cone(s), expected 2");
      if (!rep.first_bad_wall) rep.first_bad_wall = facet;
      continue;
    }
    adjacent[cones[0]].push_back(cones[1]);
    adjacent[cones[1]].push_back(cones[0]);
    if (!rep.simplicial) continue;
    IntMatrix rows;
    for (int r : facet) rows.push_back(fan.ray(r));
    const IntVector normal = cofactor_normal(rows, n);
    const Integer a = dot(normal, fan.ray(detail::opposite_ray(fan, cones[0], facet)));
    const Integer b = dot(normal, fan.ray(detail::opposite_ray(fan, cones[1], facet)));
    if (a * b >= 0) {
      rep.complete = false;
      rep.violations.push_back("cones on wall " + format_indices(facet) + " lie on the same side");
      if (!rep.first_bad_wall) rep.first_bad_wall = facet;
    }
  }

  std::vector<bool> reached(fan.max_cones().size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  reached[0] = true;
  while (!todo.empty()) {
    const std::size_t c = todo.front();
    todo.pop();
    for (std::size_t d : adjacent[c])
      if (!reached[d]) {
        reached[d] = true;
        todo.push(d);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    rep.complete = false;
    rep.violations.push_back("maximal cones are not connected through walls");
  }
  return rep;
}

/// Throws FanError naming the first violation unless the fan is smooth and complete.
inline void require_smooth_complete(const Fan& fan) {
  const auto rep = validate(fan);
  if (!rep.ok()) throw FanError("fan is not smooth and complete: " + rep.violations.front());
}

/// Codimension-one cones, each with its two adjacent maximal cones, in
/// lexicographic order of ray indices. Needs n >= 2.
inline std::vector<Wall> walls(const Fan& fan) {
  if (fan.dim() < 2) throw DomainError("walls need dimension at least 2");
  require_smooth_complete(fan);
  std::vector<Wall> out;
  for (const auto& [facet, cones] : detail::facet_incidence(fan))
    out.push_back(Wall{facet, {std::min(cones[0], cones[1]), std::max(cones[0], cones[1])}});
  return out;  // std::map iteration is already lexicographic
}

}  // namespace toricdisc
