#pragma once

// Command-line front end. run() never exits the process; it returns the exit status:
// 0 success, 1 usage error, 2 invalid fan, 3 computation outside its domain.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "toricdisc.hpp"

namespace toricdisc::cli {

/// Minimal JSON value whose numbers are kept as exact decimal tokens.
class Json {
 public:
  Json() = default;
  static Json number(const Integer& v) { return Json(Kind::number, v.str()); }
  static Json number(long long v) { return Json(Kind::number, std::to_string(v)); }
  static Json string(std::string s) { return Json(Kind::string, std::move(s)); }
  static Json boolean(bool b) { return Json(Kind::literal, b ? "true" : "false"); }
  static Json array() { return Json(Kind::array, ""); }
  static Json object() { return Json(Kind::object, ""); }
  static Json numbers(std::span<const Integer> v) {
    Json a = array();
    for (const auto& x : v) a.push(number(x));
    return a;
  }

  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }
  Json& set(std::string key, Json v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  std::string dump() const {
    switch (kind_) {
      case Kind::string: return nlohmann::json(scalar_).dump();
      case Kind::array: {
        std::string s = "[";
        for (std::size_t i = 0; i < items_.size(); ++i) s += (i ? "," : "") + items_[i].dump();
        return s + "]";
      }
      case Kind::object: {
        std::string s = "{";
        for (std::size_t i = 0; i < fields_.size(); ++i)
          s += (i ? "," : "") + nlohmann::json(fields_[i].first).dump() + ":" + fields_[i].second.dump();
        return s + "}";
      }
      default: return scalar_;
    }
  }

 private:
  enum class Kind { literal, number, string, array, object };
  Json(Kind k, std::string s) : kind_(k), scalar_(std::move(s)) {}

  Kind kind_ = Kind::literal;
  std::string scalar_ = "null";
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> fields_;
};

struct Options {
  std::string file;
  std::string catalog;
  std::string format = "text";
  bool timing = false;
  std::vector<std::string> divisor;
  std::vector<std::string> raydiv;
  std::string basis;
  std::string mono;
  std::size_t index = 0;
  std::string bundle = "jet";
  std::string objective = "topchern";
  long long bound = 4;
  std::string family;
  std::optional<long long> degree;
  std::optional<long long> at_most;
  int max_dim = 4;
  long long max_twist = 4;
  long long max_coeff = 4;
  std::string action;
  std::string target;
};

namespace detail {

inline IntVector parse_integers(const std::string& s) {
  IntVector out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    const auto b = tok.find_first_not_of(' '), e = tok.find_last_not_of(' ');
    if (b == std::string::npos) throw std::invalid_argument("empty entry in '" + s + "'");
    tok = tok.substr(b, e - b + 1);
    const bool ok = !tok.empty() && tok.find_first_not_of("0123456789", tok[0] == '-' ? 1 : 0) == std::string::npos &&
                    tok != "-";
    if (!ok) throw std::invalid_argument("'" + tok + "' is not an integer");
    out.emplace_back(tok);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

inline std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : parse_integers(s)) {
    if (x < 0 || x > 1000) throw std::invalid_argument("bad index " + x.str());
    out.push_back(static_cast<int>(x));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Fan load_fan(const Options& o) {
  if (o.file.empty() == o.catalog.empty()) throw std::invalid_argument("give exactly one of FILE or --catalog NAME");
  if (!o.catalog.empty()) return lookup(o.catalog).fan;
  return parse_fan(read_file(o.file));
}

struct Context {
  Fan fan;
  std::optional<IntersectionOracle> oracle;
  std::optional<PicBasis> basis;

  const IntersectionOracle& intersections() {
    if (!oracle) oracle.emplace(fan);
    return *oracle;
  }
  const PicBasis& pic(const Options& o) {
    if (!basis) {
      std::optional<std::vector<int>> preferred;
      if (!o.basis.empty()) preferred = parse_indices(o.basis);
      basis.emplace(picard_basis(fan, preferred));
    }
    return *basis;
  }
};

/// All divisors given on the command line, in order: --divisor entries first.
inline std::vector<TDivisor> divisors(Context& ctx, const Options& o) {
  std::vector<TDivisor> out;
  for (const auto& d : o.divisor) out.push_back(ctx.pic(o).from_pic(parse_integers(d)));
  for (const auto& d : o.raydiv) {
    TDivisor t(parse_integers(d));
    if (t.size() != ctx.fan.ray_count())
      throw std::invalid_argument("--raydiv needs " + std::to_string(ctx.fan.ray_count()) + " coefficients, got " +
                                  std::to_string(t.size()));
    out.push_back(std::move(t));
  }
  return out;
}

inline TDivisor single_divisor(Context& ctx, const Options& o) {
  auto ds = divisors(ctx, o);
  if (ds.size() != 1) throw std::invalid_argument("give exactly one --divisor or --raydiv");
  return ds.front();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

struct Outcome {
  Json result = Json::object();
  std::vector<std::string> flags;
  std::string text;  // human-readable rendering
  int status = 0;
};

inline Json pic_json(const PicVector& v) { return Json::numbers(v.coords); }

// ---------------------------------------------------------------------------
// Verbs

inline Outcome cmd_validate(const Fan& fan, std::ostream& err) {
  const auto rep = validate(fan);
  Outcome out;
  out.result.set("simplicial", Json::boolean(rep.simplicial))
      .set("smooth", Json::boolean(rep.smooth))
      .set("complete", Json::boolean(rep.complete))
      .set("rays_used", Json::boolean(rep.rays_used))
      .set("criterion", Json::string(rep.criterion));
  Json v = Json::array();
  for (const auto& s : rep.violations) v.push(Json::string(s));
  out.result.set("violations", v);
  if (rep.first_bad_cone) out.result.set("first_bad_cone", Json::number(static_cast<long long>(*rep.first_bad_cone)));
  if (rep.first_bad_wall) out.result.set("first_bad_wall", Json::string(format_indices(*rep.first_bad_wall)));
  std::ostringstream t;
  t << "smooth: " << yes_no(rep.smooth) << "\ncomplete: " << yes_no(rep.complete) << " (criterion: " << rep.criterion
    << ")\nsimplicial: " << yes_no(rep.simplicial) << "\nrays used: " << yes_no(rep.rays_used) << "\n";
  for (const auto& s : rep.violations) t << "violation: " << s << "\n";
  out.text = t.str();
  if (!rep.ok()) {
    for (const auto& s : rep.violations) err << "invalid fan: " << s << "\n";
    out.status = 2;
  }
  return out;
}

inline Outcome cmd_pic(Context& ctx, const Options& o) {
  require_smooth_complete(ctx.fan);
  const auto& b = ctx.pic(o);
  Outcome out;
  Json rows = Json::array();
  std::ostringstream t;
  t << "rank: " << b.rank() << "\nbasis: " << format_indices(b.basis_rays()) << "\nid: " << b.id() << "\n";
  for (const auto& r : b.to_pic()) {
    rows.push(Json::numbers(r));
    t << "to_pic: " << format_vector(r) << "\n";
  }
  out.result.set("rank", Json::number(static_cast<long long>(b.rank())))
      .set("basis", Json::string(format_indices(b.basis_rays())))
      .set("basis_id", Json::string(b.id()))
      .set("to_pic", rows);
  Json classes = Json::array();
  for (const auto& d : divisors(ctx, o)) {
    const auto c = b.class_of(d);
    classes.push(pic_json(c));
    t << "class of " << format_vector(d.coeffs) << ": " << c.str() << "\n";
  }
  out.result.set("classes", classes);
  out.text = t.str();
  return out;
}

inline Outcome cmd_sections(Context& ctx, const Options& o) {
  const auto d = single_divisor(ctx, o);
  const auto p = polytope_of_divisor(ctx.fan, d);
  Outcome out;
  const Integer h0 = count_sections(p);
  Json verts = Json::array();
  std::vector<std::string> vt;
  for (const auto& v : p.vertices) {
    Json a = Json::array();
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
      a.push(Json::string(v[k].str()));
      s += (k ? "," : "") + v[k].str();
    }
    verts.push(a);
    vt.push_back(s + ")");
  }
  out.result.set("h0", Json::number(h0)).set("dim_linear_system", Json::number(h0 - 1)).set("vertices", verts);
  out.text = "h0: " + h0.str() + "\ndim |L|: " + Integer(h0 - 1).str() + "\nvertices: " + join(vt, " ") + "\n";
  return out;
}

inline Outcome cmd_nef(Context& ctx, const Options& o, bool ample) {
  const auto d = single_divisor(ctx, o);
  const auto& oracle = ctx.intersections();
  const auto p = wall_pairings(oracle, d);
  const bool v = ample ? std::all_of(p.begin(), p.end(), [](const Integer& x) { return x > 0; })
                       : std::all_of(p.begin(), p.end(), [](const Integer& x) { return x >= 0; });
  Outcome out;
  out.result.set(ample ? "ample" : "nef", Json::boolean(v)).set("wall_pairings", Json::numbers(p));
  out.text = std::string(ample ? "ample: " : "nef: ") + yes_no(v) + "\nwall pairings: " + format_vector(p) + "\n";
  return out;
}

inline Outcome cmd_nefgen(Context& ctx, const Options& o) {
  const auto& oracle = ctx.intersections();
  const auto cone = nef_generators(oracle, ctx.pic(o));
  Outcome out;
  Json ineq = Json::array(), gens = Json::array();
  std::ostringstream t;
  t << "basis: " << cone.basis_id << "\n";
  for (const auto& r : cone.inequalities) {
    ineq.push(Json::numbers(r));
    t << "inequality: " << format_vector(r) << "\n";
  }
  for (const auto& g : cone.generators) {
    gens.push(pic_json(g));
    t << "generator: " << g.str() << "\n";
  }
  out.result.set("basis_id", Json::string(cone.basis_id)).set("inequalities", ineq).set("generators", gens);
  out.text = t.str();
  return out;
}

inline Outcome cmd_intersect(Context& ctx, const Options& o) {
  const auto& oracle = ctx.intersections();
  Integer v;
  if (!o.mono.empty()) {
    if (!o.divisor.empty() || !o.raydiv.empty()) throw std::invalid_argument("give --mono or divisors, not both");
    v = oracle.intersection_number(Monomial(parse_indices(o.mono)));
  } else {
    const auto ds = divisors(ctx, o);
    v = oracle.intersect_divisor_classes(ds);
  }
  Outcome out;
  out.result.set("intersection", Json::number(v));
  out.text = v.str() + "\n";
  return out;
}

inline Outcome cmd_chern(Context& ctx, const Options& o) {
  const auto& oracle = ctx.intersections();
  const auto n = static_cast<std::size_t>(oracle.dim());
  if (o.index > n) throw std::invalid_argument("--index exceeds the dimension");
  const auto ds = divisors(ctx, o);
  Integer v;
  if (o.bundle == "omega") {
    if (o.index < n && ds.size() != 1) throw std::invalid_argument("give one divisor L to pair with");
    std::vector<TDivisor> extras(n - o.index, ds.empty() ? TDivisor::zero(oracle.ray_count()) : ds.front());
    v = chern_omega_pairing(oracle, o.index, extras);
  } else if (o.bundle == "jet") {
    if (ds.size() != 1) throw std::invalid_argument("give one divisor L");
    std::vector<TDivisor> extras(n - o.index, ds.front());
    v = jet_chern_pairing(oracle, o.index, ds.front(), extras);
  } else {
    throw std::invalid_argument("--bundle must be omega or jet");
  }
  Outcome out;
  out.result.set("bundle", Json::string(o.bundle)).set("index", Json::number(static_cast<long long>(o.index)))
      .set("value", Json::number(v));
  out.text = v.str() + "\n";
  return out;
}

inline Outcome cmd_jetdeg(Context& ctx, const Options& o) {
  const auto d = single_divisor(ctx, o);
  const auto& oracle = ctx.intersections();
  const Integer v = jet_top_chern(oracle, d);
  Outcome out;
  out.result.set("jet_top_chern", Json::number(v));
  if (v < 0) out.flags.emplace_back("negative-top-chern");
  if (oracle.dim() >= 1 && !is_ample(oracle, d)) out.flags.emplace_back("not-ample");
  out.text = v.str() + "\n";
  return out;
}

inline Outcome cmd_dualdeg(Context& ctx, const Options& o) {
  const auto d = single_divisor(ctx, o);
  const auto r = dual_degree_defect(ctx.intersections(), d);
  Outcome out;
  out.result.set("delta", Json::numbers(r.delta))
      .set("defect", r.defect ? Json::number(*r.defect) : Json())
      .set("dual_degree", r.dual_degree ? Json::number(*r.dual_degree) : Json())
      .set("nef", Json::boolean(r.nef))
      .set("ample", Json::boolean(r.ample))
      .set("very_ample", Json::string(to_string(r.very_ample)));
  out.flags = r.flags();
  std::ostringstream t;
  t << "delta: " << format_vector(r.delta) << "\n";
  if (r.defect)
    t << "defect: " << *r.defect << "\ndual degree: " << *r.dual_degree << "\n";
  else
    t << "defect: none (discriminant empty)\n";
  t << "ample: " << yes_no(r.ample) << "\n";
  for (const auto& f : out.flags) t << "flag: " << f << "\n";
  out.text = t.str();
  return out;
}

inline Outcome search_outcome(const SearchResult& r) {
  Outcome out;
  Json argmin = Json::array();
  std::vector<std::string> at;
  for (const auto& v : r.argmin) {
    argmin.push(pic_json(v));
    at.push_back(v.str());
  }
  Json empty = Json::array();
  std::vector<std::string> et;
  for (const auto& v : r.empty_discriminant) {
    empty.push(pic_json(v));
    et.push_back(v.str());
  }
  out.result.set("objective", Json::string(to_string(r.objective)))
      .set("minimum", Json::number(r.minimum))
      .set("argmin", argmin)
      .set("certified", Json::boolean(r.certified))
      .set("candidates_examined", Json::number(static_cast<long long>(r.candidates_examined)));
  if (r.objective == Objective::dualdeg) out.result.set("empty_discriminant", empty);
  if (!r.certified) out.flags.emplace_back("uncertified: only classes inside the coordinate box were examined");
  std::ostringstream t;
  t << "objective: " << to_string(r.objective) << "\nminimum: " << r.minimum << "\nargmin: " << join(at, " ")
    << "\ncertified: " << yes_no(r.certified) << "\ncandidates: " << r.candidates_examined << "\n";
  if (!et.empty()) t << "empty discriminant: " << join(et, " ") << "\n";
  out.text = t.str();
  return out;
}

inline Outcome cmd_minsearch(Context& ctx, const Options& o) {
  const auto& oracle = ctx.intersections();
  const auto& basis = ctx.pic(o);
  const auto cone = nef_generators(oracle, basis);
  if (o.objective == "topchern") return search_outcome(min_topchern_over_A(oracle, basis, cone));
  if (o.objective == "dualdeg") return search_outcome(min_dual_degree_bounded(oracle, basis, cone, o.bound));
  throw std::invalid_argument("--objective must be topchern or dualdeg");
}

inline Outcome cmd_scan(const Options& o) {
  if (o.degree.has_value() == o.at_most.has_value()) throw std::invalid_argument("give exactly one of --degree or --at-most");
  DegreePredicate pred;
  pred.kind = o.degree ? DegreePredicate::Kind::equal : DegreePredicate::Kind::at_most;
  pred.value = o.degree ? *o.degree : *o.at_most;
  const auto rows = scan_predicate(parse_scan_family(o.family), ScanBounds{o.max_dim, o.max_twist, o.max_coeff}, pred);
  Outcome out;
  Json table = Json::array();
  std::ostringstream t;
  t << "variety\tparameters\tdual_degree\tdefect\tdelta\n";
  for (const auto& r : rows) {
    Json params = Json::object();
    std::vector<std::string> pt;
    for (const auto& [k, v] : r.params) {
      params.set(k, Json::number(v));
      pt.push_back(k + "=" + std::to_string(v));
    }
    table.push(Json::object()
                   .set("variety", Json::string(r.variety))
                   .set("params", params)
                   .set("divisor", Json::numbers(r.divisor.coeffs))
                   .set("dual_degree", Json::number(*r.report.dual_degree))
                   .set("defect", Json::number(*r.report.defect))
                   .set("delta", Json::numbers(r.report.delta)));
    t << r.variety << "\t" << join(pt, ",") << "\t" << *r.report.dual_degree << "\t" << *r.report.defect << "\t"
      << format_vector(r.report.delta) << "\n";
  }
  out.result.set("family", Json::string(o.family)).set("rows", table);
  out.text = t.str();
  return out;
}

inline Outcome cmd_catalog(const Options& o) {
  Outcome out;
  if (o.action == "list") {
    Json names = Json::array();
    std::ostringstream t;
    for (int dim : {2, 3})
      for (const auto& n : fano_names(dim)) {
        names.push(Json::string(n));
        t << n << "\n";
      }
    for (const char* form : {"P<n>", "bundle(n,m,r_1,...,r_m)", "product(d_1,...,d_k)", "blowup(n,r1)",
                             "tower(Y0|Y1,r,s,t)", "join(s,t)"}) {
      names.push(Json::string(form));
      t << form << "\n";
    }
    out.result.set("entries", names);
    out.text = t.str();
    return out;
  }
  if (o.action == "emit") {
    if (o.target.empty()) throw std::invalid_argument("catalog emit needs a name");
    const std::string doc = emit_fan(lookup(o.target).fan);
    out.result.set("document", Json::string(doc));
    out.text = doc;
    return out;
  }
  throw std::invalid_argument("catalog action must be list or emit");
}

/// Recomputes every figure entry; a row passes when the fan is smooth, complete and
/// Fano with the stated Picard rank, the minimum equals d, and the stated argmin (if
/// any) attains it.
inline Outcome cmd_reproduce(const Options& o) {
  if (o.action != "figures") throw std::invalid_argument("reproduce supports: figures");
  Outcome out;
  Json rows = Json::array();
  std::ostringstream t;
  t << "figure\tentry\trho\tobjective\texpected\tcomputed\targmin\tstatus\n";
  bool all = true;
  for (const auto& e : figure_entries()) {
    const auto entry = e.figure == 1 ? fano_surface(e.name) : fano3(e.name);
    const Fan& fan = entry.fan;
    bool pass = validate(fan).ok();
    IntersectionOracle oracle(fan);
    pass = pass && is_ample(oracle, TDivisor::anticanonical(fan.ray_count()));
    const long long rho = static_cast<long long>(fan.ray_count()) - fan.dim();
    pass = pass && rho == e.rho;
    const auto basis = picard_basis(fan);
    const auto cone = nef_generators(oracle, basis);
    const auto r = e.objective == Objective::topchern ? min_topchern_over_A(oracle, basis, cone)
                                                      : min_dual_degree_bounded(oracle, basis, cone, o.bound);
    pass = pass && r.minimum == e.d;
    if (e.argmin) {
      const PicVector want{IntVector(e.argmin->begin(), e.argmin->end()), basis.id()};
      pass = pass && std::find(r.argmin.begin(), r.argmin.end(), want) != r.argmin.end();
    }
    all = all && pass;
    std::vector<std::string> at;
    Json argmin = Json::array();
    for (const auto& v : r.argmin) {
      at.push_back(v.str());
      argmin.push(pic_json(v));
    }
    rows.push(Json::object()
                  .set("figure", Json::number(e.figure))
                  .set("entry", Json::string(e.name))
                  .set("label", Json::string(e.label))
                  .set("rho", Json::number(rho))
                  .set("objective", Json::string(to_string(e.objective)))
                  .set("expected", Json::number(e.d))
                  .set("computed", Json::number(r.minimum))
                  .set("argmin", argmin)
                  .set("pass", Json::boolean(pass)));
    t << e.figure << "\t" << e.label << "\t" << rho << "\t" << to_string(e.objective) << "\t" << e.d << "\t"
      << r.minimum << "\t" << join(at, " ") << "\t" << (pass ? "PASS" : "FAIL") << "\n";
  }
  out.result.set("rows", rows).set("all_pass", Json::boolean(all));
  out.text = t.str();
  out.status = all ? 0 : 4;
  return out;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discriminant degrees of smooth complete toric varieties", "toricdisc"};
  app.require_subcommand(1);
  Options o;

  auto fan_source = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "fan document (JSON)");
    sub->add_option("--catalog", o.catalog, "catalog entry name (see: catalog list)");
    sub->add_option("--basis", o.basis, "preferred Picard basis, as ray indices a,b,...");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", o.timing, "report elapsed time");
  };
  auto divisor_opts = [&](CLI::App* sub) {
    sub->add_option("--divisor", o.divisor, "Picard coordinates a,b,... in the preferred basis")->allow_extra_args(false);
    sub->add_option("--raydiv", o.raydiv, "ray divisor coefficients a_0,...,a_{m-1}")->allow_extra_args(false);
  };

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help, bool fan, bool div) {
    auto* s = app.add_subcommand(name, help);
    if (fan) fan_source(s);
    if (div) divisor_opts(s);
    common(s);
    subs[name] = s;
    return s;
  };
  add("validate", "check smoothness and completeness", true, false);
  add("pic", "Picard basis; classes of given divisors", true, true);
  add("sections", "lattice points of the section polytope", true, true);
  add("nef", "wall test for nefness", true, true);
  add("ample", "wall test for ampleness", true, true);
  add("nefgen", "nef cone inequalities and generators", true, false);
  add("intersect", "intersection number of a monomial or of n divisors", true, true)
      ->add_option("--mono", o.mono, "ray indices i,j,... of a degree-n monomial");
  auto* chern = add("chern", "Chern class pairings c_i(E) L^{n-i}", true, true);
  chern->add_option("--index", o.index, "Chern index i")->required();
  chern->add_option("--bundle", o.bundle, "omega or jet");
  add("jetdeg", "top Chern class of the jet bundle", true, true);
  add("dualdeg", "delta sequence, defect and dual degree", true, true);
  auto* ms = add("minsearch", "minimal degree over ample classes", true, false);
  ms->add_option("--objective", o.objective, "topchern or dualdeg")->check(CLI::IsMember({"topchern", "dualdeg"}));
  ms->add_option("--bound", o.bound, "coordinate bound for the dualdeg scan")->check(CLI::PositiveNumber);
  auto* scan = add("scan", "scan a family for a dual degree", false, false);
  scan->add_option("--family", o.family, "projective-spaces, projective-bundles, rank-one-bundles, rank-two-bundles, towers")
      ->required();
  scan->add_option("--degree", o.degree, "keep dual degree equal to this");
  scan->add_option("--at-most", o.at_most, "keep dual degree at most this");
  scan->add_option("--max-dim", o.max_dim, "largest dimension");
  scan->add_option("--max-twist", o.max_twist, "largest twist parameter");
  scan->add_option("--max-coeff", o.max_coeff, "largest divisor coefficient");
  auto* cat = add("catalog", "list catalog entries or emit one as a fan document", false, false);
  cat->add_option("action", o.action, "list or emit")->required();
  cat->add_option("name", o.target, "entry to emit");
  auto* rep = add("reproduce", "recompute the figure tables", false, false);
  rep->add_option("what", o.action, "figures")->required();
  rep->add_option("--bound", o.bound, "coordinate bound for dualdeg entries")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    detail::Outcome res;
    std::string fan_name;
    if (verb == "scan") {
      res = detail::cmd_scan(o);
    } else if (verb == "catalog") {
      res = detail::cmd_catalog(o);
    } else if (verb == "reproduce") {
      res = detail::cmd_reproduce(o);
    } else {
      detail::Context ctx{detail::load_fan(o), std::nullopt, std::nullopt};
      fan_name = ctx.fan.name();
      if (verb == "validate") res = detail::cmd_validate(ctx.fan, err);
      else if (verb == "pic") res = detail::cmd_pic(ctx, o);
      else if (verb == "sections") res = detail::cmd_sections(ctx, o);
      else if (verb == "nef") res = detail::cmd_nef(ctx, o, false);
      else if (verb == "ample") res = detail::cmd_nef(ctx, o, true);
      else if (verb == "nefgen") res = detail::cmd_nefgen(ctx, o);
      else if (verb == "intersect") res = detail::cmd_intersect(ctx, o);
      else if (verb == "chern") res = detail::cmd_chern(ctx, o);
      else if (verb == "jetdeg") res = detail::cmd_jetdeg(ctx, o);
      else if (verb == "dualdeg") res = detail::cmd_dualdeg(ctx, o);
      else if (verb == "minsearch") res = detail::cmd_minsearch(ctx, o);
    }
    const auto ms_elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (o.format == "json") {
      Json flags = Json::array();
      for (const auto& f : res.flags) flags.push(Json::string(f));
      Json report = Json::object();
      report.set("fan", fan_name.empty() ? Json() : Json::string(fan_name))
          .set("command", Json::string(verb))
          .set("result", res.result)
          .set("flags", flags)
          .set("timing", o.timing ? Json::object().set("elapsed_ms", Json::number(static_cast<long long>(ms_elapsed))) : Json());
      out << report.dump() << "\n";
    } else {
      out << res.text;
      if (verb != "validate" && verb != "dualdeg" && verb != "reproduce" && verb != "catalog")
        for (const auto& f : res.flags) out << "flag: " << f << "\n";
      if (o.timing) out << "elapsed: " << ms_elapsed << " ms\n";
    }
    return res.status;
  } catch (const FanError& e) {
    err << "invalid fan: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toricdisc::cli
