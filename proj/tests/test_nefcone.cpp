#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace toricdisc;
using toricdisc::fixtures::Gen;

namespace {

Integer top(const IntersectionOracle& o, std::vector<TDivisor> ds) { return o.intersect_divisor_classes(ds); }

}  // namespace

TEST(Nef, HirzebruchRays) {
  for (long long r = 0; r <= 4; ++r) {
    IntersectionOracle o(projective_bundle_over_P(2, 1, {r}).fan);
    EXPECT_TRUE(is_nef(o, TDivisor::ray(4, 0)));
    EXPECT_FALSE(is_ample(o, TDivisor::ray(4, 0)));
    EXPECT_TRUE(is_nef(o, TDivisor::ray(4, 3)));
    EXPECT_EQ(is_ample(o, TDivisor::ray(4, 3)), false);
    EXPECT_EQ(is_nef(o, TDivisor::ray(4, 2)), r == 0);
    EXPECT_TRUE(is_ample(o, TDivisor{1, 0, 0, 1}));
  }
}

TEST(Nef, ProjectiveLine) {
  IntersectionOracle o(lookup("P1").fan);
  EXPECT_EQ(wall_pairings(o, TDivisor{2, 1}), IntVector{3});
  EXPECT_TRUE(is_ample(o, TDivisor{1, 0}));
  EXPECT_TRUE(is_nef(o, TDivisor{1, -1}));
  EXPECT_FALSE(is_ample(o, TDivisor{1, -1}));
  const auto cone = nef_generators(o, picard_basis(lookup("P1").fan));
  ASSERT_EQ(cone.generators.size(), 1u);
  EXPECT_EQ(cone.generators[0].coords, IntVector{1});
}

TEST(Nef, AnticanonicalOfFanoIsAmple) {
  for (int dim : {2, 3})
    for (const auto& name : fano_names(dim)) {
      const Fan f = lookup(name).fan;
      IntersectionOracle o(f);
      EXPECT_TRUE(is_ample(o, TDivisor::anticanonical(f.ray_count()))) << name;
    }
  IntersectionOracle o(projective_bundle_over_P(2, 1, {2}).fan);
  EXPECT_TRUE(is_nef(o, TDivisor::anticanonical(4)));
  EXPECT_FALSE(is_ample(o, TDivisor::anticanonical(4)));
}

TEST(Nef, ProductGeneratorsArePullbacks) {
  const Fan f = product_of_projective_spaces({1, 2, 1}).fan;
  IntersectionOracle o(f);
  const auto basis = picard_basis(f);
  const auto cone = nef_generators(o, basis);
  std::set<IntVector> got;
  for (const auto& g : cone.generators) got.insert(g.coords);
  EXPECT_EQ(got, (std::set<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Nef, ThreefoldsOfPicardRankFive) {
  const std::vector<std::pair<const char*, std::set<IntVector>>> cases{
      {"DS6xP1", {{0, 0, 1, 1, 0}, {0, 1, 1, 0, 0}, {1, 1, 1, 0, 0}, {0, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}}},
      {"F5_1", {{0, 0, 1, 1, 0}, {0, 1, 1, 0, 0}, {1, 1, 1, 0, 1}, {0, 0, 0, 0, 1}, {1, 1, 0, 0, 1}, {0, 1, 1, 1, 0}}},
  };
  for (const auto& [name, want] : cases) {
    const Fan f = lookup(name).fan;
    IntersectionOracle o(f);
    const auto basis = picard_basis(f);
    EXPECT_EQ(basis.basis_rays(), (std::vector<int>{0, 1, 2, 3, 7})) << name;
    const auto cone = nef_generators(o, basis);
    std::set<IntVector> got;
    for (const auto& g : cone.generators) got.insert(g.coords);
    EXPECT_EQ(got, want) << name;
  }
}

TEST(Nef, IncompleteFanIsRejected) {
  const Fan f = parse_fan(R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2]]})");
  EXPECT_THROW(IntersectionOracle{f}, FanError);
  EXPECT_THROW(polytope_of_divisor(parse_fan(R"({"dim": 2, "rays": [[1,0],[0,1]], "max_cones": [[0,1]]})"),
                                   TDivisor{1, 1}),
               DomainError);
}

TEST(Sections, SmallExamples) {
  const Fan p2 = lookup("P2").fan;
  EXPECT_EQ(count_sections(polytope_of_divisor(p2, TDivisor{1, 0, 0})), 3);
  EXPECT_EQ(count_sections(polytope_of_divisor(p2, TDivisor{2, 0, 0})), 6);
  EXPECT_EQ(count_sections(polytope_of_divisor(p2, TDivisor{0, 0, 0})), 1);
  EXPECT_TRUE(polytope_of_divisor(p2, TDivisor{-1, 0, 0}).empty());
  const Fan f1 = projective_bundle_over_P(2, 1, {1}).fan;
  EXPECT_EQ(count_sections(polytope_of_divisor(f1, TDivisor{1, 0, 0, 1})), 5);
}

TEST(Sections, ProjectiveSpaceBinomials) {
  for (int n = 1; n <= 4; ++n)
    for (long long q = 0; q <= 4; ++q) {
      const Fan f = projective_space(n).fan;
      TDivisor l = TDivisor::zero(f.ray_count());
      l.coeffs[0] = q;
      EXPECT_EQ(count_sections(polytope_of_divisor(f, l)), binomial(n + q, n));
    }
}

TEST(Sections, AnticanonicalHasSections) {
  for (int dim : {2, 3})
    for (const auto& name : fano_names(dim)) {
      const Fan f = lookup(name).fan;
      const auto p = polytope_of_divisor(f, TDivisor::anticanonical(f.ray_count()));
      EXPECT_GT(count_sections(p), 1) << name;
      // the origin is the unique interior point of a reflexive polytope
      EXPECT_TRUE(std::binary_search(p.lattice_points.begin(), p.lattice_points.end(),
                                     IntVector(static_cast<std::size_t>(dim), 0)))
          << name;
    }
}

// ---------------------------------------------------------------------------
// Properties

TEST(NefProperty, WallPairingsMatchRelations) {
  Gen g(41);
  fixtures::CaseCount cases;
  for (const auto& e : fixtures::catalog_sample()) {
    if (e.fan.dim() < 2) continue;
    IntersectionOracle o(e.fan);
    const auto ws = walls(e.fan);
    for (int k = 0; k < 2; ++k) {
      const TDivisor l = g.divisor(o.ray_count());
      const auto p = wall_pairings(o, l);
      ASSERT_EQ(p.size(), ws.size());
      for (std::size_t i = 0; i < ws.size(); ++i)
        EXPECT_EQ(p[i], fixtures::wall_relation_degree(e.fan, ws[i], l)) << e.name;
      ++cases;
    }
  }
}

TEST(NefProperty, GeneratorsAreExtremal) {
  for (const auto& e : fixtures::catalog_sample()) {
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    EXPECT_GE(cone.generators.size(), basis.rank()) << e.name;
    for (const auto& gen : cone.generators) {
      EXPECT_TRUE(cone.contains(gen)) << e.name;
      EXPECT_TRUE(is_nef(o, basis.from_pic(gen))) << e.name;
      EXPECT_EQ(gcd_of(gen.coords), 1) << e.name;
      IntMatrix tight;
      for (const auto& row : cone.inequalities)
        if (dot(row, gen.coords) == 0) tight.push_back(row);
      EXPECT_EQ(rank(tight), basis.rank() - 1) << e.name;
    }
    // curves pair nonnegatively with every generator
    for (const auto& row : cone.inequalities)
      for (const auto& gen : cone.generators) EXPECT_GE(dot(row, gen.coords), 0) << e.name;
  }
}

TEST(NefProperty, ConeAgreesWithPairings) {
  Gen g(42);
  fixtures::CaseCount cases;
  for (const auto& e : fixtures::catalog_sample()) {
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    for (int k = 0; k < 4; ++k) {
      const TDivisor l = g.divisor(o.ray_count(), -2, 3);
      const auto c = basis.class_of(l);
      EXPECT_EQ(cone.contains(c), is_nef(o, l)) << e.name;
      EXPECT_EQ(cone.interior(c), is_ample(o, l)) << e.name;
      ++cases;
    }
  }
  EXPECT_GE(cases, 150);
}

TEST(NefProperty, NefPolytopeVerticesAreCartierData) {
  Gen g(43);
  fixtures::CaseCount cases;
  for (const auto& e : fixtures::catalog_sample()) {
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    const TDivisor l = g.nef(basis, cone);
    const auto p = polytope_of_divisor(e.fan, l);
    std::vector<std::vector<Rational>> cartier;
    for (const auto& v : cartier_vertices(e.fan, l)) cartier.emplace_back(v.begin(), v.end());
    std::sort(cartier.begin(), cartier.end());
    EXPECT_EQ(p.vertices, cartier) << e.name;
    ++cases;
  }
}

TEST(NefProperty, RiemannRoch) {
  // h^0 = chi for nef divisors; chi from Todd classes with c_1 = e_1, c_2 = e_2
  Gen g(44);
  fixtures::CaseCount cases;
  for (const auto& e : fixtures::catalog_sample()) {
    const int n = e.fan.dim();
    if (n != 2 && n != 3) continue;
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    const TDivisor k = TDivisor::anticanonical(o.ray_count());
    for (int i = 0; i < 3; ++i) {
      const TDivisor l = g.nef(basis, cone);
      Rational chi = 1;
      if (n == 2) {
        chi += Rational(top(o, {l, l}) + top(o, {k, l}), 2);
      } else {
        const Integer c2l = fixtures::elementary_pairing(o, 2, {l});
        chi += Rational(top(o, {l, l, l}), 6) + Rational(top(o, {k, l, l}), 4) +
               Rational(top(o, {k, k, l}) + c2l, 12);
      }
      EXPECT_EQ(Rational(count_sections(polytope_of_divisor(e.fan, l))), chi) << e.name;
      ++cases;
    }
  }
  EXPECT_GE(cases, 80);
}
