#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace toricdisc;
using toricdisc::fixtures::Gen;

namespace {

struct Workers {
  explicit Workers(const char* n) { setenv("TORICDISC_WORKERS", n, 1); }
  ~Workers() { unsetenv("TORICDISC_WORKERS"); }
};

std::vector<IntVector> coords_of(const std::vector<PicVector>& v) {
  std::vector<IntVector> out;
  for (const auto& p : v) out.push_back(p.coords);
  return out;
}

std::string describe(const ScanRow& row) {
  std::string s = row.variety;
  for (const auto& [k, v] : row.params) s += " " + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

TEST(EnumerateA, SimplicialConesGiveTheSum) {
  for (const char* name : {"P2", "P1xP1", "bundle(2,1,3)", "P1xP1xP1", "bundle(3,2,1,2)"}) {
    const Fan f = lookup(name).fan;
    IntersectionOracle o(f);
    const auto basis = picard_basis(f);
    const auto cone = nef_generators(o, basis);
    ASSERT_EQ(cone.generators.size(), basis.rank()) << name;
    IntVector sum(basis.rank(), 0);
    for (const auto& g : cone.generators)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g.coords[i];
    EXPECT_EQ(coords_of(enumerate_A(cone)), std::vector<IntVector>{sum}) << name;
  }
}

TEST(EnumerateA, PointsAreAmpleAndSorted) {
  for (const auto& e : fixtures::catalog_sample()) {
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto a = enumerate_A(nef_generators(o, basis));
    ASSERT_FALSE(a.empty()) << e.name;
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    for (const auto& p : a) EXPECT_TRUE(is_ample(o, basis.from_pic(p))) << e.name;
  }
}

TEST(MinSearch, ProjectivePlane) {
  const Fan f = lookup("P2").fan;
  IntersectionOracle o(f);
  const auto basis = picard_basis(f);
  const auto cone = nef_generators(o, basis);
  const auto top = min_topchern_over_A(o, basis, cone);
  EXPECT_TRUE(top.certified);
  EXPECT_EQ(top.minimum, 0);
  EXPECT_EQ(coords_of(top.argmin), std::vector<IntVector>{{1}});

  const auto dual = min_dual_degree_bounded(o, basis, cone, 3);
  EXPECT_FALSE(dual.certified);
  EXPECT_EQ(dual.minimum, 3);
  EXPECT_EQ(coords_of(dual.argmin), std::vector<IntVector>{{2}});
  EXPECT_EQ(coords_of(dual.empty_discriminant), std::vector<IntVector>{{1}});
  EXPECT_EQ(dual.candidates_examined, 3u);
}

TEST(MinSearch, BadArguments) {
  const Fan f = lookup("P2").fan;
  IntersectionOracle o(f);
  const auto basis = picard_basis(f);
  const auto cone = nef_generators(o, basis);
  EXPECT_THROW(min_dual_degree_bounded(o, basis, cone, 0), std::invalid_argument);
  EXPECT_THROW(min_dual_degree_bounded(o, basis, cone, 1), DomainError);
  const Fan q = lookup("P1xP1").fan;
  EXPECT_THROW(min_topchern_over_A(o, picard_basis(q), cone), std::invalid_argument);
}

TEST(SearchProperty, HirzebruchAgreesWithBruteForce) {
  for (long long r = 0; r <= 3; ++r) {
    const Fan f = projective_bundle_over_P(2, 1, {r}).fan;
    IntersectionOracle o(f);
    const auto basis = picard_basis(f);
    const auto res = min_topchern_over_A(o, basis, nef_generators(o, basis));
    std::optional<Integer> best;
    for (long long a = -10; a <= 10; ++a)
      for (long long b = -10; b <= 10; ++b) {
        const TDivisor l{a, 0, 0, b};
        if (!is_ample(o, l)) continue;
        const Integer v = jet_top_chern(o, l);
        if (!best || v < *best) best = v;
      }
    ASSERT_TRUE(best);
    EXPECT_EQ(res.minimum, *best) << r;
  }
}

TEST(MinSearch, FigureMinima) {
  for (const auto& fig : figure_entries()) {
    const Fan f = lookup(fig.name).fan;
    IntersectionOracle o(f);
    const auto basis = picard_basis(f);
    const auto cone = nef_generators(o, basis);
    EXPECT_EQ(basis.rank(), static_cast<std::size_t>(fig.rho)) << fig.name;
    const auto res = fig.objective == Objective::topchern ? min_topchern_over_A(o, basis, cone)
                                                          : min_dual_degree_bounded(o, basis, cone, 4);
    EXPECT_EQ(res.minimum, fig.d) << fig.name;
    if (fig.argmin) {
      ASSERT_FALSE(res.argmin.empty());
      EXPECT_EQ(res.argmin.front().coords, to_integers(*fig.argmin)) << fig.name;
    }
  }
}

TEST(MinSearch, WorkerCountDoesNotChangeResults) {
  const Fan f = lookup("F5_1").fan;
  IntersectionOracle o(f);
  const auto basis = picard_basis(f);
  const auto cone = nef_generators(o, basis);
  std::vector<SearchResult> runs;
  for (const char* w : {"1", "2", "5"}) {
    Workers guard(w);
    runs.push_back(min_topchern_over_A(o, basis, cone));
  }
  for (const auto& r : runs) {
    EXPECT_EQ(r.minimum, runs[0].minimum);
    EXPECT_EQ(r.argmin, runs[0].argmin);
    EXPECT_EQ(r.candidates_examined, runs[0].candidates_examined);
  }
}

TEST(Scan, ProjectiveSpacesUpToThree) {
  const auto rows = scan_predicate(ScanFamily::projective_spaces, ScanBounds{4, 4, 4},
                                   DegreePredicate{DegreePredicate::Kind::at_most, 3});
  std::vector<std::string> got;
  for (const auto& r : rows) got.push_back(describe(r));
  EXPECT_EQ(got, (std::vector<std::string>{"P1 n=1 q=2", "P2 n=2 q=2"}));
}

TEST(Scan, RankTwoDegreeFour) {
  const auto rows = scan_predicate(ScanFamily::rank_two_bundles, ScanBounds{3, 4, 4},
                                   DegreePredicate{DegreePredicate::Kind::equal, 4});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(describe(rows[0]), "bundle(3,2,0,1) n=3 m=2 r1=0 r2=1 a=1 b=1");
}

TEST(Scan, RowsSatisfyThePredicate) {
  for (auto family : {ScanFamily::projective_bundles, ScanFamily::rank_one_bundles}) {
    const DegreePredicate pred{DegreePredicate::Kind::at_most, 6};
    for (const auto& row : scan_predicate(family, ScanBounds{4, 2, 3}, pred)) {
      ASSERT_TRUE(row.report.dual_degree);
      EXPECT_LE(*row.report.dual_degree, 6);
      EXPECT_TRUE(row.report.ample);
      const auto e = lookup(row.variety);
      IntersectionOracle o(e.fan);
      EXPECT_EQ(dual_degree_defect(o, row.divisor).delta, row.report.delta) << describe(row);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(SearchProperty, AMinimumIsTheAmpleMinimum) {
  // every ample class is a member of A plus a nef class, and c_n(J_1) is monotone
  Gen g(51);
  fixtures::CaseCount cases;
  for (const auto& e : fixtures::catalog_sample()) {
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    const auto res = min_topchern_over_A(o, basis, cone);
    for (int k = 0; k < 3; ++k) {
      EXPECT_GE(jet_top_chern(o, g.ample(basis, cone, 2)), res.minimum) << e.name;
      ++cases;
    }
    for (const auto& p : res.argmin) {
      EXPECT_TRUE(is_ample(o, basis.from_pic(p))) << e.name;
      EXPECT_EQ(jet_top_chern(o, basis.from_pic(p)), res.minimum) << e.name;
    }
  }
}

TEST(SearchProperty, LargerBoundsNeverRaiseTheMinimum) {
  for (const auto& e : fixtures::catalog_sample()) {
    if (e.fan.ray_count() - static_cast<std::size_t>(e.fan.dim()) > 3) continue;
    IntersectionOracle o(e.fan);
    const auto basis = picard_basis(e.fan);
    const auto cone = nef_generators(o, basis);
    std::optional<Integer> prev;
    for (long long bound = 2; bound <= 4; ++bound) {
      try {
        const auto r = min_dual_degree_bounded(o, basis, cone, bound);
        if (prev) {
          EXPECT_LE(r.minimum, *prev) << e.name;
        }
        prev = r.minimum;
        for (const auto& p : r.argmin) EXPECT_TRUE(is_ample(o, basis.from_pic(p))) << e.name;
      } catch (const DomainError&) {
        EXPECT_FALSE(prev) << e.name;
      }
    }
  }
}
