#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/parafermion_sl2.hpp"
#include "fusion_positivity/parafermion_slr.hpp"

#include <gtest/gtest.h>

#include <compare>
#include <string>
#include <vector>

namespace {

using fpos::FCurve;
using fpos::Rational;
using fpos::Sl2Label;
using fpos::Sl2Parafermion;

Sl2Label M(int k, int i, int j) { return fpos::canonicalize(k, i, j); }
std::vector<Sl2Label> repeat(const Sl2Label& l, std::size_t n) { return std::vector<Sl2Label>(n, l); }
Rational q(long long n, long long d = 1) { return fpos::make_rational(n, d); }

// A one-object datum with a nonzero central charge, built directly on the
// generic table type.
struct Point {
  friend auto operator<=>(const Point&, const Point&) = default;
};
std::string to_string(const Point&) { return "pt"; }

fpos::TableRing<Point> point_datum(Rational c) {
  return fpos::TableRing<Point>(
      {Point{}}, Point{}, [](const Point& p) { return p; },
      [](const Point&, const Point&) { return fpos::FusionExpansion<Point>{{Point{}, 1}}; },
      [](const Point&) { return Rational(0); }, std::move(c));
}

}  // namespace

TEST(ExpandFusion, UnitLaw) {
  const Sl2Parafermion k3(3);
  const auto e = fpos::expand_fusion(k3, fpos::sl2_vacuum(3), M(3, 2, 1));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].first, M(3, 2, 1));
  EXPECT_EQ(e[0].second, 1u);
}

TEST(ExpandFusion, SelfProductsAtLevelThree) {
  const Sl2Parafermion k3(3);
  using E = fpos::FusionExpansion<Sl2Label>;
  auto sorted = [](E e) {
    std::ranges::sort(e);
    return e;
  };
  EXPECT_EQ(sorted(fpos::expand_fusion(k3, M(3, 2, 1), M(3, 2, 1))), sorted(E{{fpos::sl2_vacuum(3), 1}, {M(3, 2, 1), 1}}));
  EXPECT_EQ(sorted(fpos::expand_fusion(k3, M(3, 1, 0), M(3, 1, 0))), sorted(E{{M(3, 3, 2), 1}, {M(3, 2, 0), 1}}));
}

TEST(ExpandFusion, UnknownLabelIsRejected) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::expand_fusion(k3, Sl2Label{4, 1, 0}, M(3, 1, 0)), fpos::LabelError);
}

TEST(RankN, FourPointExamples) {
  const Sl2Parafermion k2(2), k3(3);
  EXPECT_EQ(fpos::rank_n(k3, {M(3, 1, 0), M(3, 1, 0), M(3, 2, 0), M(3, 2, 0)}), 2u);
  EXPECT_EQ(fpos::rank_n(k2, repeat(M(2, 2, 1), 4)), 1u);
}

TEST(RankN, VacuumIsForgotten) {
  const Sl2Parafermion k4(4);
  const std::vector<Sl2Label> abc{M(4, 3, 1), M(4, 2, 0), M(4, 4, 3)};
  std::vector<Sl2Label> with_vac{fpos::sl2_vacuum(4)};
  with_vac.insert(with_vac.end(), abc.begin(), abc.end());
  EXPECT_EQ(fpos::rank_n(k4, with_vac), fpos::rank_n(k4, abc));
}

TEST(RankN, ArityError) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::rank_n(k3, {M(3, 1, 0)}), fpos::ArityError);
}

TEST(Degree04, NegativeExampleAtLevelThree) {
  const Sl2Parafermion k3(3);
  EXPECT_EQ(fpos::degree_04(k3, {M(3, 1, 0), M(3, 1, 0), M(3, 2, 0), M(3, 2, 0)}), -1);
  EXPECT_EQ(fpos::degree_04(k3, repeat(M(3, 2, 1), 4)), 2);
}

TEST(Degree04, VacuumGivesZero) {
  const Sl2Parafermion k5(5);
  EXPECT_EQ(fpos::degree_04(k5, {fpos::sl2_vacuum(5), M(5, 3, 1), M(5, 4, 2), M(5, 5, 2)}), 0);
}

TEST(Degree04, RequiresExactlyFourModules) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::degree_04(k3, repeat(M(3, 2, 1), 5)), fpos::ArityError);
  EXPECT_THROW(fpos::degree_04(k3, repeat(M(3, 2, 1), 3)), fpos::ArityError);
}

TEST(DivisorClass, FivePointsAtLevelThree) {
  const Sl2Parafermion k3(3);
  const fpos::DivisorClass dc = fpos::divisor_class(k3, repeat(M(3, 2, 1), 5));
  EXPECT_EQ(dc.n, 5u);
  EXPECT_EQ(dc.mu, 3u);
  ASSERT_EQ(dc.psi_coeffs.size(), 5u);
  for (const Rational& c : dc.psi_coeffs) EXPECT_EQ(c, q(6, 5));
  EXPECT_EQ(dc.boundary_coeffs.size(), 10u);
  for (const auto& [subset, c] : dc.boundary_coeffs) {
    EXPECT_EQ(subset.size(), 2u);
    EXPECT_EQ(c, q(4, 5));
  }
}

TEST(DivisorClass, SoleVacuumChannel) {
  const Sl2Parafermion k2(2);
  const fpos::DivisorClass dc = fpos::divisor_class(k2, repeat(M(2, 2, 1), 4));
  EXPECT_EQ(dc.mu, 1u);
  for (const Rational& c : dc.psi_coeffs) EXPECT_EQ(c, q(1, 2));
  for (const auto& entry : dc.boundary_coeffs) EXPECT_EQ(entry.second, 0);
}

TEST(DivisorClass, AllVacuumIsZero) {
  const Sl2Parafermion k4(4);
  const fpos::DivisorClass dc = fpos::divisor_class(k4, repeat(fpos::sl2_vacuum(4), 6));
  EXPECT_EQ(dc.mu, 1u);
  for (const Rational& c : dc.psi_coeffs) EXPECT_EQ(c, 0);
  for (const auto& entry : dc.boundary_coeffs) EXPECT_EQ(entry.second, 0);
}

TEST(DivisorClass, SixPointOracle) {
  // frozen from the independent prototype
  const Sl2Parafermion k4(4);
  const fpos::DivisorClass dc = fpos::divisor_class(k4, repeat(M(4, 2, 1), 6));
  EXPECT_EQ(dc.mu, 11u);
  EXPECT_EQ(dc.boundary_coeffs.at({0, 1}), q(14, 3));
  EXPECT_EQ(dc.boundary_coeffs.at({0, 1, 2}), 4);
}

TEST(DivisorClass, ArityError) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::divisor_class(k3, repeat(M(3, 2, 1), 3)), fpos::ArityError);
}

TEST(BoundarySubsets, Counts) {
  EXPECT_EQ(fpos::boundary_subsets(4).size(), 3u);
  EXPECT_EQ(fpos::boundary_subsets(5).size(), 10u);
  EXPECT_EQ(fpos::boundary_subsets(6).size(), 25u);
  EXPECT_EQ(fpos::boundary_subsets(7).size(), 56u);
}

TEST(FCurve, CanonicalizesBlockOrder) {
  const FCurve a(5, {{4}, {2, 0}, {3}, {1}});
  const FCurve b(5, {{0, 2}, {1}, {3}, {4}});
  EXPECT_EQ(a, b);
}

TEST(FCurve, RejectsMalformedPartitions) {
  EXPECT_THROW(FCurve(5, {{0, 1}, {2}, {3}}), fpos::PartitionError);
  EXPECT_THROW(FCurve(5, {{0, 1}, {2}, {3}, {}}), fpos::PartitionError);
  EXPECT_THROW(FCurve(5, {{0, 1}, {1, 2}, {3}, {4}}), fpos::PartitionError);
  EXPECT_THROW(FCurve(5, {{0}, {2}, {3}, {4}}), fpos::PartitionError);
  EXPECT_THROW(FCurve(5, {{0, 1}, {2}, {3}, {5}}), fpos::PartitionError);
}

TEST(FCurve, EnumeratesStirlingNumberOfPartitions) {
  EXPECT_EQ(FCurve::all(3).size(), 0u);
  EXPECT_EQ(FCurve::all(4).size(), 1u);
  EXPECT_EQ(FCurve::all(5).size(), 10u);
  EXPECT_EQ(FCurve::all(6).size(), 65u);
  EXPECT_EQ(FCurve::all(7).size(), 350u);
}

TEST(FCurveIntersect, SingletonsReduceToDegree) {
  const Sl2Parafermion k4(4);
  const std::vector<Sl2Label> m{M(4, 3, 1), M(4, 2, 1), M(4, 4, 1), M(4, 1, 0)};
  EXPECT_EQ(fpos::fcurve_intersect(k4, m, FCurve(4, {{0}, {1}, {2}, {3}})), fpos::degree_04(k4, m));
}

TEST(FCurveIntersect, TwoChannelExample) {
  const Sl2Parafermion k3(3);
  EXPECT_EQ(fpos::fcurve_intersect(k3, repeat(M(3, 2, 1), 5), FCurve(5, {{0, 1}, {2}, {3}, {4}})), 2);
}

TEST(FCurveIntersect, SymmetricRankTwoLevelTwo) {
  const fpos::SlrParafermion s22(2, 2);
  const fpos::SlrLabel a{2, 2, {1, 0}};
  EXPECT_EQ(fpos::fcurve_intersect(s22, std::vector<fpos::SlrLabel>(4, a), FCurve(4, {{0}, {1}, {2}, {3}})), 2);
}

TEST(FCurveIntersect, SizeMismatchIsPartitionError) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::fcurve_intersect(k3, repeat(M(3, 2, 1), 5), FCurve(4, {{0}, {1}, {2}, {3}})),
               fpos::PartitionError);
}

TEST(IsTrivial, Examples) {
  const Sl2Parafermion k4(4);
  EXPECT_TRUE(fpos::is_trivial(k4, repeat(M(4, 2, 1), 4)));
  EXPECT_FALSE(fpos::is_trivial(k4, repeat(M(4, 2, 1), 5)));
  EXPECT_TRUE(fpos::is_trivial(k4, repeat(fpos::sl2_vacuum(4), 6)));
}

TEST(Scan, FullLevelThreeRing) {
  const Sl2Parafermion k3(3);
  const auto report = fpos::scan_f_positivity(k3, k3.labels());
  EXPECT_EQ(report.min_degree, -1);
  EXPECT_EQ(report.tuples_examined, 32u);
  using Tuple = std::array<Sl2Label, 4>;
  std::vector<Tuple> found;
  for (const auto& [t, d] : report.counterexamples) {
    EXPECT_EQ(d, -1);
    found.push_back(t);
  }
  auto sorted = [](Tuple t) {
    std::ranges::sort(t);
    return t;
  };
  const std::vector<Tuple> expected{sorted({M(3, 1, 0), M(3, 1, 0), M(3, 2, 0), M(3, 2, 0)}),
                                    sorted({M(3, 1, 0), M(3, 1, 0), M(3, 1, 0), M(3, 2, 1)}),
                                    sorted({M(3, 2, 0), M(3, 2, 0), M(3, 2, 0), M(3, 2, 1)})};
  EXPECT_EQ(found.size(), expected.size());
  for (const Tuple& t : expected) EXPECT_NE(std::ranges::find(found, t), found.end()) << fpos::to_string(t[3]);
}

TEST(Scan, FrozenFullRingStatistics) {
  struct Row {
    int k;
    std::uint64_t tuples;
    long long min;
    std::size_t negatives;
  };
  for (const Row& r : {Row{1, 1, 0, 0}, Row{2, 7, -1, 1}, Row{3, 32, -1, 3}, Row{4, 134, -3, 12}, Row{5, 432, -3, 39},
                       Row{6, 1239, -6, 113}}) {
    const Sl2Parafermion ring(r.k);
    const auto report = fpos::scan_f_positivity(ring, ring.labels(), {2});
    EXPECT_EQ(report.tuples_examined, r.tuples) << "k=" << r.k;
    EXPECT_EQ(report.min_degree, r.min) << "k=" << r.k;
    EXPECT_EQ(report.counterexamples.size(), r.negatives) << "k=" << r.k;
  }
}

TEST(Scan, VacuumOnly) {
  const Sl2Parafermion k3(3);
  const auto report = fpos::scan_f_positivity(k3, std::vector<Sl2Label>{fpos::sl2_vacuum(3)});
  EXPECT_EQ(report.tuples_examined, 1u);
  EXPECT_EQ(report.min_degree, 0);
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(Scan, RankTwoLevelFourIsFPositive) {
  const fpos::SlrParafermion s24(2, 4);
  std::vector<fpos::SlrLabel> all;
  for (fpos::Index i = 0; i < s24.size(); ++i) all.push_back(s24.label(i));
  const auto report = fpos::scan_f_positivity(s24, all);
  EXPECT_GE(report.min_degree, 0);
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(Scan, RejectsNonClosedSubset) {
  const Sl2Parafermion k3(3);
  EXPECT_THROW(fpos::scan_f_positivity(k3, std::vector<Sl2Label>{fpos::sl2_vacuum(3), M(3, 1, 0)}),
               fpos::ClosureError);
  EXPECT_THROW(fpos::scan_f_positivity(k3, std::vector<Sl2Label>{fpos::sl2_vacuum(3), M(3, 3, 1)}),
               fpos::ClosureError);
}

TEST(Certificate, RankTwoTable) {
  struct Row {
    int k;
    Rational f_min, f_max;
    fpos::CertificateStatus status;
  };
  using enum fpos::CertificateStatus;
  for (const Row& r : {Row{2, q(1, 2), q(1, 2), issued}, Row{3, q(2, 3), 1, issued}, Row{4, q(3, 4), q(5, 4), issued},
                       Row{5, q(4, 5), q(8, 5), issued}, Row{6, q(5, 6), 2, refused}}) {
    const fpos::SlrParafermion ring(2, r.k);
    const auto cert = fpos::indexed::positivity_certificate(ring, fpos::all_indices(ring));
    EXPECT_TRUE(cert.abelian);
    EXPECT_EQ(cert.f_min, r.f_min) << "k=" << r.k;
    EXPECT_EQ(cert.f_max, r.f_max) << "k=" << r.k;
    EXPECT_EQ(cert.status, r.status) << "k=" << r.k;
  }
  const auto five = fpos::indexed::positivity_certificate(fpos::SlrParafermion(2, 5),
                                                          fpos::all_indices(fpos::SlrParafermion(2, 5)));
  ASSERT_TRUE(five.c_interval);
  EXPECT_EQ(five.c_interval->first, q(4, 5));
  EXPECT_EQ(five.c_interval->second, q(4, 5));
}

TEST(Certificate, VacuumOnlyIsTriviallyIssued) {
  const fpos::SlrParafermion s21(2, 1);
  const auto cert = fpos::indexed::positivity_certificate(s21, fpos::all_indices(s21));
  EXPECT_EQ(cert.status, fpos::CertificateStatus::issued);
  EXPECT_EQ(cert.f_min, 0);
  ASSERT_TRUE(cert.c_interval);
  EXPECT_EQ(cert.c_interval->first, 0);
  EXPECT_EQ(cert.c_interval->second, 0);
}

TEST(Certificate, NonAbelianIsInapplicable) {
  const Sl2Parafermion k3(3);
  const auto cert = fpos::positivity_certificate(k3, fpos::subring_T(3));
  EXPECT_FALSE(cert.abelian);
  EXPECT_EQ(cert.status, fpos::CertificateStatus::inapplicable);
  EXPECT_FALSE(cert.c_interval);
}

TEST(Degree11, Examples) {
  EXPECT_EQ(fpos::degree_11(Sl2Parafermion(2), fpos::sl2_vacuum(2)), -6);
  EXPECT_EQ(fpos::degree_11(Sl2Parafermion(1), fpos::sl2_vacuum(1)), 0);
}

TEST(Degree11, SingleUnitDatumGivesHalfCentralCharge) {
  const auto ring = point_datum(q(7, 3));
  EXPECT_EQ(fpos::degree_11(ring, Point{}), q(7, 6));
  EXPECT_TRUE(fpos::datum_axiom_violations(ring).empty());
}

TEST(LambdaThreshold, Examples) {
  EXPECT_EQ(fpos::lambda_threshold(Sl2Parafermion(2), std::vector<Sl2Label>{fpos::sl2_vacuum(2), M(2, 2, 1)}),
            q(23, 4));
  EXPECT_EQ(fpos::lambda_threshold(Sl2Parafermion(1), std::vector<Sl2Label>{fpos::sl2_vacuum(1)}), 0);
}

TEST(LambdaThreshold, RankTwoUsesItsOwnCentralCharge) {
  // c(S2(2)) = 6/5, so the maximiser 12 cw - c/2 - cw(W) lands at 27/5
  const fpos::SlrParafermion s22(2, 2);
  EXPECT_EQ(s22.central_charge(), q(6, 5));
  EXPECT_EQ(fpos::indexed::lambda_threshold(s22, fpos::all_indices(s22)), q(27, 5));
}

TEST(Engine, MemoizesSortedProducts) {
  const Sl2Parafermion k4(4);
  fpos::Engine engine(k4);
  const std::vector<fpos::Index> a{1, 5, 3}, b{3, 1, 5};
  const auto& pa = engine.product(a);
  const std::size_t cached = engine.cache_size();
  EXPECT_EQ(engine.product(b), pa);
  EXPECT_EQ(engine.cache_size(), cached);
}
