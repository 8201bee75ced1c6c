#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/parafermion_sl2.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

namespace {

using fpos::Rational;
using fpos::Sl2Label;
using fpos::Sl2Parafermion;

Sl2Label M(int k, int i, int j) { return fpos::canonicalize(k, i, j); }
Rational q(long long n, long long d = 1) { return fpos::make_rational(n, d); }

// Runs f on every sorted 4-tuple of labels of K(sl2, k).
template <class F>
void for_each_sorted_four(const Sl2Parafermion& ring, F&& f) {
  const auto& L = ring.labels();
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a; b < L.size(); ++b)
      for (std::size_t c = b; c < L.size(); ++c)
        for (std::size_t d = c; d < L.size(); ++d) f(std::array<Sl2Label, 4>{L[a], L[b], L[c], L[d]});
}

}  // namespace

TEST(Canonicalize, Examples) {
  EXPECT_EQ(fpos::canonicalize(3, 0, 0), (Sl2Label{3, 3, 0}));
  EXPECT_EQ(fpos::canonicalize(3, 1, 2), (Sl2Label{3, 2, 1}));
  EXPECT_EQ(fpos::canonicalize(3, 2, 1), (Sl2Label{3, 2, 1}));
  EXPECT_EQ(fpos::canonicalize(3, 2, -2), (Sl2Label{3, 2, 1}));
}

TEST(Canonicalize, IsIdempotentAndRespectsTheIdentification) {
  for (int k = 1; k <= 7; ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int j = -k; j < 2 * k; ++j) {
        const Sl2Label c = fpos::canonicalize(k, i, j);
        EXPECT_LT(c.j, c.i);
        EXPECT_EQ(fpos::canonicalize(k, c.i, c.j), c);
        EXPECT_EQ(fpos::canonicalize(k, k - i, j - i), c);
      }
    }
  }
}

TEST(Canonicalize, DomainErrors) {
  EXPECT_THROW(fpos::canonicalize(3, 4, 0), fpos::DomainError);
  EXPECT_THROW(fpos::canonicalize(3, -1, 0), fpos::DomainError);
  EXPECT_THROW(fpos::canonicalize(0, 0, 0), fpos::DomainError);
}

TEST(Dual, Examples) {
  EXPECT_EQ(fpos::dual(M(3, 2, 1)), M(3, 2, 1));
  EXPECT_EQ(fpos::dual(M(3, 3, 1)), M(3, 3, 2));
  EXPECT_EQ(fpos::dual(M(3, 1, 0)), M(3, 2, 0));
}

TEST(ConformalWeight, Examples) {
  EXPECT_EQ(fpos::conformal_weight(fpos::sl2_vacuum(3)), 0);
  EXPECT_EQ(fpos::conformal_weight(M(3, 2, 1)), q(2, 5));
  EXPECT_EQ(fpos::conformal_weight(M(3, 3, 1)), q(2, 3));
}

TEST(ConformalWeight, KTypeModulesFollowTheQuadraticRule) {
  for (int k = 1; k <= 12; ++k)
    for (int a = 0; a < k; ++a) EXPECT_EQ(fpos::conformal_weight(M(k, k, a)), q(a * (k - a), k));
}

TEST(Fuse, Examples) {
  using E = fpos::FusionExpansion<Sl2Label>;
  auto sorted = [](E e) {
    std::ranges::sort(e);
    return e;
  };
  EXPECT_EQ(fpos::fuse(fpos::sl2_vacuum(3), M(3, 2, 1)), (E{{M(3, 2, 1), 1}}));
  EXPECT_EQ(sorted(fpos::fuse(M(3, 1, 0), M(3, 1, 0))), sorted(E{{M(3, 3, 2), 1}, {M(3, 2, 0), 1}}));
  EXPECT_EQ(fpos::fuse(M(2, 2, 1), M(2, 2, 1)), (E{{fpos::sl2_vacuum(2), 1}}));
}

TEST(Fuse, LevelMismatch) { EXPECT_THROW(fpos::fuse(M(3, 1, 0), M(4, 1, 0)), fpos::DomainError); }

TEST(Datum, LabelCountIsTriangular) {
  EXPECT_EQ(Sl2Parafermion(2).size(), 3u);
  EXPECT_EQ(Sl2Parafermion(3).size(), 6u);
  for (int k = 1; k <= 15; ++k) EXPECT_EQ(fpos::datum_sl2(k).size(), static_cast<std::size_t>(k * (k + 1) / 2));
  EXPECT_THROW(fpos::datum_sl2(0), fpos::DomainError);
}

TEST(Datum, AxiomsHoldUpToLevelEight) {
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(fpos::datum_axiom_violations(Sl2Parafermion(k)), std::vector<std::string>{});
}

TEST(Datum, CentralCharge) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(Sl2Parafermion(k).central_charge(), q(2 * (k - 1), k + 2));
}

TEST(Labels, ParseAndPrintRoundTrip) {
  for (const Sl2Label& l : fpos::sl2_labels(6)) EXPECT_EQ(fpos::parse_sl2_label(fpos::to_string(l)), l);
  EXPECT_EQ(fpos::to_string(M(3, 2, 1)), "M[2,1]@3");
  EXPECT_EQ(fpos::parse_sl2_label(" M[0,0]@3 "), fpos::sl2_vacuum(3));
}

TEST(Labels, ParseErrors) {
  EXPECT_THROW(fpos::parse_sl2_label("M[2,1]"), fpos::LabelError);
  EXPECT_THROW(fpos::parse_sl2_label("M[2]@3"), fpos::LabelError);
  EXPECT_THROW(fpos::parse_sl2_label("Z[2,1]@3"), fpos::LabelError);
  EXPECT_THROW(fpos::parse_sl2_label("M[x,1]@3"), fpos::LabelError);
  EXPECT_THROW(fpos::parse_sl2_label("M[5,1]@3"), fpos::Error);
}

TEST(FrozenOracle, FourPointRanksAndDegrees) {
  const Sl2Parafermion k5(5), k6(6);
  const std::vector<Sl2Label> a{M(5, 4, 3), M(5, 1, 0), M(5, 4, 3), M(5, 4, 3)};
  EXPECT_EQ(fpos::rank_n(k5, a), 2u);
  EXPECT_EQ(fpos::degree_04(k5, a), -1);
  const std::vector<Sl2Label> b{M(6, 6, 5), M(6, 4, 0), M(6, 5, 1), M(6, 3, 0)};
  EXPECT_EQ(fpos::rank_n(k6, b), 1u);
  EXPECT_EQ(fpos::degree_04(k6, b), 1);
}

TEST(FrozenOracle, SixPointRanks) {
  EXPECT_EQ(fpos::rank_n(Sl2Parafermion(6), {M(6, 5, 0), M(6, 5, 4), M(6, 6, 3), M(6, 5, 4), M(6, 5, 1), M(6, 4, 3)}),
            3u);
  EXPECT_EQ(fpos::rank_n(Sl2Parafermion(4), {M(4, 3, 0), M(4, 2, 0), M(4, 4, 2), M(4, 4, 0), M(4, 1, 0), M(4, 4, 3)}),
            1u);
}

TEST(Rank4Closed, Examples) {
  EXPECT_EQ(fpos::rank4_closed({M(3, 1, 0), M(3, 3, 1), M(3, 3, 2), M(3, 3, 2)}), 0u);
  EXPECT_EQ(fpos::rank4_closed({M(3, 2, 1), M(3, 2, 1), M(3, 2, 1), M(3, 2, 1)}), 2u);
  EXPECT_EQ(fpos::rank4_closed({M(2, 2, 1), M(2, 2, 1), M(2, 2, 1), M(2, 2, 1)}), 1u);
}

TEST(Rank4Closed, AgreesWithEngineUpToLevelSix) {
  for (int k = 1; k <= 6; ++k) {
    const Sl2Parafermion ring(k);
    for_each_sorted_four(ring, [&](const std::array<Sl2Label, 4>& t) {
      EXPECT_EQ(fpos::rank4_closed(t), fpos::rank_n(ring, {t.begin(), t.end()}))
          << fpos::to_string(t[0]) << " " << fpos::to_string(t[1]) << " " << fpos::to_string(t[2]) << " "
          << fpos::to_string(t[3]);
    });
  }
}

TEST(Degree04Closed, Examples) {
  const Sl2Label m = M(3, 2, 1);
  EXPECT_EQ(fpos::degree04_closed(m, {m, m, m}), 2);
  // base M^{1,0}; the remaining three are the duals of M^{1,0}, M^{2,0}, M^{2,0}
  EXPECT_EQ(fpos::degree04_closed(M(3, 1, 0), {M(3, 1, 0), M(3, 1, 0), M(3, 2, 0)}), -1);
  EXPECT_EQ(fpos::degree04_closed(M(3, 1, 0), {M(3, 1, 0), M(3, 2, 1), M(3, 3, 0)}), 0);
}

TEST(Degree04Closed, RejectsUnsortedInput) {
  EXPECT_THROW(fpos::degree04_closed(M(3, 2, 1), {M(3, 1, 0), M(3, 2, 1), M(3, 2, 1)}), fpos::PreconditionError);
}

TEST(Degree04Closed, AgreesWithEngineUpToLevelSix) {
  for (int k = 1; k <= 6; ++k) {
    const Sl2Parafermion ring(k);
    const auto& L = ring.labels();
    for (const Sl2Label& base : L)
      for (const Sl2Label& x : L)
        for (const Sl2Label& y : L)
          for (const Sl2Label& z : L) {
            std::array<Sl2Label, 3> dz{x, y, z};
            if (!(base.i <= x.i && x.i <= y.i && y.i <= z.i)) continue;
            const Rational expected = fpos::degree_04(ring, {base, fpos::dual(x), fpos::dual(y), fpos::dual(z)});
            EXPECT_EQ(fpos::degree04_closed(base, dz), expected) << "k=" << k;
          }
  }
}

TEST(ClosedDegreeT, Examples) {
  auto check = [](int k, std::array<int, 4> t, fpos::Multiplicity mu, Rational d) {
    const fpos::ClosedDegree c = fpos::closed_degree_T(k, t);
    EXPECT_EQ(c.mu, mu) << "k=" << k;
    EXPECT_EQ(c.degree, d) << "k=" << k;
  };
  check(3, {1, 1, 1, 1}, 2, 2);
  check(2, {1, 1, 1, 1}, 1, 2);
  check(4, {1, 1, 1, 1}, 3, 0);
}

TEST(ClosedDegreeT, NamesTheFailedHypothesis) {
  try {
    fpos::closed_degree_T(6, {1, 1, 1, 1});
    FAIL() << "expected a precondition error";
  } catch (const fpos::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("sum(t) >= k"), std::string::npos);
  }
  EXPECT_THROW(fpos::closed_degree_T(6, {0, 3, 3, 3}), fpos::PreconditionError);
  EXPECT_THROW(fpos::closed_degree_T(4, {3, 1, 1, 1}), fpos::PreconditionError);
}

TEST(ClosedDegreeT, AgreesWithEngineWhereverItApplies) {
  for (int k = 1; k <= 8; ++k) {
    const Sl2Parafermion ring(k);
    const int h = k / 2;
    for (int a = 0; a <= h; ++a)
      for (int b = a; b <= h; ++b)
        for (int c = b; c <= h; ++c)
          for (int d = c; d <= h; ++d) {
            if (a + b + c + d < k || b + c > a + d) continue;
            const fpos::ClosedDegree cd = fpos::closed_degree_T(k, {a, b, c, d});
            const std::vector<Sl2Label> mods{M(k, 2 * a, a), M(k, 2 * b, b), M(k, 2 * c, c), M(k, 2 * d, d)};
            EXPECT_EQ(cd.mu, fpos::rank_n(ring, mods));
            EXPECT_EQ(cd.degree, fpos::degree_04(ring, mods));
            EXPECT_EQ(fpos::rescaled_degree_T(k, {a, b, c, d}, cd.mu) * 2 * (k + 2), cd.degree);
          }
  }
}

TEST(RescaledDegreeS1, LiteralBranches) {
  EXPECT_EQ(fpos::rescaled_degree_S1(4, {2, 2, 2, 2}), q(2, 5));
  EXPECT_EQ(fpos::rescaled_degree_S1(5, {1, 3, 3, 3}), q(2, 6));
  EXPECT_EQ(fpos::rescaled_degree_S1(5, {0, 4, 3, 3}), 0);
  EXPECT_EQ(fpos::rescaled_degree_S1(5, {1, 1, 1, 1}), 0);
}

TEST(NontrivialT, Examples) {
  EXPECT_TRUE(fpos::nontrivial_T(4, std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_FALSE(fpos::nontrivial_T(4, std::vector<int>{1, 1, 1, 1}));
  EXPECT_FALSE(fpos::nontrivial_T(1, std::vector<int>{}));
  EXPECT_THROW(fpos::nontrivial_T(4, std::vector<int>{3}), fpos::PreconditionError);
}

TEST(NontrivialT, AgreesWithEngineOnPositiveRankTuples) {
  // On rank-zero tuples the divisor vanishes regardless of the weight sum.
  for (int k = 2; k <= 6; ++k) {
    const Sl2Parafermion ring(k);
    const int h = k / 2;
    for (int n = 4; n <= 5; ++n) {
      std::vector<int> a(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<Sl2Label> mods;
        for (int x : a) mods.push_back(M(k, 2 * x, x));
        if (fpos::rank_n(ring, mods) > 0) {
          EXPECT_EQ(fpos::nontrivial_T(k, a), !fpos::is_trivial(ring, mods)) << "k=" << k << " n=" << n;
        }
        std::size_t p = 0;
        while (p < a.size() && a[p] == h) a[p++] = 0;
        if (p == a.size()) break;
        ++a[p];
        for (std::size_t r = 0; r < p; ++r) a[r] = a[p];
      }
    }
  }
}

TEST(NontrivialS1, Examples) {
  EXPECT_TRUE(fpos::nontrivial_S1(3, std::vector<int>{1, 1, 2, 2}));
  EXPECT_FALSE(fpos::nontrivial_S1(3, std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(fpos::nontrivial_S1(5, std::vector<int>(7, 0)));
  EXPECT_THROW(fpos::nontrivial_S1(3, std::vector<int>(15, 1)), fpos::ResourceError);
  EXPECT_NO_THROW(fpos::nontrivial_S1(3, std::vector<int>(20, 1), 20));
}

TEST(NontrivialS1, AgreesWithEngine) {
  for (int k = 2; k <= 5; ++k) {
    const Sl2Parafermion ring(k);
    for (int n = 4; n <= 5; ++n) {
      std::vector<int> a(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<Sl2Label> mods;
        for (int x : a) mods.push_back(M(k, k, x));
        EXPECT_EQ(fpos::nontrivial_S1(k, a), !fpos::is_trivial(ring, mods)) << "k=" << k << " n=" << n;
        std::size_t p = 0;
        while (p < a.size() && a[p] == k - 1) a[p++] = 0;
        if (p == a.size()) break;
        ++a[p];
        for (std::size_t r = 0; r < p; ++r) a[r] = a[p];
      }
    }
  }
}

TEST(SymmetricRankSupport, Examples) {
  EXPECT_TRUE(fpos::symmetric_rank_support(8, 2, 2, 4));
  EXPECT_TRUE(fpos::symmetric_rank_support(8, 2, 2, 0));
  EXPECT_FALSE(fpos::symmetric_rank_support(4, 1, 1, 3));
  EXPECT_THROW(fpos::symmetric_rank_support(4, 0, 1, 0), fpos::PreconditionError);
}

TEST(SymmetricRankSupport, NeverClaimsSupportWhereTheEngineHasNone) {
  // The interval test can miss channels (see the acceptance output) but any
  // channel it reports is genuine.
  for (int k = 2; k <= 8; ++k) {
    const Sl2Parafermion ring(k);
    for (int a = 1; 2 * a <= k; ++a)
      for (int t = 1; t <= 4; ++t)
        for (int x = 0; 2 * x <= k; ++x) {
          if (!fpos::symmetric_rank_support(k, a, t, x)) continue;
          std::vector<Sl2Label> mods(static_cast<std::size_t>(t), M(k, 2 * a, a));
          mods.push_back(M(k, 2 * x, x));
          EXPECT_GT(fpos::rank_n(ring, mods), 0u) << "k=" << k << " a=" << a << " t=" << t << " x=" << x;
        }
  }
}

TEST(Subrings, Examples) {
  EXPECT_EQ(fpos::subring_T(3), (std::vector<Sl2Label>{M(3, 0, 0), M(3, 2, 1)}));
  EXPECT_EQ(fpos::subring_S1(3), (std::vector<Sl2Label>{M(3, 3, 0), M(3, 3, 1), M(3, 3, 2)}));
  EXPECT_EQ(fpos::subring_T(1), (std::vector<Sl2Label>{fpos::sl2_vacuum(1)}));
}

TEST(Subrings, ClosedAndAbelianAsExpected) {
  for (int k = 1; k <= 10; ++k) {
    const Sl2Parafermion ring(k);
    const auto s1 = fpos::positivity_certificate(ring, fpos::subring_S1(k));
    EXPECT_TRUE(s1.abelian) << "k=" << k;
    const auto t = fpos::positivity_certificate(ring, fpos::subring_T(k));
    EXPECT_EQ(t.abelian, k < 3) << "k=" << k;
  }
  EXPECT_EQ(fpos::fuse(M(3, 2, 1), M(3, 2, 1)).size(), 2u);
}

TEST(LambdaThreshold, FrozenSubringValues) {
  const std::array<Rational, 8> expected{0, q(23, 4), q(38, 5), q(23, 2), q(484, 35), q(139, 8), q(418, 21), q(233, 10)};
  for (int k = 1; k <= 8; ++k) {
    const Sl2Parafermion ring(k);
    EXPECT_EQ(fpos::lambda_threshold(ring, fpos::subring_T(k)), expected[static_cast<std::size_t>(k - 1)]) << "k=" << k;
    EXPECT_EQ(fpos::lambda_threshold(ring, fpos::subring_S1(k)), expected[static_cast<std::size_t>(k - 1)]) << "k=" << k;
  }
}
