#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace apollonian;

namespace {

DescartesQuad Q(long long a, long long b, long long c, long long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

std::set<oracle::CircleKey> keys(const Gasket& g) {
  std::set<oracle::CircleKey> out;
  for (const auto& r : g.records) out.insert(oracle::key(r.curvature, r.weighted_center));
  return out;
}

bool same_records(const Gasket& a, const Gasket& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto &x = a.records[i], &y = b.records[i];
    if (x.curvature != y.curvature || x.weighted_center != y.weighted_center || x.cocurvature != y.cocurvature ||
        x.level != y.level || x.word != y.word || x.parents != y.parents)
      return false;
  }
  return true;
}

std::map<Rational, std::size_t> M(std::initializer_list<std::pair<long long, std::size_t>> v) {
  std::map<Rational, std::size_t> m;
  for (auto [k, n] : v) m[Rational(k)] = n;
  return m;
}

}  // namespace

TEST(Enumerate, FlagshipSmallBounds) {
  Gasket g = enumerate(Q(-1, 2, 2, 3), 3);
  GasketStats s = stats(g);
  EXPECT_EQ(s.count, 5u);
  // the 3 has a twin of its own: 2(-1 + 2 + 2) - 3 = 3
  EXPECT_EQ(s.multiplicity, M({{-1, 1}, {2, 2}, {3, 2}}));
  Gasket h = enumerate(Q(-1, 2, 2, 3), 15);
  EXPECT_EQ(stats(h).multiplicity, M({{-1, 1}, {2, 2}, {3, 2}, {6, 4}, {11, 4}, {14, 4}, {15, 2}}));
  EXPECT_EQ(stats(h).count, 19u);
  EXPECT_EQ(stats(h).prime_curvatures, 2u + 2 + 4);  // 2, 3, 11
}

TEST(Enumerate, RecordsCarryWordsAndOrder) {
  Gasket g = enumerate(Q(-1, 2, 2, 3), 50);
  for (std::size_t i = 1; i < g.records.size(); ++i) {
    const auto &a = g.records[i - 1], &b = g.records[i];
    ASSERT_TRUE(oracle::key(a.curvature, a.weighted_center) < oracle::key(b.curvature, b.weighted_center));
  }
  for (const auto& r : g.records) {
    EXPECT_EQ(r.word.size(), static_cast<std::size_t>(r.level));
    EXPECT_EQ(r.parents[0] < 0, r.level == 0);
  }
}

TEST(Enumerate, RejectsBadRoots) {
  // two parallel lines with the circles between them: not a packing root
  auto f = ford_root_extended().circles();
  ExtendedQuad strip = make_extended(
      {GeneralizedCircle::line(GaussianRational::i(), GaussianRational(Rational(1), Rational(1))), f[1], f[2], f[3]}, 2);
  EXPECT_THROW(enumerate(strip, 10), Error);
  EXPECT_THROW(enumerate(Q(1, 2, 2, 3), 10), Error);
  try {
    enumerate(DescartesQuad(Rational(-1, 2), Rational(1), Rational(1), Rational(3, 2)), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Enumerate, FordRootMatchesFordCircles) {
  Gasket g = enumerate(Q(4, 1, 1, 0), 100);
  EXPECT_EQ(g.records.size(), 65u);
  auto all = keys(g);
  EXPECT_EQ(all, oracle::closure(g.root, 100));
  // the members touching the axis are exactly the Ford circles; the rest sit
  // in the curvilinear triangle above 1/2
  std::set<oracle::CircleKey> touching;
  for (const auto& k : all) {
    if (std::get<0>(k) != 0 && std::get<2>(k) == Rational(1, 2)) touching.insert(k);
  }
  EXPECT_EQ(touching, oracle::ford_circles(100));
  for (const auto& r : g.records) {
    if (r.curvature == 0) continue;
    GeneralizedCircle c = g.circle(r);
    bool on_axis = r.weighted_center.im == Rational(1, 2);
    EXPECT_EQ(on_axis, is_tangent(tangency(c, ford_axis())));
  }
}

TEST(Enumerate, MatchesExhaustiveClosure) {
  for (const auto& root : {Q(-1, 2, 2, 3), Q(-2, 3, 6, 7), Q(-3, 5, 8, 8), Q(-6, 11, 14, 15), Q(4, 1, 1, 0)}) {
    for (long long bound : {20, 120, 500}) {
      Gasket g = enumerate(root, bound);
      ASSERT_EQ(keys(g), oracle::closure(g.root, bound)) << to_string(root) << " bound " << bound;
      ASSERT_EQ(keys(g).size(), g.records.size());
    }
  }
}

TEST(Enumerate, ThreadedRunIsIdentical) {
  Gasket a = enumerate(Q(-1, 2, 2, 3), 800);
  GasketOptions opt;
  opt.threads = 4;
  Gasket b = enumerate(Q(-1, 2, 2, 3), 800, opt);
  EXPECT_TRUE(same_records(a, b));
}

TEST(Enumerate, RationalRootBehindFlag) {
  GasketOptions opt;
  opt.allow_rational = true;
  Gasket g = enumerate(DescartesQuad(Rational(-1, 2), Rational(1), Rational(1), Rational(3, 2)), 10, opt);
  EXPECT_TRUE(g.rational_mode);
  EXPECT_TRUE(verify(g).ok());
  // halving every curvature of the integral gasket
  Gasket h = enumerate(Q(-1, 2, 2, 3), 20);
  GasketStats hs = stats(h), gs = stats(g);
  EXPECT_EQ(gs.count, hs.count);
  for (const auto& [k, n] : hs.multiplicity) EXPECT_EQ(gs.multiplicity[k / 2], n);
  EXPECT_TRUE(std::any_of(g.records.begin(), g.records.end(), [](const auto& r) { return !is_integer(r.curvature); }));
}

TEST(Verify, PassesOnEnumerationsAndCatchesCorruption) {
  for (const auto& root : {Q(-1, 2, 2, 3), Q(4, 1, 1, 0), Q(-2, 3, 6, 7)}) {
    Gasket g = enumerate(root, 300);
    VerifyReport rep = verify(g);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.checked, g.records.size());
    for (const auto& r : g.records) {
      if (r.parents[0] < 0) continue;
      std::array<Rational, 4> ks{r.curvature};
      for (int j = 0; j < 3; ++j) ks[j + 1] = g.records[r.parents[j]].curvature;
      ASSERT_TRUE(check_descartes(ks[0], ks[1], ks[2], ks[3]));
    }
  }
  Gasket g = enumerate(Q(-1, 2, 2, 3), 100);
  auto it = std::find_if(g.records.begin(), g.records.end(), [](const auto& r) { return r.level > 2; });
  ASSERT_NE(it, g.records.end());
  it->curvature += 1;
  VerifyReport rep = verify(g);
  ASSERT_FALSE(rep.ok());
  bool tangency_flagged = std::any_of(rep.failures.begin(), rep.failures.end(), [](const std::string& s) {
    return s.find("Descartes") != std::string::npos || s.find("to parent") != std::string::npos;
  });
  EXPECT_TRUE(tangency_flagged);
}

TEST(Stats, PrimeCountIsDefinitional) {
  Gasket g = enumerate(Q(-1, 2, 2, 3), 100);
  GasketStats s = stats(g);
  std::size_t primes = 0;
  for (const auto& [k, n] : s.multiplicity) {
    if (k < 2) continue;
    long long v = numerator(k).convert_to<long long>();
    bool p = true;
    for (long long d = 2; d * d <= v; ++d) p = p && v % d != 0;
    if (p) primes += n;
  }
  EXPECT_EQ(s.prime_curvatures, primes);
}

TEST(Json, GasketRoundTrip) {
  Gasket g = enumerate(Q(-2, 3, 6, 7), 60);
  Gasket back = io::gasket_from_json(io::to_json(g));
  EXPECT_TRUE(same_records(g, back));
  EXPECT_EQ(back.bound, g.bound);
  EXPECT_EQ(back.root.quad(), g.root.quad());
  EXPECT_TRUE(verify(back).ok());
}
