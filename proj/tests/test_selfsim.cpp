#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace apollonian;

namespace {

Fraction F(long long p, long long q) { return Fraction(p, q); }

const GaussianRational I = GaussianRational::i();

FriendlyTriplet golden_target() { return {F(1, 3), F(2, 5), F(1, 2)}; }
FriendlyTriplet diamond_target() { return {F(1, 3), F(3, 8), F(2, 5)}; }

GeneralizedCircle circle_eq(Rational x, Rational y, Rational r) {
  return GeneralizedCircle::circle(GaussianRational(std::move(x), std::move(y)), r * r);
}

// Label curvature (half the geometric one) of a circle with rational radius.
Rational label(const GeneralizedCircle& c) {
  if (c.is_line()) return 0;
  QuadraticSurd k = signed_curvature(c);
  EXPECT_TRUE(k.is_rational());
  return k.a() / 2;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

// One target per n* in 1..10, found by scanning small triplets.
std::map<int, FriendlyTriplet> targets_by_nstar() {
  std::map<int, FriendlyTriplet> out;
  for (const auto& t : oracle::friendly_triplets(80)) {
    HierarchyMap h = build_fstar(t);
    if (h.n_star >= 1 && h.n_star <= 10) out.emplace(static_cast<int>(h.n_star), t);
  }
  return out;
}

}  // namespace

TEST(BuildFstar, GoldenAndDiamond) {
  HierarchyMap g = build_fstar(golden_target());
  EXPECT_EQ(g.matrix, (IMat2{0, 1, -1, 3}));
  EXPECT_EQ(g.n_star, 1);
  EXPECT_EQ(*g.zeta, QuadraticSurd(Rational(3, 2), Rational(1, 2), BigInt(5)));
  EXPECT_FALSE(g.degenerate);
  HierarchyMap d = build_fstar(diamond_target());
  EXPECT_EQ(d.matrix, (IMat2{1, 1, 2, 3}));
  EXPECT_EQ(d.n_star, 2);
  EXPECT_EQ(*d.zeta, QuadraticSurd(Rational(2), Rational(1), BigInt(3)));
  HierarchyMap id = build_fstar(FriendlyTriplet::root());
  EXPECT_EQ(id.matrix, (IMat2{1, 0, 0, 1}));
  EXPECT_TRUE(id.degenerate);
  EXPECT_EQ(id.n_star, 0);
  EXPECT_FALSE(id.zeta);
}

TEST(BuildFstar, AgreesWithThreePointMap) {
  MobiusMap f = from_three_points(Rational(0), Rational(1, 2), Rational(1), Rational(1, 3), Rational(3, 8), Rational(2, 5));
  EXPECT_EQ(f, build_fstar(diamond_target()).matrix.mobius());
}

TEST(BuildFstar, UnimodularOnRandomTargets) {
  gen::Gen g(61);
  for (int n = 0; n < 10000; ++n) {
    FriendlyTriplet t = g.triplet(10000);
    HierarchyMap h = build_fstar(t);
    ASSERT_EQ(h.matrix.det(), 1) << to_string(t);
    ASSERT_EQ(h.matrix.trace(), h.n_star + 2);
    ASSERT_EQ(apply_fraction(h.matrix, F(0, 1)), t.left);
    ASSERT_EQ(apply_fraction(h.matrix, F(1, 2)), t.center);
    ASSERT_EQ(apply_fraction(h.matrix, F(1, 1)), t.right);
  }
}

TEST(Iterate, FigureSequences) {
  auto golden = iterate(build_fstar(golden_target()), FriendlyTriplet::root(), 2);
  ASSERT_EQ(golden.size(), 3u);
  EXPECT_EQ(center_label(golden[0]), 4);
  EXPECT_EQ(center_label(golden[1]), 25);
  EXPECT_EQ(center_label(golden[2]), 169);
  HierarchyMap d = build_fstar(diamond_target());
  auto diamond = iterate(d, {F(0, 1), F(1, 3), F(1, 2)}, 2);
  EXPECT_EQ(center_label(diamond[0]), 9);
  EXPECT_EQ(center_label(diamond[1]), 121);
  EXPECT_EQ(center_label(diamond[2]), 1681);
  auto from_root = iterate(d, FriendlyTriplet::root(), 2);
  EXPECT_EQ(from_root[1], diamond_target());
  EXPECT_EQ(from_root[2], FriendlyTriplet(F(4, 11), F(11, 30), F(7, 19)));
  EXPECT_EQ(center_label(from_root[2]), 900);
}

TEST(Iterate, RatiosConvergeMonotonically) {
  for (const auto& [target, start] :
       {std::pair{golden_target(), FriendlyTriplet::root()}, std::pair{diamond_target(), FriendlyTriplet(F(0, 1), F(1, 3), F(1, 2))}}) {
    HierarchyMap h = build_fstar(target);
    double zeta2 = (*h.zeta * *h.zeta).to_double();
    auto levels = iterate(h, start, 6);
    double prev_gap = 1e9;
    for (std::size_t l = 1; l < levels.size(); ++l) {
      double ratio = to_double(Rational(center_label(levels[l]), center_label(levels[l - 1])));
      double gap = std::abs(ratio - zeta2);
      EXPECT_LT(gap, prev_gap);
      prev_gap = gap;
    }
    EXPECT_LT(prev_gap, 1e-3);
  }
}

TEST(Scaling, Examples) {
  Scaling d = scaling(IMat2{1, 1, 2, 3});
  EXPECT_EQ(d.zeta, QuadraticSurd(Rational(2), Rational(1), BigInt(3)));
  EXPECT_EQ(d.n_star, 2);
  EXPECT_EQ(d.cf.head, ints({3}));
  EXPECT_EQ(d.cf.period, ints({1, 2}));
  Scaling g = scaling(IMat2{0, 1, -1, 3});
  EXPECT_EQ(g.n_star, 1);
  EXPECT_EQ(g.cf.head, ints({2}));
  EXPECT_EQ(g.cf.period, ints({1}));
  try {
    scaling(IMat2{1, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHyperbolic);
  }
}

TEST(Scaling, ContinuedFractionShapeForEachNstar) {
  auto targets = targets_by_nstar();
  ASSERT_EQ(targets.size(), 10u);
  for (const auto& [n, t] : targets) {
    HierarchyMap h = build_fstar(t);
    EXPECT_EQ(h.cf->head, ints({n + 1})) << to_string(t);
    if (n == 1) EXPECT_EQ(h.cf->period, ints({1}));
    else EXPECT_EQ(h.cf->period, ints({1, n}));
  }
}

TEST(BoundaryMap, TableRows) {
  BoundaryMap r1 = boundary_map(F(0, 1));
  EXPECT_EQ(r1.map, MobiusMap(GaussianRational(1), GaussianRational(0), -I, GaussianRational(1)));
  EXPECT_TRUE(r1.mirror.same_set(circle_eq(0, 1, 1)));
  BoundaryMap r2 = boundary_map(F(1, 2));
  EXPECT_EQ(r2.map, MobiusMap(GaussianRational(1) - GaussianRational(2) * I, I, -GaussianRational(4) * I,
                              GaussianRational(1) + GaussianRational(2) * I));
  EXPECT_TRUE(r2.figure_mirror.same_set(circle_eq(Rational(1, 2), Rational(1, 2), Rational(1, 2))));
  BoundaryMap r3 = boundary_map(F(1, 3));
  EXPECT_EQ(r3.map, MobiusMap(GaussianRational(1) - GaussianRational(3) * I, I, -GaussianRational(9) * I,
                              GaussianRational(1) + GaussianRational(3) * I));
  EXPECT_TRUE(r3.figure_mirror.same_set(circle_eq(Rational(1, 3), Rational(2, 9), Rational(2, 9))));
  // the exact mirrors invert the axis onto the Ford circle
  for (const auto* b : {&r1, &r2, &r3}) {
    GeneralizedCircle img = invert(b->mirror, GeneralizedCircle::real_axis());
    EXPECT_TRUE(img.same_set(apply_circle(b->map, GeneralizedCircle::real_axis())));
  }
}

TEST(BoundaryMap, ParabolicAndScalingFormula) {
  for (long long q = 1; q <= 20; ++q)
    for (long long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      BoundaryMap b = boundary_map(F(p, q));
      EXPECT_EQ(b.map, boundary_map_by_scaling(F(p, q)));
      Classification c = classify(b.map);
      EXPECT_EQ(c.kind, MobiusClass::Parabolic);
      GeneralizedCircle ford = ford_circle(F(p, q)).circle;
      for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-5, 2)})
        EXPECT_TRUE(ford.contains(b.map.apply(x))) << p << "/" << q;
      EXPECT_TRUE(ford.contains(b.map.apply(ExtendedPoint::infinity())));
      EXPECT_TRUE(invert(b.mirror, GeneralizedCircle::real_axis()).same_set(ford));
    }
}

// The fourth row: a hyperbolic map onto the label-28 circle next to the
// 2/5-side of the diamond root, and its mirror in both frames.
TEST(BoundaryMap, FourthRow) {
  MobiusMap m4(GaussianRational(Rational(2), Rational(-5)), GaussianRational(Rational(0), Rational(2)),
               GaussianRational(Rational(0), Rational(-14)), GaussianRational(Rational(2), Rational(5)));
  EXPECT_EQ(m4.det(), GaussianRational(1));
  EXPECT_EQ(classify(m4).kind, MobiusClass::Hyperbolic);
  ExtendedQuad e = extend_reflect(triplet_to_extended({F(0, 1), F(1, 3), F(1, 2)}), 3);
  EXPECT_EQ(e.k[3], 28);
  GeneralizedCircle target = e.circle(3);
  EXPECT_TRUE(apply_circle(m4, GeneralizedCircle::real_axis()).same_set(target));
  EXPECT_EQ(target.center(), GaussianRational(Rational(5, 14), Rational(1, 8)));
  GeneralizedCircle mirror = mirror_between(GeneralizedCircle::real_axis(), target);
  EXPECT_TRUE(mirror.same_set(circle_eq(Rational(5, 14), Rational(1, 7), Rational(1, 14))));
  EXPECT_TRUE(figure_frame(mirror).same_set(circle_eq(Rational(5, 14), Rational(2, 7), Rational(1, 7))));
  EXPECT_TRUE(invert(mirror, GeneralizedCircle::real_axis()).same_set(target));
}

TEST(Conjugate, DiamondInTheZeroFrame) {
  HierarchyMap d = build_fstar(diamond_target());
  MobiusMap B = boundary_map(F(0, 1)).map;
  ConjugatedHierarchy c = conjugate(B, d);
  GeneralizedCircle host = ford_circle(F(0, 1)).circle;
  auto levels = iterate(d, FriendlyTriplet::root(), 3);
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    for (const auto& [from, to] : {std::pair{levels[l].left, levels[l + 1].left}, std::pair{levels[l].center, levels[l + 1].center},
                                   std::pair{levels[l].right, levels[l + 1].right}}) {
      GeneralizedCircle a = apply_circle(B, ford_circle(from).circle);
      GeneralizedCircle b = apply_circle(B, ford_circle(to).circle);
      EXPECT_TRUE(apply_circle(c.map, a).same_set(b));
      EXPECT_TRUE(is_tangent(tangency(b, host)));
    }
  }
  Classification k = classify(c.map);
  EXPECT_EQ(k.trace_sq, GaussianRational(16));  // same scaling as the core
  EXPECT_EQ(conjugate(MobiusMap::identity(), d).map, d.matrix.mobius());
}

TEST(RebaseRoot, FordRootIsFixed) {
  EXPECT_EQ(rebase_root(ford_root_extended()), MobiusMap::identity());
}

TEST(RebaseRoot, DefaultAndPinnedAssignments) {
  ExtendedQuad e = extend_reflect(triplet_to_extended({F(0, 1), F(1, 3), F(1, 2)}), 3);
  auto fr = ford_root_extended().circles();
  std::array<GeneralizedCircle, 4> level1{ford_circle(F(3, 8)).circle, ford_circle(F(2, 5)).circle,
                                          ford_circle(F(1, 3)).circle, ford_axis()};
  auto pulled = [&](const MobiusMap& B) {
    std::vector<Rational> ks;
    MobiusMap back = B.inverse();
    for (const auto& c : level1) ks.push_back(label(apply_circle(back, c)));
    std::sort(ks.rbegin(), ks.rend());
    return ks;
  };
  MobiusMap Bdef = rebase_root(e);
  for (int i = 0; i < 4; ++i) {
    GeneralizedCircle img = apply_circle(Bdef, e.circle(i));
    EXPECT_TRUE(std::any_of(fr.begin(), fr.end(), [&](const auto& f) { return f.same_set(img); }));
  }
  EXPECT_EQ(pulled(Bdef), (std::vector<Rational>{424, 168, 57, 1}));
  // the 9-circle to the axis and the 28-circle to the half circle
  MobiusMap Bpin = rebase_root(e, 3, 0);
  EXPECT_EQ(pulled(Bpin), (std::vector<Rational>{568, 217, 72, 9}));
  EXPECT_THROW(rebase_root(e, 1, 1), Error);
}

// Conjugating the diamond core back into an arbitrary root frame reproduces
// the pulled-back first level from the root circles themselves.
TEST(RebaseRoot, ConjugatedHierarchyActsOnTheRoot) {
  ExtendedQuad e = realize(DescartesQuad(-1, 2, 2, 3));
  MobiusMap B = rebase_root(e);
  HierarchyMap d = build_fstar(diamond_target());
  ConjugatedHierarchy c = conjugate(B.inverse(), d);
  MobiusMap Fm = d.matrix.mobius();
  for (int i = 0; i < 4; ++i) {
    GeneralizedCircle via_frame = apply_circle(B.inverse(), apply_circle(Fm, apply_circle(B, e.circle(i))));
    EXPECT_TRUE(apply_circle(c.map, e.circle(i)).same_set(via_frame));
  }
  std::vector<Rational> ks;
  for (int i = 0; i < 4; ++i) ks.push_back(label(apply_circle(c.map, e.circle(i))) * 2);
  DescartesQuad image(ks[0], ks[1], ks[2], ks[3]);
  EXPECT_TRUE(check_descartes(image));
}

TEST(MirrorBetween, Preconditions) {
  EXPECT_THROW(mirror_between(ford_circle(F(0, 1)).circle, ford_circle(F(1, 1)).circle), Error);
  EXPECT_THROW(mirror_between(GeneralizedCircle::real_axis(), circle_eq(0, 0, 1)), Error);
}
