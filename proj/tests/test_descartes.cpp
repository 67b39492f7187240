#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace apollonian;

namespace {

DescartesQuad Q(long long a, long long b, long long c, long long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

QuadraticSurd sq(const QuadraticSurd& x) { return x * x; }

QuadraticSurd golden() { return QuadraticSurd(Rational(3, 2), Rational(1, 2), BigInt(5)); }
QuadraticSurd diamond() { return QuadraticSurd(Rational(2), Rational(1), BigInt(3)); }

// The Ford root in unit-2 labels with the axis replaced by the line y = 1
// facing upward: curvatures (0, 1, 1, 0).
ExtendedQuad strip_quad() {
  auto f = ford_root_extended().circles();
  return make_extended({GeneralizedCircle::line(GaussianRational::i(), GaussianRational(Rational(1), Rational(1))), f[1],
                        f[2], f[3]},
                       2);
}

}  // namespace

TEST(CheckDescartes, Examples) {
  EXPECT_TRUE(check_descartes(Q(-1, 2, 2, 3)));
  EXPECT_TRUE(check_descartes(Q(4, 1, 1, 0)));
  EXPECT_FALSE(check_descartes(Q(1, 2, 2, 3)));
}

TEST(SolveFourth, Examples) {
  FourthSolution a = solve_fourth(2, 2, 3);
  EXPECT_EQ(a.k4, QuadraticSurd(15));
  EXPECT_EQ(a.k4_bar, QuadraticSurd(-1));
  EXPECT_TRUE(a.integral);
  FourthSolution b = solve_fourth(0, 1, 1);
  EXPECT_EQ(b.k4, QuadraticSurd(4));
  EXPECT_EQ(b.k4_bar, QuadraticSurd(0));
  FourthSolution c = solve_fourth(3, 6, 7);
  EXPECT_EQ(c.k4, QuadraticSurd(34));
  EXPECT_EQ(c.k4_bar, QuadraticSurd(-2));
  FourthSolution d = solve_fourth(1, 1, 1);
  EXPECT_FALSE(d.integral);
  EXPECT_EQ(d.k4, QuadraticSurd(Rational(3), Rational(2), BigInt(3)));
  EXPECT_THROW(solve_fourth(-1, -1, 1), Error);
}

TEST(ReflectFourth, Examples) {
  DescartesQuad r = reflect_fourth(Q(-1, 2, 2, 3), 0);
  EXPECT_EQ(r, Q(15, 2, 2, 3));
  EXPECT_EQ(r.sorted_desc(), Q(15, 3, 2, 2));
  EXPECT_EQ(reflect_fourth(Q(4, 1, 1, 0), 0), Q(0, 1, 1, 0));
  EXPECT_EQ(reflect_fourth(reflect_fourth(Q(-2, 3, 6, 7), 2), 2), Q(-2, 3, 6, 7));
  EXPECT_THROW(reflect_fourth(Q(4, 1, 1, 0), 4), Error);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(Q(4, 1, 1, 0)), Q(-1, 2, 2, 3));
  EXPECT_EQ(dual(Q(-1, 2, 2, 3)), Q(4, 1, 1, 0));
  EXPECT_EQ(dual(Q(0, 1, 1, 4)), Q(3, 2, 2, -1));
}

TEST(Dual, FormVanishesExactlyOnDescartes) {
  gen::Gen g(41);
  for (int n = 0; n < 1000; ++n) {
    DescartesQuad q = g.descartes(10);
    EXPECT_EQ(dual(dual(q)), q);
    EXPECT_EQ(duality_form(q), 0);
    EXPECT_TRUE(check_descartes(dual(q)));
    DescartesQuad bent = q;
    bent[static_cast<std::size_t>(g.range(0, 3))] += g.range(1, 5);
    EXPECT_EQ(duality_form(bent) == 0, check_descartes(bent));
  }
}

TEST(Words, FigureExamples) {
  EXPECT_EQ(apply_word(parse_word("D3 D3"), Q(4, 1, 1, 0)).quad, Q(25, 9, 4, 0));
  EXPECT_EQ(apply_word(parse_word("D3 D3 D2"), Q(4, 1, 1, 0)).quad, Q(64, 25, 9, 0));
  EXPECT_THROW(apply_word(parse_word("D1"), Q(1, 4, 1, 0)), Error);
  EXPECT_THROW(parse_word("D5"), Error);
  EXPECT_EQ(to_string(parse_word("D3 D3 D2")), "D3 D3 D2");
}

TEST(Words, SquaresOfGeneratorsAreIdentityForS) {
  for (Letter l : {Letter::S1, Letter::S2, Letter::S3, Letter::S4}) {
    IMat4 m = word_matrix({l, l});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(m[i][j], i == j ? 1 : 0);
  }
}

// Random words from (-1,2,2,3); D-letters are given the sorted quadruple.
TEST(Words, RandomWordsStayDescartesAndIntegral) {
  gen::Gen g(42);
  for (int n = 0; n < 10000; ++n) {
    DescartesQuad q = Q(-1, 2, 2, 3);
    int len = static_cast<int>(g.range(1, 12));
    for (int s = 0; s < len; ++s) {
      Letter l = static_cast<Letter>(g.range(0, 7));
      if (is_d_letter(l)) q = q.sorted_desc();
      q = apply_word({l}, q).quad;
    }
    ASSERT_TRUE(check_descartes(q)) << to_string(q);
    ASSERT_TRUE(q.is_integral());
  }
}

TEST(WordEigen, GoldenAndDiamond) {
  auto golden_spec = word_eigen(parse_word("D3 D3"));
  ASSERT_EQ(golden_spec.size(), 4u);
  EXPECT_EQ(*golden_spec[0].exact, sq(golden()));
  EXPECT_EQ(*golden_spec[3].exact, sq(golden().conj()));
  EXPECT_EQ(*golden_spec[1].exact, QuadraticSurd(1));
  EXPECT_EQ(*golden_spec[2].exact, QuadraticSurd(1));
  auto diamond_spec = word_eigen(parse_word("D3 D3 D2"));
  ASSERT_EQ(diamond_spec.size(), 4u);
  EXPECT_EQ(*diamond_spec[0].exact, sq(diamond()));
  EXPECT_NEAR(diamond_spec[0].value.real(), std::pow(2 + std::sqrt(3.0), 2), 1e-12);
  EXPECT_NEAR(diamond_spec[3].value.real(), std::pow(2 - std::sqrt(3.0), 2), 1e-12);
}

// Every exact eigenvalue is checked by direct determinant evaluation.
TEST(WordEigen, ExactRootsAnnihilateTheCharacteristicDeterminant) {
  gen::Gen g(43);
  for (int n = 0; n < 200; ++n) {
    GeneratorWord w;
    int len = static_cast<int>(g.range(1, 6));
    for (int s = 0; s < len; ++s) w.push_back(static_cast<Letter>(g.range(0, 7)));
    IMat4 m = word_matrix(w);
    for (const auto& e : word_eigen(w)) {
      if (!e.exact) continue;
      EXPECT_EQ(oracle::char_value(m, *e.exact), QuadraticSurd(0)) << to_string(w);
    }
  }
}

TEST(ExtendReflect, LineTwinIsTheHalfCircle) {
  ExtendedQuad e = strip_quad();
  EXPECT_EQ(e.quad(), Q(0, 1, 1, 0));
  ExtendedQuad r = extend_reflect(e, 0);
  EXPECT_EQ(r.k[0], 4);
  GeneralizedCircle c = r.circle(0);
  EXPECT_EQ(c.center(), GaussianRational(Rational(1, 2), Rational(1, 8)));
  EXPECT_EQ(c.radius_sq(), Rational(1, 64));
}

TEST(ExtendReflect, FordRootAxisTwin) {
  ExtendedQuad r = extend_reflect(ford_root_extended(), 3);
  EXPECT_EQ(r.k[3], 12);
  EXPECT_EQ(r.circle(3).center(), GaussianRational(Rational(1, 2), Rational(7, 24)));
  EXPECT_EQ(extend_reflect(r, 3), ford_root_extended());
}

TEST(ExtendReflect, OuterTwinOfTheFlagshipRoot) {
  ExtendedQuad e = realize(Q(-1, 2, 2, 3));
  int outer = static_cast<int>(std::find(e.k.begin(), e.k.end(), Rational(-1)) - e.k.begin());
  ExtendedQuad r = extend_reflect(e, outer);
  EXPECT_EQ(r.k[outer], 15);
  for (int i = 0; i < 4; ++i) {
    if (i != outer) {
      EXPECT_EQ(tangency(r.circle(outer), r.circle(i)), TangencyKind::External);
    }
  }
}

TEST(ExtendReflect, RandomWalksStayConsistent) {
  gen::Gen g(44);
  for (const auto& root : {Q(-1, 2, 2, 3), Q(-2, 3, 6, 7), Q(4, 1, 1, 0), Q(-6, 11, 14, 15)}) {
    ExtendedQuad e = realize(root, root[3] == 0 ? 2 : 1);
    for (int s = 0; s < 40; ++s) {
      int i = static_cast<int>(g.range(0, 3));
      ExtendedQuad next = e;
      extend_reflect_inplace(next, i);
      if (std::count(next.k.begin(), next.k.end(), Rational(0)) > 1) continue;
      ASSERT_NO_THROW(next.validate()) << to_string(next.quad());
      e = next;
    }
  }
}

TEST(ExtendReflect, CorruptedCentreRejected) {
  ExtendedQuad e = ford_root_extended();
  e.kz[0] += GaussianRational(Rational(1, 3));
  EXPECT_THROW(e.validate(), Error);
}

TEST(Realize, PlacesFlagshipQuadruples) {
  for (const auto& q : {Q(-1, 2, 2, 3), Q(-2, 3, 6, 7), Q(-3, 5, 8, 8), Q(4, 1, 1, 0)}) {
    ExtendedQuad e = realize(q, q[3] == 0 ? 2 : 1);
    EXPECT_EQ(e.quad().sorted_desc(), q.sorted_desc());
  }
  EXPECT_THROW(realize(Q(1, 2, 2, 3)), Error);
}

TEST(HomogeneousIdentity, Examples) {
  EXPECT_TRUE(homogeneous_identity(1, 1, -2));
  EXPECT_TRUE(homogeneous_identity(3, 5, -8));
  EXPECT_TRUE(homogeneous_identity(1, 2, -3));
  EXPECT_THROW(homogeneous_identity(1, 1, 1), Error);
}

TEST(HomogeneousIdentity, RandomZeroSumTriples) {
  gen::Gen g(45);
  for (int n = 0; n < 10000; ++n) {
    long long a = g.range(-100000, 100000), b = g.range(-100000, 100000);
    ASSERT_TRUE(homogeneous_identity(a, b, -a - b)) << a << "," << b;
  }
}
