#pragma once

// Independent reference computations. None of these reuse the algorithm
// they are checking: closure by exhaustive reflection of every quadruple,
// Ford circles straight from fractions, spectra by exact determinant
// evaluation, continued fractions by the naive reciprocal recursion.

#include "apollonian.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using namespace apollonian;

using CircleKey = std::tuple<Rational, Rational, Rational>;  // (k, Re kz, Im kz)

inline CircleKey key(const Rational& k, const GaussianRational& kz) { return {k, kz.re, kz.im}; }

/// Every circle reachable from the root by any sequence of reflections that
/// stays within the bound and never creates a second line.
inline std::set<CircleKey> closure(const ExtendedQuad& root, const Rational& bound) {
  using QuadKey = std::array<CircleKey, 4>;
  auto qkey = [](const ExtendedQuad& q) {
    QuadKey k{key(q.k[0], q.kz[0]), key(q.k[1], q.kz[1]), key(q.k[2], q.kz[2]), key(q.k[3], q.kz[3])};
    std::sort(k.begin(), k.end());
    return k;
  };
  std::set<CircleKey> circles;
  std::set<QuadKey> seen{qkey(root)};
  std::deque<ExtendedQuad> todo{root};
  for (int i = 0; i < 4; ++i) circles.insert(key(root.k[i], root.kz[i]));
  while (!todo.empty()) {
    ExtendedQuad q = todo.front();
    todo.pop_front();
    int lines = static_cast<int>(std::count(q.k.begin(), q.k.end(), Rational(0)));
    for (int i = 0; i < 4; ++i) {
      ExtendedQuad r = q;
      Rational s = 0, c = 0;
      GaussianRational z;
      for (int j = 0; j < 4; ++j)
        if (j != i) s += q.k[j], z += q.kz[j], c += q.cok[j];
      r.k[i] = 2 * s - q.k[i];
      r.kz[i] = GaussianRational(2) * z - q.kz[i];
      r.cok[i] = 2 * c - q.cok[i];
      if (r.k[i] > bound) continue;
      if (r.k[i] == 0 && lines - (q.k[i] == 0 ? 1 : 0) > 0) continue;
      if (!seen.insert(qkey(r)).second) continue;
      circles.insert(key(r.k[i], r.kz[i]));
      todo.push_back(r);
    }
  }
  return circles;
}

/// Ford circles p/q in [0,1] with q^2 <= bound, in unit-2 label coordinates.
inline std::set<CircleKey> ford_circles(long long bound) {
  std::set<CircleKey> out;
  for (long long q = 1; q * q <= bound; ++q)
    for (long long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) out.insert(key(Rational(q * q), GaussianRational(Rational(p * q), Rational(1, 2))));
  return out;
}

/// det(M - x I) for a 4x4 integer matrix and a surd x, by cofactor expansion.
inline QuadraticSurd char_value(const IMat4& m, const QuadraticSurd& x) {
  std::array<std::array<QuadraticSurd, 4>, 4> a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = QuadraticSurd(Rational(m[i][j])) - (i == j ? x : QuadraticSurd(0));
  auto det3 = [&](int skip_row, int skip_col) {
    std::array<int, 3> r{}, c{};
    for (int i = 0, n = 0; i < 4; ++i)
      if (i != skip_row) r[n++] = i;
    for (int j = 0, n = 0; j < 4; ++j)
      if (j != skip_col) c[n++] = j;
    auto e = [&](int i, int j) { return a[r[i]][c[j]]; };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  QuadraticSurd d(0);
  for (int j = 0; j < 4; ++j) {
    QuadraticSurd t = a[0][j] * det3(0, j);
    d = (j % 2 == 0) ? d + t : d - t;
  }
  return d;
}

/// First n partial quotients of x by repeated x -> 1/(x - floor x).
inline std::vector<BigInt> cf_terms(QuadraticSurd x, int n) {
  std::vector<BigInt> out;
  for (int i = 0; i < n; ++i) {
    BigInt a = x.floor();
    out.push_back(a);
    QuadraticSurd frac = x - QuadraticSurd(Rational(a));
    if (frac.is_rational() && frac.a() == 0) break;
    x = QuadraticSurd(1) / frac;
  }
  return out;
}

/// All 24 position orderings (with repeats) checked against the Lorentz form.
inline std::vector<std::array<BigInt, 4>> lorentz_orderings(const std::array<BigInt, 4>& k) {
  std::vector<std::array<BigInt, 4>> out;
  std::array<int, 4> idx{0, 1, 2, 3};
  do {
    const BigInt &a = k[idx[0]], &b = k[idx[1]], &c = k[idx[2]], &d = k[idx[3]];
    BigInt x = a - b - c - d, y = 2 * d, z = b - c, t = a + b + 2 * c + d;
    if (x * x + y * y + z * z == t * t) {
      std::array<BigInt, 4> o{a, b, c, d};
      if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

/// A rational point on a circle with rational radius (t parametrizes it).
inline GaussianRational point_on(const GeneralizedCircle& c, const Rational& t) {
  if (c.is_line()) return c.p0() + (c.p1() - c.p0()) * GaussianRational(t);
  auto r = exact_sqrt(c.radius_sq());
  if (!r) throw Error(ErrorKind::Precondition, "oracle needs a rational radius");
  Rational den = 1 + t * t;
  return c.center() + GaussianRational(*r * (1 - t * t) / den, *r * 2 * t / den);
}

/// Every friendly triplet in [0,1] whose centre denominator is at most max_q.
inline std::vector<FriendlyTriplet> friendly_triplets(long long max_q) {
  std::vector<FriendlyTriplet> out;
  for (long long q = 2; q <= max_q; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      // neighbours from the extended Euclid identity, not the Stern-Brocot walk
      for (long long qL = 1; qL < q; ++qL) {
        long long qR = q - qL;
        for (long long pL = 0; pL <= qL; ++pL) {
          long long pR = p - pL;
          if (pR < 0 || pR > qR) continue;
          if (qL * pR - qR * pL != 1) continue;
          if (std::gcd(pL, qL) != 1 || std::gcd(pR, qR) != 1) continue;
          out.emplace_back(Fraction(pL, qL), Fraction(p, q), Fraction(pR, qR));
        }
      }
    }
  return out;
}

}  // namespace oracle
