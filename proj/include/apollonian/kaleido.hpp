#pragma once

// Kaleidoscopic structure: symmetric partners of Ford configurations, the
// inward descent that keeps Delta fixed, and Pappus chains with their mirrors.

#include "apollonian/selfsim.hpp"

#include <optional>
#include <vector>

namespace apollonian {

/// The configuration (-ka, kb, kb, kc).
struct SymmetricQuad {
  BigInt ka, kb, kc;
  int eta = 1;

  BigInt delta() const { return kb - kc; }
  DescartesQuad quad() const { return {Rational(-ka), Rational(kb), Rational(kb), Rational(kc)}; }

  friend bool operator==(const SymmetricQuad& a, const SymmetricQuad& b) {
    return a.ka == b.ka && a.kb == b.kb && a.kc == b.kc && a.eta == b.eta;
  }
};

inline std::string to_string(const SymmetricQuad& s) {
  return "(-" + s.ka.str() + "," + s.kb.str() + "," + s.kb.str() + "," + s.kc.str() + ")";
}

namespace detail {
inline int eta_for(const BigInt& k0) { return k0 % 2 != 0 ? 1 : 2; }

inline BigInt exact_int(const Rational& r, const char* what) {
  if (!is_integer(r)) throw Error(ErrorKind::FormulaInconsistency, std::string(what) + " is not an integer");
  return numerator(r);
}
}  // namespace detail

/// Partner of a Ford triple (kc, kR, kL), computed from the dual form and from
/// the triple directly; the two must agree.
inline SymmetricQuad symmetric_partner_ford(const BigInt& kc, const BigInt& kR, const BigInt& kL) {
  if (!check_descartes(Rational(kc), Rational(kR), Rational(kL), Rational(0)))
    throw Error(ErrorKind::Precondition, "(" + kc.str() + "," + kR.str() + "," + kL.str() + ",0) is not a Descartes quadruple");
  DescartesQuad d = dual(DescartesQuad(Rational(kc), Rational(kR), Rational(kL), Rational(0)));
  Rational k0 = -d[0], k1 = d[1], k2 = d[2];
  BigInt k0i = detail::exact_int(k0, "kappa_0");
  int eta = detail::eta_for(k0i);
  Rational e(eta);

  // from the dual (-k0, k1, k2, k3)
  Rational a1 = e * k0, b1 = e / 2 * (k1 + k2), c1 = e * (2 * k1 - k0);
  // from the triple
  Rational a2 = e / 2 * Rational(kc - kR - kL), b2 = e / 2 * Rational(kc), c2 = e / 2 * Rational(kc - kR + 3 * kL);
  if (a1 != a2 || b1 != b2 || c1 != c2)
    throw Error(ErrorKind::FormulaInconsistency, "dual and triple formulas disagree");

  SymmetricQuad s{detail::exact_int(a1, "kappa_a"), detail::exact_int(b1, "kappa_b"), detail::exact_int(c1, "kappa_c"),
                  eta};
  if (!check_descartes(s.quad())) throw Error(ErrorKind::FormulaInconsistency, to_string(s) + " fails Descartes");
  return s;
}

/// Accepts either a dual quad (-k0, k1, k2, k3) or a Ford quad (kc, kR, kL, 0).
inline SymmetricQuad symmetric_partner(const DescartesQuad& q) {
  if (!check_descartes(q)) throw Error(ErrorKind::Precondition, to_string(q) + " is not a Descartes quadruple");
  if (!q.is_integral()) throw Error(ErrorKind::Precondition, "integral curvatures required");
  DescartesQuad ford = q;
  if (q[3] != 0) {
    if (q[0] >= 0) throw Error(ErrorKind::Precondition, "expected (kc,kR,kL,0) or a dual with a negative first entry");
    ford = dual(q);
  }
  if (ford[3] != 0) throw Error(ErrorKind::Precondition, to_string(q) + " is not dual to a Ford triple");
  return symmetric_partner_ford(numerator(ford[0]), numerator(ford[1]), numerator(ford[2]));
}

/// One level inward: the old outer circle is reflected to curvature
/// m = 2(2kb + kc) + ka and becomes the new outer circle; the new inner pair
/// is the larger root of 3a^2 - (6m + 2D) a - (m - D)^2 = 0 with kc = a - D.
inline SymmetricQuad symmetric_descend(const SymmetricQuad& s) {
  if (!check_descartes(s.quad())) throw Error(ErrorKind::Precondition, to_string(s) + " fails Descartes");
  BigInt D = s.delta();
  BigInt m = 2 * (2 * s.kb + s.kc) + s.ka;
  BigInt lin = 6 * m + 2 * D;
  BigInt disc = lin * lin + 12 * (m - D) * (m - D);
  BigInt root = isqrt(disc);
  if (root * root != disc) throw Error(ErrorKind::NoIntegerDescent, "discriminant " + disc.str() + " is not a square");
  BigInt num = lin + root;
  if (num % 6 != 0) throw Error(ErrorKind::NoIntegerDescent, "inner curvature is not an integer");
  BigInt a = num / 6;
  SymmetricQuad out{m, a, a - D, detail::eta_for(m)};
  if (!check_descartes(out.quad())) throw Error(ErrorKind::FormulaInconsistency, to_string(out) + " fails Descartes");
  return out;
}

inline std::vector<SymmetricQuad> symmetric_orbit(const SymmetricQuad& start, int levels) {
  std::vector<SymmetricQuad> out{start};
  for (int l = 0; l < levels; ++l) out.push_back(symmetric_descend(out.back()));
  return out;
}

struct ThreefoldRatio {
  QuadraticSurd k4, k4_bar, ratio;
};

/// Both fourth curvatures for three equal circles and their ratio -(2+sqrt3)^2.
inline ThreefoldRatio threefold_ratio(const Rational& k) {
  if (k <= 0) throw Error(ErrorKind::Precondition, "curvature must be positive");
  FourthSolution f = solve_fourth(k, k, k);
  return {f.k4, f.k4_bar, f.k4 / f.k4_bar};
}

// ---------------------------------------------------------------------------
// Pappus chains

struct PappusChain {
  GeneralizedCircle c1, c2;
  /// chain[k] is the k-th circle from the anchor; index 0 is the member
  /// nearest the image of infinity in the strip picture and may be a line.
  std::vector<GeneralizedCircle> chain;
  GeneralizedCircle mirror;
};

/// Sends the hosts' tangency point to infinity with T(z) = 1/(z - P), lays
/// equal circles along the strip between the two parallel images, and maps
/// everything back. Chain circles k = 0..n are returned.
inline PappusChain pappus_chain(const GeneralizedCircle& c1, const GeneralizedCircle& c2, int n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "chain length must be nonnegative");
  if (!is_tangent(tangency(c1, c2))) throw Error(ErrorKind::NotTangent, "Pappus hosts must be tangent");
  MobiusMap T;
  std::optional<GaussianRational> P;
  if (!(c1.is_line() && c2.is_line())) {
    P = tangency_point(c1, c2);
    T = MobiusMap(GaussianRational(0), GaussianRational(1), GaussianRational(1), -*P);
  }
  HermitianForm h1 = apply_circle(T, c1).hermitian();
  HermitianForm h2 = apply_circle(T, c2).hermitian();
  if (h1.A != 0 || h2.A != 0) throw Error(ErrorKind::DegenerateConfiguration, "hosts did not straighten");
  // rescale the second form so both share the normal B
  Rational lambda = h1.B.re != 0 ? h2.B.re / h1.B.re : h2.B.im / h1.B.im;
  Rational C1 = h1.C, C2 = h2.C / lambda;
  const GaussianRational& B = h1.B;
  Rational bb = B.norm();
  Rational Cm = (C1 + C2) / 2;
  Rational width = abs(C1 - C2);
  GaussianRational m0 = B * GaussianRational(-Cm / (2 * bb));
  GaussianRational step = GaussianRational::i() * B * GaussianRational(width / (2 * bb));
  Rational rsq = width * width / (16 * bb);

  MobiusMap Tinv = T.inverse();
  auto member = [&](long long k) {
    GeneralizedCircle z = apply_circle(Tinv, GeneralizedCircle::circle(m0 + step * GaussianRational(k), rsq, 1));
    if (z.is_circle() && z.orientation() < 0) z = z.reversed();
    return z;
  };
  // Walk the side where the first finite member lies after P in (re, im) order,
  // so the axis and Ford(0/1) give the Ford circles of 1/n.
  if (P) {
    GeneralizedCircle probe = member(1);
    if (probe.is_circle()) {
      const GaussianRational c = probe.center();
      if (c.re < P->re || (c.re == P->re && c.im < P->im)) step = -step;
    }
  }
  PappusChain out{c1, c2, {}, apply_circle(Tinv, GeneralizedCircle::from_hermitian({Rational(0), B, Cm}))};
  if (out.mirror.is_circle() && out.mirror.orientation() < 0) out.mirror = out.mirror.reversed();
  for (int k = 0; k <= n; ++k) out.chain.push_back(member(k));
  return out;
}

}  // namespace apollonian
