#pragma once

// Exact predicates and constructions on generalized circles. The only
// floating-point routine here is descartes_from_three_points.

#include "apollonian/mobius.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace apollonian {

enum class TangencyKind { External, Internal, Disjoint, Nested, Intersecting };

inline const char* to_string(TangencyKind k) {
  switch (k) {
    case TangencyKind::External: return "external";
    case TangencyKind::Internal: return "internal";
    case TangencyKind::Disjoint: return "disjoint";
    case TangencyKind::Nested: return "nested";
    case TangencyKind::Intersecting: return "intersecting";
  }
  return "?";
}

inline bool is_tangent(TangencyKind k) { return k == TangencyKind::External || k == TangencyKind::Internal; }

/// orientation / radius; a surd unless radius_sq is a rational square.
inline QuadraticSurd signed_curvature(const GeneralizedCircle& c) {
  if (c.is_line()) return QuadraticSurd(0);
  // 1/sqrt(r2) = sqrt(1/r2)
  QuadraticSurd k = QuadraticSurd::sqrt(Rational(1) / c.radius_sq());
  return c.orientation() > 0 ? k : -k;
}

namespace detail {
/// Signed distance numerator and squared scale for a point against a line:
/// the distance squared is h^2 / (4 |B|^2).
inline Rational line_dist_sq(const GeneralizedCircle& line, const GaussianRational& z) {
  HermitianForm h = line.hermitian();
  Rational v = h.eval(z);
  return v * v / (4 * h.B.norm());
}

inline bool parallel(const GeneralizedCircle& l1, const GeneralizedCircle& l2) {
  GaussianRational u = l1.p1() - l1.p0();
  GaussianRational v = l2.p1() - l2.p0();
  return (u * v.conj()).im == 0;
}
}  // namespace detail

/// Exact classification from squared quantities. Two distinct parallel lines
/// count as externally tangent (they touch at infinity).
inline TangencyKind tangency(const GeneralizedCircle& c1, const GeneralizedCircle& c2) {
  if (c1.same_set(c2)) throw Error(ErrorKind::CoincidentCircles, "identical circles have no tangency type");
  if (c1.is_line() && c2.is_line())
    return detail::parallel(c1, c2) ? TangencyKind::External : TangencyKind::Intersecting;
  if (c1.is_line() || c2.is_line()) {
    const auto& line = c1.is_line() ? c1 : c2;
    const auto& circ = c1.is_line() ? c2 : c1;
    Rational d2 = detail::line_dist_sq(line, circ.center());
    if (d2 == circ.radius_sq()) return TangencyKind::External;
    return d2 > circ.radius_sq() ? TangencyKind::Disjoint : TangencyKind::Intersecting;
  }
  Rational d2 = (c1.center() - c2.center()).norm();
  const Rational& a = c1.radius_sq();
  const Rational& b = c2.radius_sq();
  // d^2 = (r1 +- r2)^2  <=>  e = +-2 r1 r2  with  e = d^2 - r1^2 - r2^2
  Rational e = d2 - a - b;
  Rational lhs = e * e;
  Rational rhs = 4 * a * b;
  if (e > 0) {
    if (lhs == rhs) return TangencyKind::External;
    return lhs > rhs ? TangencyKind::Disjoint : TangencyKind::Intersecting;
  }
  if (e < 0) {
    if (lhs == rhs) return TangencyKind::Internal;
    return lhs > rhs ? TangencyKind::Nested : TangencyKind::Intersecting;
  }
  return TangencyKind::Intersecting;
}

inline GaussianRational tangency_point(const GeneralizedCircle& c1, const GeneralizedCircle& c2) {
  if (!is_tangent(tangency(c1, c2))) throw Error(ErrorKind::NotTangent, to_string(c1) + " and " + to_string(c2));
  if (c1.is_line() && c2.is_line())
    throw Error(ErrorKind::DegenerateConfiguration, "parallel lines touch only at infinity");
  if (c1.is_line() || c2.is_line()) {
    const auto& line = c1.is_line() ? c1 : c2;
    const auto& z = (c1.is_line() ? c2 : c1).center();
    // foot of the perpendicular from the centre
    GaussianRational v = line.p1() - line.p0();
    Rational t = ((z - line.p0()) * v.conj()).re / v.norm();
    return line.p0() + v * GaussianRational(t);
  }
  const auto& z1 = c1.center();
  const auto& z2 = c2.center();
  Rational d2 = (z2 - z1).norm();
  Rational t = (d2 + c1.radius_sq() - c2.radius_sq()) / (2 * d2);
  return z1 + (z2 - z1) * GaussianRational(t);
}

/// Circle through three distinct points, or the line through them when collinear.
inline GeneralizedCircle circumcircle(const GaussianRational& p1, const GaussianRational& p2,
                                      const GaussianRational& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3) throw Error(ErrorKind::DegenerateTriple, "circumcircle needs distinct points");
  GaussianRational u = p2 - p1;
  GaussianRational v = p3 - p1;
  Rational cross = (u.conj() * v).im;
  if (cross == 0) return GeneralizedCircle::line(p1, p2);
  // centre relative to p1 from the two perpendicular-bisector equations
  Rational uu = u.norm();
  Rational vv = v.norm();
  Rational x = (v.im * uu - u.im * vv) / (2 * cross);
  Rational y = (u.re * vv - v.re * uu) / (2 * cross);
  GaussianRational rel(x, y);
  return GeneralizedCircle::circle(p1 + rel, rel.norm());
}

/// The inversion (or line reflection) as an anti-conformal map.
inline MobiusMap mirror_map(const GeneralizedCircle& mirror) {
  if (mirror.is_line()) {
    GaussianRational v = mirror.p1() - mirror.p0();
    const auto& p = mirror.p0();
    return MobiusMap(v, v.conj() * p - v * p.conj(), GaussianRational(0), v.conj(), true);
  }
  const auto& z0 = mirror.center();
  return MobiusMap(z0, GaussianRational(mirror.radius_sq() - z0.norm()), GaussianRational(1), -z0.conj(), true);
}

inline ExtendedPoint invert(const GeneralizedCircle& mirror, const ExtendedPoint& z) {
  return mirror_map(mirror).apply(z);
}

inline GeneralizedCircle invert(const GeneralizedCircle& mirror, const GeneralizedCircle& obj) {
  return apply_circle(mirror_map(mirror), obj);
}

// ---------------------------------------------------------------------------
// Numeric construction from three points

struct NumericCircle {
  std::complex<double> center;
  double radius = std::numeric_limits<double>::infinity();  // infinite for a line
  double curvature = 0;                                      // signed
};

struct ThreePointDescartes {
  /// circles[k] passes through the two input points other than the (k+1)-th.
  std::array<NumericCircle, 3> circles;
  /// Both fourth circles: curvature s + 2 sqrt(q) first, then s - 2 sqrt(q).
  std::array<NumericCircle, 2> fourth;
  /// Relative Descartes residual |2 sum k^2 - (sum k)^2| / (sum |k|)^2 for each choice.
  std::array<double, 2> residual{};
  /// Two of the points are antipodal on their circumcircle, so one member is a
  /// line (infinite radius, centre field holds a point on it).
  bool half_plane = false;

  std::array<double, 4> curvatures(int which) const {
    return {circles[0].curvature, circles[1].curvature, circles[2].curvature, fourth[which].curvature};
  }
};

namespace detail {
inline std::complex<double> line_intersection(std::complex<double> p, std::complex<double> dp, std::complex<double> q,
                                              std::complex<double> dq, bool& parallel) {
  double den = dp.real() * dq.imag() - dp.imag() * dq.real();
  double scale = std::abs(dp) * std::abs(dq);
  parallel = std::abs(den) <= 1e-14 * scale;
  if (parallel) return {};
  std::complex<double> w = q - p;
  double t = (w.real() * dq.imag() - w.imag() * dq.real()) / den;
  return p + t * dp;
}

inline double descartes_residual(const std::array<double, 4>& k) {
  double sum = 0, sumsq = 0, scale = 0;
  for (double x : k) {
    sum += x;
    sumsq += x * x;
    scale += std::abs(x);
  }
  return std::abs(2 * sumsq - sum * sum) / (scale * scale);
}
}  // namespace detail

/// Three mutually tangent circles touching pairwise at P1, P2, P3, plus both
/// fourth circles. The tangent lines to the circumcircle of the points meet at
/// the centres.
inline ThreePointDescartes descartes_from_three_points(std::complex<double> P1, std::complex<double> P2,
                                                       std::complex<double> P3) {
  using C = std::complex<double>;
  const std::array<C, 3> P{P1, P2, P3};
  double cross = std::imag(std::conj(P2 - P1) * (P3 - P1));
  double span = std::max({std::abs(P2 - P1), std::abs(P3 - P1), std::abs(P3 - P2)});
  if (span == 0 || std::abs(cross) <= 1e-14 * span * span)
    throw Error(ErrorKind::DegenerateConfiguration, "collinear tangency points");

  double den = 2 * cross;
  C u = P2 - P1, v = P3 - P1;
  C O = P1 + C((v.imag() * std::norm(u) - u.imag() * std::norm(v)) / den,
               (u.real() * std::norm(v) - v.real() * std::norm(u)) / den);

  std::array<C, 3> tangent{};
  for (int k = 0; k < 3; ++k) tangent[k] = C(0, 1) * (P[k] - O);

  // A pair of parallel tangents means the two points are antipodal and that
  // member is the line through them (curvature 0). At most one can be a line.
  std::array<C, 3> centre{};
  std::array<double, 3> radius{};
  int line = -1;
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    bool par = false;
    centre[k] = detail::line_intersection(P[i], tangent[i], P[j], tangent[j], par);
    if (par) {
      line = k;
      radius[k] = std::numeric_limits<double>::infinity();
    } else {
      radius[k] = std::abs(centre[k] - P[i]);
    }
  }

  ThreePointDescartes out;
  out.half_plane = line >= 0;
  std::array<double, 3> kappa{};
  for (int k = 0; k < 3; ++k) {
    if (k == line) {
      out.circles[k] = {P[(k + 1) % 3], radius[k], 0.0};
      continue;
    }
    // enclosing when its neighbours touch it from inside
    int i = (k + 1) % 3 == line ? (k + 2) % 3 : (k + 1) % 3;
    double dist = std::abs(centre[k] - centre[i]);
    bool internal = std::abs(dist - std::abs(radius[k] - radius[i])) < std::abs(dist - (radius[k] + radius[i]));
    bool encloses = internal && radius[k] > radius[i];
    kappa[k] = (encloses ? -1.0 : 1.0) / radius[k];
    out.circles[k] = {centre[k], radius[k], kappa[k]};
  }

  double s = kappa[0] + kappa[1] + kappa[2];
  double q = kappa[0] * kappa[1] + kappa[1] * kappa[2] + kappa[2] * kappa[0];
  double root = 2 * std::sqrt(std::max(0.0, q));

  auto tangency_error = [&](C z4, double r4, double k4) {
    double err = 0;
    for (int k = 0; k < 3; ++k) {
      if (k == line) {
        C u = (P[(k + 2) % 3] - P[(k + 1) % 3]) / std::abs(P[(k + 2) % 3] - P[(k + 1) % 3]);
        err += std::abs(std::abs(std::imag(std::conj(u) * (z4 - P[(k + 1) % 3]))) - r4);
        continue;
      }
      double dist = std::abs(z4 - centre[k]);
      double want = (k4 < 0 || kappa[k] < 0) ? std::abs(r4 - radius[k]) : r4 + radius[k];
      err += std::abs(dist - want);
    }
    return err;
  };

  // candidate centres: the complex Descartes relation, or with a line present
  // the points at distance r4 from it that touch one finite member
  auto candidates = [&](double k4) {
    std::vector<C> zs;
    double r4 = 1.0 / std::abs(k4);
    if (line < 0) {
      C ks = kappa[0] * centre[0] + kappa[1] * centre[1] + kappa[2] * centre[2];
      C kq = kappa[0] * kappa[1] * centre[0] * centre[1] + kappa[1] * kappa[2] * centre[1] * centre[2] +
             kappa[2] * kappa[0] * centre[2] * centre[0];
      C croot = 2.0 * std::sqrt(kq);
      for (double sg : {1.0, -1.0}) zs.push_back((ks + sg * croot) / k4);
      return zs;
    }
    C a = P[(line + 1) % 3], u = (P[(line + 2) % 3] - a) / std::abs(P[(line + 2) % 3] - a);
    int m = (line + 1) % 3;
    C n = C(0, 1) * u;
    if (std::imag(std::conj(u) * (centre[m] - a)) < 0) n = -n;
    C w = a + r4 * n - centre[m];
    double b = std::real(std::conj(u) * w), c = std::norm(w) - (radius[m] + r4) * (radius[m] + r4);
    double disc = std::sqrt(std::max(0.0, b * b - c));
    for (double sg : {1.0, -1.0}) zs.push_back(a + r4 * n + (-b + sg * disc) * u);
    return zs;
  };

  const std::array<double, 2> k4{s + root, s - root};
  for (int w = 0; w < 2; ++w) {
    NumericCircle best{C(), std::numeric_limits<double>::infinity(), k4[w]};
    // a vanishing root is a line; leave it with infinite radius
    if (std::abs(k4[w]) > 1e-12 * std::abs(s)) {
      double best_err = std::numeric_limits<double>::infinity();
      double r4 = 1.0 / std::abs(k4[w]);
      for (C z4 : candidates(k4[w])) {
        double err = tangency_error(z4, r4, k4[w]);
        if (err < best_err) {
          best_err = err;
          best = {z4, r4, k4[w]};
        }
      }
    }
    out.fourth[w] = best;
    out.residual[w] = detail::descartes_residual(out.curvatures(w));
  }
  return out;
}

}  // namespace apollonian
