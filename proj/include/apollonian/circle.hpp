#pragma once

// Points on the Riemann sphere and generalized circles (circles or lines),
// kept exact through their Hermitian form
//   H(z) = A|z|^2 + B conj(z) + conj(B) z + C.
// The oriented interior of a circle is the region H < 0.

#include "apollonian/numerics.hpp"

#include <optional>
#include <string>

namespace apollonian {

class ExtendedPoint {
 public:
  ExtendedPoint() : z_(GaussianRational()) {}
  ExtendedPoint(GaussianRational z) : z_(std::move(z)) {}  // NOLINT: finite points convert implicitly
  ExtendedPoint(Rational r) : z_(GaussianRational(std::move(r))) {}  // NOLINT
  ExtendedPoint(long long r) : z_(GaussianRational(r)) {}  // NOLINT

  static ExtendedPoint infinity() {
    ExtendedPoint p;
    p.z_.reset();
    return p;
  }

  bool is_infinity() const { return !z_.has_value(); }
  const GaussianRational& value() const {
    if (!z_) throw Error(ErrorKind::Precondition, "point at infinity has no finite value");
    return *z_;
  }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.z_ == *b.z_;
  }
  friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }

 private:
  std::optional<GaussianRational> z_;
};

inline std::string to_string(const ExtendedPoint& p) {
  return p.is_infinity() ? std::string("inf") : to_string(p.value());
}

struct HermitianForm {
  Rational A;
  GaussianRational B;
  Rational C;

  Rational eval(const GaussianRational& z) const {
    // B conj(z) + conj(B) z = 2 Re(B conj(z))
    GaussianRational t = B * z.conj();
    return A * z.norm() + 2 * t.re + C;
  }

  HermitianForm operator-() const { return {-A, -B, -C}; }

  /// Determinant |B|^2 - AC; positive for every real circle or line.
  Rational discriminant() const { return B.norm() - A * C; }
};

class GeneralizedCircle {
 public:
  enum class Kind { Circle, Line };

  /// orientation +1 bounds its disk; -1 encloses (interior is the outside).
  static GeneralizedCircle circle(GaussianRational center, Rational radius_sq, int orientation = 1) {
    if (radius_sq <= 0) throw Error(ErrorKind::Precondition, "radius_sq must be positive");
    if (orientation != 1 && orientation != -1) throw Error(ErrorKind::Precondition, "orientation must be +1 or -1");
    GeneralizedCircle c;
    c.kind_ = Kind::Circle;
    c.center_ = std::move(center);
    c.radius_sq_ = std::move(radius_sq);
    c.orientation_ = orientation;
    return c;
  }

  /// Line through p0 and p1; its interior is the half-plane to the left of p0 -> p1.
  static GeneralizedCircle line(GaussianRational p0, GaussianRational p1) {
    if (p0 == p1) throw Error(ErrorKind::Precondition, "line needs two distinct points");
    GeneralizedCircle c;
    c.kind_ = Kind::Line;
    c.p0_ = std::move(p0);
    c.p1_ = std::move(p1);
    return c;
  }

  static GeneralizedCircle real_axis() { return line(GaussianRational(0), GaussianRational(1)); }

  static GeneralizedCircle from_hermitian(const HermitianForm& h) {
    if (h.discriminant() <= 0) throw Error(ErrorKind::DegenerateConfiguration, "form has no real locus");
    if (h.A == 0) {
      Rational bb = h.B.norm();
      GaussianRational p0 = -(h.B * GaussianRational(h.C / (2 * bb)));
      return line(p0, p0 + GaussianRational::i() * h.B);
    }
    int orient = h.A > 0 ? 1 : -1;
    HermitianForm n = orient > 0 ? h : -h;
    GaussianRational center = -(n.B / GaussianRational(n.A));
    Rational rsq = center.norm() - n.C / n.A;
    return circle(center, rsq, orient);
  }

  Kind kind() const { return kind_; }
  bool is_line() const { return kind_ == Kind::Line; }
  bool is_circle() const { return kind_ == Kind::Circle; }

  const GaussianRational& center() const { require(Kind::Circle); return center_; }
  const Rational& radius_sq() const { require(Kind::Circle); return radius_sq_; }
  int orientation() const { return orientation_; }
  const GaussianRational& p0() const { require(Kind::Line); return p0_; }
  const GaussianRational& p1() const { require(Kind::Line); return p1_; }

  HermitianForm hermitian() const {
    if (is_line()) {
      GaussianRational B = -(GaussianRational::i() * (p1_ - p0_));
      GaussianRational t = B.conj() * p0_;
      return {Rational(0), B, Rational(-2 * t.re)};
    }
    HermitianForm h{Rational(1), -center_, center_.norm() - radius_sq_};
    return orientation_ > 0 ? h : -h;
  }

  bool contains(const GaussianRational& z) const { return hermitian().eval(z) == 0; }

  bool contains(const ExtendedPoint& p) const {
    if (p.is_infinity()) return is_line();
    return contains(p.value());
  }

  /// Same oriented circle (forms agree up to a positive factor).
  bool same_oriented(const GeneralizedCircle& o) const { return proportional(o, true); }
  /// Same point set, orientation ignored.
  bool same_set(const GeneralizedCircle& o) const { return proportional(o, false); }

  GeneralizedCircle reversed() const {
    if (is_line()) return line(p1_, p0_);
    return circle(center_, radius_sq_, -orientation_);
  }

  friend bool operator==(const GeneralizedCircle& a, const GeneralizedCircle& b) { return a.same_oriented(b); }
  friend bool operator!=(const GeneralizedCircle& a, const GeneralizedCircle& b) { return !(a == b); }

 private:
  void require(Kind k) const {
    if (kind_ != k)
      throw Error(ErrorKind::Precondition, k == Kind::Circle ? "not a circle" : "not a line");
  }

  bool proportional(const GeneralizedCircle& o, bool positive_only) const {
    HermitianForm a = hermitian();
    HermitianForm b = o.hermitian();
    // find a nonzero real coordinate pair to fix the ratio
    Rational ra, rb;
    if (a.A != 0 || b.A != 0) { ra = a.A; rb = b.A; }
    else if (a.B.re != 0 || b.B.re != 0) { ra = a.B.re; rb = b.B.re; }
    else { ra = a.B.im; rb = b.B.im; }
    if (ra == 0 || rb == 0) return false;
    if (positive_only && (ra > 0) != (rb > 0)) return false;
    // a * rb == b * ra componentwise
    return a.A * rb == b.A * ra && a.B * GaussianRational(rb) == b.B * GaussianRational(ra) &&
           a.C * rb == b.C * ra;
  }

  Kind kind_ = Kind::Circle;
  GaussianRational center_;
  Rational radius_sq_{1};
  int orientation_ = 1;
  GaussianRational p0_;
  GaussianRational p1_;
};

inline std::string to_string(const GeneralizedCircle& c) {
  if (c.is_line()) return "line(" + to_string(c.p0()) + " -> " + to_string(c.p1()) + ")";
  return "circle(center " + to_string(c.center()) + ", r^2 " + to_string(c.radius_sq()) +
         (c.orientation() < 0 ? ", enclosing)" : ")");
}

}  // namespace apollonian
