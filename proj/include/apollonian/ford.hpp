#pragma once

// Farey fractions in [0,1], friendly triplets and Ford circles. Geometry is in
// unscaled Ford coordinates (radius 1/(2q^2)); curvature labels are q^2.

#include "apollonian/descartes.hpp"

#include <optional>
#include <string>
#include <utility>

namespace apollonian {

struct Fraction {
  BigInt p{0};
  BigInt q{1};

  Fraction() = default;
  Fraction(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q <= 0) throw Error(ErrorKind::InvalidTriplet, "denominator must be positive");
    if (p < 0) throw Error(ErrorKind::InvalidTriplet, "numerator must be nonnegative");
    if (gcd(p, q) != 1) throw Error(ErrorKind::InvalidTriplet, p.str() + "/" + q.str() + " is not reduced");
  }

  Rational value() const { return Rational(p, q); }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.p * b.q < b.p * a.q; }
};

inline std::string to_string(const Fraction& f) { return f.p.str() + "/" + f.q.str(); }

inline Fraction parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_bigint(text), 1);
  return Fraction(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

inline Fraction mediant(const Fraction& a, const Fraction& b) {
  BigInt p = a.p + b.p;
  BigInt q = a.q + b.q;
  BigInt g = gcd(p, q);
  return Fraction(p / g, q / g);
}

/// q_a p_b - q_b p_a
inline BigInt farey_det(const Fraction& a, const Fraction& b) { return a.q * b.p - b.q * a.p; }

inline bool is_neighbor(const Fraction& a, const Fraction& b) { return abs(farey_det(a, b)) == 1; }

struct FordCircle {
  Fraction fraction;
  GeneralizedCircle circle;
  BigInt label;  // q^2; the geometric curvature is twice this
};

inline FordCircle ford_circle(const Fraction& f) {
  Rational r(BigInt(1), 2 * f.q * f.q);
  return {f, GeneralizedCircle::circle(GaussianRational(f.value(), r), r * r, 1), f.q * f.q};
}

/// The real axis oriented so that its interior is the lower half-plane.
inline GeneralizedCircle ford_axis() { return GeneralizedCircle::line(GaussianRational(0), GaussianRational(-1)); }

struct FriendlyTriplet {
  Fraction left, center, right;

  FriendlyTriplet() = default;
  FriendlyTriplet(Fraction l, Fraction c, Fraction r) : left(std::move(l)), center(std::move(c)), right(std::move(r)) {
    if (!(left < right)) throw Error(ErrorKind::InvalidTriplet, "left must be smaller than right");
    if (!is_neighbor(left, right) || !is_neighbor(left, center) || !is_neighbor(center, right))
      throw Error(ErrorKind::InvalidTriplet, to_string(left) + "," + to_string(center) + "," + to_string(right) +
                                                 " are not pairwise Farey neighbours");
    if (mediant(left, right) != center)
      throw Error(ErrorKind::InvalidTriplet, to_string(center) + " is not the mediant of its neighbours");
  }

  static FriendlyTriplet root() { return {Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)}; }

  friend bool operator==(const FriendlyTriplet& a, const FriendlyTriplet& b) {
    return a.left == b.left && a.center == b.center && a.right == b.right;
  }
};

inline std::string to_string(const FriendlyTriplet& t) {
  return to_string(t.left) + "," + to_string(t.center) + "," + to_string(t.right);
}

inline FriendlyTriplet parse_triplet(std::string_view text) {
  auto c1 = text.find(',');
  auto c2 = c1 == text.npos ? text.npos : text.find(',', c1 + 1);
  if (c2 == text.npos || text.find(',', c2 + 1) != text.npos)
    throw Error(ErrorKind::Parse, "triplet must be 'pL/qL,pc/qc,pR/qR'");
  return {parse_fraction(text.substr(0, c1)), parse_fraction(text.substr(c1 + 1, c2 - c1 - 1)),
          parse_fraction(text.substr(c2 + 1))};
}

/// (q_c^2, q_R^2, q_L^2, 0)
inline DescartesQuad triplet_to_quad(const FriendlyTriplet& t) {
  return {Rational(t.center.q * t.center.q), Rational(t.right.q * t.right.q), Rational(t.left.q * t.left.q), Rational(0)};
}

namespace detail {
inline void ford_coords(const Fraction& f, Rational& k, GaussianRational& kz, Rational& cok) {
  k = Rational(f.q * f.q);
  kz = GaussianRational(Rational(f.p * f.q), Rational(1, 2));
  cok = Rational(f.p * f.p);
}
}  // namespace detail

/// The same quadruple with exact Ford centres, in unit-2 labels.
inline ExtendedQuad triplet_to_extended(const FriendlyTriplet& t) {
  ExtendedQuad e;
  e.unit = 2;
  detail::ford_coords(t.center, e.k[0], e.kz[0], e.cok[0]);
  detail::ford_coords(t.right, e.k[1], e.kz[1], e.cok[1]);
  detail::ford_coords(t.left, e.k[2], e.kz[2], e.cok[2]);
  e.k[3] = 0;
  e.kz[3] = GaussianRational(Rational(0), Rational(-1, 2));
  e.cok[3] = 0;
  e.validate();
  return e;
}

/// L/R path from 1/2 down the Stern-Brocot tree restricted to (0,1).
inline std::string stern_brocot_path(const Fraction& f) {
  if (f.value() <= 0 || f.value() >= 1) throw Error(ErrorKind::Precondition, "path defined for 0 < f < 1");
  Fraction lo(0, 1), hi(1, 1);
  std::string path;
  for (Fraction m = mediant(lo, hi); m != f; m = mediant(lo, hi)) {
    if (f < m) {
      path += 'L';
      hi = m;
    } else {
      path += 'R';
      lo = m;
    }
  }
  return path;
}

/// The two Farey neighbours with smaller denominators whose mediant is f.
inline std::optional<std::pair<Fraction, Fraction>> parents(const Fraction& f) {
  if (f.value() < 0 || f.value() > 1) throw Error(ErrorKind::Precondition, "parents defined on [0,1]");
  if (f.q == 1) return std::nullopt;
  Fraction lo(0, 1), hi(1, 1);
  for (Fraction m = mediant(lo, hi); m != f; m = mediant(lo, hi)) (f < m ? hi : lo) = m;
  return std::make_pair(lo, hi);
}

}  // namespace apollonian
