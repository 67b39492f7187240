#pragma once

// Self-similar hierarchies of the Ford gasket: the integer recursion matrix
// built from a target friendly triplet, its scaling surd, boundary maps that
// carry the real axis onto Ford circles, and conjugation to other frames.

#include "apollonian/ford.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace apollonian {

struct IMat2 {
  BigInt a, b, c, d;

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  friend IMat2 operator*(const IMat2& x, const IMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const IMat2& x, const IMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  MobiusMap mobius() const {
    return MobiusMap(Rational(a), Rational(b), Rational(c), Rational(d));
  }
};

inline std::string to_string(const IMat2& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

enum class ParityClass { Conserving, Alternating };

inline const char* to_string(ParityClass p) { return p == ParityClass::Conserving ? "conserving" : "alternating"; }

struct HierarchyMap {
  FriendlyTriplet target;
  IMat2 matrix;
  BigInt n_star;
  /// |trace| <= 2: identity or parabolic; no scaling data.
  bool degenerate = false;
  std::optional<QuadraticSurd> zeta;
  std::optional<PeriodicCF> cf;
  /// Parity of q_c is constant along the orbit of the root (c even).
  bool parity_conserving = false;
};

/// (p, q) -> (a p + b q, c p + d q); determinant one keeps the result reduced.
inline Fraction apply_fraction(const IMat2& m, const Fraction& f) {
  BigInt p = m.a * f.p + m.b * f.q;
  BigInt q = m.c * f.p + m.d * f.q;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Fraction(p, q);
}

inline FriendlyTriplet apply_triplet(const IMat2& m, const FriendlyTriplet& t) {
  return {apply_fraction(m, t.left), apply_fraction(m, t.center), apply_fraction(m, t.right)};
}

struct Scaling {
  QuadraticSurd zeta;
  BigInt n_star;
  PeriodicCF cf;
};

inline Scaling scaling(const IMat2& m) {
  BigInt tr = m.trace();
  if (abs(tr) <= 2) throw Error(ErrorKind::NonHyperbolic, "trace " + tr.str() + " has |trace| <= 2");
  if (m.det() != 1) throw Error(ErrorKind::Precondition, "recursion matrix must have determinant 1");
  QuadraticSurd z = surd_roots(tr, 1).first;
  return {z, tr - 2, cf_expand(z)};
}

inline Scaling scaling(const HierarchyMap& h) { return scaling(h.matrix); }

/// F* sending the root (0/1, 1/2, 1/1) onto the target triplet.
inline HierarchyMap build_fstar(const FriendlyTriplet& target) {
  HierarchyMap h;
  h.target = target;
  const auto& L = target.left;
  const auto& R = target.right;
  h.matrix = {R.p - L.p, L.p, R.q - L.q, L.q};
  if (h.matrix.det() != 1)
    throw Error(ErrorKind::InvalidTriplet, "target " + to_string(target) + " gives determinant " + h.matrix.det().str());
  h.n_star = h.matrix.trace() - 2;
  h.degenerate = abs(h.matrix.trace()) <= 2;
  h.parity_conserving = h.matrix.c % 2 == 0;
  if (!h.degenerate) {
    Scaling s = scaling(h.matrix);
    h.zeta = s.zeta;
    h.cf = s.cf;
  }
  return h;
}

/// start followed by `levels` successive images.
inline std::vector<FriendlyTriplet> iterate(const HierarchyMap& h, const FriendlyTriplet& start, int levels) {
  std::vector<FriendlyTriplet> out{start};
  for (int l = 0; l < levels; ++l) out.push_back(apply_triplet(h.matrix, out.back()));
  return out;
}

inline BigInt center_label(const FriendlyTriplet& t) { return t.center.q * t.center.q; }

// ---------------------------------------------------------------------------
// Boundary maps and mirrors

/// Inversion circle that maps `line` onto the circle `c` (c may touch but not cross
/// the line). Its centre is the point of c farthest from the line.
inline GeneralizedCircle mirror_between(const GeneralizedCircle& line, const GeneralizedCircle& c) {
  if (!line.is_line() || !c.is_circle()) throw Error(ErrorKind::Precondition, "mirror_between(line, circle)");
  auto r = exact_sqrt(c.radius_sq());
  GaussianRational v = line.p1() - line.p0();
  auto len = exact_sqrt(v.norm());
  if (!r || !len) throw Error(ErrorKind::NonRealizable, "mirror centre is irrational");
  GaussianRational n = GaussianRational::i() * v / GaussianRational(*len);
  Rational side = (n.conj() * (c.center() - line.p0())).re;
  if (side < 0) {
    n = -n;
    side = -side;
  }
  if (side < *r) throw Error(ErrorKind::Precondition, "circle crosses the line");
  GaussianRational o = c.center() + n * GaussianRational(*r);
  Rational dist = side + *r;
  return GeneralizedCircle::circle(o, 2 * *r * dist, 1);
}

/// (x, y, r) -> (x, 2y, 2r); relates the exact mirror to the drawn one for
/// circles measured with radius 1/q^2 instead of 1/(2q^2).
inline GeneralizedCircle figure_frame(const GeneralizedCircle& m) {
  return GeneralizedCircle::circle(GaussianRational(m.center().re, 2 * m.center().im), 4 * m.radius_sq(),
                                   m.orientation());
}

struct BoundaryMap {
  MobiusMap map;
  GeneralizedCircle mirror;         // exact: inversion in it carries the axis onto the Ford circle
  GeneralizedCircle figure_mirror;  // the same mirror with doubled height and radius
};

/// Parabolic map taking the real axis onto the Ford circle of p/q:
/// [[1 - i pq, i p^2], [-i q^2, 1 + i pq]].
inline BoundaryMap boundary_map(const Fraction& f) {
  const GaussianRational I = GaussianRational::i();
  Rational pq(f.p * f.q), pp(f.p * f.p), qq(f.q * f.q);
  MobiusMap m(GaussianRational(1) - I * GaussianRational(pq), I * GaussianRational(pp), -(I * GaussianRational(qq)),
              GaussianRational(1) + I * GaussianRational(pq));
  GeneralizedCircle mirror = mirror_between(GeneralizedCircle::real_axis(), ford_circle(f).circle);
  return {m, mirror, figure_frame(mirror)};
}

/// g(z) = f(q^2 (z - p/q)) / q^2 + p/q with f = z/(-iz+1), built by composition.
inline MobiusMap boundary_map_by_scaling(const Fraction& f) {
  Rational qq(f.q * f.q), pq(f.p * f.q);
  MobiusMap inner(GaussianRational(qq), GaussianRational(Rational(-pq)), GaussianRational(0), GaussianRational(1));
  MobiusMap base(GaussianRational(1), GaussianRational(0), -GaussianRational::i(), GaussianRational(1));
  MobiusMap outer(GaussianRational(1), GaussianRational(pq), GaussianRational(0), GaussianRational(qq));
  return outer * base * inner;
}

// ---------------------------------------------------------------------------
// Conjugation and re-basing

struct ConjugatedHierarchy {
  MobiusMap boundary;
  HierarchyMap core;
  /// B F* B^-1: the recursion acting in the frame B maps the axis frame into.
  MobiusMap map;
};

inline ConjugatedHierarchy conjugate(const MobiusMap& B, const HierarchyMap& core) {
  return {B, core, B * core.matrix.mobius() * B.inverse()};
}

/// Ford-root circles in unit-2 labels, in the order 1/2, 1/1, 0/1, axis.
inline ExtendedQuad ford_root_extended() { return triplet_to_extended(FriendlyTriplet::root()); }

/// Möbius map carrying a root configuration onto the Ford root. Position
/// `half` goes to the circle of 1/2 and `axis` to the real axis; by default
/// these are the largest and smallest curvatures. The remaining two go to 0/1
/// and 1/1 in whichever order keeps the map conformal. The map is fixed by
/// three tangency points and every image circle is checked.
inline MobiusMap rebase_root(const ExtendedQuad& root, int half = -1, int axis = -1) {
  root.validate();
  std::array<int, 4> ord{0, 1, 2, 3};
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return root.k[a] > root.k[b]; });
  if (half < 0) half = ord[0];
  if (axis < 0) axis = ord[3];
  if (half > 3 || axis > 3 || half == axis) throw Error(ErrorKind::Precondition, "half and axis must be distinct positions");
  std::array<int, 2> rest{};
  for (int i = 0, n = 0; i < 4; ++i)
    if (i != half && i != axis) rest[n++] = i;

  auto cs = root.circles();
  auto fc = ford_root_extended().circles();
  const auto& F_half = fc[0];
  const auto& F_one = fc[1];
  const auto& F_zero = fc[2];
  const auto& F_axis = fc[3];

  for (int attempt = 0; attempt < 2; ++attempt) {
    int i1 = rest[attempt], i2 = rest[1 - attempt];
    GaussianRational t01 = tangency_point(cs[half], cs[i1]);
    GaussianRational t02 = tangency_point(cs[half], cs[i2]);
    GaussianRational t12 = tangency_point(cs[i1], cs[i2]);
    MobiusMap B = from_three_points(t01, t02, t12, tangency_point(F_half, F_zero), tangency_point(F_half, F_one),
                                    tangency_point(F_zero, F_one));
    if (!apply_circle(B, cs[axis]).same_set(F_axis)) continue;
    bool ok = apply_circle(B, cs[half]).same_set(F_half) && apply_circle(B, cs[i1]).same_set(F_zero) &&
              apply_circle(B, cs[i2]).same_set(F_one);
    if (!ok) throw Error(ErrorKind::InconsistentCenters, "re-based circles do not match the Ford root");
    return B;
  }
  throw Error(ErrorKind::DegenerateConfiguration, "no orientation of the root maps onto the Ford root");
}

}  // namespace apollonian
