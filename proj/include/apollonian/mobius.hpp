#pragma once

// Möbius maps z -> (az+b)/(cz+d) over Gaussian rationals, with an optional
// leading complex conjugation for anti-conformal maps (mirrors).

#include "apollonian/circle.hpp"

#include <array>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace apollonian {

struct Mat2 {
  GaussianRational a, b, c, d;

  GaussianRational det() const { return a * d - b * c; }
  GaussianRational trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
  Mat2 adjoint() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

class MobiusMap {
 public:
  MobiusMap() : m_{1, 0, 0, 1} {}
  MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d, bool conjugating = false)
      : m_{std::move(a), std::move(b), std::move(c), std::move(d)}, conjugating_(conjugating) {
    if (m_.det().is_zero()) throw Error(ErrorKind::DegenerateConfiguration, "Möbius matrix is singular");
  }
  explicit MobiusMap(const Mat2& m, bool conjugating = false) : MobiusMap(m.a, m.b, m.c, m.d, conjugating) {}

  static MobiusMap identity() { return {}; }

  const GaussianRational& a() const { return m_.a; }
  const GaussianRational& b() const { return m_.b; }
  const GaussianRational& c() const { return m_.c; }
  const GaussianRational& d() const { return m_.d; }
  const Mat2& matrix() const { return m_; }
  bool conjugating() const { return conjugating_; }
  GaussianRational det() const { return m_.det(); }
  GaussianRational trace() const { return m_.trace(); }

  ExtendedPoint operator()(const ExtendedPoint& p) const { return apply(p); }

  ExtendedPoint apply(const ExtendedPoint& p) const {
    if (p.is_infinity()) {
      if (m_.c.is_zero()) return ExtendedPoint::infinity();
      return m_.a / m_.c;
    }
    GaussianRational z = conjugating_ ? p.value().conj() : p.value();
    GaussianRational den = m_.c * z + m_.d;
    if (den.is_zero()) return ExtendedPoint::infinity();
    return (m_.a * z + m_.b) / den;
  }

  MobiusMap inverse() const {
    Mat2 adj = m_.adjugate();
    return MobiusMap(conjugating_ ? adj.conj() : adj, conjugating_);
  }

  /// Scale so that the first nonzero of (c, d) is 1 when possible; purely cosmetic.
  MobiusMap normalized() const {
    const GaussianRational& pivot = !m_.c.is_zero() ? m_.c : m_.d;
    return MobiusMap(m_.a / pivot, m_.b / pivot, m_.c / pivot, m_.d / pivot, conjugating_);
  }

  /// Equality up to a common nonzero scalar.
  friend bool operator==(const MobiusMap& f, const MobiusMap& g) {
    if (f.conjugating_ != g.conjugating_) return false;
    const std::array<const GaussianRational*, 4> x{&f.m_.a, &f.m_.b, &f.m_.c, &f.m_.d};
    const std::array<const GaussianRational*, 4> y{&g.m_.a, &g.m_.b, &g.m_.c, &g.m_.d};
    // cross products x_i y_j == x_j y_i for all pairs
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (*x[i] * *y[j] != *x[j] * *y[i]) return false;
    return true;
  }
  friend bool operator!=(const MobiusMap& f, const MobiusMap& g) { return !(f == g); }

 private:
  Mat2 m_;
  bool conjugating_ = false;
};

/// f after g. When f conjugates its input, the entries of g reach it conjugated.
inline MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  Mat2 right = f.conjugating() ? g.matrix().conj() : g.matrix();
  return MobiusMap(f.matrix() * right, f.conjugating() != g.conjugating());
}

inline MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) { return compose(f, g); }

inline ExtendedPoint apply_point(const MobiusMap& f, const ExtendedPoint& z) { return f.apply(z); }

inline GeneralizedCircle apply_circle(const MobiusMap& f, const GeneralizedCircle& circle) {
  HermitianForm h = circle.hermitian();
  GaussianRational B = f.conjugating() ? h.B.conj() : h.B;
  Mat2 H{GaussianRational(h.A), B, B.conj(), GaussianRational(h.C)};
  Mat2 N = f.matrix().adjugate();
  Mat2 img = N.adjoint() * H * N;
  return GeneralizedCircle::from_hermitian({img.a.re, img.b, img.d.re});
}

// ---------------------------------------------------------------------------
// Construction from three point pairs

namespace detail {
struct Homog {
  GaussianRational x, y;
};

inline Homog homog(const ExtendedPoint& p) {
  if (p.is_infinity()) return {GaussianRational(1), GaussianRational(0)};
  return {p.value(), GaussianRational(1)};
}

inline GaussianRational det3(const std::array<std::array<GaussianRational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline bool distinct3(const ExtendedPoint& p, const ExtendedPoint& q, const ExtendedPoint& r) {
  return p != q && q != r && p != r;
}
}  // namespace detail

/// Unique map with f(z_k) = w_k. The four 3x3 determinant formulas are
/// evaluated on homogeneous coordinates (x : y), which makes infinity (1 : 0)
/// an ordinary input instead of a limit.
inline MobiusMap from_three_points(const ExtendedPoint& z1, const ExtendedPoint& z2, const ExtendedPoint& z3,
                                   const ExtendedPoint& w1, const ExtendedPoint& w2, const ExtendedPoint& w3) {
  if (!detail::distinct3(z1, z2, z3) || !detail::distinct3(w1, w2, w3))
    throw Error(ErrorKind::DegenerateTriple, "three pairwise distinct points are required on each side");
  const std::array<detail::Homog, 3> z{detail::homog(z1), detail::homog(z2), detail::homog(z3)};
  const std::array<detail::Homog, 3> w{detail::homog(w1), detail::homog(w2), detail::homog(w3)};
  using Rows = std::array<std::array<GaussianRational, 3>, 3>;
  Rows ra, rb, rc, rd;
  for (int k = 0; k < 3; ++k) {
    const auto& [x, y] = z[k];
    const auto& [u, v] = w[k];
    ra[k] = {x * u, y * u, y * v};
    rb[k] = {x * u, x * v, y * u};
    rc[k] = {x * v, y * u, y * v};
    rd[k] = {x * u, x * v, y * v};
  }
  return MobiusMap(detail::det3(ra), detail::det3(rb), detail::det3(rc), detail::det3(rd));
}

// ---------------------------------------------------------------------------
// Cross-ratio

/// R = (z4-z1)(z2-z3) / ((z2-z1)(z4-z3)), infinity allowed in and out.
inline ExtendedPoint cross_ratio(const ExtendedPoint& z1, const ExtendedPoint& z2, const ExtendedPoint& z3,
                                 const ExtendedPoint& z4) {
  std::vector<ExtendedPoint> uniq;
  for (const auto* p : {&z1, &z2, &z3, &z4}) {
    bool seen = false;
    for (const auto& u : uniq) seen = seen || u == *p;
    if (!seen) uniq.push_back(*p);
  }
  if (uniq.size() < 3) throw Error(ErrorKind::DegenerateConfiguration, "cross-ratio needs three distinct points");
  auto br = [](const ExtendedPoint& p, const ExtendedPoint& q) {
    auto a = detail::homog(p);
    auto b = detail::homog(q);
    return a.x * b.y - b.x * a.y;
  };
  GaussianRational num = br(z4, z1) * br(z2, z3);
  GaussianRational den = br(z2, z1) * br(z4, z3);
  if (den.is_zero()) return ExtendedPoint::infinity();
  return num / den;
}

// ---------------------------------------------------------------------------
// Classification

enum class MobiusClass { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

inline const char* to_string(MobiusClass k) {
  switch (k) {
    case MobiusClass::Identity: return "identity";
    case MobiusClass::Parabolic: return "parabolic";
    case MobiusClass::Elliptic: return "elliptic";
    case MobiusClass::Hyperbolic: return "hyperbolic";
    case MobiusClass::Loxodromic: return "loxodromic";
  }
  return "?";
}

/// A fixed point, exact when its value is Gaussian rational or a real surd.
struct FixedPoint {
  std::optional<ExtendedPoint> exact;
  std::optional<QuadraticSurd> real_surd;
  std::complex<double> approx;
  bool at_infinity = false;
};

struct Classification {
  MobiusClass kind;
  /// (a+d)^2 / (ad-bc): the squared trace after det-1 normalization.
  GaussianRational trace_sq;
  std::vector<FixedPoint> fixed_points;
};

inline std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  auto r = exact_sqrt(z.norm());
  if (!r) return std::nullopt;
  auto re = exact_sqrt((*r + z.re) / 2);
  auto im = exact_sqrt((*r - z.re) / 2);
  if (!re || !im) return std::nullopt;
  GaussianRational s(*re, z.im < 0 ? Rational(-*im) : *im);
  if (s * s != z) return std::nullopt;
  return s;
}

namespace detail {
inline std::complex<double> approx(const GaussianRational& z) { return {to_double(z.re), to_double(z.im)}; }

inline FixedPoint exact_fixed(const GaussianRational& z) {
  FixedPoint p;
  p.exact = ExtendedPoint(z);
  if (z.is_real()) p.real_surd = QuadraticSurd(z.re);
  p.approx = approx(z);
  return p;
}

inline FixedPoint infinite_fixed() {
  FixedPoint p;
  p.exact = ExtendedPoint::infinity();
  p.at_infinity = true;
  p.approx = {std::numeric_limits<double>::infinity(), 0.0};
  return p;
}
}  // namespace detail

inline Classification classify(const MobiusMap& f) {
  if (f.conjugating()) throw Error(ErrorKind::UnsupportedClassification, "anti-conformal maps are not classified");
  const auto& [a, b, c, d] = f.matrix();
  Classification out;
  out.trace_sq = (a + d) * (a + d) / f.det();

  if (b.is_zero() && c.is_zero() && a == d) {
    out.kind = MobiusClass::Identity;
    return out;
  }
  const GaussianRational& t = out.trace_sq;
  if (!t.is_real() || t.re < 0) out.kind = MobiusClass::Loxodromic;
  else if (t.re == 4) out.kind = MobiusClass::Parabolic;
  else if (t.re < 4) out.kind = MobiusClass::Elliptic;
  else out.kind = MobiusClass::Hyperbolic;

  // c z^2 + (d - a) z - b = 0
  if (c.is_zero()) {
    if (a != d) out.fixed_points.push_back(detail::exact_fixed(b / (d - a)));
    out.fixed_points.push_back(detail::infinite_fixed());
    return out;
  }
  GaussianRational disc = (d - a) * (d - a) + GaussianRational(4) * b * c;
  GaussianRational two_c = GaussianRational(2) * c;
  if (disc.is_zero()) {
    out.fixed_points.push_back(detail::exact_fixed((a - d) / two_c));
    return out;
  }
  if (auto s = gaussian_sqrt(disc)) {
    out.fixed_points.push_back(detail::exact_fixed((a - d + *s) / two_c));
    out.fixed_points.push_back(detail::exact_fixed((a - d - *s) / two_c));
    return out;
  }
  bool real_entries = a.is_real() && b.is_real() && c.is_real() && d.is_real();
  if (real_entries && disc.re > 0) {
    for (int sgn : {1, -1}) {
      QuadraticSurd root = (QuadraticSurd(a.re - d.re) + QuadraticSurd(sgn) * QuadraticSurd::sqrt(disc.re)) /
                           QuadraticSurd(Rational(2 * c.re));
      FixedPoint p;
      p.real_surd = root;
      p.approx = {root.to_double(), 0.0};
      out.fixed_points.push_back(p);
    }
    return out;
  }
  std::complex<double> sq = std::sqrt(detail::approx(disc));
  for (int sgn : {1, -1}) {
    FixedPoint p;
    p.approx = (detail::approx(a - d) + double(sgn) * sq) / detail::approx(two_c);
    out.fixed_points.push_back(p);
  }
  return out;
}

inline std::string to_string(const MobiusMap& f) {
  std::string s = "[[" + to_string(f.a()) + ", " + to_string(f.b()) + "], [" + to_string(f.c()) + ", " +
                  to_string(f.d()) + "]]";
  return f.conjugating() ? s + " conj" : s;
}

}  // namespace apollonian
