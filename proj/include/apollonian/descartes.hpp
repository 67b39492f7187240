#pragma once

// Descartes quadruples: the quadratic form, the two fourth-circle roots, the
// linear twin reflection, duality, the S/D generator matrices and the
// curvature-centre ("extended") quadruples used to place circles exactly.

#include "apollonian/geometry.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace apollonian {

/// Four curvatures, kept positionally so that reflections and duality stay
/// index-stable. sorted_desc() gives the conventional non-increasing order.
struct DescartesQuad {
  std::array<Rational, 4> k;

  DescartesQuad() = default;
  DescartesQuad(Rational a, Rational b, Rational c, Rational d) : k{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit DescartesQuad(const std::array<Rational, 4>& v) : k(v) {}

  const Rational& operator[](std::size_t i) const { return k[i]; }
  Rational& operator[](std::size_t i) { return k[i]; }

  Rational sum() const { return k[0] + k[1] + k[2] + k[3]; }
  int negatives() const { return static_cast<int>(std::count_if(k.begin(), k.end(), [](const Rational& x) { return x < 0; })); }
  bool is_integral() const {
    return std::all_of(k.begin(), k.end(), [](const Rational& x) { return is_integer(x); });
  }
  bool is_sorted_desc() const { return std::is_sorted(k.begin(), k.end(), std::greater<>()); }

  DescartesQuad sorted_desc() const {
    DescartesQuad q = *this;
    std::sort(q.k.begin(), q.k.end(), std::greater<>());
    return q;
  }

  friend bool operator==(const DescartesQuad& a, const DescartesQuad& b) { return a.k == b.k; }
  friend bool operator!=(const DescartesQuad& a, const DescartesQuad& b) { return !(a == b); }
};

inline std::string to_string(const DescartesQuad& q) {
  return "(" + to_string(q[0]) + "," + to_string(q[1]) + "," + to_string(q[2]) + "," + to_string(q[3]) + ")";
}

inline DescartesQuad parse_quad(std::string_view text) {
  DescartesQuad q;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t comma = text.find(',', pos);
    if ((i < 3) == (comma == std::string_view::npos))
      throw Error(ErrorKind::Parse, "expected four comma-separated curvatures in '" + std::string(text) + "'");
    q[i] = parse_rational(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    pos = comma + 1;
  }
  return q;
}

inline bool check_descartes(const Rational& k1, const Rational& k2, const Rational& k3, const Rational& k4) {
  Rational s = k1 + k2 + k3 + k4;
  return 2 * (k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4) == s * s;
}

inline bool check_descartes(const DescartesQuad& q) { return check_descartes(q[0], q[1], q[2], q[3]); }

struct FourthSolution {
  QuadraticSurd k4;      // s + 2 sqrt(q)
  QuadraticSurd k4_bar;  // s - 2 sqrt(q)
  bool integral = false;
};

/// Both roots of the fourth-circle equation, k4 = s +- 2 sqrt(k1k2 + k2k3 + k3k1).
inline FourthSolution solve_fourth(const Rational& k1, const Rational& k2, const Rational& k3) {
  Rational q = k1 * k2 + k2 * k3 + k3 * k1;
  if (q < 0) throw Error(ErrorKind::NonRealizable, "k1k2+k2k3+k3k1 = " + to_string(q) + " is negative");
  Rational s = k1 + k2 + k3;
  QuadraticSurd r = QuadraticSurd(2) * QuadraticSurd::sqrt(q);
  FourthSolution out{QuadraticSurd(s) + r, QuadraticSurd(s) - r, false};
  out.integral = out.k4.is_rational() && is_integer(out.k4.a()) && is_integer(out.k4_bar.a());
  return out;
}

/// k_i -> 2 (sum of the other three) - k_i, in place at position i.
inline DescartesQuad reflect_fourth(const DescartesQuad& q, int i) {
  if (i < 0 || i > 3) throw Error(ErrorKind::Precondition, "position must be 0..3");
  DescartesQuad r = q;
  r[i] = 2 * (q.sum() - q[i]) - q[i];
  return r;
}

/// Duality: k_i -> (sum k)/2 - k_i, an involution.
inline DescartesQuad dual(const DescartesQuad& q) {
  Rational half = q.sum() / 2;
  return {half - q[0], half - q[1], half - q[2], half - q[3]};
}

/// v D v^T where D is the duality matrix (1/2 J - I); zero exactly on Descartes quadruples.
inline Rational duality_form(const DescartesQuad& q) {
  DescartesQuad d = dual(q);
  return q[0] * d[0] + q[1] * d[1] + q[2] * d[2] + q[3] * d[3];
}

// ---------------------------------------------------------------------------
// Generators

using IMat4 = std::array<std::array<BigInt, 4>, 4>;

enum class Letter { S1, S2, S3, S4, D1, D2, D3, D4 };

inline IMat4 letter_matrix(Letter l) {
  auto make = [](std::initializer_list<int> v) {
    IMat4 m;
    auto it = v.begin();
    for (auto& row : m)
      for (auto& x : row) x = *it++;
    return m;
  };
  switch (l) {
    case Letter::S1: return make({-1, 2, 2, 2, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    case Letter::S2: return make({1, 0, 0, 0, 2, -1, 2, 2, 0, 0, 1, 0, 0, 0, 0, 1});
    case Letter::S3: return make({1, 0, 0, 0, 0, 1, 0, 0, 2, 2, -1, 2, 0, 0, 0, 1});
    case Letter::S4: return make({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 2, 2, 2, -1});
    case Letter::D1: return make({0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, -1, 2, 2, 2});
    case Letter::D2: return make({2, -1, 2, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    case Letter::D3: return make({2, 2, -1, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case Letter::D4: return make({2, 2, 2, -1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0});
  }
  throw Error(ErrorKind::Precondition, "unknown generator");
}

inline bool is_d_letter(Letter l) { return l >= Letter::D1; }

inline const char* to_string(Letter l) {
  static const char* names[] = {"S1", "S2", "S3", "S4", "D1", "D2", "D3", "D4"};
  return names[static_cast<int>(l)];
}

/// Letters in written order; the rightmost letter acts first.
using GeneratorWord = std::vector<Letter>;

inline GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || (tok[0] != 'S' && tok[0] != 'D') || tok[1] < '1' || tok[1] > '4')
      throw Error(ErrorKind::Parse, "bad generator '" + tok + "'");
    int idx = tok[1] - '1' + (tok[0] == 'D' ? 4 : 0);
    w.push_back(static_cast<Letter>(idx));
  }
  return w;
}

inline std::string to_string(const GeneratorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::string(to_string(w[i]));
  return s;
}

inline IMat4 mat_mul(const IMat4& x, const IMat4& y) {
  IMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 4; ++k) s += x[i][k] * y[k][j];
      r[i][j] = s;
    }
  return r;
}

inline IMat4 word_matrix(const GeneratorWord& w) {
  IMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
  for (Letter l : w) m = mat_mul(m, letter_matrix(l));
  return m;
}

inline DescartesQuad apply_matrix(const IMat4& m, const DescartesQuad& q) {
  DescartesQuad r;
  for (int i = 0; i < 4; ++i) {
    Rational s = 0;
    for (int j = 0; j < 4; ++j) s += Rational(m[i][j]) * q[j];
    r[i] = s;
  }
  return r;
}

struct WordResult {
  DescartesQuad quad;
  /// Number of D-steps whose output had to be re-sorted; zero when every
  /// D-letter preserved the non-increasing order on its own.
  int resorts = 0;
};

/// Applies letters right to left. D-letters require (and restore) non-increasing order.
inline WordResult apply_word(const GeneratorWord& w, const DescartesQuad& q) {
  WordResult out{q, 0};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (is_d_letter(*it) && !out.quad.is_sorted_desc())
      throw Error(ErrorKind::Precondition, std::string(to_string(*it)) + " needs a non-increasing quadruple, got " +
                                               to_string(out.quad));
    out.quad = apply_matrix(letter_matrix(*it), out.quad);
    if (is_d_letter(*it) && !out.quad.is_sorted_desc()) {
      out.quad = out.quad.sorted_desc();
      ++out.resorts;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum of a word

struct Eigenvalue {
  std::optional<QuadraticSurd> exact;
  std::complex<double> value;
};

/// Characteristic polynomial coefficients c0..c4 (monic, c4 = 1) of a 4x4 integer matrix.
inline std::array<BigInt, 5> char_poly(const IMat4& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k
  std::array<BigInt, 5> c;
  c[4] = 1;
  IMat4 m;
  for (auto& row : m) row.fill(0);
  for (int k = 1; k <= 4; ++k) {
    IMat4 am = mat_mul(a, m);
    for (int i = 0; i < 4; ++i) am[i][i] += c[4 - k + 1];
    m = am;
    IMat4 t = mat_mul(a, m);
    BigInt tr = t[0][0] + t[1][1] + t[2][2] + t[3][3];
    c[4 - k] = -tr / k;
  }
  return c;
}

namespace detail {
inline std::vector<std::complex<double>> durand_kerner(std::vector<double> coef /* low..high, monic */) {
  std::size_t n = coef.size() - 1;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  double bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(coef[i]));
  for (std::size_t i = 0; i < n; ++i) z[i] = bound * std::pow(seed, static_cast<double>(i));
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (std::size_t i = coef.size(); i-- > 0;) r = r * x + coef[i];
    return r;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  return z;
}
}  // namespace detail

/// Eigenvalues of the word's matrix: integer roots and a residual quadratic
/// are exact; anything of higher degree falls back to numeric roots.
inline std::vector<Eigenvalue> word_eigen(const GeneratorWord& w) {
  IMat4 m = word_matrix(w);
  std::array<BigInt, 5> c = char_poly(m);
  std::vector<BigInt> poly(c.begin(), c.end());  // low..high
  std::vector<Eigenvalue> out;

  auto eval = [](const std::vector<BigInt>& p, const BigInt& x) {
    BigInt r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
  };
  auto deflate = [](const std::vector<BigInt>& p, const BigInt& x) {
    // synthetic division by (lambda - x)
    std::vector<BigInt> q(p.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry = carry * x + p[i];
      q[i - 1] = carry;
    }
    return q;
  };

  bool found = true;
  while (poly.size() > 3 && found) {
    found = false;
    BigInt c0 = abs(poly[0]);
    if (c0 == 0) {
      out.push_back({QuadraticSurd(0), 0.0});
      poly.erase(poly.begin());
      found = true;
      continue;
    }
    for (BigInt dv = 1; dv * dv <= c0 && !found; ++dv) {
      if (c0 % dv != 0) continue;
      for (const BigInt& cand : {dv, BigInt(-dv), BigInt(c0 / dv), BigInt(-(c0 / dv))}) {
        if (eval(poly, cand) == 0) {
          out.push_back({QuadraticSurd(Rational(cand)), to_double(cand)});
          poly = deflate(poly, cand);
          found = true;
          break;
        }
      }
    }
  }
  if (poly.size() == 3) {
    // lambda^2 + p1 lambda + p0
    BigInt tr = -poly[1];
    BigInt disc = tr * tr - 4 * poly[0];
    if (disc >= 0) {
      auto [hi, lo] = surd_roots(tr, poly[0]);
      out.push_back({hi, hi.to_double()});
      out.push_back({lo, lo.to_double()});
    } else {
      double re = to_double(tr) / 2, im = std::sqrt(-to_double(disc)) / 2;
      out.push_back({std::nullopt, {re, im}});
      out.push_back({std::nullopt, {re, -im}});
    }
  } else if (poly.size() == 2) {
    Rational r(-poly[0], poly[1]);
    out.push_back({QuadraticSurd(r), to_double(r)});
  } else if (poly.size() > 3) {
    std::vector<double> coef;
    for (const auto& x : poly) coef.push_back(to_double(x));
    for (auto z : detail::durand_kerner(coef)) out.push_back({std::nullopt, z});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return std::abs(a.value) > std::abs(b.value); });
  return out;
}

// ---------------------------------------------------------------------------
// Extended quadruples

/// Curvature-centre coordinates of four mutually tangent oriented circles,
/// in label units: the geometric values are unit * (k, kz, cok).
///   circle: k = orientation / r, kz = k z, cok = k |z|^2 - 1 / (unit^2 k)
///   line:   k = 0, kz = n / unit with n the unit normal pointing into the
///           line's interior (away from the packing), cok = 2 h / unit where
///           the line is { Re(conj(n) z) = h }.
/// All three coordinates obey the same linear twin rule as the curvatures.
struct ExtendedQuad {
  std::array<Rational, 4> k;
  std::array<GaussianRational, 4> kz;
  std::array<Rational, 4> cok;
  Rational unit{1};

  DescartesQuad quad() const { return DescartesQuad(k); }

  GeneralizedCircle circle(int i) const;

  std::array<GeneralizedCircle, 4> circles() const { return {circle(0), circle(1), circle(2), circle(3)}; }

  /// Throws InconsistentCenters unless the quadruple is a genuine tangent configuration.
  void validate() const {
    if (!check_descartes(quad())) throw Error(ErrorKind::InconsistentCenters, "curvatures " + to_string(quad()) + " fail the Descartes relation");
    if (std::count(k.begin(), k.end(), Rational(0)) > 2)
      throw Error(ErrorKind::InconsistentCenters, "more than two lines");
    for (int i = 0; i < 4; ++i) {
      if (k[i] != 0) {
        // cok consistency: k |z|^2 - 1/(unit^2 k)
        Rational expect = kz[i].norm() / k[i] - Rational(1) / (unit * unit * k[i]);
        if (expect != cok[i]) throw Error(ErrorKind::InconsistentCenters, "co-curvature mismatch at position " + std::to_string(i));
      }
    }
    auto cs = circles();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        TangencyKind t = tangency(cs[i], cs[j]);
        bool want_internal = k[i] < 0 || k[j] < 0;
        bool ok = want_internal ? t == TangencyKind::Internal : t == TangencyKind::External;
        if (!ok)
          throw Error(ErrorKind::InconsistentCenters, "circles " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " are " + to_string(t));
      }
  }

  friend bool operator==(const ExtendedQuad& a, const ExtendedQuad& b) {
    return a.k == b.k && a.kz == b.kz && a.cok == b.cok && a.unit == b.unit;
  }
};

/// The oriented circle with label coordinates (k, kz, cok).
inline GeneralizedCircle label_circle(const Rational& k, const GaussianRational& kz, const Rational& cok,
                                      const Rational& unit) {
  if (k == 0) {
    GaussianRational n = kz * GaussianRational(unit);
    if (n.norm() != 1) throw Error(ErrorKind::InconsistentCenters, "line normal is not a unit vector");
    Rational h = unit * cok / 2;
    GaussianRational p0 = n * GaussianRational(h);
    return GeneralizedCircle::line(p0, p0 - GaussianRational::i() * n);
  }
  GaussianRational z = kz / GaussianRational(k);
  Rational kg = unit * k;
  return GeneralizedCircle::circle(z, Rational(1) / (kg * kg), k > 0 ? 1 : -1);
}

inline GeneralizedCircle ExtendedQuad::circle(int i) const { return label_circle(k[i], kz[i], cok[i], unit); }

/// Label coordinates of one oriented circle. A line's interior must face away
/// from the packing; radius and |direction| must be rational.
inline void extended_coords(const GeneralizedCircle& c, const Rational& unit, Rational& k, GaussianRational& kz,
                            Rational& cok) {
  if (c.is_line()) {
    GaussianRational v = c.p1() - c.p0();
    auto len = exact_sqrt(v.norm());
    if (!len) throw Error(ErrorKind::NonRealizable, "line direction has irrational length");
    GaussianRational n = GaussianRational::i() * v / GaussianRational(*len);
    Rational h = (n.conj() * c.p0()).re;
    k = 0;
    kz = n / GaussianRational(unit);
    cok = 2 * h / unit;
    return;
  }
  auto r = exact_sqrt(c.radius_sq());
  if (!r) throw Error(ErrorKind::NonRealizable, "radius is irrational");
  Rational kg = Rational(c.orientation()) / *r;
  k = kg / unit;
  kz = c.center() * GaussianRational(k);
  cok = k * c.center().norm() - Rational(1) / (unit * unit * k);
}

inline ExtendedQuad make_extended(const std::array<GeneralizedCircle, 4>& cs, const Rational& unit = 1) {
  ExtendedQuad e;
  e.unit = unit;
  for (int i = 0; i < 4; ++i) extended_coords(cs[i], unit, e.k[i], e.kz[i], e.cok[i]);
  e.validate();
  return e;
}

/// The twin rule applied to every coordinate at position i; validated.
inline ExtendedQuad extend_reflect(const ExtendedQuad& e, int i) {
  if (i < 0 || i > 3) throw Error(ErrorKind::Precondition, "position must be 0..3");
  ExtendedQuad r = e;
  Rational ks = 0, cs = 0;
  GaussianRational zs;
  for (int j = 0; j < 4; ++j)
    if (j != i) {
      ks += e.k[j];
      zs += e.kz[j];
      cs += e.cok[j];
    }
  r.k[i] = 2 * ks - e.k[i];
  r.kz[i] = GaussianRational(2) * zs - e.kz[i];
  r.cok[i] = 2 * cs - e.cok[i];
  r.validate();
  return r;
}

/// Unvalidated variant for hot loops that check tangency themselves.
inline void extend_reflect_inplace(ExtendedQuad& e, int i) {
  Rational ks = 0, cs = 0;
  GaussianRational zs;
  for (int j = 0; j < 4; ++j)
    if (j != i) {
      ks += e.k[j];
      zs += e.kz[j];
      cs += e.cok[j];
    }
  e.k[i] = 2 * ks - e.k[i];
  e.kz[i] = GaussianRational(2) * zs - e.kz[i];
  e.cok[i] = 2 * cs - e.cok[i];
}

namespace detail {
inline std::optional<ExtendedQuad> try_place(const DescartesQuad& q, const Rational& unit, const std::array<int, 4>& ord) {
  // signed radii r_i = 1/(unit k_i); tangent centres sit |r_i + r_j| apart
  std::array<Rational, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = Rational(1) / (unit * q[ord[i]]);
  auto d2 = [&](int i, int j) { Rational s = r[i] + r[j]; return s * s; };
  auto d12 = exact_sqrt(d2(0, 1));
  if (!d12 || *d12 == 0) return std::nullopt;
  Rational x3 = (d2(0, 1) + d2(0, 2) - d2(1, 2)) / (2 * *d12);
  auto y3 = exact_sqrt(d2(0, 2) - x3 * x3);
  if (!y3 || *y3 == 0) return std::nullopt;
  Rational x4 = (d2(0, 3) - d2(1, 3) + d2(0, 1)) / (2 * *d12);
  Rational y4 = ((x3 * x3 + *y3 * *y3 + d2(0, 3) - d2(2, 3)) / 2 - x4 * x3) / *y3;
  if (x4 * x4 + y4 * y4 != d2(0, 3)) return std::nullopt;
  std::array<GaussianRational, 4> z{GaussianRational(0), GaussianRational(*d12), GaussianRational(x3, *y3),
                                    GaussianRational(x4, y4)};
  std::array<GeneralizedCircle, 4> cs;
  for (int i = 0; i < 4; ++i) {
    const Rational& kk = q[ord[i]];
    cs[ord[i]] = GeneralizedCircle::circle(z[i], r[i] * r[i], kk > 0 ? 1 : -1);
  }
  try {
    return make_extended(cs, unit);
  } catch (const Error&) {
    return std::nullopt;
  }
}
}  // namespace detail

/// Exact placement of a Descartes quadruple with rational centres: either all
/// circles, or one line (the real axis, packing above it). Throws
/// NonRealizable when no tried frame gives rational coordinates.
inline ExtendedQuad realize(const DescartesQuad& q, const Rational& unit = 1) {
  if (!check_descartes(q)) throw Error(ErrorKind::NonRealizable, to_string(q) + " is not a Descartes quadruple");
  if (q.negatives() > 1) throw Error(ErrorKind::NonRealizable, "more than one enclosing circle");
  int zeros = static_cast<int>(std::count(q.k.begin(), q.k.end(), Rational(0)));
  if (zeros >= 2) throw Error(ErrorKind::DegenerateConfiguration, "two lines bound an infinite strip");

  if (zeros == 1) {
    int li = static_cast<int>(std::find(q.k.begin(), q.k.end(), Rational(0)) - q.k.begin());
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (i != li) idx.push_back(i);
    if (q[idx[0]] < 0 || q[idx[1]] < 0 || q[idx[2]] < 0)
      throw Error(ErrorKind::NonRealizable, "an enclosing circle cannot touch a line");
    // the largest curvature sits in the gap between the other two
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return q[a] < q[b]; });
    auto gap = [&](int a, int b) -> Rational {
      auto s = exact_sqrt(q[a] * q[b]);
      if (!s) throw Error(ErrorKind::NonRealizable, "tangent points on the line are irrational");
      return Rational(2) / (unit * *s);
    };
    std::array<GeneralizedCircle, 4> cs;
    std::array<Rational, 3> x{Rational(0), gap(idx[0], idx[1]), gap(idx[0], idx[2])};
    for (int j = 0; j < 3; ++j) {
      Rational rad = Rational(1) / (unit * q[idx[j]]);
      cs[idx[j]] = GeneralizedCircle::circle(GaussianRational(x[j], rad), rad * rad, 1);
    }
    // interior below the axis: direction -1
    cs[li] = GeneralizedCircle::line(GaussianRational(0), GaussianRational(-1));
    return make_extended(cs, unit);
  }

  std::array<int, 4> ord{0, 1, 2, 3};
  do {
    if (auto e = detail::try_place(q, unit, ord)) return *e;
  } while (std::next_permutation(ord.begin(), ord.end()));
  throw Error(ErrorKind::NonRealizable, "no rational placement found for " + to_string(q));
}

// ---------------------------------------------------------------------------
// Homogeneous identity

/// (sum l^2)^2 == 2 sum l^4 whenever l1 + l2 + l3 = 0.
inline bool homogeneous_identity(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (l1 + l2 + l3 != 0) throw Error(ErrorKind::Precondition, "arguments must sum to zero");
  Rational s2 = l1 * l1 + l2 * l2 + l3 * l3;
  Rational s4 = l1 * l1 * l1 * l1 + l2 * l2 * l2 * l2 + l3 * l3 * l3 * l3;
  return s2 * s2 == 2 * s4;
}

}  // namespace apollonian
