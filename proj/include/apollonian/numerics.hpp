#pragma once

// Exact scalar arithmetic: big rationals, Gaussian rationals, quadratic surds
// and continued fractions of quadratic irrationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apollonian {

// Expression templates are off: lambdas and `auto` locals would otherwise
// capture references to temporaries.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

enum class ErrorKind {
  InvalidSurd,
  ComplexRoots,
  MixedRadicand,
  DivisionByZero,
  Parse,
  DegenerateTriple,
  UnsupportedClassification,
  CoincidentCircles,
  NotTangent,
  DegenerateConfiguration,
  NonRealizable,
  Precondition,
  InconsistentCenters,
  InvalidTriplet,
  NonHyperbolic,
  NoIntegerDescent,
  FormulaInconsistency,
  InvalidRoot,
  NonSquareCurvature,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidSurd: return "invalid-surd";
    case ErrorKind::ComplexRoots: return "complex-roots";
    case ErrorKind::MixedRadicand: return "mixed-radicand";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DegenerateTriple: return "degenerate-triple";
    case ErrorKind::UnsupportedClassification: return "unsupported-classification";
    case ErrorKind::CoincidentCircles: return "coincident";
    case ErrorKind::NotTangent: return "not-tangent";
    case ErrorKind::DegenerateConfiguration: return "degenerate";
    case ErrorKind::NonRealizable: return "non-realizable";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::InconsistentCenters: return "inconsistent-centers";
    case ErrorKind::InvalidTriplet: return "invalid-triplet";
    case ErrorKind::NonHyperbolic: return "non-hyperbolic";
    case ErrorKind::NoIntegerDescent: return "no-integer-descent";
    case ErrorKind::FormulaInconsistency: return "formula-inconsistency";
    case ErrorKind::InvalidRoot: return "invalid-root";
    case ErrorKind::NonSquareCurvature: return "non-square-curvature";
  }
  return "unknown";
}

/// Every domain failure in the library is reported through this type; the
/// kind lets callers (and tests) distinguish failure modes without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Integers and rationals

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign(const BigInt& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }
inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  // the backend rejects a negative denominator, so move the sign up first
  return q < 0 ? Rational(BigInt(-p), BigInt(-q)) : Rational(p, q);
}

/// Floor division rounding toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "floor_div by zero");
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidSurd, "square root of a negative integer");
  return boost::multiprecision::sqrt(n);
}

inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto p = exact_sqrt(numerator(r));
  auto q = exact_sqrt(denominator(r));
  if (!p || !q) return std::nullopt;
  return Rational(*p, *q);
}

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline BigInt pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (BigInt f = 5; f * f <= n; f += 6)
    if (n % f == 0 || n % (f + 2) == 0) return false;
  return true;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q", or "n" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}
}  // namespace detail

inline BigInt parse_bigint(std::string_view text) {
  auto s = detail::trim(text);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(ErrorKind::Parse, "empty integer '" + std::string(text) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
  BigInt v(std::string(s.substr(i)));
  return s[0] == '-' ? BigInt(-v) : v;
}

inline Rational parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  BigInt q = parse_bigint(s.substr(slash + 1));
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_bigint(s.substr(0, slash)), q);
}

// ---------------------------------------------------------------------------
// Gaussian rationals

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  GaussianRational(long long r) : re(r) {}             // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm();
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "Gaussian division by zero");
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Lexicographic (re, im); used for deterministic ordering only.
inline bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

/// "p/q+r/s i" with an explicit sign on the imaginary part.
inline std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + to_string(abs(z.im)) + " i";
}

inline GaussianRational parse_gaussian(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.remove_suffix(1);
  s = detail::trim(s);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') { split = k; break; }
  if (split == std::string_view::npos) {
    // pure imaginary: "r/s i"
    if (s.empty() || s == "+") return GaussianRational::i();
    if (s == "-") return -GaussianRational::i();
    return {Rational(0), parse_rational(s)};
  }
  Rational re = parse_rational(s.substr(0, split));
  auto imag = detail::trim(s.substr(split + 1));
  Rational im = imag.empty() ? Rational(1) : parse_rational(imag);
  if (s[split] == '-') im = -im;
  return {re, im};
}

// ---------------------------------------------------------------------------
// Quadratic surds a + b*sqrt(d)

namespace detail {
/// Splits n = f^2 * s with s square-free (trial division; a residue left after
/// the search cap is kept when it is not itself a perfect square).
inline std::pair<BigInt, BigInt> square_part(BigInt n) {
  BigInt f = 1;
  BigInt p = 2;
  std::size_t steps = 0;
  while (p * p <= n && steps < 2'000'000) {
    BigInt pp = p * p;
    while (n % pp == 0) {
      n /= pp;
      f *= p;
    }
    p += (p == 2) ? 1 : 2;
    ++steps;
  }
  if (auto r = exact_sqrt(n); r && *r > 1) {
    f *= *r;
    n = 1;
  }
  return {f, n};
}
}  // namespace detail

class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT: rational embedding
  QuadraticSurd(long long a) : a_(a) {}            // NOLINT

  QuadraticSurd(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw Error(ErrorKind::InvalidSurd, "negative radicand " + d_.str());
    normalize();
  }

  /// sqrt(r) for a nonnegative rational r.
  static QuadraticSurd sqrt(const Rational& r) {
    if (r < 0) throw Error(ErrorKind::InvalidSurd, "square root of negative " + to_string(r));
    // sqrt(p/q) = sqrt(p*q)/q
    BigInt q = denominator(r);
    return QuadraticSurd(Rational(0), Rational(1, q), numerator(r) * q);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticSurd conj() const {
    QuadraticSurd s = *this;
    s.b_ = -s.b_;
    return s;
  }

  /// Exact sign of the real value.
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const {
    return apollonian::to_double(a_) + apollonian::to_double(b_) * std::sqrt(apollonian::to_double(d_));
  }

  BigInt floor() const {
    if (is_rational()) return apollonian::floor(a_);
    // largest integer n with n <= value
    auto guess = static_cast<long double>(apollonian::to_double(a_)) +
                 static_cast<long double>(apollonian::to_double(b_)) *
                     std::sqrt(static_cast<long double>(apollonian::to_double(d_)));
    BigInt n(static_cast<long long>(std::floor(guess)));
    while ((*this - QuadraticSurd(Rational(n))).sign() < 0) --n;
    while ((*this - QuadraticSurd(Rational(n + 1))).sign() >= 0) ++n;
    return n;
  }

  QuadraticSurd operator-() const { return {-a_, -b_, d_}; }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = common_radicand(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, d};
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = common_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = common_radicand(x, y);
    Rational n = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "surd division by zero");
    QuadraticSurd t = x * y.conj();
    return {t.a_ / n, t.b_ / n, t.d_};
  }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x == y); }
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x; }

 private:
  static BigInt common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_)
      throw Error(ErrorKind::MixedRadicand, "sqrt(" + x.d_.str() + ") mixed with sqrt(" + y.d_.str() + ")");
    return x.d_;
  }

  void normalize() {
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 0;
      return;
    }
    auto [f, s] = detail::square_part(d_);
    b_ *= Rational(f);
    d_ = s;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  Rational a_{0};
  Rational b_{0};
  BigInt d_{0};
};

inline std::string to_string(const QuadraticSurd& s) {
  if (s.is_rational()) return to_string(s.a());
  std::string out;
  if (s.a() != 0) out = to_string(s.a()) + (s.b() < 0 ? "-" : "+");
  else if (s.b() < 0) out = "-";
  Rational mag = abs(s.b());
  if (mag != 1) out += to_string(mag) + "*";
  return out + "sqrt(" + s.d().str() + ")";
}

// ---------------------------------------------------------------------------
// Continued fractions

/// head ++ period ++ period ++ ...; the period is empty for rationals.
struct PeriodicCF {
  std::vector<BigInt> head;
  std::vector<BigInt> period;

  bool is_finite() const { return period.empty(); }

  /// k-th partial quotient; for finite expansions k must be < head.size().
  const BigInt& term(std::size_t k) const {
    if (k < head.size()) return head[k];
    if (period.empty()) throw Error(ErrorKind::Precondition, "term index past finite expansion");
    return period[(k - head.size()) % period.size()];
  }

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

inline std::string to_string(const PeriodicCF& cf) {
  std::string out = "[";
  auto list = [](const std::vector<BigInt>& v, std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < v.size(); ++i) {
      if (i > from) s += ", ";
      s += v[i].str();
    }
    return s;
  };
  if (!cf.head.empty()) out += cf.head[0].str();
  if (cf.head.size() > 1 || !cf.period.empty()) out += "; ";
  out += list(cf.head, 1);
  if (!cf.period.empty()) {
    if (cf.head.size() > 1) out += ", ";
    out += "(" + list(cf.period, 0) + ")";
  }
  return out + "]";
}

inline PeriodicCF cf_expand(const Rational& x) {
  PeriodicCF cf;
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  while (d != 0) {
    BigInt a = floor_div(n, d);
    cf.head.push_back(a);
    BigInt r = n - a * d;
    n = std::move(d);
    d = std::move(r);
  }
  return cf;
}

/// Continued fraction of a real quadratic number. The period is found by
/// repetition of the (P, Q) state of x_k = (P + sqrt(D)) / Q, not of digits.
inline PeriodicCF cf_expand(const QuadraticSurd& x) {
  if (x.is_rational()) return cf_expand(x.a());

  // x = (p + s*sqrt(d)) / q over a common denominator
  BigInt q = lcm(denominator(x.a()), denominator(x.b()));
  BigInt p = numerator(x.a()) * (q / denominator(x.a()));
  BigInt s = numerator(x.b()) * (q / denominator(x.b()));
  BigInt P = s < 0 ? BigInt(-p) : p;
  BigInt Q = s < 0 ? BigInt(-q) : q;
  BigInt D = s * s * x.d();
  if ((D - P * P) % Q != 0) {
    BigInt aq = abs(Q);
    P *= aq;
    D *= Q * Q;
    Q *= aq;
  }
  const BigInt root = isqrt(D);

  PeriodicCF cf;
  std::vector<BigInt> digits;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  while (true) {
    auto key = std::make_pair(P, Q);
    if (auto it = seen.find(key); it != seen.end()) {
      cf.head.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return cf;
    }
    seen.emplace(std::move(key), digits.size());
    BigInt a = Q > 0 ? floor_div(P + root, Q) : BigInt(-(floor_div(P + root, -Q) + 1));
    digits.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

/// k-th convergent h_k / k_k; indices past a finite expansion clamp to its value.
inline Rational cf_convergent(const PeriodicCF& cf, std::size_t k) {
  if (cf.head.empty() && cf.period.empty()) throw Error(ErrorKind::Precondition, "empty continued fraction");
  if (cf.is_finite() && k >= cf.head.size()) k = cf.head.size() - 1;
  BigInt h_prev = 1, h = cf.term(0);
  BigInt k_prev = 0, kk = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const BigInt& a = cf.term(i);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * kk + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(kk);
    kk = std::move(k_next);
  }
  return Rational(h, kk);
}

/// Roots of lambda^2 - trace*lambda + det, larger first.
inline std::pair<QuadraticSurd, QuadraticSurd> surd_roots(const BigInt& trace, const BigInt& det) {
  BigInt disc = trace * trace - 4 * det;
  if (disc < 0) throw Error(ErrorKind::ComplexRoots, "discriminant " + disc.str() + " is negative");
  QuadraticSurd hi(Rational(trace, 2), Rational(1, 2), disc);
  QuadraticSurd lo(Rational(trace, 2), Rational(-1, 2), disc);
  return {hi, lo};
}

}  // namespace apollonian
