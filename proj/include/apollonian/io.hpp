#pragma once

// JSON encodings. Every number is written as an exact string ("3/4",
// "1/2+1/8 i") so documents round-trip without loss; the optional "approx"
// fields are the only floats.

#include "apollonian/gasket.hpp"
#include "apollonian/kaleido.hpp"
#include "apollonian/pythagoras.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace apollonian::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return to_string(r); }
inline json to_json(const BigInt& v) { return v.str(); }
inline json to_json(const GaussianRational& z) { return to_string(z); }

inline json to_json(const QuadraticSurd& s) {
  return {{"a", to_string(s.a())}, {"b", to_string(s.b())}, {"d", s.d().str()}, {"text", to_string(s)}};
}

inline QuadraticSurd surd_from_json(const json& j) {
  return QuadraticSurd(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                       parse_bigint(j.at("d").get<std::string>()));
}

inline json to_json(const PeriodicCF& cf) {
  json head = json::array(), period = json::array();
  for (const auto& t : cf.head) head.push_back(t.str());
  for (const auto& t : cf.period) period.push_back(t.str());
  return {{"head", head}, {"period", period}, {"text", to_string(cf)}};
}

inline PeriodicCF cf_from_json(const json& j) {
  PeriodicCF cf;
  for (const auto& t : j.at("head")) cf.head.push_back(parse_bigint(t.get<std::string>()));
  for (const auto& t : j.at("period")) cf.period.push_back(parse_bigint(t.get<std::string>()));
  return cf;
}

inline json to_json(const DescartesQuad& q) {
  json a = json::array();
  for (const auto& k : q.k) a.push_back(to_string(k));
  return a;
}

inline DescartesQuad quad_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::Parse, "quadruple must be a 4-element array");
  DescartesQuad q;
  for (int i = 0; i < 4; ++i) q[i] = parse_rational(j[i].get<std::string>());
  return q;
}

inline json to_json(const GeneralizedCircle& c) {
  if (c.is_line()) return {{"kind", "line"}, {"p0", to_string(c.p0())}, {"p1", to_string(c.p1())}};
  return {{"kind", "circle"},
          {"center", to_string(c.center())},
          {"radius_sq", to_string(c.radius_sq())},
          {"orientation", c.orientation()}};
}

inline GeneralizedCircle circle_from_json(const json& j) {
  if (j.at("kind") == "line")
    return GeneralizedCircle::line(parse_gaussian(j.at("p0").get<std::string>()),
                                   parse_gaussian(j.at("p1").get<std::string>()));
  return GeneralizedCircle::circle(parse_gaussian(j.at("center").get<std::string>()),
                                   parse_rational(j.at("radius_sq").get<std::string>()), j.at("orientation").get<int>());
}

inline json to_json(const MobiusMap& m) {
  return {{"a", to_string(m.a())},
          {"b", to_string(m.b())},
          {"c", to_string(m.c())},
          {"d", to_string(m.d())},
          {"conjugating", m.conjugating()}};
}

inline MobiusMap mobius_from_json(const json& j) {
  auto g = [&](const char* k) { return parse_gaussian(j.at(k).get<std::string>()); };
  return MobiusMap(g("a"), g("b"), g("c"), g("d"), j.value("conjugating", false));
}

inline json to_json(const IMat2& m) {
  return json::array({json::array({m.a.str(), m.b.str()}), json::array({m.c.str(), m.d.str()})});
}

// ---------------------------------------------------------------------------
// Human-readable formulas

namespace detail {
/// Coefficient text that can be juxtaposed with a variable: "3", "-i", "(1+2i)".
inline std::string coeff(const GaussianRational& z, bool& unit, bool& negative) {
  unit = negative = false;
  auto r = [](const Rational& x) { return to_string(x); };
  if (z.im == 0) {
    negative = z.re < 0;
    Rational a = abs(z.re);
    unit = a == 1;
    return r(a);
  }
  if (z.re == 0) {
    negative = z.im < 0;
    Rational b = abs(z.im);
    return (b == 1 ? "" : r(b)) + "i";
  }
  Rational b = abs(z.im);
  return "(" + r(z.re) + (z.im < 0 ? "-" : "+") + (b == 1 ? "" : r(b)) + "i)";
}

inline std::string linear(const GaussianRational& a, const GaussianRational& b, const std::string& var) {
  std::string s;
  bool unit = false, neg = false;
  if (!a.is_zero()) {
    std::string c = coeff(a, unit, neg);
    s = (neg ? "-" : "") + (unit ? "" : c) + var;
  }
  if (!b.is_zero()) {
    std::string c = coeff(b, unit, neg);
    if (s.empty()) s = (neg ? "-" : "") + c;
    else s += (neg ? "-" : "+") + c;
  }
  return s.empty() ? "0" : s;
}
}  // namespace detail

/// "((1-2i)z+i)/(-4iz+(1+2i))"; conjugating maps use "conj(z)".
inline std::string mobius_formula(const MobiusMap& m) {
  std::string var = m.conjugating() ? "conj(z)" : "z";
  std::string num = detail::linear(m.a(), m.b(), var);
  if (m.c().is_zero() && m.d() == GaussianRational(1)) return num;
  // a single term needs no parentheses
  auto wrap = [](const std::string& t) { return t.find_first_of("+-", 1) == std::string::npos ? t : "(" + t + ")"; };
  return wrap(num) + "/(" + detail::linear(m.c(), m.d(), var) + ")";
}

/// "(x-1/2)^2+(y-1/2)^2=(1/2)^2" for circles, "a x + b y = c" for lines.
inline std::string circle_equation(const GeneralizedCircle& c) {
  auto shift = [](const char* v, const Rational& x) {
    if (x == 0) return std::string(v) + "^2";
    return std::string("(") + v + (x < 0 ? "+" : "-") + to_string(abs(x)) + ")^2";
  };
  if (c.is_line()) {
    HermitianForm h = c.hermitian();
    // 2 Re(conj(B) z) + C = 0  ->  2 B.re x + 2 B.im y = -C
    // scaled so the leading coefficient is 1; orientation lives in the JSON
    Rational scale = h.B.re != 0 ? 2 * h.B.re : 2 * h.B.im;
    std::string lhs;
    for (const auto& [a, v] : {std::pair{2 * h.B.re / scale, "x"}, std::pair{2 * h.B.im / scale, "y"}}) {
      if (a == 0) continue;
      std::string mag = abs(a) == 1 ? "" : to_string(abs(a));
      lhs += (a < 0 ? "-" : lhs.empty() ? "" : "+") + mag + v;
    }
    return lhs + "=" + to_string(-h.C / scale);
  }
  std::string rhs;
  if (auto r = exact_sqrt(c.radius_sq())) {
    if (*r == 1) rhs = "1";
    else if (is_integer(*r)) rhs = to_string(*r) + "^2";
    else rhs = "(" + to_string(*r) + ")^2";
  } else {
    rhs = to_string(c.radius_sq());
  }
  return shift("x", c.center().re) + "+" + shift("y", c.center().im) + "=" + rhs;
}

// ---------------------------------------------------------------------------
// Gasket

inline json word_json(const GeneratorWord& w) { return w.empty() ? std::string() : to_string(w); }

inline json to_json(const CircleRecord& r) {
  return {{"curvature", to_string(r.curvature)},
          {"weighted_center", to_string(r.weighted_center)},
          {"cocurvature", to_string(r.cocurvature)},
          {"level", r.level},
          {"word", word_json(r.word)},
          {"parents", r.parents}};
}

inline json to_json(const Gasket& g) {
  json root = json::array();
  for (int i = 0; i < 4; ++i)
    root.push_back({{"curvature", to_string(g.root.k[i])},
                    {"weighted_center", to_string(g.root.kz[i])},
                    {"cocurvature", to_string(g.root.cok[i])}});
  json circles = json::array();
  for (const auto& r : g.records) circles.push_back(to_json(r));
  return {{"root", root},
          {"unit", to_string(g.root.unit)},
          {"bound", to_string(g.bound)},
          {"rational", g.rational_mode},
          {"circles", circles}};
}

inline Gasket gasket_from_json(const json& j) {
  Gasket g;
  const json& root = j.at("root");
  if (!root.is_array() || root.size() != 4) throw Error(ErrorKind::Parse, "root must list four circles");
  g.root.unit = parse_rational(j.at("unit").get<std::string>());
  for (int i = 0; i < 4; ++i) {
    g.root.k[i] = parse_rational(root[i].at("curvature").get<std::string>());
    g.root.kz[i] = parse_gaussian(root[i].at("weighted_center").get<std::string>());
    g.root.cok[i] = parse_rational(root[i].at("cocurvature").get<std::string>());
  }
  g.bound = parse_rational(j.at("bound").get<std::string>());
  g.rational_mode = j.value("rational", false);
  for (const auto& c : j.at("circles")) {
    CircleRecord r;
    r.curvature = parse_rational(c.at("curvature").get<std::string>());
    r.weighted_center = parse_gaussian(c.at("weighted_center").get<std::string>());
    r.cocurvature = parse_rational(c.at("cocurvature").get<std::string>());
    r.level = c.at("level").get<int>();
    auto w = c.at("word").get<std::string>();
    if (!w.empty()) r.word = parse_word(w);
    r.parents = c.at("parents").get<std::array<int, 3>>();
    g.records.push_back(std::move(r));
  }
  return g;
}

inline json to_json(const GasketStats& s) {
  json mult = json::object();
  for (const auto& [k, n] : s.multiplicity) mult[to_string(k)] = n;
  return {{"count", s.count}, {"multiplicity", mult}, {"prime_curvatures", s.prime_curvatures}};
}

// ---------------------------------------------------------------------------
// Hierarchies and the rest

inline json to_json(const FriendlyTriplet& t) {
  return {{"left", to_string(t.left)},
          {"center", to_string(t.center)},
          {"right", to_string(t.right)},
          {"kappa_c", center_label(t).str()}};
}

inline FriendlyTriplet triplet_from_json(const json& j) {
  return {parse_fraction(j.at("left").get<std::string>()), parse_fraction(j.at("center").get<std::string>()),
          parse_fraction(j.at("right").get<std::string>())};
}

inline json to_json(const HierarchyMap& h, const std::vector<FriendlyTriplet>& levels, bool approx) {
  json out{{"target", to_string(h.target)}, {"fstar", to_json(h.matrix)}, {"n_star", h.n_star.str()}};
  out["degenerate"] = h.degenerate;
  if (h.zeta) out["zeta"] = to_json(*h.zeta);
  if (h.cf) out["cf"] = to_json(*h.cf);
  out["parity"] = to_string(parity_class(h));
  json lv = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    json e = to_json(levels[i]);
    if (i > 0) {
      Rational ratio(center_label(levels[i]), center_label(levels[i - 1]));
      e["ratio"] = to_string(ratio);
      if (approx) e["ratio_approx"] = to_double(ratio);
    }
    lv.push_back(e);
  }
  out["levels"] = lv;
  if (approx && h.zeta) {
    QuadraticSurd z2 = *h.zeta * *h.zeta;
    out["zeta_sq_approx"] = z2.to_double();
  }
  return out;
}

inline json to_json(const SymmetricQuad& s) {
  return {{"outer", "-" + s.ka.str()},
          {"inner", json::array({s.kb.str(), s.kb.str(), s.kc.str()})},
          {"delta", s.delta().str()},
          {"eta", s.eta}};
}

inline SymmetricQuad symmetric_from_json(const json& j) {
  auto outer = parse_bigint(j.at("outer").get<std::string>());
  const json& in = j.at("inner");
  return {-outer, parse_bigint(in.at(0).get<std::string>()), parse_bigint(in.at(2).get<std::string>()),
          j.at("eta").get<int>()};
}

inline json to_json(const PythTriplet& t) { return json::array({t.nx.str(), t.ny.str(), t.nt.str()}); }

inline PythTriplet pyth_from_json(const json& j) {
  return {parse_bigint(j.at(0).get<std::string>()), parse_bigint(j.at(1).get<std::string>()),
          parse_bigint(j.at(2).get<std::string>())};
}

inline json to_json(const PythNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  return {{"triplet", to_json(n.triplet)}, {"word", n.word}, {"children", children}};
}

inline PythNode pyth_tree_from_json(const json& j) {
  PythNode n{pyth_from_json(j.at("triplet")), j.at("word").get<std::string>(), {}};
  for (const auto& c : j.at("children")) n.children.push_back(pyth_tree_from_json(c));
  return n;
}

inline json to_json(const LorentzQuad& l) {
  return {{"N", json::array({l.Nx.str(), l.Ny.str(), l.Nz.str(), l.Nt.str()})}, {"valid", l.valid}};
}

inline json to_json(const BoundaryMap& b) {
  return {{"map", to_json(b.map)},
          {"formula", mobius_formula(b.map)},
          {"mirror", to_json(b.mirror)},
          {"mirror_equation", circle_equation(b.mirror)},
          {"figure_mirror", to_json(b.figure_mirror)},
          {"figure_mirror_equation", circle_equation(b.figure_mirror)}};
}

}  // namespace apollonian::io
