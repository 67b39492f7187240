#pragma once

// Pythagorean side of the Ford gasket: the Berggren-type tree matrices, the
// Euclid pair action, the linear map from Ford curvatures to triples, parity
// classes of hierarchy maps and the quadruple-to-Lorentz map.

#include "apollonian/selfsim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <vector>

namespace apollonian {

struct PythTriplet {
  BigInt nx, ny, nt;

  bool is_pythagorean() const { return nx * nx + ny * ny == nt * nt; }
  bool is_primitive() const { return gcd(gcd(abs(nx), abs(ny)), abs(nt)) == 1; }

  friend bool operator==(const PythTriplet& a, const PythTriplet& b) {
    return a.nx == b.nx && a.ny == b.ny && a.nt == b.nt;
  }
};

inline std::string to_string(const PythTriplet& t) {
  return "(" + t.nx.str() + "," + t.ny.str() + "," + t.nt.str() + ")";
}

struct EuclidPair {
  BigInt qR, qL;

  EuclidPair() = default;
  EuclidPair(BigInt r, BigInt l) : qR(std::move(r)), qL(std::move(l)) {
    if (qL <= 0 || qR <= qL) throw Error(ErrorKind::Precondition, "Euclid pair needs qR > qL > 0");
    if (gcd(qR, qL) != 1) throw Error(ErrorKind::Precondition, "Euclid pair must be coprime");
  }

  friend bool operator==(const EuclidPair& a, const EuclidPair& b) { return a.qR == b.qR && a.qL == b.qL; }
};

inline std::string to_string(const EuclidPair& p) { return "(" + p.qR.str() + "," + p.qL.str() + ")"; }

using IMat3 = std::array<std::array<int, 3>, 3>;

inline const IMat3& H_matrix(int i) {
  static const std::array<IMat3, 3> H{{
      {{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}},
      {{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}},
      {{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}},
  }};
  if (i < 1 || i > 3) throw Error(ErrorKind::Precondition, "tree matrices are numbered 1..3");
  return H[i - 1];
}

/// h_i acting on (qR, qL).
inline IMat2 h_matrix(int i) {
  switch (i) {
    case 1: return {1, 2, 0, 1};
    case 2: return {2, 1, 1, 0};
    case 3: return {2, -1, 1, 0};
  }
  throw Error(ErrorKind::Precondition, "tree matrices are numbered 1..3");
}

inline PythTriplet H_apply(int i, const PythTriplet& t) {
  const IMat3& m = H_matrix(i);
  const std::array<const BigInt*, 3> v{&t.nx, &t.ny, &t.nt};
  std::array<BigInt, 3> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += m[r][c] * *v[c];
  return {out[0], out[1], out[2]};
}

inline EuclidPair h_apply(int i, const EuclidPair& p) {
  IMat2 m = h_matrix(i);
  return {m.a * p.qR + m.b * p.qL, m.c * p.qR + m.d * p.qL};
}

/// Digits 1..3 from text such as "H3 H1" or "h3h1"; the letter prefix is optional.
inline std::vector<int> parse_tree_word(std::string_view text) {
  std::vector<int> w;
  for (char ch : text) {
    if (ch >= '1' && ch <= '3') w.push_back(ch - '0');
    else if (ch != 'H' && ch != 'h' && ch != ' ' && ch != ',')
      throw Error(ErrorKind::Parse, std::string("unexpected '") + ch + "' in tree word");
  }
  return w;
}

/// Applies the rightmost letter first, like the matrix product.
inline PythTriplet H_word_apply(const std::vector<int>& word, PythTriplet t) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = H_apply(*it, t);
  return t;
}

inline IMat2 h_word_matrix(const std::vector<int>& word) {
  IMat2 m{1, 0, 0, 1};
  for (int i : word) m = m * h_matrix(i);
  return m;
}

/// eta (qL qR, (qR^2 - qL^2)/2, (qR^2 + qL^2)/2), eta = 1 for two odd entries.
inline PythTriplet euclid_to_triplet(const EuclidPair& p) {
  bool both_odd = p.qR % 2 != 0 && p.qL % 2 != 0;
  BigInt rr = p.qR * p.qR, ll = p.qL * p.qL;
  if (both_odd) return {p.qL * p.qR, (rr - ll) / 2, (rr + ll) / 2};
  return {2 * p.qL * p.qR, rr - ll, rr + ll};
}

/// ((kc - kR - kL)/d, (kR - kL)/d, (kR + kL)/d) with d = 2 when q_c is even.
inline PythTriplet ford_to_pythagorean(const BigInt& kc, const BigInt& kR, const BigInt& kL) {
  auto qc = exact_sqrt(Rational(kc));
  if (!qc || !exact_sqrt(Rational(kR)) || !exact_sqrt(Rational(kL)))
    throw Error(ErrorKind::NonSquareCurvature, "Ford curvatures must be perfect squares");
  if (!check_descartes(Rational(kc), Rational(kR), Rational(kL), Rational(0)))
    throw Error(ErrorKind::Precondition, "curvatures do not form a Ford configuration");
  int d = numerator(*qc) % 2 == 0 ? 2 : 1;
  return {(kc - kR - kL) / d, (kR - kL) / d, (kR + kL) / d};
}

inline PythTriplet ford_to_pythagorean(const FriendlyTriplet& t) {
  auto sq = [](const BigInt& q) { return q * q; };
  return ford_to_pythagorean(sq(t.center.q), sq(t.right.q), sq(t.left.q));
}

// ---------------------------------------------------------------------------
// Parity of the centre denominator along a hierarchy

/// Decided by the orbit of the root; q_c mod 2 is periodic, so twelve steps
/// cover every residue cycle of a unimodular matrix mod 2.
inline ParityClass parity_class(const HierarchyMap& h) {
  FriendlyTriplet t = FriendlyTriplet::root();
  BigInt first = t.center.q % 2;
  for (int l = 0; l < 12; ++l) {
    t = apply_triplet(h.matrix, t);
    if (t.center.q % 2 != first) return ParityClass::Alternating;
  }
  return ParityClass::Conserving;
}

/// The classification one would read off n* alone.
inline ParityClass parity_from_nstar(const HierarchyMap& h) {
  return h.n_star % 2 == 0 ? ParityClass::Conserving : ParityClass::Alternating;
}

// ---------------------------------------------------------------------------
// Lorentz quadruples

struct LorentzQuad {
  BigInt Nx, Ny, Nz, Nt;
  bool valid = false;
};

inline std::string to_string(const LorentzQuad& l) {
  return "(" + l.Nx.str() + "," + l.Ny.str() + "," + l.Nz.str() + "," + l.Nt.str() + ")" +
         (l.valid ? "" : " invalid");
}

inline LorentzQuad curvatures_to_lorentz(const DescartesQuad& q) {
  if (!q.is_integral()) throw Error(ErrorKind::Precondition, "integral curvatures required");
  BigInt k1 = numerator(q[0]), k2 = numerator(q[1]), k3 = numerator(q[2]), k4 = numerator(q[3]);
  LorentzQuad l{k1 - k2 - k3 - k4, 2 * k4, k2 - k3, k1 + k2 + 2 * k3 + k4};
  l.valid = l.Nx * l.Nx + l.Ny * l.Ny + l.Nz * l.Nz == l.Nt * l.Nt;
  return l;
}

/// Distinct orderings of q whose image is a Lorentz quadruple.
inline std::vector<DescartesQuad> lorentz_valid_orderings(const DescartesQuad& q) {
  std::array<Rational, 4> v = q.k;
  std::sort(v.begin(), v.end());
  std::vector<DescartesQuad> out;
  do {
    DescartesQuad p(v);
    if (curvatures_to_lorentz(p).valid) out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Tree enumeration

struct PythNode {
  PythTriplet triplet;
  std::string word;  // letters applied so far, leftmost last
  std::vector<PythNode> children;
};

/// Children in the order of `letters`, each the image of its parent.
inline PythNode tree_enumerate(const PythTriplet& root, const std::vector<int>& letters, int depth) {
  if (!root.is_pythagorean()) throw Error(ErrorKind::Precondition, to_string(root) + " is not Pythagorean");
  PythNode node{root, "", {}};
  if (depth <= 0) return node;
  for (int i : letters) {
    PythNode child = tree_enumerate(H_apply(i, root), letters, depth - 1);
    // re-label the subtree so every word reads as a matrix product
    std::vector<PythNode*> stack{&child};
    while (!stack.empty()) {
      PythNode* n = stack.back();
      stack.pop_back();
      n->word += (n->word.empty() ? "H" : " H") + std::to_string(i);
      for (auto& c : n->children) stack.push_back(&c);
    }
    node.children.push_back(std::move(child));
  }
  return node;
}

// ---------------------------------------------------------------------------
// Matching a D-word with an h-word

struct WordCorrespondence {
  std::vector<Eigenvalue> d_spectrum;
  QuadraticSurd h_dominant;      // dominant eigenvalue of the 2x2 product
  QuadraticSurd h_vec_x, h_vec_y;  // its eigenvector (lambda - d, c)
  double angle = 0;             // polar angle of the eigenvector
  bool scaling_matches = false; // D dominant == (h dominant)^2
};

inline WordCorrespondence dstring_hstring_check(const GeneratorWord& dword, const std::vector<int>& hword) {
  WordCorrespondence r;
  r.d_spectrum = word_eigen(dword);
  IMat2 m = h_word_matrix(hword);
  if (m.det() * m.det() != 1) throw Error(ErrorKind::Precondition, "h product must be unimodular");
  r.h_dominant = surd_roots(m.trace(), m.det()).first;
  r.h_vec_x = r.h_dominant - QuadraticSurd(Rational(m.d));
  r.h_vec_y = QuadraticSurd(Rational(m.c));
  if (r.h_vec_x.is_rational() && r.h_vec_x.a() == 0 && m.c == 0) {
    r.h_vec_x = QuadraticSurd(Rational(m.b));
    r.h_vec_y = r.h_dominant - QuadraticSurd(Rational(m.a));
  }
  double x = r.h_vec_x.to_double(), y = r.h_vec_y.to_double();
  if (x < 0 || (x == 0 && y < 0)) x = -x, y = -y;
  r.angle = std::atan2(y, x);
  const auto& top = r.d_spectrum.front();
  r.scaling_matches = top.exact && *top.exact == r.h_dominant * r.h_dominant;
  return r;
}

}  // namespace apollonian
