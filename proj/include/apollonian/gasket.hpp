#pragma once

// Exact enumeration of a packing from a root extended quadruple. Each frontier
// quadruple only reflects positions whose new curvature grows, so a curvature
// bound terminates the search.

#include "apollonian/descartes.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>
#include <vector>

namespace apollonian {

struct CircleRecord {
  Rational curvature;
  GaussianRational weighted_center;  // curvature times centre; the unit normal for a line
  Rational cocurvature;
  int level = 0;
  GeneratorWord word;                // reflections applied, rightmost first
  std::array<int, 3> parents{-1, -1, -1};  // the other three circles of the creating quadruple
};

struct GasketOptions {
  bool allow_rational = false;
  unsigned threads = 1;
};

struct Gasket {
  ExtendedQuad root;
  Rational bound;
  bool rational_mode = false;
  /// Sorted by curvature, then weighted centre (real part, then imaginary).
  std::vector<CircleRecord> records;

  GeneralizedCircle circle(const CircleRecord& r) const {
    return label_circle(r.curvature, r.weighted_center, r.cocurvature, root.unit);
  }
};

namespace detail {
struct RecordKey {
  Rational k, x, y;
  friend bool operator<(const RecordKey& a, const RecordKey& b) {
    return std::tie(a.k, a.x, a.y) < std::tie(b.k, b.x, b.y);
  }
};

inline RecordKey key_of(const Rational& k, const GaussianRational& kz) { return {k, kz.re, kz.im}; }

struct Frontier {
  ExtendedQuad quad;
  std::array<int, 4> ids;
  int newest;  // position created last; -1 at the root
  int level;
};

struct Candidate {
  std::size_t parent;  // index in the frontier
  int position;
  Rational k, cok;
  GaussianRational kz;
};

inline int line_count(const ExtendedQuad& q) {
  return static_cast<int>(std::count(q.k.begin(), q.k.end(), Rational(0)));
}

inline void expand(const std::vector<Frontier>& level, std::size_t begin, std::size_t end, const Rational& bound,
                   std::vector<Candidate>& out) {
  for (std::size_t n = begin; n < end; ++n) {
    const Frontier& f = level[n];
    Rational ks = f.quad.k[0] + f.quad.k[1] + f.quad.k[2] + f.quad.k[3];
    for (int i = 0; i < 4; ++i) {
      if (i == f.newest) continue;
      Rational nk = 2 * (ks - f.quad.k[i]) - f.quad.k[i];
      if (nk > bound) continue;
      if (f.newest < 0 ? nk < f.quad.k[i] : nk <= f.quad.k[i]) continue;
      if (nk == 0 && line_count(f.quad) > 0) continue;
      ExtendedQuad q = f.quad;
      extend_reflect_inplace(q, i);
      out.push_back({n, i, q.k[i], q.cok[i], q.kz[i]});
    }
  }
}
}  // namespace detail

/// Breadth-first closure of `root` under the four reflections up to `bound`.
/// With threads > 1 each level's frontier is split into contiguous blocks and
/// merged in order, so the result matches the sequential run exactly.
inline Gasket enumerate(const ExtendedQuad& root, const Rational& bound, const GasketOptions& opt = {}) {
  root.validate();
  if (detail::line_count(root) > 1) throw Error(ErrorKind::DegenerateConfiguration, "roots with two lines are not packings");
  bool integral = root.quad().is_integral();
  if (!integral && !opt.allow_rational)
    throw Error(ErrorKind::Precondition, "root " + to_string(root.quad()) +
                                             " is not integral; pass allow_rational to enumerate it anyway");

  Gasket g;
  g.root = root;
  g.bound = bound;
  g.rational_mode = !integral;

  std::vector<CircleRecord> recs;
  std::map<detail::RecordKey, int> index;
  detail::Frontier start{root, {}, -1, 0};
  for (int i = 0; i < 4; ++i) {
    auto key = detail::key_of(root.k[i], root.kz[i]);
    if (index.count(key)) throw Error(ErrorKind::InconsistentCenters, "root repeats a circle");
    index[key] = static_cast<int>(recs.size());
    start.ids[i] = static_cast<int>(recs.size());
    recs.push_back({root.k[i], root.kz[i], root.cok[i], 0, {}, {-1, -1, -1}});
  }

  std::vector<detail::Frontier> level{start};
  while (!level.empty()) {
    std::vector<detail::Candidate> cand;
    unsigned nt = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(level.size() / 64 + 1)));
    if (nt == 1) {
      detail::expand(level, 0, level.size(), bound, cand);
    } else {
      std::vector<std::vector<detail::Candidate>> parts(nt);
      std::vector<std::thread> pool;
      std::size_t chunk = (level.size() + nt - 1) / nt;
      for (unsigned t = 0; t < nt; ++t) {
        std::size_t b = std::min(level.size(), t * chunk), e = std::min(level.size(), b + chunk);
        pool.emplace_back([&, b, e, t] { detail::expand(level, b, e, bound, parts[t]); });
      }
      for (auto& th : pool) th.join();
      for (auto& p : parts) cand.insert(cand.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }

    std::vector<detail::Frontier> next;
    for (auto& c : cand) {
      const detail::Frontier& f = level[c.parent];
      auto key = detail::key_of(c.k, c.kz);
      if (index.count(key)) continue;  // reached before along another branch
      int id = static_cast<int>(recs.size());
      index.emplace(key, id);
      CircleRecord r{c.k, c.kz, c.cok, f.level + 1, {}, {}};
      r.word.push_back(static_cast<Letter>(c.position));
      GeneratorWord pw = f.newest >= 0 ? recs[f.ids[f.newest]].word : GeneratorWord{};
      r.word.insert(r.word.end(), pw.begin(), pw.end());
      for (int j = 0, n = 0; j < 4; ++j)
        if (j != c.position) r.parents[n++] = f.ids[j];
      recs.push_back(std::move(r));

      detail::Frontier nf{f.quad, f.ids, c.position, f.level + 1};
      nf.quad.k[c.position] = c.k;
      nf.quad.kz[c.position] = c.kz;
      nf.quad.cok[c.position] = c.cok;
      nf.ids[c.position] = id;
      next.push_back(std::move(nf));
    }
    level = std::move(next);
  }

  // stable presentation order; parent ids follow the permutation
  std::vector<int> order(recs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return detail::key_of(recs[a].curvature, recs[a].weighted_center) <
           detail::key_of(recs[b].curvature, recs[b].weighted_center);
  });
  std::vector<int> where(recs.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);
  g.records.reserve(recs.size());
  for (int o : order) {
    CircleRecord r = recs[o];
    for (int& p : r.parents)
      if (p >= 0) p = where[p];
    g.records.push_back(std::move(r));
  }
  return g;
}

/// Integral roots are placed in unit 1, except that a root with a line uses
/// unit 2 so that (4,1,1,0) lands on the Ford circles.
inline Gasket enumerate(const DescartesQuad& root, const Rational& bound, const GasketOptions& opt = {}) {
  bool has_line = std::count(root.k.begin(), root.k.end(), Rational(0)) > 0;
  return enumerate(realize(root, has_line ? 2 : 1), bound, opt);
}

// ---------------------------------------------------------------------------

struct GasketStats {
  std::size_t count = 0;
  std::map<Rational, std::size_t> multiplicity;
  std::size_t prime_curvatures = 0;  // records whose curvature is a positive prime
};

inline GasketStats stats(const Gasket& g) {
  GasketStats s;
  s.count = g.records.size();
  for (const auto& r : g.records) {
    ++s.multiplicity[r.curvature];
    if (is_integer(r.curvature) && r.curvature > 1 && is_prime(numerator(r.curvature))) ++s.prime_curvatures;
  }
  return s;
}

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-derives every claim from the stored records alone: each non-root record
/// closes a Descartes quadruple with its parents, touches each parent with the
/// right tangency type and is integral unless the gasket is rational.
inline VerifyReport verify(const Gasket& g) {
  VerifyReport rep;
  try {
    g.root.validate();
  } catch (const Error& e) {
    rep.failures.push_back(std::string("root: ") + e.what());
  }
  for (std::size_t i = 0; i < g.records.size(); ++i) {
    const CircleRecord& r = g.records[i];
    ++rep.checked;
    std::string tag = "record " + std::to_string(i) + " (" + to_string(r.curvature) + ")";
    if (!g.rational_mode && !is_integer(r.curvature)) rep.failures.push_back(tag + ": curvature not integral");
    if (r.level > 0 && r.curvature > g.bound) rep.failures.push_back(tag + ": above the bound");
    if (r.parents[0] < 0) continue;
    try {
      GeneralizedCircle c = g.circle(r);
      std::array<Rational, 4> ks{r.curvature, 0, 0, 0};
      for (int j = 0; j < 3; ++j) {
        const CircleRecord& p = g.records.at(static_cast<std::size_t>(r.parents[j]));
        ks[j + 1] = p.curvature;
        TangencyKind t = tangency(c, g.circle(p));
        bool want_internal = r.curvature < 0 || p.curvature < 0;
        if (t != (want_internal ? TangencyKind::Internal : TangencyKind::External))
          rep.failures.push_back(tag + ": " + to_string(t) + " to parent " + std::to_string(r.parents[j]));
      }
      if (!check_descartes(ks[0], ks[1], ks[2], ks[3])) rep.failures.push_back(tag + ": Descartes relation fails");
    } catch (const Error& e) {
      rep.failures.push_back(tag + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace apollonian
