#pragma once

// Command-line front end. run() is the whole program minus main so that tests
// can drive it in-process with string streams.

#include "apollonian/io.hpp"
#include "apollonian/render.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

namespace apollonian::cli {

using io::json;

namespace detail {

struct Common {
  std::string out_path;
  bool approx = false;
  long long seed = 0;
};

inline void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Precondition, "cannot open " + c.out_path + " for writing");
  f << text;
}

inline void emit(const json& j, const Common& c, std::ostream& out) { emit(j.dump(2) + "\n", c, out); }

inline DescartesQuad parse_triple_as_ford(std::string_view text) {
  DescartesQuad q;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    auto comma = text.find(',', pos);
    if ((i < 2) == (comma == std::string_view::npos)) throw Error(ErrorKind::Parse, "expected kc,kR,kL");
    q[i] = parse_rational(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    pos = comma + 1;
  }
  q[3] = 0;
  return q;
}

inline PythTriplet parse_pyth(std::string_view text) {
  DescartesQuad q = parse_triple_as_ford(text);
  for (int i = 0; i < 3; ++i)
    if (!is_integer(q[i])) throw Error(ErrorKind::Parse, "triple entries must be integers");
  return {numerator(q[0]), numerator(q[1]), numerator(q[2])};
}

/// Values such as "-1,2,2,3" look like flags to the parser; glue them to
/// their option so "--root -1,2,2,3" works as well as "--root=-1,2,2,3".
inline std::vector<std::string> glue_negative_values(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool long_opt = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
    if (long_opt && i + 1 < argc) {
      std::string next = argv[i + 1];
      if (next.size() > 1 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
        args.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    args.push_back(a);
  }
  return args;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Apollonian packings, Ford hierarchies and their Pythagorean and kaleidoscopic relatives"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Common common;
  app.add_option("--out", common.out_path, "write the result to this file instead of stdout");
  app.add_flag("--approx", common.approx, "add labelled floating-point columns");
  app.add_option("--seed", common.seed, "reserved; no command is randomized");

  // gasket
  auto* g = app.add_subcommand("gasket", "enumerate a packing up to a curvature bound");
  std::string g_root;
  long long g_bound = 0;
  bool g_svg = false, g_json = false, g_rational = false;
  unsigned g_threads = 1;
  double g_min_radius = 0;
  g->add_option("--root", g_root, "root quadruple k1,k2,k3,k4")->required();
  g->add_option("--bound", g_bound, "largest curvature kept")->required()->check(CLI::NonNegativeNumber);
  auto* svg_flag = g->add_flag("--svg", g_svg, "emit SVG");
  g->add_flag("--json", g_json, "emit JSON (default)")->excludes(svg_flag);
  g->add_flag("--allow-rational", g_rational, "accept a non-integral root");
  g->add_option("--threads", g_threads, "worker threads")->check(CLI::Range(1u, 256u));
  g->add_option("--min-radius", g_min_radius, "SVG: omit circles smaller than this");

  // ford
  auto* f = app.add_subcommand("ford", "Ford circles of fractions in [0,1]");
  long long f_maxq = 0;
  bool f_svg = false;
  f->add_option("--max-q", f_maxq, "largest denominator")->required()->check(CLI::PositiveNumber);
  f->add_flag("--svg", f_svg, "emit SVG");

  // hierarchy
  auto* h = app.add_subcommand("hierarchy", "self-similar recursion aimed at a friendly triplet");
  std::string h_target, h_start, h_boundary, h_root;
  int h_levels = 3;
  h->add_option("--target", h_target, "pL/qL,pc/qc,pR/qR")->required();
  h->add_option("--levels", h_levels, "number of images")->check(CLI::NonNegativeNumber);
  h->add_option("--start", h_start, "starting triplet (default 0/1,1/2,1/1)");
  auto* h_b = h->add_option("--boundary", h_boundary, "conjugate by the boundary map of p/q");
  h->add_option("--root-quad", h_root, "re-base onto this root quadruple")->excludes(h_b);

  // symmetric
  auto* s = app.add_subcommand("symmetric", "symmetric partner and its inward descent");
  std::string s_quad;
  int s_levels = 4;
  s->add_option("--quad", s_quad, "dual (-k0,k1,k2,k3) or Ford (kc,kR,kL,0)")->required();
  s->add_option("--levels", s_levels, "descent steps")->check(CLI::NonNegativeNumber);

  // pyth
  auto* p = app.add_subcommand("pyth", "Pythagorean tree and the Ford correspondence");
  std::string p_word, p_ford, p_root = "1,0,1", p_letters;
  int p_depth = 2;
  auto* p_w = p->add_option("--word", p_word, "tree word such as \"H3 H1\", iterated --depth times");
  auto* p_f = p->add_option("--from-ford", p_ford, "Ford curvatures kc,kR,kL");
  auto* p_t = p->add_option("--tree", p_letters, "enumerate the tree over these letters, e.g. 123");
  p->add_option("--depth", p_depth, "iterations or tree depth")->check(CLI::NonNegativeNumber);
  p->add_option("--root", p_root, "starting triple");
  p_w->excludes(p_f)->excludes(p_t);
  p_f->excludes(p_t);

  // mirror
  auto* m = app.add_subcommand("mirror", "boundary map and mirror for a Ford circle");
  std::string m_frac;
  m->add_option("--fraction", m_frac, "p/q")->required();

  // lorentz
  auto* l = app.add_subcommand("lorentz", "quadruple to Lorentz quadruple");
  std::string l_quad;
  l->add_option("--quad", l_quad, "k1,k2,k3,k4")->required();

  auto args = detail::glue_negative_values(argc, argv);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (g->parsed()) {
      DescartesQuad q = parse_quad(g_root);
      bool has_line = std::count(q.k.begin(), q.k.end(), Rational(0)) > 0;
      ExtendedQuad root = realize(q, has_line ? 2 : 1);
      Gasket gk = enumerate(root, Rational(g_bound), {g_rational, g_threads});
      VerifyReport rep = verify(gk);
      if (g_svg) {
        RenderSpec spec;
        spec.min_radius = g_min_radius;
        detail::emit(render_svg(render_items(gk), spec), common, out);
      } else {
        json j = io::to_json(gk);
        j["stats"] = io::to_json(stats(gk));
        j["verify"] = {{"checked", rep.checked}, {"ok", rep.ok()}, {"failures", rep.failures}};
        detail::emit(j, common, out);
      }
      return rep.ok() ? 0 : 1;
    }

    if (f->parsed()) {
      std::vector<RenderItem> items;
      json list = json::array();
      for (long long q = 1; q <= f_maxq; ++q)
        for (long long pp = 0; pp <= q; ++pp) {
          if (gcd(BigInt(pp), BigInt(q)) != 1) continue;
          FordCircle fc = ford_circle(Fraction(pp, q));
          list.push_back({{"fraction", to_string(fc.fraction)},
                          {"label", fc.label.str()},
                          {"center", to_string(fc.circle.center())},
                          {"radius_sq", to_string(fc.circle.radius_sq())}});
          items.push_back({fc.circle, static_cast<int>(q), Rational(fc.label)});
        }
      if (f_svg) {
        RenderSpec spec;
        spec.viewport = Viewport{0.5, 0.25, 0.55};
        items.insert(items.begin(), RenderItem{ford_axis(), 0, Rational(0)});
        detail::emit(render_svg(items, spec), common, out);
      } else {
        detail::emit(json{{"max_q", f_maxq}, {"circles", list}}, common, out);
      }
      return 0;
    }

    if (h->parsed()) {
      HierarchyMap hm = build_fstar(parse_triplet(h_target));
      FriendlyTriplet start = h_start.empty() ? FriendlyTriplet::root() : parse_triplet(h_start);
      auto levels = iterate(hm, start, h_levels);
      json j = io::to_json(hm, levels, common.approx);
      if (!h_boundary.empty()) {
        BoundaryMap bm = boundary_map(parse_fraction(h_boundary));
        ConjugatedHierarchy ch = conjugate(bm.map, hm);
        json images = json::array();
        for (const auto& t : levels) images.push_back(io::to_json(apply_circle(bm.map, ford_circle(t.center).circle)));
        j["boundary"] = {{"map", io::to_json(bm.map)},
                         {"formula", io::mobius_formula(bm.map)},
                         {"conjugated", io::to_json(ch.map)},
                         {"conjugated_formula", io::mobius_formula(ch.map)},
                         {"center_images", images}};
      }
      if (!h_root.empty()) {
        DescartesQuad q = parse_quad(h_root);
        bool has_line = std::count(q.k.begin(), q.k.end(), Rational(0)) > 0;
        ExtendedQuad root = realize(q, has_line ? 2 : 1);
        MobiusMap B = rebase_root(root);
        MobiusMap back = B.inverse();
        ConjugatedHierarchy ch = conjugate(back, hm);
        json images = json::array();
        for (const auto& t : levels) {
          ExtendedQuad e = triplet_to_extended(t);
          json quad = json::array(), circles = json::array();
          for (int i = 0; i < 4; ++i) {
            GeneralizedCircle c = apply_circle(back, e.circle(i));
            QuadraticSurd k = signed_curvature(c) / QuadraticSurd(root.unit);
            quad.push_back(to_string(k));
            circles.push_back(io::to_json(c));
          }
          images.push_back({{"curvatures", quad}, {"circles", circles}});
        }
        j["rebase"] = {{"root", io::to_json(root.quad())},
                       {"to_ford", io::to_json(B)},
                       {"to_ford_formula", io::mobius_formula(B.normalized())},
                       {"conjugated", io::to_json(ch.map)},
                       {"levels", images}};
      }
      detail::emit(j, common, out);
      return 0;
    }

    if (s->parsed()) {
      auto orbit = symmetric_orbit(symmetric_partner(parse_quad(s_quad)), s_levels);
      json lv = json::array();
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        json e = io::to_json(orbit[i]);
        if (i > 0) {
          Rational ratio(orbit[i].ka, orbit[i - 1].ka);
          e["outer_ratio"] = to_string(ratio);
          if (common.approx) e["outer_ratio_approx"] = to_double(ratio);
        }
        lv.push_back(e);
      }
      detail::emit(json{{"levels", lv}}, common, out);
      return 0;
    }

    if (p->parsed()) {
      if (!p_ford.empty()) {
        DescartesQuad q = detail::parse_triple_as_ford(p_ford);
        for (int i = 0; i < 3; ++i)
          if (!is_integer(q[i])) throw Error(ErrorKind::Parse, "curvatures must be integers");
        PythTriplet t = ford_to_pythagorean(numerator(q[0]), numerator(q[1]), numerator(q[2]));
        detail::emit(json{{"ford", io::to_json(q)}, {"triplet", io::to_json(t)}}, common, out);
        return 0;
      }
      PythTriplet root = detail::parse_pyth(p_root);
      if (!root.is_pythagorean()) throw Error(ErrorKind::Precondition, to_string(root) + " is not Pythagorean");
      if (!p_letters.empty()) {
        detail::emit(io::to_json(tree_enumerate(root, parse_tree_word(p_letters), p_depth)), common, out);
        return 0;
      }
      if (p_word.empty()) throw Error(ErrorKind::Parse, "pyth needs --word, --tree or --from-ford");
      auto word = parse_tree_word(p_word);
      json lv = json::array({io::to_json(root)});
      for (int d = 0; d < p_depth; ++d) {
        root = H_word_apply(word, root);
        lv.push_back(io::to_json(root));
      }
      detail::emit(json{{"word", p_word}, {"levels", lv}}, common, out);
      return 0;
    }

    if (m->parsed()) {
      detail::emit(io::to_json(boundary_map(parse_fraction(m_frac))), common, out);
      return 0;
    }

    if (l->parsed()) {
      DescartesQuad q = parse_quad(l_quad);
      if (!check_descartes(q)) throw Error(ErrorKind::Precondition, to_string(q) + " is not a Descartes quadruple");
      json ords = json::array();
      for (const auto& o : lorentz_valid_orderings(q)) ords.push_back(io::to_json(o));
      detail::emit(json{{"quad", io::to_json(q)},
                        {"lorentz", io::to_json(curvatures_to_lorentz(q))},
                        {"valid_orderings", ords}},
                   common, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Parse) {
      err << "\n" << app.help();
      return 2;
    }
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace apollonian::cli
