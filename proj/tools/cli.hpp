#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratweyl/atlas.hpp"
#include "ratweyl/decompose.hpp"
#include "ratweyl/io.hpp"
#include "ratweyl/matrix.hpp"
#include "ratweyl/rationality.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string type;
  int rank = 0;
  std::string word;
  std::string vword;
  std::string matrix;
  int max_iter = 64;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string dot;
  std::string json_path;
  std::optional<std::uint64_t> seed;
  std::string edge_side = "left";
  bool strict = false;
  int alpha = 0;
  std::string cycle;
};

namespace detail {

inline LieType lie_type(const Flags& f) {
  if (f.type.empty()) throw UsageError("--type is required");
  Family fam;
  try {
    fam = parse_family(f.type);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const LieType t{fam, f.rank};
  if (!is_admissible(t)) throw UsageError("inadmissible Lie type " + to_string(t));
  return t;
}

inline Word word_flag(const std::string& s, const RootSystem* rs, const char* name) {
  Word w;
  try {
    w = parse_word(s);
  } catch (const Error& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
  if (rs) {
    for (int i : w) {
      if (i < 1 || i > rs->rank()) {
        throw UsageError(std::string(name) + ": simple index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(rs->rank()));
      }
    }
  }
  return w;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

inline std::string rat_graph_dot(const RootSystem& rs, const RatGraph& g) {
  std::ostringstream os;
  os << "digraph \"Gamma(u)\" {\n";
  g.vertices.for_each([&](std::size_t a) {
    os << "  r" << a << " [label=\"" << to_string(rs.root(a)) << "\"];\n";
  });
  for (auto [a, b] : g.edges()) os << "  r" << a << " -> r" << b << ";\n";
  os << "}\n";
  return os.str();
}

// -- subcommands ---------------------------------------------------------

inline int cmd_roots(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  out << root_system_json(rs).dump(2) << "\n";
  err << to_string(rs.type()) << ": " << rs.num_positive() << " positive roots\n";
  return kOk;
}

inline int cmd_rational(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  const Word w = word_flag(f.word, &rs, "--word");
  const WeylElement u = from_word(rs, w);
  const RationalityCertificate cert = certify_rationality(rs, u);
  const RatGraph g = gamma(rs, u);
  json j;
  j["type"] = to_string(rs.type());
  j["word"] = w;
  j["reduced_word"] = reduced_word(rs, u);
  j["length"] = length(u);
  j["rational"] = cert.rational;
  j["acyclic"] = is_acyclic(g);
  j["nu"] = nu_sequence_json(rs, cert.nu);
  j["gamma"] = rat_graph_json(rs, g);
  json cyc = json::array();
  for (std::size_t p : cert.cycle) cyc.push_back(to_string(rs.root(p)));
  j["cycle"] = std::move(cyc);
  if (auto loop = has_loop(rs, u)) {
    j["loop_witness"] = to_string(rs.root(*loop));
  } else {
    j["loop_witness"] = nullptr;
  }
  out << j.dump(2) << "\n";
  if (!f.dot.empty()) write_file(f.dot, rat_graph_dot(rs, g));
  if (!f.json_path.empty()) write_file(f.json_path, j.dump(2) + "\n");
  err << word_to_string(w) << " is " << (cert.rational ? "rational" : "not rational") << "\n";
  return kOk;
}

inline int cmd_nurel(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  const WeylElement u = from_word(rs, word_flag(f.word, &rs, "--word"));
  const WeylElement v = from_word(rs, word_flag(f.vword, &rs, "--vword"));
  const RelativeNu r = relative_nu(rs, u, v);
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(root_set_json(rs, t));
  json j;
  j["type"] = to_string(rs.type());
  j["terms"] = std::move(terms);
  j["empty_limit"] = r.empty_limit;
  j["cycle_found"] = r.cycle_found;
  j["cycle_start"] = r.cycle_start;
  j["period"] = r.period;
  out << j.dump(2) << "\n";
  if (!f.json_path.empty()) write_file(f.json_path, j.dump(2) + "\n");
  err << r.terms.size() << " terms, empty limit: " << (r.empty_limit ? "yes" : "no") << "\n";
  return kOk;
}

inline int cmd_count(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  if (f.workers < 1) throw UsageError("--workers must be >= 1");
  const std::uint64_t n = count_rational(rs, {f.workers, f.budget});
  out << n << "\n";
  err << to_string(rs.type()) << ": " << n << " rational elements of " << group_order(rs.type()) << "\n";
  return kOk;
}

inline int cmd_atlas(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  if (f.workers < 1) throw UsageError("--workers must be >= 1");
  if (f.edge_side != "left" && f.edge_side != "right") throw UsageError("--edge-side must be left or right");
  const EdgeSide side = f.edge_side == "left" ? EdgeSide::Left : EdgeSide::Right;
  const Atlas at = build_atlas(rs, {f.workers, f.budget, side});
  if (!f.dot.empty()) write_file(f.dot, atlas_dot(at));
  if (!f.json_path.empty()) write_file(f.json_path, atlas_json(at).dump(2) + "\n");
  json j;
  j["type"] = to_string(rs.type());
  j["edge_side"] = f.edge_side;
  j["count"] = at.count();
  j["edges"] = at.edges.size();
  j["components"] = at.components.size();
  j["connected"] = at.connected();
  j["valency_one"] = at.valency_one_count();
  j["z2_symmetric"] = check_z2_symmetry(rs, at);
  out << j.dump(2) << "\n";
  err << to_string(rs.type()) << ": " << at.count() << " vertices, " << at.edges.size() << " edges, "
      << at.components.size() << " component(s)\n";
  return kOk;
}

inline int cmd_coxeter(const Flags& f, std::ostream& out, std::ostream& err) {
  const RootSystem rs(lie_type(f));
  const CoxeterReport rep = coxeter_report(rs);
  json list = json::array();
  for (std::size_t k = 0; k < rep.rational.size(); ++k) {
    list.push_back({{"word", word_to_string(rep.rational[k].word)}, {"valency", rep.valencies[k]}});
  }
  json j;
  j["type"] = to_string(rs.type());
  j["coxeter_elements"] = rep.total;
  j["rational_coxeter"] = std::move(list);
  out << j.dump(2) << "\n";
  err << rep.rational.size() << " of " << rep.total << " Coxeter elements are rational\n";
  return kOk;
}

/// GL_n matrix from --matrix, or a seeded random one when only --seed is given.
inline QMatrix input_matrix(const Flags& f, bool borel) {
  if (!f.matrix.empty()) {
    try {
      return parse_matrix(read_file(f.matrix));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (!f.seed) throw UsageError("give --matrix FILE or --seed N");
  const RootSystem rs(lie_type(f));
  if (rs.type().family != Family::A) throw UsageError("random matrices need --type A");
  std::mt19937_64 rng(*f.seed);
  const auto n = static_cast<std::size_t>(rs.rank()) + 1;
  return borel ? random_upper_borel(n, rng) : random_decomposable_matrix(n, rng);
}

inline std::size_t gl_size(const Flags& f, const QMatrix& m) {
  if (m.size() < 2) throw UsageError("matrix must be at least 2x2");
  if (!f.type.empty()) {
    const LieType t = lie_type(f);
    if (t.family != Family::A || static_cast<std::size_t>(t.rank) + 1 != m.size()) {
      throw UsageError("matrix size does not match GL_{rank+1} for type A");
    }
  }
  return m.size();
}

inline int cmd_decompose(const Flags& f, std::ostream& out, std::ostream& err) {
  const QMatrix g = input_matrix(f, false);
  const std::size_t n = gl_size(f, g);
  const RootSystem rs(gl_weyl_type(n));
  SolveOptions opt;
  opt.max_iter = f.max_iter;
  if (f.max_iter < 0) throw UsageError("--max-iter must be >= 0");
  if (!f.vword.empty()) opt.v_word = word_flag(f.vword, &rs, "--vword");
  const Word w = word_flag(f.word, &rs, "--word");
  const SolveResult r = solve(g, w, opt);
  json j = solve_json(r);
  out << j.dump(2) << "\n";
  if (!f.json_path.empty()) write_file(f.json_path, j.dump(2) + "\n");
  err << "u = " << (w.empty() ? std::string("e") : word_to_string(w)) << ": " << r.trace.verdict.to_string()
      << "\n";
  return (!r.ok() && f.strict) ? kDomainError : kOk;
}

inline int cmd_witness(const Flags& f, std::ostream& out, std::ostream& err) {
  const QMatrix b = input_matrix(f, true);
  const std::size_t n = gl_size(f, b);
  const RootSystem rs(gl_weyl_type(n));
  const Word w = word_flag(f.word, &rs, "--word");
  const bool fixer = f.alpha != 0;
  if (fixer == !f.cycle.empty()) throw UsageError("give exactly one of --alpha or --cycle");
  Witness wit;
  if (fixer) {
    if (f.alpha < 1 || f.alpha > rs.rank()) throw UsageError("--alpha out of range");
    wit = fixer_witness(b, w, f.alpha);
  } else {
    wit = ortho_cycle_witness(b, w, word_flag(f.cycle, &rs, "--cycle"));
  }
  json j;
  j["kind"] = fixer ? "fixer" : "ortho_cycle";
  j["n"] = matrix_json(wit.n);
  j["degenerate"] = wit.degenerate;
  j["collision"] = check_fiber_collision(b, representative(n, w), wit.n);
  out << j.dump(2) << "\n";
  if (!f.json_path.empty()) write_file(f.json_path, j.dump(2) + "\n");
  err << (wit.degenerate ? "degenerate witness (n = I)" : "fiber collision certified") << "\n";
  return kOk;
}

}  // namespace detail

/// Runs the command line; never calls exit().
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Rational Weyl group elements and their group decompositions"};
  app.require_subcommand(1);
  Flags f;

  auto type_rank = [&](CLI::App* sub, bool required) {
    auto* t = sub->add_option("--type", f.type, "Lie type: A, B, C, D, E, F or G");
    auto* r = sub->add_option("--rank", f.rank, "rank");
    if (required) {
      t->required();
      r->required();
    }
  };
  auto word = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--word", f.word, "comma-separated 1-based simple indices");
    if (required) o->required();
  };
  auto sweep = [&](CLI::App* sub) {
    sub->add_option("--workers", f.workers, "worker threads")->capture_default_str();
    sub->add_option("--budget", f.budget, "refuse groups with more elements")->capture_default_str();
  };

  auto* roots = app.add_subcommand("roots", "dump the positive roots and Cartan matrix");
  type_rank(roots, true);

  auto* rational = app.add_subcommand("rational", "rationality of one element with its nu-sequence");
  type_rank(rational, true);
  word(rational, false);
  rational->add_option("--dot", f.dot, "write the rationality graph of u as DOT");
  rational->add_option("--json", f.json_path, "also write the JSON to a file");

  auto* nurel = app.add_subcommand("nurel", "nu-sequence of u relative to v");
  type_rank(nurel, true);
  word(nurel, false);
  nurel->add_option("--vword", f.vword, "word of the base element v");
  nurel->add_option("--json", f.json_path, "also write the JSON to a file");

  auto* count = app.add_subcommand("count", "count rational elements");
  type_rank(count, true);
  sweep(count);

  auto* atlas = app.add_subcommand("atlas", "build the rationality graph of W");
  type_rank(atlas, true);
  sweep(atlas);
  atlas->add_option("--dot", f.dot, "write DOT");
  atlas->add_option("--json", f.json_path, "write JSON");
  atlas->add_option("--edge-side", f.edge_side, "left (default) or right multiplication edges");

  auto* coxeter = app.add_subcommand("coxeter", "rational Coxeter elements and their valencies");
  type_rank(coxeter, true);

  auto* decompose = app.add_subcommand("decompose", "solve g = N B u N^-1 in GL_n");
  type_rank(decompose, false);
  word(decompose, false);
  decompose->add_option("--vword", f.vword, "base solution v (default w0)");
  decompose->add_option("--matrix", f.matrix, "JSON matrix file");
  decompose->add_option("--seed", f.seed, "random generic matrix of size rank+1");
  decompose->add_option("--max-iter", f.max_iter, "iteration cap")->capture_default_str();
  decompose->add_option("--json", f.json_path, "also write the JSON to a file");
  decompose->add_flag("--strict", f.strict, "exit 1 unless the iteration stabilizes");

  auto* witness = app.add_subcommand("witness", "fiber-collision witnesses for non-solutions");
  type_rank(witness, false);
  word(witness, false);
  witness->add_option("--matrix", f.matrix, "JSON upper triangular matrix file");
  witness->add_option("--seed", f.seed, "random upper triangular matrix of size rank+1");
  witness->add_option("--alpha", f.alpha, "simple root fixed by u");
  witness->add_option("--cycle", f.cycle, "orthogonal simple roots cycled by u");
  witness->add_option("--json", f.json_path, "also write the JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*roots) return detail::cmd_roots(f, out, err);
    if (*rational) return detail::cmd_rational(f, out, err);
    if (*nurel) return detail::cmd_nurel(f, out, err);
    if (*count) return detail::cmd_count(f, out, err);
    if (*atlas) return detail::cmd_atlas(f, out, err);
    if (*coxeter) return detail::cmd_coxeter(f, out, err);
    if (*decompose) return detail::cmd_decompose(f, out, err);
    if (*witness) return detail::cmd_witness(f, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace ratweyl::cli
