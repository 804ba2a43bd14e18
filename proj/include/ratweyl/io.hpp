#pragma once

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "ratweyl/atlas.hpp"
#include "ratweyl/decompose.hpp"
#include "ratweyl/errors.hpp"
#include "ratweyl/matrix.hpp"
#include "ratweyl/rationality.hpp"
#include "ratweyl/root_set.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl {

using json = nlohmann::ordered_json;

/// "1,2,3" -> {1,2,3}; empty string is the empty word.
inline Word parse_word(const std::string& s) {
  Word w;
  if (s.empty()) return w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw PreconditionError("bad simple index '" + tok + "' in word");
    w.push_back(v);
  }
  return w;
}

inline json root_json(const RootSystem& rs, std::size_t p) { return to_string(rs.root(p)); }

inline json root_set_json(const RootSystem& rs, const RootSet& s) {
  json arr = json::array();
  s.for_each([&](std::size_t p) { arr.push_back(root_json(rs, p)); });
  return arr;
}

inline json root_system_json(const RootSystem& rs) {
  json j;
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  j["num_positive"] = rs.num_positive();
  j["cartan"] = rs.cartan_matrix();
  json roots = json::array();
  for (std::size_t p = 0; p < rs.num_positive(); ++p) {
    roots.push_back({{"index", p}, {"root", to_string(rs.root(p))}, {"coeffs", rs.root(p).coeffs},
                     {"height", rs.root(p).height()}});
  }
  j["positive_roots"] = std::move(roots);
  j["highest_root"] = to_string(rs.highest_root());
  return j;
}

inline json nu_sequence_json(const RootSystem& rs, const NuSequence& nu) {
  json terms = json::array();
  for (const auto& t : nu.terms) terms.push_back(root_set_json(rs, t));
  return {{"terms", terms}, {"limit", root_set_json(rs, nu.limit)}};
}

inline json rat_graph_json(const RootSystem& rs, const RatGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({to_string(rs.root(a)), to_string(rs.root(b))});
  return {{"vertices", root_set_json(rs, g.vertices)}, {"edges", edges}};
}

inline std::string word_json_string(const Word& w) { return word_to_string(w, " ", true); }

inline json atlas_json(const Atlas& at) {
  json j;
  j["type"] = to_string(at.lie_type);
  j["rank"] = at.lie_type.rank;
  j["count"] = at.count();
  json verts = json::array();
  for (const auto& w : at.words) verts.push_back(word_json_string(w));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : at.edges) edges.push_back({e.a, e.b, e.label});
  j["edges"] = std::move(edges);
  return j;
}

/// Undirected DOT graph; vertices labeled by reduced words, edges by simple index.
inline std::string atlas_dot(const Atlas& at) {
  std::ostringstream os;
  os << "graph \"Gamma(" << to_string(at.lie_type) << ")\" {\n";
  for (std::size_t v = 0; v < at.count(); ++v) {
    const std::string label = at.words[v].empty() ? "e" : word_to_string(at.words[v]);
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : at.edges) {
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Square JSON array of rows; entries integers or "p/q" strings.
inline QMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw PreconditionError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) throw PreconditionError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const json& e = row[k];
      if (e.is_number_integer()) {
        m.at(i, k) = Rational(e.get<long>());
      } else if (e.is_string()) {
        m.at(i, k) = parse_rational(e.get<std::string>());
      } else {
        throw PreconditionError("matrix entries must be integers or \"p/q\" strings");
      }
    }
  }
  return m;
}

inline QMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("invalid matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

inline json solve_json(const SolveResult& r) {
  json j;
  j["verdict"] = r.trace.verdict.to_string();
  j["iterations"] = r.trace.p_terms.empty() ? 0 : static_cast<int>(r.trace.p_terms.size()) - 1;
  if (r.solution) {
    j["N"] = matrix_json(r.solution->n_part);
    j["B"] = matrix_json(r.solution->b_part);
    j["u_rep"] = matrix_json(r.solution->representative);
  } else {
    j["N"] = nullptr;
    j["B"] = nullptr;
    j["u_rep"] = nullptr;
  }
  return j;
}

}  // namespace ratweyl
