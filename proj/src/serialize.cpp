#include "ayrep/serialize.hpp"

#include <map>
#include <sstream>

namespace ayrep {
namespace {

std::string group_name(CoxeterType t) { return t == CoxeterType::A ? "A" : "B"; }

template <class Scalar, class Strings>
Json representation_json(const BasicRepresentation<Scalar>& rep, const Strings& cell_strings) {
  Json j;
  j["group"] = group_name(rep.type);
  j["n"] = rep.n;
  j["normalization"] = to_string(rep.normalization);
  j["dimension"] = rep.dimension();
  j["basis"] = rep.basis_labels;
  if (!cell_strings.empty()) j["cell"] = cell_strings;
  Json gens = Json::array();
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const auto& M = rep.matrices[g];
    Json rows = Json::array();
    for (int r = 0; r < M.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < M.cols(); ++c) {
        if constexpr (std::is_same_v<Scalar, double>)
          row.push_back(M(r, c));
        else
          row.push_back(to_fraction_string(M(r, c)));
      }
      rows.push_back(std::move(row));
    }
    gens.push_back({{"generator", rep.generators[g]}, {"matrix", std::move(rows)}});
  }
  j["generators"] = std::move(gens);
  return j;
}

template <class Scalar>
std::vector<std::string> cell_strings(const BasicRepresentation<Scalar>& rep) {
  std::vector<std::string> out;
  for (const auto& w : rep.cell) out.push_back(w.str());
  return out;
}

std::string dot_string(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const SkewShape& shape) { return {{"lambda", shape.lambda()}, {"mu", shape.mu()}}; }

Json to_json(const Tableau& T) {
  Json entries = Json::array();
  for (const Box& b : T.shape().boxes()) entries.push_back({b.row, b.col, T.at(b)});
  return {{"lambda", T.shape().lambda()}, {"mu", T.shape().mu()}, {"entries", std::move(entries)}};
}

Json to_json(const Cell& K) {
  Json members = Json::array(), interior = Json::array(), boundary = Json::array();
  for (const auto& w : K.members) members.push_back(w.str());
  for (const auto& t : K.interior) interior.push_back(t.str());
  for (const auto& t : K.boundary) boundary.push_back(t.str());
  return {{"members", std::move(members)}, {"interior", std::move(interior)}, {"boundary", std::move(boundary)}};
}

Json to_json(const Representation& rep) { return representation_json(rep, cell_strings(rep)); }
Json to_json(const FloatRepresentation& rep) { return representation_json(rep, cell_strings(rep)); }

Json to_json(const Character& chi, const ConjugacyClasses& classes) {
  Json out = Json::array();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out.push_back({{"class", classes.labels[c]},
                   {"representative", classes.representatives[c].str()},
                   {"size", classes.sizes[c]},
                   {"value", to_fraction_string(chi.values[c])}});
  }
  return out;
}

Json to_json(const TopReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"shape", row.shape},
                    {"sigma_down", row.sigma_down.str()},
                    {"sigma_up", row.sigma_up.str()},
                    {"b_max", row.b_max ? Json(row.b_max->str()) : Json(nullptr)},
                    {"interval_size", row.b_size},
                    {"b_is_interval", row.b_is_interval},
                    {"max_gives_column_tableau", row.max_gives_column_tableau},
                    {"down_certified", row.down_certified},
                    {"up_certified", row.up_certified}});
  }
  Json oracle = Json::array();
  for (const auto& e : report.oracle) {
    oracle.push_back({{"element", e.element.str()},
                      {"interval_size", e.interval_size},
                      {"sigma", e.witness.sigma.str()},
                      {"tableau", to_json(e.witness.tableau)},
                      {"irreducible", e.witness.irreducible}});
  }
  Json down = Json::array(), up = Json::array();
  for (const auto& p : report.candidates_down) down.push_back(p.str());
  for (const auto& p : report.candidates_up) up.push_back(p.str());
  return {{"n", report.n},
          {"partition_count", report.partition_count},
          {"shapes", std::move(rows)},
          {"oracle", std::move(oracle)},
          {"candidates_down", std::move(down)},
          {"candidates_up", std::move(up)},
          {"down_matches_oracle", report.down_matches_oracle},
          {"up_matches_oracle", report.up_matches_oracle},
          {"discrepancies", report.discrepancies}};
}

std::string to_dot(const Representation& rep) {
  std::ostringstream out;
  std::map<SignedPermutation, int> index;
  for (std::size_t i = 0; i < rep.cell.size(); ++i) index.emplace(rep.cell[i], static_cast<int>(i));
  out << "digraph cell {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < rep.cell.size(); ++i) {
    // Node label: the element and its diagonal coefficients, one per generator.
    std::string label = rep.cell[i].str() + "\\na =";
    const int d = static_cast<int>(i);
    for (const auto& M : rep.matrices) label += " " + M(d, d).get_str();
    out << "  n" << i << " [label=" << dot_string(label) << "];\n";
  }
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const SignedPermutation s = SignedPermutation::generator(rep.n, rep.generators[g]);
    for (std::size_t i = 0; i < rep.cell.size(); ++i) {
      const SignedPermutation& w = rep.cell[i];
      const SignedPermutation ws = w * s;
      auto it = index.find(ws);
      if (it == index.end() || length_b(ws) < length_b(w)) continue;
      const int col = static_cast<int>(i);
      const std::string label = "s" + std::to_string(rep.generators[g]) + " a=" + rep.matrices[g](col, col).get_str() +
                                " b=" + rep.matrices[g](it->second, col).get_str();
      out << "  n" << i << " -> n" << it->second << " [label=" << dot_string(label) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Cell& K) {
  std::ostringstream out;
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < K.members.size(); ++i) index.emplace(K.members[i], i);
  out << "digraph cell {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < K.members.size(); ++i) out << "  n" << i << " [label=" << dot_string(K.members[i].str()) << "];\n";
  for (int k : K.generators) {
    for (std::size_t i = 0; i < K.members.size(); ++i) {
      const Permutation& w = K.members[i];
      if (w(k) > w(k + 1)) continue;
      auto it = index.find(w * Permutation::simple_reflection(w.size(), k));
      if (it != index.end()) out << "  n" << i << " -> n" << it->second << " [label=" << dot_string("s" + std::to_string(k)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ayrep
