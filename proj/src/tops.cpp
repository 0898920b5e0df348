#include "ayrep/tops.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ayrep/cells.hpp"
#include "ayrep/character.hpp"
#include "ayrep/error.hpp"
#include "ayrep/representation.hpp"

namespace ayrep {
namespace {

std::string join(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

// B_Q for every standard tableau of straight shape with n boxes, keyed by
// the sorted set.
using RelabellingTable = std::map<std::vector<Permutation>, std::vector<Tableau>>;

RelabellingTable straight_relabellings(int n, const GroupCaps& caps) {
  RelabellingTable table;
  for (const Partition& lambda : partitions(n)) {
    for (const Tableau& Q : enumerate_standard(SkewShape(lambda))) {
      std::vector<Permutation> B = standard_relabellings(Q, caps);
      std::sort(B.begin(), B.end());
      table[std::move(B)].push_back(Q);
    }
  }
  return table;
}

std::optional<TopWitness> search(const Permutation& pi, const RelabellingTable& table, const ConjugacyClasses& classes,
                                 const GroupCaps& caps) {
  const int n = pi.size();
  std::vector<Permutation> interval = weak_interval(pi);
  std::sort(interval.begin(), interval.end());
  for (const Permutation& sigma : interval) {
    const Permutation sigma_inv = sigma.inverse();
    std::vector<Permutation> translate;
    for (const Permutation& u : interval) translate.push_back(sigma_inv * u);
    std::sort(translate.begin(), translate.end());
    auto it = table.find(translate);
    if (it == table.end()) continue;
    for (const Tableau& Q : it->second) {
      // g(sigma(i)) = c(i) moves the cell B_Q of cont(Q) onto sigma B_Q.
      const ContentVector c = content_vector(Q);
      std::vector<long long> g(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) g[static_cast<std::size_t>(sigma(i) - 1)] = c[static_cast<std::size_t>(i - 1)];
      Representation rep;
      try {
        rep = build_from_functional(Functional(std::move(g)), sigma, Normalization::Seminormal, std::nullopt, caps);
      } catch (const GenericityError&) {
        continue;
      }
      std::vector<Permutation> members;
      for (const auto& w : rep.cell) members.push_back(w.to_permutation());
      std::sort(members.begin(), members.end());
      if (members != interval) continue;
      const Character chi = character(rep, classes);
      if (char_inner(chi, chi, classes) == 1) return TopWitness{sigma, Q, true};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Permutation> weak_maximal(std::span<const Permutation> K) {
  const std::set<Permutation> lookup(K.begin(), K.end());
  std::vector<Permutation> out;
  for (const Permutation& w : lookup) {
    bool maximal = true;
    for (int k = 1; k < w.size() && maximal; ++k)
      if (w(k) < w(k + 1) && lookup.contains(w * Permutation::simple_reflection(w.size(), k))) maximal = false;
    if (maximal) out.push_back(w);
  }
  return out;
}

std::optional<TopWitness> top_witness(const Permutation& pi, const GroupCaps& caps) {
  const int n = pi.size();
  return search(pi, straight_relabellings(n, caps), conjugacy_classes(CoxeterType::A, n, caps), caps);
}

bool is_top_brute(const Permutation& pi, const GroupCaps& caps) { return top_witness(pi, caps).has_value(); }

TopReport top_elements(int n, const GroupCaps& caps) {
  TopReport report;
  report.n = n;
  const RelabellingTable table = straight_relabellings(n, caps);
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, n, caps);
  report.partition_count = static_cast<long long>(partitions(n).size());

  std::set<Permutation> oracle_set;
  for (const Permutation& pi : symmetric_group(n, caps)) {
    if (auto w = search(pi, table, classes, caps)) {
      report.oracle.push_back({pi, *w, weak_interval(pi).size()});
      oracle_set.insert(pi);
    }
  }
  std::sort(report.oracle.begin(), report.oracle.end(),
            [](const TopElement& a, const TopElement& b) { return a.element < b.element; });

  std::set<Permutation> down, up;
  std::map<Permutation, std::vector<Partition>> shapes_by_down;
  for (const Partition& lambda : partitions(n)) {
    const SkewShape shape(lambda);
    TopShapeRow row{lambda, row_tableau(shape), {}, {}, std::nullopt, 0, false, false, false, false};
    const ReadingWords words = reading_words(row.row_tableau);
    row.sigma_down = words.column_word_down;
    row.sigma_up = words.column_word_up;
    std::vector<Permutation> B = standard_relabellings(row.row_tableau, caps);
    std::sort(B.begin(), B.end());
    row.b_size = B.size();
    const auto maxima = weak_maximal(B);
    if (maxima.size() == 1) {
      row.b_max = maxima.front();
      std::vector<Permutation> interval = weak_interval(*row.b_max);
      std::sort(interval.begin(), interval.end());
      row.b_is_interval = interval == B;
      row.max_gives_column_tableau = relabel(row.row_tableau, *row.b_max) == column_tableau(shape);
    }
    row.down_certified = oracle_set.contains(row.sigma_down);
    row.up_certified = oracle_set.contains(row.sigma_up);
    down.insert(row.sigma_down);
    up.insert(row.sigma_up);
    shapes_by_down[row.sigma_down].push_back(lambda);

    if (!row.b_max)
      report.discrepancies.push_back("B_R for " + join(lambda) + " has " + std::to_string(maxima.size()) + " maximal elements");
    else if (*row.b_max != row.sigma_down)
      report.discrepancies.push_back("max of B_R for " + join(lambda) + " is " + row.b_max->str() +
                                     ", top-to-bottom column word is " + row.sigma_down.str());
    if (row.sigma_up != row.sigma_down && !row.up_certified)
      report.discrepancies.push_back("bottom-to-top column word " + row.sigma_up.str() + " of " + join(lambda) +
                                     " is not a top element");
    report.rows.push_back(std::move(row));
  }
  report.candidates_down.assign(down.begin(), down.end());
  report.candidates_up.assign(up.begin(), up.end());
  report.down_matches_oracle = down == oracle_set;
  report.up_matches_oracle = up == oracle_set;

  if (!report.down_matches_oracle)
    report.discrepancies.push_back("top-to-bottom column-word candidates differ from the oracle set");
  if (!report.up_matches_oracle)
    report.discrepancies.push_back("bottom-to-top column-word candidates differ from the oracle set");
  for (const auto& [sigma, lambdas] : shapes_by_down) {
    if (lambdas.size() < 2) continue;
    std::string names;
    for (const auto& l : lambdas) names += (names.empty() ? "" : " and ") + join(l);
    report.discrepancies.push_back("shapes " + names + " share the candidate " + sigma.str());
  }
  if (static_cast<long long>(oracle_set.size()) != report.partition_count)
    report.discrepancies.push_back("oracle finds " + std::to_string(oracle_set.size()) + " top elements; p(" +
                                   std::to_string(n) + ") = " + std::to_string(report.partition_count));
  return report;
}

}  // namespace ayrep
