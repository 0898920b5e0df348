#include "ayrep/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "ayrep/cells.hpp"
#include "ayrep/character.hpp"
#include "ayrep/error.hpp"
#include "ayrep/hyperoctahedral.hpp"
#include "ayrep/induction.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/tops.hpp"

namespace ayrep {
namespace {

// Fisher-Yates on raw engine output, so a seed gives the same order with
// any standard library.
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

std::vector<SkewShape> shapes_for(const SweepOptions& o) {
  std::vector<SkewShape> shapes = skew_shapes(o.n);
  if (o.n >= 6) {
    std::mt19937_64 rng(o.seed);
    seeded_shuffle(shapes, rng);
    shapes.resize(std::min<std::size_t>(shapes.size(), static_cast<std::size_t>(o.samples) * 20));
    std::sort(shapes.begin(), shapes.end());
  }
  return shapes;
}

Functional functional_of(const SkewShape& shape) { return Functional(content_vector(row_tableau(shape))); }

// Integer vectors in [lo, hi]^n.
void for_each_vector(int n, int lo, int hi, const std::function<void(const std::vector<long long>&)>& visit) {
  std::vector<long long> v(static_cast<std::size_t>(n), lo);
  while (true) {
    visit(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == hi) v[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++v[static_cast<std::size_t>(i)];
  }
}

std::string shape_name(const SkewShape& s) { return "shape " + s.str(); }

SuiteResult coxeter(const SweepOptions& o) {
  SuiteResult r{"coxeter", 0, {}, {}};
  for (const SkewShape& shape : shapes_for(o)) {
    const auto record = [&](const VerificationReport& rep, const std::string& what) {
      ++r.checks;
      if (!rep) r.failures.push_back(shape_name(shape) + " " + what + ": " + rep.failures.front());
    };
    record(verify_coxeter(build_seminormal_skew(shape)), "seminormal tableau form");
    record(verify_coxeter(build_orthogonal_skew(shape)), "orthogonal tableau form");
    const Functional f = functional_of(shape);
    const Permutation id = Permutation::identity(o.n);
    record(verify_coxeter(build_from_functional(f, id, Normalization::Seminormal, std::nullopt, o.caps)), "cell, seminormal");
    record(verify_coxeter(build_from_functional(f, id, Normalization::RowStochastic, std::nullopt, o.caps)),
           "cell, row-stochastic");
    record(verify_coxeter(build_from_functional_orthogonal(f, id, std::nullopt, o.caps)), "cell, orthogonal");
  }
  return r;
}

SuiteResult axiom_b(const SweepOptions& o) {
  SuiteResult r{"axiomB", 0, {}, {}};
  for (const SkewShape& shape : shapes_for(o)) {
    const Functional f = functional_of(shape);
    const Representation rep = build_from_functional(f, Permutation::identity(o.n), Normalization::Seminormal, std::nullopt, o.caps);
    ++r.checks;
    if (const auto report = verify_axiom_B(rep); !report) {
      r.failures.push_back(shape_name(shape) + ": " + report.failures.front());
      continue;
    }
    // Every coefficient a_t is 1/<f, alpha_t> up to the direction sign.
    for (const auto& c : axiom_B_coefficients(rep)) {
      ++r.checks;
      const Permutation t = c.reflection.to_permutation();
      int i = 1;
      while (t(i) == i) ++i;
      const Reflection refl = Reflection::of(i, t(i));
      const long long p = c.up ? pair(f, refl) : -pair(f, refl);
      if (c.a != ratio(1, p)) r.failures.push_back(shape_name(shape) + ": a at " + refl.str() + " is not 1/<f,alpha_t>");
    }
    ++r.checks;
    try {
      const Functional g = extract_functional(rep);
      // Functionals are compared modulo the all-ones vector.
      std::vector<long long> shifted = f.coords;
      for (auto& x : shifted) x -= f.coords.front();
      if (g.coords != shifted)
        r.failures.push_back(shape_name(shape) + ": extracted functional " + g.str() + " differs from " + f.str());
    } catch (const DomainError& e) {
      r.failures.push_back(shape_name(shape) + ": extraction failed: " + e.what());
    }
  }
  return r;
}

SuiteResult specht(const SweepOptions& o) {
  SuiteResult r{"specht", 0, {}, {}};
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, o.n, o.caps);
  for (const SkewShape& shape : shapes_for(o)) {
    const Representation rep =
        build_from_functional(functional_of(shape), Permutation::identity(o.n), Normalization::Seminormal, std::nullopt, o.caps);
    ++r.checks;
    if (character(rep, classes) != mn_class_function(shape, classes))
      r.failures.push_back(shape_name(shape) + ": character differs from the Murnaghan-Nakayama value");
    // Normalization independence, element by element.
    const auto exact = element_traces(rep, o.caps);
    const auto floating = element_traces(build_orthogonal_skew(shape), o.caps);
    ++r.checks;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      if (std::abs(exact[k].get_d() - floating[k]) > 1e-9) {
        r.failures.push_back(shape_name(shape) + ": seminormal and orthogonal traces differ");
        break;
      }
    }
  }
  return r;
}

SuiteResult cells(const SweepOptions& o) {
  SuiteResult r{"cells", 0, {}, {}};
  for (const SkewShape& shape : shapes_for(o)) {
    const Tableau Q = row_tableau(shape);
    const auto bijection = cell_tableau_bijection(Functional(content_vector(Q)), Q, o.caps);
    const auto all = enumerate_standard(shape);
    std::set<Tableau> image;
    for (const auto& [pi, T] : bijection) image.insert(T);
    ++r.checks;
    if (bijection.size() != all.size() || image != std::set<Tableau>(all.begin(), all.end()))
      r.failures.push_back(shape_name(shape) + ": cell of size " + std::to_string(bijection.size()) + " vs " +
                           std::to_string(all.size()) + " standard tableaux");
  }
  return r;
}

SuiteResult regular(const SweepOptions& o) {
  SuiteResult r{"regular", 0, {}, {}};
  std::vector<long long> coords;
  long long p = 1;
  for (int i = 1; i <= o.n; ++i) coords.push_back(p *= 3);
  const Representation rep =
      build_from_functional(Functional(coords), Permutation::identity(o.n), Normalization::Seminormal, std::nullopt, o.caps);
  const auto traces = element_traces(rep, o.caps);
  for (std::size_t k = 0; k < traces.size(); ++k) {
    ++r.checks;
    const Rational expected = k == 0 ? ratio(static_cast<long long>(traces.size())) : Rational(0);
    if (traces[k] != expected) r.failures.push_back("element #" + std::to_string(k) + " has trace " + traces[k].get_str());
  }
  return r;
}

SuiteResult convex(const SweepOptions& o) {
  SuiteResult r{"convex", 0, {}, {}};
  // Descent cells depend on f only through A_f.
  std::set<std::vector<Reflection>> boundary_sets;
  for_each_vector(o.n, -3, 3, [&](const std::vector<long long>& v) { boundary_sets.insert(boundary_reflections(Functional(v))); });
  for (const auto& A : boundary_sets) {
    std::map<std::vector<bool>, std::vector<Permutation>> classes;
    for (const Permutation& w : symmetric_group(o.n, o.caps)) {
      const Permutation inv = w.inverse();
      std::vector<bool> key;
      for (const auto& t : A) key.push_back(is_left_descent_inv(inv, t));
      classes[key].push_back(w);
    }
    for (const auto& [key, members] : classes) {
      ++r.checks;
      if (!is_convex(members)) r.failures.push_back("a descent class of " + members.front().str() + " is not convex");
    }
  }
  r.notes.push_back(std::to_string(boundary_sets.size()) + " distinct boundary sets");
  return r;
}

SuiteResult generic(const SweepOptions& o) {
  SuiteResult r{"generic", 0, {}, {}};
  std::set<std::vector<long long>> seen;
  for_each_vector(o.n, -2, 2, [&](const std::vector<long long>& v) {
    std::vector<long long> normal = v;
    for (auto& x : normal) x -= v.front();
    if (!seen.insert(normal).second) return;
    const Functional f(v);
    ++r.checks;
    const bool a = is_generic_integer(f);
    const bool b = is_generic(f, descent_cell(f, Permutation::identity(o.n), o.caps));
    if (a != b) r.failures.push_back("f = " + f.str() + ": integer test " + (a ? "true" : "false") + ", cell test " + (b ? "true" : "false"));
  });
  return r;
}

SuiteResult flat(const SweepOptions& o) {
  SuiteResult r{"flat", 0, {}, {}};
  // Functionals grouped by the smallest basic flat containing them.
  using Key = std::vector<std::pair<Reflection, int>>;
  std::map<Key, std::vector<Functional>> flats;
  // Five pairwise well-separated coordinates need a span of at least 8.
  const int radius = o.n <= 4 ? 3 : 5;
  for_each_vector(o.n - 1, -radius, radius, [&](const std::vector<long long>& tail) {
    std::vector<long long> v{0};
    v.insert(v.end(), tail.begin(), tail.end());
    const Functional f(v);
    Key key;
    for (const auto& t : all_reflections(o.n))
      if (std::llabs(pair(f, t)) == 1) key.emplace_back(t, static_cast<int>(pair(f, t)));
    flats[key].push_back(f);
  });
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, o.n, o.caps);
  std::mt19937_64 rng(o.seed);
  const std::size_t per_cell = static_cast<std::size_t>(std::max(3, o.samples));
  int flats_compared = 0, cells_compared = 0;
  for (auto& [key, members] : flats) {
    if (members.size() < 3) continue;
    seeded_shuffle(members, rng);
    bool compared = false;
    for (const Cell& K : flat_partition(BasicFlat(o.n, key), o.caps)) {
      std::vector<const Functional*> chosen;
      for (const Functional& f : members) {
        if (chosen.size() == per_cell) break;
        if (!genericity_violation(f, K)) chosen.push_back(&f);
      }
      if (chosen.size() < 3) continue;
      compared = true;
      ++cells_compared;
      std::optional<Character> reference;
      std::string reference_f;
      for (const Functional* f : chosen) {
        // Any base point of the cell gives the same representation.
        for (const Permutation& v : {K.members.front(), K.members.back()}) {
          const Character chi =
              character(build_from_functional(*f, v, Normalization::Seminormal, std::nullopt, o.caps), classes);
          ++r.checks;
          if (!reference) {
            reference = chi;
            reference_f = f->str();
          } else if (chi != *reference) {
            r.failures.push_back("flat cell of " + K.members.front().str() + ": f = " + f->str() + " and f = " +
                                 reference_f + " give different characters");
          }
        }
      }
    }
    if (compared) ++flats_compared;
  }
  r.notes.push_back(std::to_string(flats.size()) + " flats met; " + std::to_string(flats_compared) + " flats and " +
                    std::to_string(cells_compared) + " cells compared across at least 3 generic functionals");
  return r;
}

SuiteResult minimal(const SweepOptions& o) {
  SuiteResult r{"minimal", 0, {}, {}};
  std::set<std::vector<Permutation>> family;
  const auto group = symmetric_group(o.n, o.caps);
  for (const SkewShape& shape : skew_shapes(o.n)) {
    for (const Tableau& Q : enumerate_standard(shape)) {
      const auto B = standard_relabellings(Q, o.caps);
      for (const Permutation& sigma : group) {
        std::vector<Permutation> S;
        for (const auto& p : B) S.push_back(sigma * p);
        std::sort(S.begin(), S.end());
        family.insert(std::move(S));
      }
    }
  }
  for (const auto& S : family) {
    ++r.checks;
    const auto witness = minimal_ay_cell_witness(S, o.caps);
    if (!witness) {
      r.failures.push_back("translate starting at " + S.front().str() + " of size " + std::to_string(S.size()) + " rejected");
      continue;
    }
    std::vector<Permutation> translate;
    for (const auto& u : S) translate.push_back(witness->sigma.inverse() * u);
    std::sort(translate.begin(), translate.end());
    auto B = standard_relabellings(witness->tableau, o.caps);
    std::sort(B.begin(), B.end());
    if (translate != B) r.failures.push_back("witness for a set of size " + std::to_string(S.size()) + " does not check out");
  }
  // Random connected subsets: accepted exactly when they are in the family.
  std::mt19937_64 rng(o.seed);
  for (int trial = 0; trial < 200 * o.samples; ++trial) {
    std::set<Permutation> S{group[rng() % group.size()]};
    const int target = std::min<int>(1 + static_cast<int>(rng() % 5), static_cast<int>(group.size()));
    while (static_cast<int>(S.size()) < target) {
      auto it = S.begin();
      std::advance(it, static_cast<long>(rng() % S.size()));
      S.insert(*it * Permutation::simple_reflection(o.n, 1 + static_cast<int>(rng() % (o.n - 1))));
    }
    std::vector<Permutation> v(S.begin(), S.end());
    ++r.checks;
    if (is_minimal_ay_cell(v, o.caps) != family.contains(v))
      r.failures.push_back("subset starting at " + v.front().str() + " of size " + std::to_string(v.size()) + " misclassified");
  }
  r.notes.push_back(std::to_string(family.size()) + " sets sigma B_Q");
  return r;
}

SuiteResult induction(const SweepOptions& o) {
  SuiteResult r{"induction", 0, {}, {}};
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, o.n, o.caps);
  for (unsigned mask = 0; mask < (1u << (o.n - 1)); ++mask) {
    std::vector<int> J;
    for (int j = 1; j < o.n; ++j)
      if (mask & (1u << (j - 1))) J.push_back(j);
    const auto blocks = parabolic_blocks(o.n, J);
    std::vector<Partition> shapes(blocks.size());
    std::function<void(std::size_t)> choose = [&](std::size_t b) {
      if (b == blocks.size()) {
        std::string name = "J = {";
        for (std::size_t i = 0; i < J.size(); ++i) name += (i ? "," : "") + std::to_string(J[i]);
        name += "}";
        const Representation psi = block_specht(o.n, J, shapes, o.caps);
        const Representation rho = induce(psi, o.caps);
        ++r.checks;
        if (!verify_coxeter(rho) || !verify_axiom_B(rho)) r.failures.push_back(name + ": induced matrices fail verification");
        const Character chi = character(rho, classes);
        ++r.checks;
        if (chi != classical_induced_character(o.n, J, block_product_values(o.n, J, shapes, o.caps), classes, o.caps))
          r.failures.push_back(name + ": induced character differs from the classical formula");
        ++r.checks;
        if (chi != classical_induced_character(o.n, J, element_traces(psi, o.caps), classes, o.caps))
          r.failures.push_back(name + ": induced character differs from induction of the traces of psi");
        return;
      }
      for (const Partition& lambda : partitions(static_cast<int>(blocks[b].size()))) {
        shapes[b] = lambda;
        choose(b + 1);
      }
    };
    choose(0);
  }
  // Shuffle cells of two row tableaux.
  for (int k = 0; k <= o.n; ++k) {
    for (const Partition& lambda : partitions(k)) {
      for (const Partition& mu : partitions(o.n - k)) {
        const BipartiteTableau PQ = row_pair(lambda, mu);
        long long binom = 1;
        for (int i = 1; i <= k; ++i) binom = binom * (o.n - k + i) / i;
        const long long expected = hook_length_count(lambda) * hook_length_count(mu) * binom;
        ++r.checks;
        const auto size = static_cast<long long>(shuffle_cell(PQ.P, PQ.Q, o.caps).size());
        if (size != expected)
          r.failures.push_back("shuffle cell has " + std::to_string(size) + " elements, expected " + std::to_string(expected));
      }
    }
  }
  return r;
}

SuiteResult bn(const SweepOptions& o) {
  SuiteResult r{"bn", 0, {}, {}};
  long long dim_squares = 0;
  for (const auto& [lambda, mu] : bipartitions(o.n)) {
    const BipartiteTableau PQ = row_pair(lambda, mu);
    std::string name = "(";
    for (int x : lambda) name += std::to_string(x) + ",";
    name += "|";
    for (int x : mu) name += std::to_string(x) + ",";
    name += ")";

    const Representation ext = extend_to_bn(PQ.P, PQ.Q, o.caps);
    const Representation cls = bn_classical(lambda, mu);
    dim_squares += static_cast<long long>(ext.dimension()) * ext.dimension();
    r.checks += 3;
    if (!verify_coxeter(ext)) r.failures.push_back(name + ": extension fails the Coxeter relations");
    if (!verify_coxeter(cls)) r.failures.push_back(name + ": classical form fails the Coxeter relations");
    if (!is_irreducible(ext, o.caps)) r.failures.push_back(name + ": extension is not irreducible");

    ++r.checks;
    if (auto diff = classical_mismatch(ext, cls, PQ)) r.failures.push_back(name + ": extension and classical form differ: " + *diff);
  }
  long long order = 1;
  for (int i = 1; i <= o.n; ++i) order *= 2 * i;
  ++r.checks;
  if (dim_squares != order)
    r.failures.push_back("sum of squared dimensions " + std::to_string(dim_squares) + " != " + std::to_string(order));
  return r;
}

SuiteResult tops(const SweepOptions& o) {
  SuiteResult r{"tops", 0, {}, {}};
  const TopReport report = top_elements(o.n, o.caps);
  ++r.checks;
  if (!report.down_matches_oracle) r.failures.push_back("column-word candidates differ from the oracle set");
  for (const auto& e : report.oracle) {
    ++r.checks;
    if (!e.witness.irreducible) r.failures.push_back(e.element.str() + ": interval representation is reducible");
  }
  r.notes = report.discrepancies;
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coxeter", "axiomB",  "flat",    "specht",    "cells", "regular",
                                              "convex",  "generic", "minimal", "induction", "bn",    "tops"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SweepOptions& o) {
  if (o.n < 1) throw DomainError("sweeps need n >= 1");
  if (name == "coxeter") return coxeter(o);
  if (name == "axiomB") return axiom_b(o);
  if (name == "flat") return flat(o);
  if (name == "specht") return specht(o);
  if (name == "cells") return cells(o);
  if (name == "regular") return regular(o);
  if (name == "convex") return convex(o);
  if (name == "generic") return generic(o);
  if (name == "minimal") return minimal(o);
  if (name == "induction") return induction(o);
  if (name == "bn") return bn(o);
  if (name == "tops") return tops(o);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace ayrep
