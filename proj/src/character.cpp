#include "ayrep/character.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "ayrep/error.hpp"

namespace ayrep {
namespace {

std::string join(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / z_lambda, z_lambda = prod_i i^{m_i} m_i!.
long long class_size_from_cycle_type(const Partition& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  long long z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return factorial(n) / z;
}

template <class Scalar>
void check_full(const BasicRepresentation<Scalar>& rep) {
  if (rep.generators != coxeter_generators(rep.type, rep.n))
    throw DomainError("characters need every Coxeter generator; this representation lives on a parabolic subgroup");
}

template <class Scalar>
std::vector<Scalar> traces_by_dfs(const BasicRepresentation<Scalar>& rep, const GroupCaps& caps) {
  const GroupListing G = enumerate_parabolic(rep.type, rep.n, rep.generators, caps);
  const auto children = G.children();
  std::vector<Scalar> out(G.size());
  std::map<int, const Matrix<Scalar>*> by_generator;
  for (std::size_t k = 0; k < rep.generators.size(); ++k) by_generator[rep.generators[k]] = &rep.matrices[k];

  // rho(w s) = rho(w) M_s along the breadth-first tree.
  std::function<void(std::size_t, const Matrix<Scalar>&)> visit = [&](std::size_t node, const Matrix<Scalar>& rho) {
    out[node] = rho.trace();
    for (std::size_t child : children[node]) visit(child, rho * *by_generator.at(G.last_generator[child]));
  };
  visit(0, Matrix<Scalar>::identity(rep.dimension()));
  return out;
}

// Border strips lambda/nu of size r with mu inside nu; returns (nu, height).
std::vector<std::pair<Partition, int>> border_strips(const Partition& lambda, const Partition& mu, int r) {
  std::vector<std::pair<Partition, int>> out;
  const std::size_t rows = lambda.size();
  Partition nu(rows, 0);
  std::function<void(std::size_t, int)> choose = [&](std::size_t row, int removed) {
    if (removed > r) return;
    if (row == rows) {
      if (removed != r) return;
      // Connected and without 2x2 squares: consecutive nonempty rows of the
      // strip must overlap in exactly one column.
      int first = -1, last = -1;
      for (std::size_t i = 0; i < rows; ++i) {
        if (nu[i] == lambda[i]) continue;
        if (first < 0) first = static_cast<int>(i);
        if (last >= 0 && last != static_cast<int>(i) - 1) return;
        last = static_cast<int>(i);
      }
      if (first < 0) return;
      for (int i = first; i < last; ++i)
        if (nu[static_cast<std::size_t>(i)] + 1 != lambda[static_cast<std::size_t>(i) + 1]) return;
      out.emplace_back(nu, last - first);
      return;
    }
    const int lo = row < mu.size() ? mu[row] : 0;
    for (int v = lo; v <= lambda[row]; ++v) {
      if (row > 0 && v > nu[row - 1]) break;
      nu[row] = v;
      choose(row + 1, removed + lambda[row] - v);
    }
  };
  choose(0, 0);
  return out;
}

long long mn_recursive(const Partition& lambda, const Partition& mu, std::vector<int>& parts) {
  if (parts.empty()) {
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] != (i < mu.size() ? mu[i] : 0)) return 0;
    return 1;
  }
  const int r = parts.back();
  parts.pop_back();
  long long total = 0;
  for (const auto& [nu, height] : border_strips(lambda, mu, r))
    total += (height % 2 ? -1 : 1) * mn_recursive(nu, mu, parts);
  parts.push_back(r);
  return total;
}

}  // namespace

std::size_t ConjugacyClasses::class_of(const SignedPermutation& w) const {
  auto it = lookup_.find(w);
  if (it == lookup_.end()) throw DomainError("element " + w.str() + " is not in the group");
  return it->second;
}

Partition cycle_type(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Partition out;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string signed_cycle_type(const SignedPermutation& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Partition pos, neg;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, negatives = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = std::abs(w(j))) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
      if (w(j) < 0) ++negatives;
    }
    (negatives % 2 ? neg : pos).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return join(pos) + "|" + join(neg);
}

ConjugacyClasses conjugacy_classes(CoxeterType type, int n, const GroupCaps& caps) {
  const GroupListing G = enumerate_group(type, n, caps);
  ConjugacyClasses out;
  out.type = type;
  out.n = n;
  out.group_order = static_cast<long long>(G.size());

  if (type == CoxeterType::A) {
    std::map<Partition, std::size_t> by_type;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const Partition ct = cycle_type(G.elements[k].to_permutation());
      auto [it, fresh] = by_type.emplace(ct, out.representatives.size());
      if (fresh) {
        out.representatives.push_back(G.elements[k]);
        out.words.push_back(G.words[k]);
        out.sizes.push_back(class_size_from_cycle_type(ct));
        out.labels.push_back(join(ct));
        out.cycle_types.push_back(ct);
      }
      out.lookup_.emplace(G.elements[k], it->second);
    }
    return out;
  }

  // Type B: close each unassigned element under conjugation by generators.
  std::vector<SignedPermutation> gens;
  for (int g : G.generators) gens.push_back(SignedPermutation::generator(n, g));
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (out.lookup_.contains(G.elements[k])) continue;
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(G.elements[k]);
    out.words.push_back(G.words[k]);
    out.labels.push_back(signed_cycle_type(G.elements[k]));
    long long size = 0;
    std::deque<SignedPermutation> queue{G.elements[k]};
    out.lookup_.emplace(G.elements[k], id);
    while (!queue.empty()) {
      const SignedPermutation x = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& s : gens) {
        SignedPermutation y = s * x * s;
        if (out.lookup_.emplace(y, id).second) queue.push_back(std::move(y));
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

Rational trace_of_word(const Representation& rep, const std::vector<int>& word) {
  Matrix<Rational> rho = Matrix<Rational>::identity(rep.dimension());
  for (int g : word) rho = rho * rep.matrix_for(g);
  return rho.trace();
}

Character character(const Representation& rep, const ConjugacyClasses& classes) {
  check_full(rep);
  if (classes.type != rep.type || classes.n != rep.n) throw DomainError("classes belong to a different group");
  Character chi;
  chi.type = rep.type;
  chi.n = rep.n;
  for (const auto& word : classes.words) chi.values.push_back(trace_of_word(rep, word));
  return chi;
}

Character character(const Representation& rep, const GroupCaps& caps) {
  return character(rep, conjugacy_classes(rep.type, rep.n, caps));
}

std::vector<Rational> element_traces(const Representation& rep, const GroupCaps& caps) { return traces_by_dfs(rep, caps); }

std::vector<double> element_traces(const FloatRepresentation& rep, const GroupCaps& caps) {
  return traces_by_dfs(rep, caps);
}

Rational char_inner(const Character& a, const Character& b, const ConjugacyClasses& classes) {
  if (a.values.size() != classes.size() || b.values.size() != classes.size())
    throw DomainError("characters do not match the class list");
  Rational sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) sum += ratio(classes.sizes[c]) * a.values[c] * b.values[c];
  return sum / ratio(classes.group_order);
}

bool is_irreducible(const Representation& rep, const GroupCaps& caps) {
  const ConjugacyClasses classes = conjugacy_classes(rep.type, rep.n, caps);
  const Character chi = character(rep, classes);
  return char_inner(chi, chi, classes) == 1;
}

long long mn_character(const SkewShape& shape, const Partition& cycle_type) {
  const int total = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (total != shape.size())
    throw DomainError("cycle type of size " + std::to_string(total) + " does not match shape " + shape.str());
  for (int part : cycle_type)
    if (part < 1) throw DomainError("cycle type parts must be positive");
  std::vector<int> parts(cycle_type.begin(), cycle_type.end());
  return mn_recursive(shape.lambda(), shape.mu(), parts);
}

Character mn_class_function(const SkewShape& shape, const ConjugacyClasses& classes) {
  if (classes.type != CoxeterType::A) throw DomainError("the Murnaghan-Nakayama rule is for S_n");
  Character chi;
  chi.n = classes.n;
  for (const Partition& ct : classes.cycle_types) chi.values.push_back(ratio(mn_character(shape, ct)));
  return chi;
}

}  // namespace ayrep
