#include "ayrep/cells.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "ayrep/error.hpp"

namespace ayrep {
namespace {

std::vector<bool> descent_signature(const Permutation& w, std::span<const Reflection> A) {
  const Permutation inv = w.inverse();
  std::vector<bool> sig;
  sig.reserve(A.size());
  for (const Reflection& t : A) sig.push_back(is_left_descent_inv(inv, t));
  return sig;
}

int degree_of(std::span<const Permutation> K) {
  if (K.empty()) throw DomainError("empty set of permutations");
  const int n = K.front().size();
  for (const auto& w : K)
    if (w.size() != n) throw DomainError("permutations of mixed degree");
  return n;
}

}  // namespace

bool Cell::contains(const Permutation& w) const { return index_of(w).has_value(); }

std::optional<std::size_t> Cell::index_of(const Permutation& w) const {
  auto it = std::find(members.begin(), members.end(), w);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Cell make_cell(std::vector<Permutation> members) {
  const int n = degree_of(members);
  return make_cell(std::move(members), coxeter_generators(CoxeterType::A, n));
}

Cell make_cell(std::vector<Permutation> members, std::vector<int> generators) {
  Cell cell;
  const int n = degree_of(members);
  for (int k : generators)
    if (k < 1 || k >= n) throw DomainError("s_" + std::to_string(k) + " is not a generator of S_" + std::to_string(n));
  const std::set<Permutation> lookup(members.begin(), members.end());
  std::set<Reflection> interior, boundary;
  for (const Permutation& w : lookup) {
    for (int k : generators) {
      const Reflection t = conjugate_simple(w, k);
      if (lookup.contains(w * Permutation::simple_reflection(n, k)))
        interior.insert(t);
      else
        boundary.insert(t);
    }
  }
  cell.members = std::move(members);
  cell.generators = std::move(generators);
  cell.interior.assign(interior.begin(), interior.end());
  cell.boundary.assign(boundary.begin(), boundary.end());
  return cell;
}

std::vector<Reflection> boundary_reflections(const Functional& f) {
  std::vector<Reflection> out;
  for (const Reflection& t : all_reflections(f.size()))
    if (std::llabs(pair(f, t)) == 1) out.push_back(t);
  return out;
}

Cell descent_cell(const Functional& f, const Permutation& w, const GroupCaps& caps) {
  if (f.size() != w.size()) throw DomainError("descent_cell: functional and permutation have different degree");
  const std::vector<Reflection> A = boundary_reflections(f);
  const std::vector<bool> target = descent_signature(w, A);
  std::vector<Permutation> members;
  for (const Permutation& v : symmetric_group(f.size(), caps))
    if (descent_signature(v, A) == target) members.push_back(v);
  return make_cell(std::move(members));
}

std::optional<std::string> genericity_violation(const Functional& f, const Cell& K) {
  if (K.members.empty()) return "empty cell";
  const int n = K.members.front().size();
  if (f.size() != n) throw DomainError("functional length does not match the cell degree");
  for (const Reflection& t : K.interior) {
    const long long v = pair(f, t);
    if (std::llabs(v) <= 1)
      return "condition (i): <f,alpha" + t.str() + "> = " + std::to_string(v) + " on an interior reflection";
  }
  for (const Reflection& t : K.boundary) {
    const long long v = pair(f, t);
    if (std::llabs(v) != 1)
      return "condition (ii): <f,alpha" + t.str() + "> = " + std::to_string(v) + " on a boundary reflection";
  }
  const std::set<Permutation> lookup(K.members.begin(), K.members.end());
  const std::set<int> gens(K.generators.begin(), K.generators.end());
  for (const Permutation& w : K.members) {
    for (int k = 1; k + 1 < n; ++k) {
      if (!gens.contains(k) || !gens.contains(k + 1)) continue;
      if (lookup.contains(w * Permutation::simple_reflection(n, k)) ||
          lookup.contains(w * Permutation::simple_reflection(n, k + 1)))
        continue;
      const long long a = f.on_simple_image(w, k), b = f.on_simple_image(w, k + 1);
      if (a != b)
        return "condition (iii): at w = " + w.str() + " the boundary pairings for s_" + std::to_string(k) + " and s_" +
               std::to_string(k + 1) + " are " + std::to_string(a) + " and " + std::to_string(b);
    }
  }
  return std::nullopt;
}

bool is_generic(const Functional& f, const Cell& K) {
  if (K.members.empty()) throw PreconditionError("is_generic: empty cell");
  const int n = K.members.front().size();
  if (!K.contains(Permutation::identity(n))) throw PreconditionError("is_generic: the cell must contain the identity");
  if (!is_convex(K.members)) throw PreconditionError("is_generic: the cell must be convex");
  return !genericity_violation(f, K).has_value();
}

bool is_generic_integer(const Functional& f) {
  const int n = f.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (f(i) != f(j)) continue;
      bool plus = false, minus = false;
      for (int r = i + 1; r < j; ++r) {
        plus = plus || f(r) - f(i) == 1;
        minus = minus || f(r) - f(i) == -1;
      }
      if (!plus || !minus) return false;
    }
  }
  return true;
}

std::vector<std::pair<Permutation, Tableau>> cell_tableau_bijection(const Functional& f, const Tableau& Q, const GroupCaps& caps) {
  if (!Q.is_standard()) throw DomainError("cell_tableau_bijection needs a standard tableau");
  if (f.size() != Q.size()) throw DomainError("cell_tableau_bijection: functional length differs from the tableau size");
  if (f.size() >= 2 && derived(f.coords) != derived(content_vector(Q)))
    throw DomainError("cell_tableau_bijection: derived(f) differs from the derived content vector of Q");
  if (!is_generic_integer(f)) throw DomainError("cell_tableau_bijection: f is not generic");
  const Cell K = descent_cell(f, Permutation::identity(f.size()), caps);
  std::vector<std::pair<Permutation, Tableau>> out;
  for (const Permutation& pi : K.members) out.emplace_back(pi, relabel(Q, pi));
  return out;
}

std::vector<Permutation> standard_relabellings(const Tableau& Q, const GroupCaps& caps) {
  if (!Q.is_standard()) throw DomainError("standard_relabellings needs a standard tableau");
  std::vector<Permutation> out;
  for (const Permutation& pi : symmetric_group(Q.size(), caps))
    if (relabel(Q, pi).is_standard()) out.push_back(pi);
  return out;
}

namespace {

// Content vector c with {pi : Des_{A_c}(pi) = empty} == target, where target
// contains the identity.
std::optional<ContentVector> reconstruct_content(const std::set<Permutation>& target, const GroupCaps& caps) {
  const int n = target.begin()->size();
  const Cell K = make_cell(std::vector<Permutation>(target.begin(), target.end()));
  // Reflections that must pair to +-1, and those that must avoid {0, +-1}.
  std::vector<std::vector<int>> need(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (const Reflection& t : K.boundary) need[static_cast<std::size_t>(t.i)][static_cast<std::size_t>(t.j)] = 1;
  for (const Reflection& t : K.interior) need[static_cast<std::size_t>(t.i)][static_cast<std::size_t>(t.j)] = 2;
  // A reflection inverted by some member can never pair to +-1.
  std::vector<std::vector<bool>> inverted(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (const Permutation& w : target) {
    const Permutation inv = w.inverse();
    for (const Reflection& t : all_reflections(n))
      if (is_left_descent_inv(inv, t)) inverted[static_cast<std::size_t>(t.i)][static_cast<std::size_t>(t.j)] = true;
  }
  const std::vector<Permutation> group = symmetric_group(n, caps);
  const long long bound = 2LL * (n - 1);
  ContentVector c(static_cast<std::size_t>(n), 0);

  std::function<bool(int)> place = [&](int j) -> bool {  // j is 0-based
    if (j == n) {
      const Functional f(c);
      const std::vector<Reflection> A = boundary_reflections(f);
      for (const Permutation& pi : group) {
        const bool in_class = descent_signature(pi, A) == std::vector<bool>(A.size(), false);
        if (in_class != target.contains(pi)) return false;
      }
      return true;
    }
    // Try neighbours of the previous content first so single rows come out first.
    std::vector<long long> candidates;
    for (long long d : {1LL, -1LL}) candidates.push_back(c[static_cast<std::size_t>(j - 1)] + d);
    for (long long v = -bound; v <= bound; ++v)
      if (std::llabs(v - c[static_cast<std::size_t>(j - 1)]) != 1) candidates.push_back(v);
    for (long long v : candidates) {
      c[static_cast<std::size_t>(j)] = v;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        const long long diff = std::llabs(v - c[static_cast<std::size_t>(i)]);
        const int kind = need[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)];
        if (kind == 1 && diff != 1) ok = false;
        if (kind == 2 && diff <= 1) ok = false;
        if (diff == 1 && inverted[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)]) ok = false;
        if (diff == 0) {
          bool up = false, down = false;
          for (int r = i + 1; r < j; ++r) {
            up = up || c[static_cast<std::size_t>(r)] == v + 1;
            down = down || c[static_cast<std::size_t>(r)] == v - 1;
          }
          ok = ok && up && down;
        }
      }
      if (ok && place(j + 1)) return true;
    }
    return false;
  };
  if (place(1)) return c;
  return std::nullopt;
}

}  // namespace

std::optional<MinimalCellWitness> minimal_ay_cell_witness(std::span<const Permutation> K, const GroupCaps& caps) {
  const int n = degree_of(K);
  if (n > caps.max_n_a) throw SizeLimitError("minimal_ay_cell_witness: degree exceeds the enumeration cap");
  if (!is_convex(K)) return std::nullopt;
  const std::set<Permutation> members(K.begin(), K.end());
  for (const Permutation& sigma : members) {
    const Permutation sigma_inv = sigma.inverse();
    std::set<Permutation> translate;
    for (const Permutation& w : members) translate.insert(sigma_inv * w);
    if (auto c = reconstruct_content(translate, caps)) return MinimalCellWitness{sigma, tableau_from_content(*c)};
  }
  return std::nullopt;
}

bool is_minimal_ay_cell(std::span<const Permutation> K, const GroupCaps& caps) {
  return minimal_ay_cell_witness(K, caps).has_value();
}

BasicFlat::BasicFlat(int n, std::vector<std::pair<Reflection, int>> constraints)
    : n_(n), constraints_(std::move(constraints)) {
  if (n < 1) throw DomainError("BasicFlat: n must be positive");
  std::map<Reflection, int> sign_of;
  for (const auto& [t, eps] : constraints_) {
    if (t.i < 1 || t.j > n || t.i >= t.j) throw DomainError("BasicFlat: reflection " + t.str() + " outside S_" + std::to_string(n));
    if (eps != 1 && eps != -1) throw DomainError("BasicFlat: epsilon must be +1 or -1");
    auto [it, inserted] = sign_of.emplace(t, eps);
    if (!inserted && it->second != eps) throw DomainError("BasicFlat: inconsistent signs on " + t.str());
  }
  // Solve f_j - f_i = eps by propagation from each component root.
  root_.assign(static_cast<std::size_t>(n) + 1, 0);
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [t, eps] : constraints_) {
    adj[static_cast<std::size_t>(t.i)].emplace_back(t.j, eps);
    adj[static_cast<std::size_t>(t.j)].emplace_back(t.i, -eps);
  }
  for (int start = 1; start <= n; ++start) {
    if (root_[static_cast<std::size_t>(start)] != 0) continue;
    root_[static_cast<std::size_t>(start)] = start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, d] : adj[static_cast<std::size_t>(u)]) {
        const long long want = offset_[static_cast<std::size_t>(u)] + d;
        if (root_[static_cast<std::size_t>(v)] == 0) {
          root_[static_cast<std::size_t>(v)] = start;
          offset_[static_cast<std::size_t>(v)] = want;
          stack.push_back(v);
        } else if (offset_[static_cast<std::size_t>(v)] != want) {
          throw DomainError("BasicFlat: the hyperplanes have empty intersection");
        }
      }
    }
  }
}

std::vector<Reflection> BasicFlat::reflections() const {
  std::vector<Reflection> out;
  for (const Reflection& t : all_reflections(n_)) {
    const auto i = static_cast<std::size_t>(t.i), j = static_cast<std::size_t>(t.j);
    if (root_[i] == root_[j] && std::llabs(offset_[j] - offset_[i]) == 1) out.push_back(t);
  }
  return out;
}

bool BasicFlat::contains(const Functional& f) const {
  if (f.size() != n_) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return pair(f, c.first) == c.second; });
}

std::vector<Cell> flat_partition(const BasicFlat& L, const GroupCaps& caps) {
  const std::vector<Reflection> A = L.reflections();
  std::map<std::vector<bool>, std::size_t> class_of;
  std::vector<std::vector<Permutation>> classes;
  for (const Permutation& w : symmetric_group(L.n(), caps)) {
    auto sig = descent_signature(w, A);
    auto [it, inserted] = class_of.emplace(std::move(sig), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(w);
  }
  std::vector<Cell> out;
  for (auto& members : classes) out.push_back(make_cell(std::move(members)));
  return out;
}

}  // namespace ayrep
