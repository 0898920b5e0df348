#include "ayrep/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "ayrep/error.hpp"

namespace ayrep {

Functional Functional::parse(std::string_view text) {
  std::vector<long long> coords;
  std::string token;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == ',') {
      if (token.empty()) throw DomainError("empty coordinate in functional '" + std::string(text) + "'");
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw DomainError("bad coordinate '" + token + "'");
      coords.push_back(v);
      token.clear();
    } else if (text[pos] != ' ') {
      token += text[pos];
    }
  }
  return Functional(std::move(coords));
}

std::string Functional::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out;
}

long long pair(const Functional& f, const Reflection& t) {
  if (t.i < 1 || t.j > f.size() || t.i >= t.j) throw DomainError("reflection " + t.str() + " does not fit functional of length " + std::to_string(f.size()));
  return f(t.j) - f(t.i);
}

GroupCaps GroupCaps::from_environment() {
  GroupCaps caps;
  if (const char* env = std::getenv("AYREP_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) caps.max_n_a = caps.max_n_b = static_cast<int>(v);
  }
  return caps;
}

std::vector<int> coxeter_generators(CoxeterType type, int n) {
  std::vector<int> gens;
  for (int i = type == CoxeterType::A ? 1 : 0; i < n; ++i) gens.push_back(i);
  return gens;
}

int coxeter_m(CoxeterType type, int s, int t) {
  if (s == t) return 1;
  if (std::abs(s - t) > 1) return 2;
  if (type == CoxeterType::B && std::min(s, t) == 0) return 4;
  return 3;
}

std::optional<std::size_t> GroupListing::find(const SignedPermutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupListing::index_of(const SignedPermutation& w) const {
  auto idx = find(w);
  if (!idx) throw DomainError("element " + w.str() + " is not in the enumerated group");
  return *idx;
}

std::vector<std::vector<std::size_t>> GroupListing::children() const {
  std::vector<std::vector<std::size_t>> out(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (parent[k] >= 0) out[static_cast<std::size_t>(parent[k])].push_back(k);
  return out;
}

GroupListing enumerate_parabolic(CoxeterType type, int n, std::vector<int> generators, const GroupCaps& caps) {
  if (n < 1) throw DomainError("group rank must be at least 1");
  if (n > caps.cap_for(type))
    throw SizeLimitError(std::string("n = ") + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(caps.cap_for(type)) + " for type " + (type == CoxeterType::A ? "A" : "B"));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  const int lowest = type == CoxeterType::A ? 1 : 0;
  for (int g : generators)
    if (g < lowest || g >= n) throw DomainError("s_" + std::to_string(g) + " is not a generator");

  GroupListing out;
  out.type = type;
  out.n = n;
  out.generators = generators;
  std::vector<SignedPermutation> gen_elems;
  for (int g : generators) gen_elems.push_back(SignedPermutation::generator(n, g));

  auto add = [&](SignedPermutation w, std::ptrdiff_t parent, int gen) {
    out.index_.emplace(w, out.elements.size());
    std::vector<int> word = parent >= 0 ? out.words[static_cast<std::size_t>(parent)] : std::vector<int>{};
    if (parent >= 0) word.push_back(gen);
    out.elements.push_back(std::move(w));
    out.words.push_back(std::move(word));
    out.parent.push_back(parent);
    out.last_generator.push_back(gen);
  };
  add(SignedPermutation::identity(n), -1, -1);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      SignedPermutation next = out.elements[head] * gen_elems[g];
      if (!out.index_.contains(next)) add(std::move(next), static_cast<std::ptrdiff_t>(head), generators[g]);
    }
  }
  return out;
}

GroupListing enumerate_group(CoxeterType type, int n, const GroupCaps& caps) {
  return enumerate_parabolic(type, n, coxeter_generators(type, n), caps);
}

std::vector<Permutation> symmetric_group(int n, const GroupCaps& caps) {
  const GroupListing g = enumerate_group(CoxeterType::A, n, caps);
  std::vector<Permutation> out;
  out.reserve(g.size());
  for (const auto& e : g.elements) out.push_back(e.to_permutation());
  return out;
}

std::vector<Permutation> weak_interval(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    Permutation u = std::move(queue.front());
    queue.pop_front();
    for (int k = 1; k < u.size(); ++k) {
      if (u(k) < u(k + 1)) continue;  // not a right descent
      Permutation down = u * Permutation::simple_reflection(u.size(), k);
      if (seen.insert(down).second) queue.push_back(std::move(down));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) { return length(a) < length(b); });
  return out;
}

bool is_convex(std::span<const Permutation> K) {
  if (K.empty()) throw DomainError("is_convex needs a nonempty set");
  const int n = K.front().size();
  for (const auto& w : K)
    if (w.size() != n) throw DomainError("is_convex: mixed degrees");
  const std::set<Permutation> members(K.begin(), K.end());

  std::vector<std::pair<Reflection, bool>> halfspaces;
  std::vector<Permutation> inverses;
  for (const auto& w : members) inverses.push_back(w.inverse());
  for (const Reflection& t : all_reflections(n)) {
    const bool side = is_left_descent_inv(inverses.front(), t);
    if (std::all_of(inverses.begin(), inverses.end(), [&](const Permutation& inv) { return is_left_descent_inv(inv, t) == side; }))
      halfspaces.emplace_back(t, side);
  }
  // Enumerate the hull directly: the constraints fix the relative order of
  // some value pairs, so walk S_n and count.
  std::size_t hull = 0;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation inv = Permutation(images).inverse();
    bool inside = true;
    for (const auto& [t, side] : halfspaces)
      if (is_left_descent_inv(inv, t) != side) {
        inside = false;
        break;
      }
    if (inside && ++hull > members.size()) return false;
  } while (std::next_permutation(images.begin(), images.end()));
  return hull == members.size();
}

std::vector<Permutation> minimal_coset_reps(int n, std::span<const int> J, const GroupCaps& caps) {
  for (int j : J)
    if (j < 1 || j >= n) throw DomainError("s_" + std::to_string(j) + " is not a generator of S_" + std::to_string(n));
  std::vector<Permutation> out;
  for (const Permutation& w : symmetric_group(n, caps)) {
    const Permutation inv = w.inverse();
    if (std::none_of(J.begin(), J.end(), [&](int j) { return inv(j) > inv(j + 1); })) out.push_back(w);
  }
  return out;
}

}  // namespace ayrep
