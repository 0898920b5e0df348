#include "ayrep/hyperoctahedral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <type_traits>

#include "ayrep/error.hpp"
#include "ayrep/induction.hpp"

namespace ayrep {
namespace {

Tableau empty_tableau() { return Tableau(SkewShape(Partition{}), {}); }

std::vector<Tableau> standard_or_empty(const Partition& shape) {
  const SkewShape s(shape);
  if (s.size() == 0) return {empty_tableau()};
  return enumerate_standard(s);
}

Tableau map_entries(const Tableau& T, const std::function<int(int)>& f) {
  std::vector<std::vector<int>> rows = T.rows();
  for (auto& row : rows)
    for (int& v : row) v = f(v);
  return Tableau(T.shape(), std::move(rows));
}

std::string compact(const Tableau& T) {
  if (T.size() == 0) return "-";
  std::string out;
  for (std::size_t r = 0; r < T.rows().size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < T.rows()[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(T.rows()[r][c]);
    }
  }
  return out;
}

template <class Scalar>
Scalar inverse_of(long long h) {
  if constexpr (std::is_same_v<Scalar, double>)
    return 1.0 / static_cast<double>(h);
  else
    return ratio(1, h);
}

// b for an interior step with diagonal a; `first` says the lower letter
// comes first in the reference order (the "up" direction).
template <class Scalar>
Scalar off_diagonal(const Scalar& a, bool first) {
  if constexpr (std::is_same_v<Scalar, double>)
    return std::sqrt(1.0 - a * a);
  else
    return first ? Rational(1) : Rational(1 - a * a);
}

template <class Scalar>
BasicRepresentation<Scalar> extend(const Tableau& P, const Tableau& Q, const GroupCaps& caps) {
  const int k = P.size();
  const int n = k + Q.size();
  const std::vector<Permutation> cell = shuffle_cell(P, Q, caps);
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < cell.size(); ++i) index.emplace(cell[i], static_cast<int>(i));
  const auto content = [&](int letter) { return (letter <= k ? P : Q).find(letter)->content(); };

  BasicRepresentation<Scalar> rep;
  rep.type = CoxeterType::B;
  rep.n = n;
  rep.generators = coxeter_generators(CoxeterType::B, n);
  rep.normalization = std::is_same_v<Scalar, double> ? Normalization::OrthogonalFloat : Normalization::Seminormal;
  for (const Permutation& pi : cell) {
    rep.basis_labels.push_back(pi.str());
    rep.cell.emplace_back(pi);
  }
  const int dim = static_cast<int>(cell.size());
  for (int g : rep.generators) {
    Matrix<Scalar> M(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const Permutation& pi = cell[static_cast<std::size_t>(col)];
      if (g == 0) {
        M(col, col) = pi(1) <= k ? Scalar(1) : Scalar(-1);
        continue;
      }
      const int x = pi(g), y = pi(g + 1);
      auto it = index.find(pi * Permutation::simple_reflection(n, g));
      if ((x <= k) != (y <= k)) {
        if (it == index.end()) throw DomainError("extend_to_bn: shuffle cell is not closed under a crossing step");
        M(it->second, col) = Scalar(1);
        continue;
      }
      const Scalar a = inverse_of<Scalar>(content(y) - content(x));
      M(col, col) = a;
      if (it != index.end()) M(it->second, col) = off_diagonal<Scalar>(a, x < y);
    }
    rep.matrices.push_back(std::move(M));
  }
  return rep;
}

template <class Scalar>
BasicRepresentation<Scalar> classical(const Partition& lambda, const Partition& mu) {
  const std::vector<BipartiteTableau> basis = bipartite_tableaux(lambda, mu);
  const int n = SkewShape(lambda).size() + SkewShape(mu).size();
  if (n == 0) throw DomainError("bn_classical: empty bipartition");
  std::map<BipartiteTableau, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  BasicRepresentation<Scalar> rep;
  rep.type = CoxeterType::B;
  rep.n = n;
  rep.generators = coxeter_generators(CoxeterType::B, n);
  rep.normalization = std::is_same_v<Scalar, double> ? Normalization::OrthogonalFloat : Normalization::Seminormal;
  for (const auto& T : basis) rep.basis_labels.push_back(bipartite_label(T));
  const int dim = static_cast<int>(basis.size());
  for (int g : rep.generators) {
    Matrix<Scalar> M(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const BipartiteTableau& T = basis[static_cast<std::size_t>(col)];
      if (g == 0) {
        M(col, col) = T.P.find(1) ? Scalar(1) : Scalar(-1);
        continue;
      }
      const auto in_p = T.P.find(g), in_p_next = T.P.find(g + 1);
      const BipartiteTableau swapped = relabel(T, Permutation::simple_reflection(n, g));
      if (in_p.has_value() != in_p_next.has_value()) {
        M(index.at(swapped), col) = Scalar(1);
        continue;
      }
      const Tableau& home = in_p ? T.P : T.Q;
      const Box b1 = *home.find(g), b2 = *home.find(g + 1);
      const Scalar a = inverse_of<Scalar>(b2.content() - b1.content());
      M(col, col) = a;
      if (auto it = index.find(swapped); it != index.end()) M(it->second, col) = off_diagonal<Scalar>(a, b1 < b2);
    }
    rep.matrices.push_back(std::move(M));
  }
  return rep;
}

template <class Scalar, class Equal>
std::optional<std::string> mismatch(const BasicRepresentation<Scalar>& ext, const BasicRepresentation<Scalar>& cls,
                                    const BipartiteTableau& PQ, Equal equal) {
  if (ext.dimension() != cls.dimension())
    return "dimensions " + std::to_string(ext.dimension()) + " and " + std::to_string(cls.dimension()) + " differ";
  if (ext.generators != cls.generators) return std::string("generator lists differ");
  std::map<std::string, int> cls_index;
  for (int i = 0; i < cls.dimension(); ++i) cls_index[cls.basis_labels[static_cast<std::size_t>(i)]] = i;
  std::vector<int> image;
  for (const auto& tau : ext.cell) {
    const std::string label = bipartite_label(relabel(PQ, tau.to_permutation()));
    auto it = cls_index.find(label);
    if (it == cls_index.end()) return "no classical basis vector " + label + " for " + tau.str();
    image.push_back(it->second);
  }
  for (std::size_t g = 0; g < ext.generators.size(); ++g)
    for (int i = 0; i < ext.dimension(); ++i)
      for (int j = 0; j < ext.dimension(); ++j)
        if (!equal(ext.matrices[g](i, j), cls.matrices[g](image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)])))
          return "s" + std::to_string(ext.generators[g]) + " differs at (" + ext.cell[static_cast<std::size_t>(i)].str() +
                 ", " + ext.cell[static_cast<std::size_t>(j)].str() + ")";
  return std::nullopt;
}

}  // namespace

Representation extend_to_bn(const Tableau& P, const Tableau& Q, const GroupCaps& caps) {
  return extend<Rational>(P, Q, caps);
}

FloatRepresentation extend_to_bn_orthogonal(const Tableau& P, const Tableau& Q, const GroupCaps& caps) {
  return extend<double>(P, Q, caps);
}

std::vector<BipartiteTableau> bipartite_tableaux(const Partition& lambda, const Partition& mu) {
  const int k = SkewShape(lambda).size();
  const int n = k + SkewShape(mu).size();
  const auto fill_p = standard_or_empty(lambda);
  const auto fill_q = standard_or_empty(mu);
  std::vector<BipartiteTableau> out;
  // Letter sets of P in lexicographic order: walk the k-subsets of 1..n.
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    std::vector<int> p_letters, q_letters;
    for (int i = 0; i < n; ++i) (chosen[static_cast<std::size_t>(i)] ? p_letters : q_letters).push_back(i + 1);
    for (const Tableau& fp : fill_p) {
      const Tableau P = map_entries(fp, [&](int e) { return p_letters[static_cast<std::size_t>(e - 1)]; });
      for (const Tableau& fq : fill_q)
        out.push_back({P, map_entries(fq, [&](int e) { return q_letters[static_cast<std::size_t>(e - 1)]; })});
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

Representation bn_classical(const Partition& lambda, const Partition& mu) { return classical<Rational>(lambda, mu); }

FloatRepresentation bn_classical_orthogonal(const Partition& lambda, const Partition& mu) {
  return classical<double>(lambda, mu);
}

std::string bipartite_label(const BipartiteTableau& T) { return compact(T.P) + " | " + compact(T.Q); }

BipartiteTableau relabel(const BipartiteTableau& T, const Permutation& pi) {
  const Permutation inv = pi.inverse();
  const auto f = [&](int e) {
    if (e > inv.size()) throw DomainError("relabel: entry " + std::to_string(e) + " outside the permutation");
    return inv(e);
  };
  return {map_entries(T.P, f), map_entries(T.Q, f)};
}

BipartiteTableau row_pair(const Partition& lambda, const Partition& mu) {
  const int k = SkewShape(lambda).size();
  const Tableau P = k ? row_tableau(SkewShape(lambda)) : empty_tableau();
  if (SkewShape(mu).size() == 0) return {P, empty_tableau()};
  return {P, map_entries(row_tableau(SkewShape(mu)), [k](int e) { return e + k; })};
}

std::optional<std::string> classical_mismatch(const Representation& ext, const Representation& cls,
                                              const BipartiteTableau& PQ) {
  return mismatch(ext, cls, PQ, [](const Rational& x, const Rational& y) { return x == y; });
}

std::optional<std::string> classical_mismatch(const FloatRepresentation& ext, const FloatRepresentation& cls,
                                              const BipartiteTableau& PQ, double tolerance) {
  return mismatch(ext, cls, PQ, [tolerance](double x, double y) { return std::abs(x - y) <= tolerance; });
}

std::vector<std::pair<Partition, Partition>> bipartitions(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& lambda : partitions(k))
      for (const Partition& mu : partitions(n - k)) out.emplace_back(lambda, mu);
  return out;
}

}  // namespace ayrep
