#include "ayrep/induction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ayrep/cells.hpp"
#include "ayrep/error.hpp"

namespace ayrep {
namespace {

// The entries of T, which must be exactly first..first+size-1 and increasing.
void require_interval_filling(const Tableau& T, int first, const char* name) {
  std::vector<int> entries = T.row_major();
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != first + static_cast<int>(i))
      throw DomainError(std::string("shuffle: ") + name + " must be filled with " + std::to_string(first) + ".." +
                        std::to_string(first + static_cast<int>(entries.size()) - 1));
  if (!T.is_increasing()) throw DomainError(std::string("shuffle: ") + name + " is not standard");
}

// B_T for T on letters offset+1..offset+m, as permutations of 1..n fixing
// every other letter.
std::vector<Permutation> embedded_relabellings(const Tableau& T, int offset, int n, const GroupCaps& caps) {
  if (T.size() == 0) return {Permutation::identity(n)};
  std::vector<std::vector<int>> rows = T.rows();
  for (auto& row : rows)
    for (int& v : row) v -= offset;
  std::vector<Permutation> out;
  for (const Permutation& p : standard_relabellings(Tableau(T.shape(), std::move(rows)), caps)) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      images[static_cast<std::size_t>(i - 1)] = (i > offset && i <= offset + p.size()) ? offset + p(i - offset) : i;
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace

Representation induce(const Representation& psi, const GroupCaps& caps) {
  if (psi.type != CoxeterType::A) throw DomainError("induce: type A representations only");
  if (const auto report = verify_axiom_B(psi); !report)
    throw DomainError("induce: psi fails Axiom (B): " + report.failures.front());
  const int n = psi.n;
  const std::vector<int>& J = psi.generators;
  std::vector<Permutation> D;
  for (const auto& m : psi.cell) D.push_back(m.to_permutation());
  const std::vector<Permutation> reps = minimal_coset_reps(n, J, caps);
  std::map<Permutation, int> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index.emplace(reps[i], static_cast<int>(i));

  const int d = static_cast<int>(D.size());
  const int dim = d * static_cast<int>(reps.size());
  Representation rho;
  rho.type = CoxeterType::A;
  rho.n = n;
  rho.generators = coxeter_generators(CoxeterType::A, n);
  rho.normalization = psi.normalization;
  for (const Permutation& r : reps) {
    for (const Permutation& m : D) {
      rho.basis_labels.push_back((m * r).str());
      rho.cell.emplace_back(m * r);
    }
  }

  for (int k : rho.generators) {
    const Permutation s = Permutation::simple_reflection(n, k);
    Matrix<Rational> M(dim, dim);
    for (int ri = 0; ri < static_cast<int>(reps.size()); ++ri) {
      const Permutation& r = reps[static_cast<std::size_t>(ri)];
      const Permutation rs = r * s;
      if (auto it = rep_index.find(rs); it != rep_index.end()) {
        for (int mi = 0; mi < d; ++mi) M(it->second * d + mi, ri * d + mi) = 1;
        continue;
      }
      // Deodhar's lemma: r s r^{-1} is a simple reflection s_p with p in J.
      const Permutation q = rs * r.inverse();
      int p = 0;
      for (int j : J)
        if (q == Permutation::simple_reflection(n, j)) p = j;
      if (p == 0) throw DomainError("induce: coset step outside the parabolic subgroup");
      const Matrix<Rational>& Mp = psi.matrix_for(p);
      for (int mi = 0; mi < d; ++mi)
        for (int mj = 0; mj < d; ++mj)
          if (!is_zero(Mp(mj, mi))) M(ri * d + mj, ri * d + mi) = Mp(mj, mi);
    }
    rho.matrices.push_back(std::move(M));
  }
  return rho;
}

Character classical_induced_character(int n, const std::vector<int>& J, const std::vector<Rational>& psi_values,
                                      const ConjugacyClasses& classes, const GroupCaps& caps) {
  if (classes.type != CoxeterType::A || classes.n != n) throw DomainError("classes belong to a different group");
  const GroupListing H = enumerate_parabolic(CoxeterType::A, n, J, caps);
  if (psi_values.size() != H.size()) throw DomainError("psi values do not match the subgroup order");
  const GroupListing G = enumerate_group(CoxeterType::A, n, caps);
  Character chi;
  chi.n = n;
  for (const SignedPermutation& g : classes.representatives) {
    Rational sum = 0;
    for (const SignedPermutation& x : G.elements)
      if (auto idx = H.find(x * g * x.inverse())) sum += psi_values[*idx];
    chi.values.push_back(sum / ratio(static_cast<long long>(H.size())));
  }
  return chi;
}

std::vector<std::vector<int>> parabolic_blocks(int n, const std::vector<int>& J) {
  const std::set<int> gens(J.begin(), J.end());
  std::vector<std::vector<int>> blocks;
  for (int letter = 1; letter <= n; ++letter) {
    if (letter == 1 || !gens.contains(letter - 1)) blocks.emplace_back();
    blocks.back().push_back(letter);
  }
  return blocks;
}

std::vector<Rational> block_product_values(int n, const std::vector<int>& J, const std::vector<Partition>& shapes,
                                           const GroupCaps& caps) {
  const auto blocks = parabolic_blocks(n, J);
  if (blocks.size() != shapes.size()) throw DomainError("one shape per block is required");
  const GroupListing H = enumerate_parabolic(CoxeterType::A, n, J, caps);
  std::vector<Rational> out;
  for (const SignedPermutation& h : H.elements) {
    long long value = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int first = blocks[b].front();
      std::vector<int> images;
      for (int letter : blocks[b]) images.push_back(h(letter) - first + 1);
      value *= mn_character(SkewShape(shapes[b]), cycle_type(Permutation(std::move(images))));
    }
    out.push_back(ratio(value));
  }
  return out;
}

Representation block_specht(int n, const std::vector<int>& J, const std::vector<Partition>& shapes, const GroupCaps& caps) {
  const auto blocks = parabolic_blocks(n, J);
  if (blocks.size() != shapes.size()) throw DomainError("one shape per block is required");
  std::vector<long long> coords;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const SkewShape shape(shapes[b]);
    if (shape.size() != static_cast<int>(blocks[b].size()))
      throw DomainError("shape " + shape.str() + " does not fit a block of " + std::to_string(blocks[b].size()) + " letters");
    const ContentVector c = content_vector(row_tableau(shape));
    coords.insert(coords.end(), c.begin(), c.end());
  }
  std::vector<int> gens = J;
  return build_from_functional(Functional(std::move(coords)), Permutation::identity(n), Normalization::Seminormal,
                               std::move(gens), caps);
}

std::vector<Permutation> shuffle_cell(const Tableau& P, const Tableau& Q, const GroupCaps& caps) {
  const int k = P.size();
  const int n = k + Q.size();
  if (n == 0) throw DomainError("shuffle: both tableaux are empty");
  require_interval_filling(P, 1, "P");
  require_interval_filling(Q, k + 1, "Q");
  std::vector<int> J;
  for (int j = 1; j < n; ++j)
    if (j != k) J.push_back(j);
  const auto BP = embedded_relabellings(P, 0, n, caps);
  const auto BQ = embedded_relabellings(Q, k, n, caps);
  const auto omega = minimal_coset_reps(n, J, caps);
  std::set<Permutation> out;
  for (const auto& pi : BP)
    for (const auto& sigma : BQ)
      for (const auto& w : omega) out.insert(pi * sigma * w);
  return {out.begin(), out.end()};
}

}  // namespace ayrep
