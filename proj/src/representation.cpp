#include "ayrep/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <type_traits>

#include "ayrep/error.hpp"

namespace ayrep {
namespace {

std::vector<int> resolve_generators(int n, const std::optional<std::vector<int>>& generators) {
  std::vector<int> gens = generators ? *generators : coxeter_generators(CoxeterType::A, n);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int k : gens)
    if (k < 1 || k >= n) throw DomainError("s_" + std::to_string(k) + " is not a generator of S_" + std::to_string(n));
  return gens;
}

// Letters i < j lie in one block of the parabolic subgroup when every s_r,
// i <= r < j, is among the generators.
bool same_block(const std::set<int>& gens, int i, int j) {
  for (int r = i; r < j; ++r)
    if (!gens.contains(r)) return false;
  return true;
}

Cell parabolic_descent_cell(const Functional& f, const Permutation& w, const std::vector<int>& gens, const GroupCaps& caps) {
  const int n = f.size();
  if (w.size() != n) throw DomainError("functional and permutation have different degree");
  const std::set<int> gen_set(gens.begin(), gens.end());
  std::vector<Reflection> A;
  for (const Reflection& t : boundary_reflections(f))
    if (same_block(gen_set, t.i, t.j)) A.push_back(t);

  const auto signature = [&](const Permutation& v) {
    const Permutation inv = v.inverse();
    std::vector<bool> sig;
    for (const Reflection& t : A) sig.push_back(is_left_descent_inv(inv, t));
    return sig;
  };

  const GroupListing P = enumerate_parabolic(CoxeterType::A, n, gens, caps);
  if (!P.find(SignedPermutation(w))) throw DomainError(w.str() + " is not in the parabolic subgroup");
  const auto target = signature(w);
  std::vector<Permutation> members;
  for (const SignedPermutation& v : P.elements) {
    Permutation p = v.to_permutation();
    if (signature(p) == target) members.push_back(std::move(p));
  }
  return make_cell(std::move(members), gens);
}

// Shared assembly for every normalization: `coefficient(a, up)` gives b for
// an interior step.
template <class Scalar, class AFromPairing, class BFromA>
BasicRepresentation<Scalar> assemble(const Functional& f, const Cell& K, const std::vector<int>& gens,
                                     AFromPairing a_of, BFromA b_of) {
  if (auto why = genericity_violation(f, K)) throw GenericityError("functional " + f.str() + " is not generic: " + *why);
  const int n = f.size();
  const int dim = static_cast<int>(K.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < dim; ++i) index.emplace(K.members[static_cast<std::size_t>(i)], i);

  BasicRepresentation<Scalar> rep;
  rep.type = CoxeterType::A;
  rep.n = n;
  rep.generators = gens;
  for (const Permutation& w : K.members) {
    rep.basis_labels.push_back(w.str());
    rep.cell.emplace_back(w);
  }
  for (int k : gens) {
    Matrix<Scalar> M(dim, dim);
    const Permutation s = Permutation::simple_reflection(n, k);
    for (int col = 0; col < dim; ++col) {
      const Permutation& w = K.members[static_cast<std::size_t>(col)];
      const Scalar a = a_of(f.on_simple_image(w, k));
      M(col, col) = a;
      auto it = index.find(w * s);
      if (it != index.end()) M(it->second, col) = b_of(a, w(k) < w(k + 1));
    }
    rep.matrices.push_back(std::move(M));
  }
  return rep;
}

Representation assemble_exact(const Functional& f, const Cell& K, const std::vector<int>& gens, Normalization norm) {
  const auto a_of = [](long long pairing) { return ratio(1, pairing); };
  Representation rep;
  switch (norm) {
    case Normalization::Seminormal:
      rep = assemble<Rational>(f, K, gens, a_of, [](const Rational& a, bool up) { return up ? Rational(1) : Rational(1 - a * a); });
      break;
    case Normalization::RowStochastic:
      rep = assemble<Rational>(f, K, gens, a_of, [](const Rational& a, bool) { return Rational(1 - a); });
      break;
    case Normalization::OrthogonalFloat:
      throw DomainError("the orthogonal normalization is floating point; use the orthogonal builder");
  }
  rep.normalization = norm;
  return rep;
}

template <class Scalar>
VerificationReport coxeter_report(const BasicRepresentation<Scalar>& rep, double tolerance) {
  VerificationReport report;
  const int dim = rep.dimension();
  const Matrix<Scalar> I = Matrix<Scalar>::identity(dim);
  const auto close = [&](const Matrix<Scalar>& m) {
    if constexpr (std::is_same_v<Scalar, double>)
      return max_abs_difference(m, I) <= tolerance;
    else
      return m == I;
  };
  if (rep.matrices.size() != rep.generators.size()) {
    report.fail("matrix count differs from generator count");
    return report;
  }
  for (const auto& M : rep.matrices) {
    if (M.rows() != dim || M.cols() != dim) {
      report.fail("matrix of wrong size");
      return report;
    }
  }
  for (std::size_t x = 0; x < rep.generators.size(); ++x) {
    const int s = rep.generators[x];
    if (!close(rep.matrices[x] * rep.matrices[x])) report.fail("s_" + std::to_string(s) + "^2 != I");
    for (std::size_t y = x + 1; y < rep.generators.size(); ++y) {
      const int t = rep.generators[y];
      const int m = coxeter_m(rep.type, s, t);
      const Matrix<Scalar> st = rep.matrices[x] * rep.matrices[y];
      Matrix<Scalar> power = st;
      for (int e = 1; e < m; ++e) power = power * st;
      if (!close(power))
        report.fail("(s_" + std::to_string(s) + " s_" + std::to_string(t) + ")^" + std::to_string(m) + " != I");
    }
  }
  return report;
}

// Walks every column of every generator matrix, collecting coefficients and
// recording Axiom (B) failures.
std::vector<AxiomBCoefficients> collect_axiom_B(const Representation& rep, VerificationReport& report) {
  std::vector<AxiomBCoefficients> out;
  const int dim = rep.dimension();
  if (static_cast<int>(rep.cell.size()) != dim) {
    report.fail("basis is not indexed by a cell of group elements");
    return out;
  }
  std::map<SignedPermutation, int> index;
  for (int i = 0; i < dim; ++i) index.emplace(rep.cell[static_cast<std::size_t>(i)], i);
  std::map<std::pair<SignedPermutation, bool>, std::size_t> seen;
  std::map<std::pair<SignedPermutation, bool>, Rational> interior_b;

  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const int k = rep.generators[g];
    const Matrix<Rational>& M = rep.matrices[g];
    const SignedPermutation s = SignedPermutation::generator(rep.n, k);
    for (int col = 0; col < dim; ++col) {
      const SignedPermutation& w = rep.cell[static_cast<std::size_t>(col)];
      const SignedPermutation ws = w * s;
      auto it = index.find(ws);
      const int partner = it == index.end() ? -1 : it->second;
      const std::string where = "s_" + std::to_string(k) + " at " + w.str();
      for (int row = 0; row < dim; ++row) {
        if (row != col && row != partner && !is_zero(M(row, col))) {
          report.fail(where + ": image leaves span{C_w, C_ws}");
          break;
        }
      }
      AxiomBCoefficients c{w * s * w.inverse(), length_b(ws) > length_b(w), M(col, col),
                           partner < 0 ? Rational(0) : M(partner, col)};
      auto [pos, fresh] = seen.emplace(std::make_pair(c.reflection, c.up), out.size());
      if (fresh) out.push_back(c);
      AxiomBCoefficients& first = out[pos->second];
      if (first.a != c.a) report.fail(where + ": coefficient a differs for the same reflection and direction");
      // b is only constrained on interior steps; boundary steps have b = 0 by construction.
      if (partner >= 0) {
        auto [bpos, bfresh] = interior_b.emplace(std::make_pair(c.reflection, c.up), c.b);
        if (bfresh)
          first.b = c.b;
        else if (bpos->second != c.b)
          report.fail(where + ": coefficient b differs for the same reflection and direction");
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::Seminormal: return "seminormal";
    case Normalization::RowStochastic: return "row-stochastic";
    case Normalization::OrthogonalFloat: return "orthogonal";
  }
  return "?";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "seminormal") return Normalization::Seminormal;
  if (text == "row-stochastic" || text == "stochastic") return Normalization::RowStochastic;
  if (text == "orthogonal" || text == "orthogonal-float") return Normalization::OrthogonalFloat;
  throw DomainError("unknown normalization '" + std::string(text) + "'");
}

Representation build_on_cell(const Functional& f, const Cell& K, std::vector<int> generators, Normalization normalization) {
  std::sort(generators.begin(), generators.end());
  return assemble_exact(f, K, generators, normalization);
}

Representation build_from_functional(const Functional& f, const Permutation& w, Normalization normalization,
                                     std::optional<std::vector<int>> generators, const GroupCaps& caps) {
  const std::vector<int> gens = resolve_generators(f.size(), generators);
  const Cell K = generators ? parabolic_descent_cell(f, w, gens, caps) : descent_cell(f, w, caps);
  return assemble_exact(f, K, gens, normalization);
}

FloatRepresentation build_from_functional_orthogonal(const Functional& f, const Permutation& w,
                                                     std::optional<std::vector<int>> generators, const GroupCaps& caps) {
  const std::vector<int> gens = resolve_generators(f.size(), generators);
  const Cell K = generators ? parabolic_descent_cell(f, w, gens, caps) : descent_cell(f, w, caps);
  auto rep = assemble<double>(
      f, K, gens, [](long long pairing) { return 1.0 / static_cast<double>(pairing); },
      [](double a, bool) { return std::sqrt(1.0 - a * a); });
  rep.normalization = Normalization::OrthogonalFloat;
  return rep;
}

namespace {

template <class Scalar, class BFromH>
BasicRepresentation<Scalar> skew_form(const SkewShape& shape, BFromH b_of) {
  const std::vector<Tableau> tableaux = enumerate_standard(shape);
  const int n = shape.size();
  const int dim = static_cast<int>(tableaux.size());
  std::map<Tableau, int> index;
  for (int i = 0; i < dim; ++i) index.emplace(tableaux[static_cast<std::size_t>(i)], i);

  BasicRepresentation<Scalar> rep;
  rep.n = n;
  rep.generators = coxeter_generators(CoxeterType::A, n);
  for (const Tableau& Q : tableaux) rep.basis_labels.push_back(Q.str());
  for (int k : rep.generators) {
    Matrix<Scalar> M(dim, dim);
    const Permutation s = Permutation::simple_reflection(n, k);
    for (int col = 0; col < dim; ++col) {
      const Tableau& Q = tableaux[static_cast<std::size_t>(col)];
      const long long h = hook_distance(Q, k).value;
      if constexpr (std::is_same_v<Scalar, double>)
        M(col, col) = 1.0 / static_cast<double>(h);
      else
        M(col, col) = ratio(1, h);
      auto it = index.find(relabel(Q, s));
      if (it != index.end()) M(it->second, col) = b_of(h, Q.find(k)->row < Q.find(k + 1)->row);
    }
    rep.matrices.push_back(std::move(M));
  }
  return rep;
}

}  // namespace

FloatRepresentation build_orthogonal_skew(const SkewShape& shape) {
  auto rep = skew_form<double>(shape, [](long long h, bool) {
    const double a = 1.0 / static_cast<double>(h);
    return std::sqrt(1.0 - a * a);
  });
  rep.normalization = Normalization::OrthogonalFloat;
  return rep;
}

Representation build_seminormal_skew(const SkewShape& shape) {
  auto rep = skew_form<Rational>(shape, [](long long h, bool north) {
    const Rational a = ratio(1, h);
    return north ? Rational(1) : Rational(1 - a * a);
  });
  rep.normalization = Normalization::Seminormal;
  return rep;
}

VerificationReport verify_coxeter(const Representation& rep) { return coxeter_report(rep, 0.0); }

VerificationReport verify_coxeter(const FloatRepresentation& rep, double tolerance) {
  return coxeter_report(rep, tolerance);
}

VerificationReport verify_axiom_B(const Representation& rep) {
  VerificationReport report;
  collect_axiom_B(rep, report);
  return report;
}

std::vector<AxiomBCoefficients> axiom_B_coefficients(const Representation& rep) {
  VerificationReport report;
  auto out = collect_axiom_B(rep, report);
  if (!report) throw DomainError("Axiom (B) fails: " + report.failures.front());
  return out;
}

Functional extract_functional(const Representation& rep) {
  if (rep.type != CoxeterType::A) throw DomainError("extract_functional: type A representations only");
  const int n = rep.n;
  if (rep.generators != coxeter_generators(CoxeterType::A, n))
    throw DomainError("extract_functional: every simple reflection must act");
  const auto coefficients = axiom_B_coefficients(rep);

  auto id = std::find(rep.cell.begin(), rep.cell.end(), SignedPermutation::identity(n));
  if (id == rep.cell.end()) throw DomainError("extract_functional: the cell must contain the identity");
  const int id_index = static_cast<int>(id - rep.cell.begin());

  std::vector<long long> coords(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < n; ++k) {
    const Rational a = rep.matrix_for(k)(id_index, id_index);
    if (is_zero(a)) throw DomainError("extract_functional: zero diagonal coefficient at s_" + std::to_string(k));
    const Rational step = 1 / a;
    if (step.get_den() != 1 || !step.get_num().fits_slong_p())
      throw DomainError("extract_functional: 1/a at s_" + std::to_string(k) + " is not an integer");
    coords[static_cast<std::size_t>(k)] = coords[static_cast<std::size_t>(k - 1)] + step.get_num().get_si();
  }
  Functional f(std::move(coords));

  // Every step w -> ws fixes a = 1/<f, w alpha_s>; check them all.
  for (const AxiomBCoefficients& c : coefficients) {
    const Permutation t = c.reflection.to_permutation();
    int i = 0;
    while (t(i + 1) == i + 1) ++i;
    const Reflection r = Reflection::of(i + 1, t(i + 1));
    // Going up across t = (i, j) means w alpha_s = alpha_t, so <f, w alpha_s> = pair(f, t).
    const long long p = c.up ? pair(f, r) : -pair(f, r);
    if (p == 0 || c.a != ratio(1, p))
      throw DomainError("extract_functional: coefficient at " + r.str() + " does not match an integer functional");
  }
  return f;
}

}  // namespace ayrep
