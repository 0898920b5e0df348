#include "ayrep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ayrep/cells.hpp"
#include "ayrep/character.hpp"
#include "ayrep/error.hpp"
#include "ayrep/hyperoctahedral.hpp"
#include "ayrep/induction.hpp"
#include "ayrep/serialize.hpp"
#include "ayrep/suites.hpp"
#include "ayrep/tops.hpp"

namespace ayrep {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// What a command produced. Text, JSON and DOT are all filled in and run()
// picks one, so the three formats always describe the same computation.
struct Report {
  Json json = Json::object();
  std::ostringstream text;
  std::optional<std::string> dot;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    json["checks"][what] = ok;
    text << "  " << what << ": " << (ok ? "pass" : "FAIL") << "\n";
  }
};

std::vector<long long> parse_list(std::string_view text, std::string_view what) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
    out.push_back(v);
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

Partition parse_partition(std::string_view text, std::string_view what) {
  Partition p;
  for (long long v : parse_list(text, what)) {
    if (v <= 0 || (!p.empty() && v > p.back()))
      throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not a partition");
    p.push_back(static_cast<int>(v));
  }
  return p;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(sep) : "") + items[i];
  return out;
}

template <class T>
std::vector<std::string> strings_of(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::string one_line_label(std::string label) {
  while (!label.empty() && label.back() == '\n') label.pop_back();
  std::string out;
  for (char ch : label) out += ch == '\n' ? std::string(" / ") : std::string(1, ch);
  return out;
}

std::string format_scalar(const Rational& x) { return x.get_str(); }
std::string format_scalar(double x) {
  std::ostringstream s;
  s << std::setprecision(9) << (x == 0.0 ? 0.0 : x);
  return s.str();
}

int require_n(const RunConfig& c) {
  if (c.n < 1) throw UsageError(c.command + " needs --n >= 1");
  return c.n;
}

Functional require_functional(const RunConfig& c, int& n) {
  if (!c.functional) throw UsageError(c.command + " needs --f");
  Functional f(parse_list(*c.functional, "--f"));
  if (f.size() == 0) throw UsageError("--f is empty");
  if (n == 0) n = f.size();
  if (f.size() != n)
    throw UsageError("--f has " + std::to_string(f.size()) + " coordinates but --n is " + std::to_string(n));
  return f;
}

Permutation base_element(const RunConfig& c, int n) {
  if (!c.base) return Permutation::identity(n);
  Permutation w = Permutation::parse(*c.base);
  if (w.size() != n) throw UsageError("--w has degree " + std::to_string(w.size()) + ", expected " + std::to_string(n));
  return w;
}

template <class Scalar>
void print_representation(std::ostream& out, const BasicRepresentation<Scalar>& rep) {
  out << "representation: " << to_string(rep.normalization) << ", " << (rep.type == CoxeterType::A ? "S_" : "B_") << rep.n
      << ", dimension " << rep.dimension() << "\n";
  out << "basis:\n";
  for (int i = 0; i < rep.dimension(); ++i)
    out << "  [" << i << "] " << one_line_label(rep.basis_labels[static_cast<std::size_t>(i)]) << "\n";
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const auto& M = rep.matrices[g];
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(M.rows()));
    std::size_t width = 1;
    for (int r = 0; r < M.rows(); ++r)
      for (int col = 0; col < M.cols(); ++col) {
        cells[static_cast<std::size_t>(r)].push_back(format_scalar(M(r, col)));
        width = std::max(width, cells[static_cast<std::size_t>(r)].back().size());
      }
    out << "s" << rep.generators[g] << ":\n";
    for (const auto& row : cells) {
      out << " ";
      for (const auto& cell : row) out << " " << std::setw(static_cast<int>(width)) << cell;
      out << "\n";
    }
  }
}

void print_character(std::ostream& out, const Character& chi, const ConjugacyClasses& classes) {
  out << "character:\n";
  for (std::size_t k = 0; k < classes.size(); ++k)
    out << "  " << std::left << std::setw(12) << classes.labels[k] << std::right << " size " << std::setw(5)
        << classes.sizes[k] << "  " << chi.values[k].get_str() << "\n";
}

void add_verification(Report& r, const VerificationReport& v, const std::string& what) {
  r.check(v.ok, what);
  for (const auto& f : v.failures) r.failures.push_back(what + ": " + f);
}

// ---------------------------------------------------------------- commands

void cmd_cell(const RunConfig& c, Report& r) {
  int n = c.n;
  const Functional f = require_functional(c, n);
  const Permutation w = base_element(c, n);
  const Cell K = descent_cell(f, w, c.caps);
  const auto violation = genericity_violation(f, K);
  const bool convex = is_convex(K.members);

  r.text << "n = " << n << ", f = " << f.str() << ", w = " << w.str() << "\n";
  r.text << "members (" << K.size() << "): " << join(strings_of(K.members), " / ") << "\n";
  r.text << "T_K: " << join(strings_of(K.interior), " ") << "\n";
  r.text << "T_dK: " << join(strings_of(K.boundary), " ") << "\n";
  r.text << "generic: " << (violation ? "no (" + *violation + ")" : std::string("yes")) << "\n";
  r.text << "checks:\n";

  r.json["n"] = n;
  r.json["f"] = f.coords;
  r.json["w"] = w.str();
  r.json["cell"] = to_json(K);
  r.json["generic"] = !violation;
  r.json["violation"] = violation ? Json(*violation) : Json(nullptr);
  r.check(convex, "convex");
  if (!convex) r.failures.push_back("descent cell is not convex");

  if (!violation && c.normalization != Normalization::OrthogonalFloat)
    r.dot = to_dot(build_from_functional(f, w, c.normalization, std::nullopt, c.caps));
  else
    r.dot = to_dot(K);
}

void cmd_syt(const RunConfig& c, Report& r) {
  if (c.content) {
    const ContentVector cv = parse_list(*c.content, "--content");
    if (cv.empty()) throw UsageError("--content is empty");
    const Tableau T = tableau_from_content(cv);
    r.text << "content " << Functional(cv).str() << " -> shape " << T.shape().str() << "\n" << T.str();
    r.text << "checks:\n";
    r.json["content"] = cv;
    r.json["tableau"] = to_json(T);
    r.check(T.is_standard(), "standard");
    r.check(content_vector(T) == cv, "content round trip");
    if (!T.is_standard()) r.failures.push_back("constructed tableau is not standard");
    if (content_vector(T) != cv) r.failures.push_back("constructed tableau has a different content vector");
    return;
  }
  if (!c.shape) throw UsageError("syt needs --shape or --content");
  const SkewShape shape = SkewShape::parse(*c.shape);
  const std::vector<Tableau> all = enumerate_standard(shape);
  r.text << "shape " << shape.str() << ": " << all.size() << " standard tableaux\n";
  for (const Tableau& T : all) r.text << "\n" << T.str();
  r.json["shape"] = to_json(shape);
  r.json["count"] = all.size();
  Json list = Json::array();
  for (const Tableau& T : all) list.push_back(to_json(T));
  r.json["tableaux"] = std::move(list);
  r.text << "\nchecks:\n";
  bool all_standard = std::all_of(all.begin(), all.end(), [](const Tableau& T) { return T.is_standard(); });
  r.check(all_standard, "standard");
  if (!all_standard) r.failures.push_back("enumeration produced a non-standard filling");
  if (shape.is_straight()) {
    const long long hooks = hook_length_count(shape.lambda());
    r.json["hook_count"] = hooks;
    r.check(hooks == static_cast<long long>(all.size()), "hook length formula");
    if (hooks != static_cast<long long>(all.size()))
      r.failures.push_back("hook length formula gives " + std::to_string(hooks));
  }
}

// Character section shared by the exact representation commands. Returns
// whether the character equals `expected`, when one is given.
bool add_character(Report& r, const Representation& rep, const GroupCaps& caps,
                   const std::optional<Character>& expected = std::nullopt) {
  const ConjugacyClasses classes = conjugacy_classes(rep.type, rep.n, caps);
  const Character chi = character(rep, classes);
  print_character(r.text, chi, classes);
  r.json["character"] = to_json(chi, classes);
  if (!expected || chi == *expected) return true;
  r.json["expected_character"] = to_json(*expected, classes);
  return false;
}

void check_character(Report& r, bool ok, const std::string& what) {
  r.check(ok, what);
  if (!ok) r.failures.push_back(what + ": character differs");
}

void cmd_bn(const RunConfig& c, Report& r);

void cmd_rep(const RunConfig& c, Report& r) {
  if (c.type == CoxeterType::B) return cmd_bn(c, r);
  const bool orthogonal = c.normalization == Normalization::OrthogonalFloat;

  if (c.functional) {
    int n = c.n;
    const Functional f = require_functional(c, n);
    const Permutation w = base_element(c, n);
    r.json["n"] = n;
    r.json["f"] = f.coords;
    r.json["w"] = w.str();
    if (orthogonal) {
      const FloatRepresentation rep = build_from_functional_orthogonal(f, w, std::nullopt, c.caps);
      print_representation(r.text, rep);
      r.json["representation"] = to_json(rep);
      r.text << "checks:\n";
      add_verification(r, verify_coxeter(rep), "coxeter relations");
      r.dot = to_dot(descent_cell(f, w, c.caps));
      return;
    }
    const Representation rep = build_from_functional(f, w, c.normalization, std::nullopt, c.caps);
    print_representation(r.text, rep);
    r.json["representation"] = to_json(rep);
    add_character(r, rep, c.caps);
    r.text << "checks:\n";
    add_verification(r, verify_coxeter(rep), "coxeter relations");
    add_verification(r, verify_axiom_B(rep), "axiom B");
    r.dot = to_dot(rep);
    return;
  }

  if (!c.shape) throw UsageError("rep needs --f or --shape");
  const SkewShape shape = SkewShape::parse(*c.shape);
  const int n = shape.size();
  if (n == 0) throw UsageError("--shape is empty");
  if (c.n && c.n != n) throw UsageError("--shape has " + std::to_string(n) + " boxes but --n is " + std::to_string(c.n));
  r.json["n"] = n;
  r.json["shape"] = to_json(shape);
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, n, c.caps);
  const Character mn = mn_class_function(shape, classes);

  if (orthogonal) {
    const FloatRepresentation rep = build_orthogonal_skew(shape);
    print_representation(r.text, rep);
    r.json["representation"] = to_json(rep);
    r.text << "checks:\n";
    add_verification(r, verify_coxeter(rep), "coxeter relations");
    // Float traces against the Murnaghan-Nakayama values, element by element.
    const GroupListing G = enumerate_group(CoxeterType::A, n, c.caps);
    const std::vector<double> traces = element_traces(rep, c.caps);
    bool ok = true;
    for (std::size_t i = 0; i < G.size() && ok; ++i)
      ok = std::abs(traces[i] - mn.values[classes.class_of(G.elements[i])].get_d()) <= 1e-9;
    r.check(ok, "Murnaghan-Nakayama character");
    if (!ok) r.failures.push_back("orthogonal traces differ from the Murnaghan-Nakayama values");
    return;
  }

  Representation rep;
  if (c.normalization == Normalization::Seminormal) {
    rep = build_seminormal_skew(shape);
  } else {
    // Tableau bases carry no row-stochastic form; use the cell of the row tableau.
    rep = build_from_functional(Functional(content_vector(row_tableau(shape))), Permutation::identity(n),
                                c.normalization, std::nullopt, c.caps);
  }
  print_representation(r.text, rep);
  r.json["representation"] = to_json(rep);
  const bool matches = add_character(r, rep, c.caps, mn);
  r.text << "checks:\n";
  add_verification(r, verify_coxeter(rep), "coxeter relations");
  if (!rep.cell.empty()) {
    add_verification(r, verify_axiom_B(rep), "axiom B");
    r.dot = to_dot(rep);
  }
  check_character(r, matches, "Murnaghan-Nakayama character");
}

void cmd_induce(const RunConfig& c, Report& r) {
  const int n = require_n(c);
  std::vector<int> J = c.parabolic;
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J)
    if (j < 1 || j >= n) throw UsageError("--J entries must lie in 1.." + std::to_string(n - 1));
  const auto blocks = parabolic_blocks(n, J);
  std::vector<Partition> shapes;
  if (c.block_shapes.empty()) {
    for (const auto& b : blocks) shapes.push_back({static_cast<int>(b.size())});
  } else {
    if (c.block_shapes.size() != blocks.size())
      throw UsageError("--shapes needs one partition per block; J has " + std::to_string(blocks.size()) + " blocks");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      shapes.push_back(parse_partition(c.block_shapes[b], "--shapes"));
      if (SkewShape(shapes.back()).size() != static_cast<int>(blocks[b].size()))
        throw UsageError("shape " + c.block_shapes[b] + " does not fit block " + std::to_string(b + 1) + " of size " +
                         std::to_string(blocks[b].size()));
    }
  }

  const Representation psi = block_specht(n, J, shapes, c.caps);
  const Representation rho = induce(psi, c.caps);
  const ConjugacyClasses classes = conjugacy_classes(CoxeterType::A, n, c.caps);
  const Character classical = classical_induced_character(n, J, block_product_values(n, J, shapes, c.caps), classes, c.caps);

  std::vector<std::string> shape_names;
  for (const auto& s : shapes) shape_names.push_back(SkewShape(s).str());
  r.text << "n = " << n << ", J = {" << join([&] {
    std::vector<std::string> v;
    for (int j : J) v.push_back(std::to_string(j));
    return v;
  }(), ",") << "}, block shapes " << join(shape_names, "; ") << "\n";
  r.text << "dimension " << psi.dimension() << " induced to " << rho.dimension() << "\n";
  print_representation(r.text, rho);
  r.json["n"] = n;
  r.json["J"] = J;
  r.json["shapes"] = shapes;
  r.json["subgroup_dimension"] = psi.dimension();
  r.json["representation"] = to_json(rho);
  const bool matches = add_character(r, rho, c.caps, classical);
  r.text << "checks:\n";
  add_verification(r, verify_coxeter(rho), "coxeter relations");
  add_verification(r, verify_axiom_B(rho), "axiom B");
  check_character(r, matches, "classical induced character");
  r.dot = to_dot(rho);
}

void cmd_bn(const RunConfig& c, Report& r) {
  const Partition lambda = parse_partition(c.lambda, "--lambda");
  const Partition mu = parse_partition(c.mu, "--mu");
  const int n = SkewShape(lambda).size() + SkewShape(mu).size();
  if (n == 0) throw UsageError("bn needs a nonempty --lambda or --mu");
  if (c.n && c.n != n) throw UsageError("|lambda| + |mu| = " + std::to_string(n) + " but --n is " + std::to_string(c.n));
  if (c.normalization == Normalization::RowStochastic) throw UsageError("bn supports the seminormal and orthogonal forms");
  const BipartiteTableau PQ = row_pair(lambda, mu);
  r.json["n"] = n;
  r.json["lambda"] = lambda;
  r.json["mu"] = mu;

  const Representation ext = extend_to_bn(PQ.P, PQ.Q, c.caps);
  if (c.normalization == Normalization::OrthogonalFloat) {
    const FloatRepresentation fext = extend_to_bn_orthogonal(PQ.P, PQ.Q, c.caps);
    print_representation(r.text, fext);
    r.json["representation"] = to_json(fext);
    r.text << "checks:\n";
    add_verification(r, verify_coxeter(fext), "coxeter relations");
    const auto diff = classical_mismatch(fext, bn_classical_orthogonal(lambda, mu), PQ);
    r.check(!diff, "matches classical form");
    if (diff) r.failures.push_back("classical form: " + *diff);
  } else {
    print_representation(r.text, ext);
    r.json["representation"] = to_json(ext);
    add_character(r, ext, c.caps);
    r.text << "checks:\n";
    add_verification(r, verify_coxeter(ext), "coxeter relations");
    const auto diff = classical_mismatch(ext, bn_classical(lambda, mu), PQ);
    r.check(!diff, "matches classical form");
    if (diff) r.failures.push_back("classical form: " + *diff);
  }
  const bool irreducible = is_irreducible(ext, c.caps);
  r.check(irreducible, "irreducible");
  if (!irreducible) r.failures.push_back("character norm is not 1");
  r.dot = to_dot(ext);
}

void cmd_tops(const RunConfig& c, Report& r) {
  const int n = require_n(c);
  const TopReport report = top_elements(n, c.caps);
  std::map<Permutation, const TopElement*> oracle;
  for (const auto& e : report.oracle) oracle.emplace(e.element, &e);

  r.text << "n = " << n << ": " << report.partition_count << " partitions, " << report.oracle.size()
         << " oracle-certified top elements\n";
  r.text << std::left << std::setw(14) << "shape" << std::setw(2 * n + 4) << "sigma" << std::setw(10) << "interval"
         << std::setw(13) << "irreducible" << "oracle agrees\n";
  for (const auto& row : report.rows) {
    auto it = oracle.find(row.sigma_down);
    r.text << std::setw(14) << SkewShape(row.shape).str() << std::setw(2 * n + 4) << row.sigma_down.str() << std::setw(10)
           << weak_interval(row.sigma_down).size() << std::setw(13)
           << (it == oracle.end() ? "-" : (it->second->witness.irreducible ? "yes" : "no"))
           << (it == oracle.end() ? "no" : "yes") << "\n";
  }
  r.text << std::right << "oracle:";
  for (const auto& e : report.oracle) r.text << " " << e.element.str();
  r.text << "\n";
  for (const auto& d : report.discrepancies) r.text << "note: " << d << "\n";
  r.text << "checks:\n";

  r.json["report"] = to_json(report);
  r.check(report.down_matches_oracle, "candidates match oracle");
  if (!report.down_matches_oracle) r.failures.push_back("column-word candidates differ from the oracle set");
  bool all_irreducible = true;
  for (const auto& e : report.oracle)
    if (!e.witness.irreducible) {
      all_irreducible = false;
      r.failures.push_back(e.element.str() + ": interval representation is reducible");
    }
  r.check(all_irreducible, "intervals irreducible");
}

void cmd_verify(const RunConfig& c, Report& r) {
  const int n = require_n(c);
  std::vector<std::string> names = c.suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  for (const auto& name : names)
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw UsageError("unknown suite '" + name + "' (known: " + join(suite_names(), ", ") + ")");

  SweepOptions options;
  options.n = n;
  options.seed = c.seed;
  options.samples = c.samples;
  options.caps = c.caps;
  r.json["n"] = n;
  r.json["seed"] = c.seed;
  r.json["samples"] = c.samples;
  Json suites = Json::array();
  constexpr std::size_t kShown = 20;
  for (const auto& name : names) {
    const SuiteResult result = run_suite(name, options);
    r.text << (result.ok() ? "PASS " : "FAIL ") << result.name << " (n = " << n << ", " << result.checks << " checks, "
           << result.failures.size() << " failures)\n";
    for (std::size_t i = 0; i < result.failures.size() && i < kShown; ++i) r.text << "  counterexample: " << result.failures[i] << "\n";
    if (result.failures.size() > kShown) r.text << "  ... and " << result.failures.size() - kShown << " more\n";
    for (const auto& note : result.notes) r.text << "  note: " << note << "\n";
    for (const auto& f : result.failures) r.failures.push_back(result.name + ": " + f);
    suites.push_back({{"name", result.name},
                      {"ok", result.ok()},
                      {"checks", result.checks},
                      {"failures", result.failures},
                      {"notes", result.notes}});
  }
  r.json["suites"] = std::move(suites);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    if (config.caps.max_n_a < 1 || config.caps.max_n_b < 1) throw UsageError("caps must be >= 1");
    if (config.samples < 1) throw UsageError("--samples must be >= 1");
    if (config.command == "cell") cmd_cell(config, report);
    else if (config.command == "syt") cmd_syt(config, report);
    else if (config.command == "rep") cmd_rep(config, report);
    else if (config.command == "induce") cmd_induce(config, report);
    else if (config.command == "bn") cmd_bn(config, report);
    else if (config.command == "tops") cmd_tops(config, report);
    else if (config.command == "verify") cmd_verify(config, report);
    else throw UsageError("unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "ayrep " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  }

  switch (config.format) {
    case OutputFormat::Json: {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = config.command;
      for (auto& [key, value] : report.json.items()) j[key] = value;
      j["ok"] = report.failures.empty();
      j["failures"] = report.failures;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Dot:
      if (!report.dot) {
        err << "ayrep " << config.command << ": no diagram for this command\n";
        return kExitUsage;
      }
      out << *report.dot;
      break;
    case OutputFormat::Text:
      out << report.text.str();
      if (!report.failures.empty()) {
        out << "failures:\n";
        for (const auto& f : report.failures) out << "  " << f << "\n";
      }
      out << (report.failures.empty() ? "result: PASS" : "result: FAIL") << "\n";
      break;
  }
  return report.failures.empty() ? kExitOk : kExitCheckFailed;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract Young cells and representations of S_n and B_n"};
  app.require_subcommand(1);
  RunConfig config;
  std::string form = "seminormal";
  std::string type = "A";
  std::string suites;
  std::string J;
  std::string block_shapes;
  std::optional<int> max_n;
  bool json = false, dot = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Rank n")->check(CLI::PositiveNumber);
    sub->add_option("--max-n", max_n, "Enumeration cap (overrides AYREP_MAX_N)")->check(CLI::PositiveNumber);
    auto* j = sub->add_flag("--json", json, "JSON output");
    auto* d = sub->add_flag("--dot", dot, "Graphviz output of the cell");
    j->excludes(d);
  };
  const auto form_option = [&](CLI::App* sub) {
    sub->add_option("--form", form, "seminormal | row-stochastic | orthogonal")->capture_default_str();
  };

  auto* cell = app.add_subcommand("cell", "Descent cell of a functional");
  common(cell);
  form_option(cell);
  cell->add_option("--f", config.functional, "Integer functional, e.g. 0,2,-1")->required();
  cell->add_option("--w", config.base, "Base element in one-line notation, e.g. 2,1,3");

  auto* syt = app.add_subcommand("syt", "Standard tableaux of a skew shape, or the tableau of a content vector");
  common(syt);
  syt->add_option("--shape", config.shape, "Skew shape, e.g. 3,2 or 3,3,1/3,1");
  syt->add_option("--content", config.content, "Content vector, e.g. 0,-2,1");

  auto* rep = app.add_subcommand("rep", "Representation matrices with verification");
  common(rep);
  form_option(rep);
  rep->add_option("--type", type, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  rep->add_option("--f", config.functional, "Integer functional");
  rep->add_option("--w", config.base, "Base element in one-line notation");
  rep->add_option("--shape", config.shape, "Skew shape (Young forms on tableaux)");
  rep->add_option("--lambda", config.lambda, "Type B: partition for P");
  rep->add_option("--mu", config.mu, "Type B: partition for Q");

  auto* ind = app.add_subcommand("induce", "Induction from a parabolic subgroup");
  common(ind);
  ind->add_option("--J", J, "Generators of the parabolic subgroup, e.g. 1,3,4");
  ind->add_option("--shapes", block_shapes, "One partition per block, separated by ';', e.g. '2;2,1'");

  auto* bn = app.add_subcommand("bn", "Representation of B_n for a pair of partitions");
  common(bn);
  form_option(bn);
  bn->add_option("--lambda", config.lambda, "Partition for P (may be empty)");
  bn->add_option("--mu", config.mu, "Partition for Q (may be empty)");

  auto* tops = app.add_subcommand("tops", "Top elements of S_n against the oracle");
  common(tops);

  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  common(verify);
  verify->add_option("--suite", suites, "Comma-separated suites, or all: " + join(suite_names(), ","))
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for sampled sweeps")->capture_default_str();
  verify->add_option("--samples", config.samples, "Samples per sampled sweep")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = json ? OutputFormat::Json : dot ? OutputFormat::Dot : OutputFormat::Text;
  config.type = type == "B" ? CoxeterType::B : CoxeterType::A;
  if (max_n) config.caps.max_n_a = config.caps.max_n_b = *max_n;
  try {
    config.normalization = parse_normalization(form);
    for (long long j : parse_list(J, "--J")) config.parabolic.push_back(static_cast<int>(j));
  } catch (const Error& e) {
    err << "ayrep " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (!suites.empty()) {
    std::stringstream s(suites);
    for (std::string item; std::getline(s, item, ',');) config.suites.push_back(item);
  }
  if (!block_shapes.empty()) {
    std::stringstream s(block_shapes);
    for (std::string item; std::getline(s, item, ';');) config.block_shapes.push_back(item);
  }
  return run(config, out, err);
}

}  // namespace ayrep
