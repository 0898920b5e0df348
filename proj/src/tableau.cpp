#include "ayrep/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ayrep/error.hpp"

namespace ayrep {
namespace {

Partition parse_partition(std::string_view text) {
  Partition out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0) throw DomainError("bad partition part '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ')
      flush();
    else
      token += ch;
  }
  flush();
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  while (!lambda_.empty() && lambda_.back() == 0) lambda_.pop_back();
  while (!mu_.empty() && mu_.back() == 0) mu_.pop_back();
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (lambda_[i] < 0 || (i && lambda_[i] > lambda_[i - 1]))
      throw DomainError("lambda = (" + join(lambda_) + ") is not a partition");
  }
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    if (mu_[i] < 0 || (i && mu_[i] > mu_[i - 1])) throw DomainError("mu = (" + join(mu_) + ") is not a partition");
  }
  if (mu_.size() > lambda_.size()) throw DomainError("mu is not contained in lambda");
  mu_.resize(lambda_.size(), 0);
  size_ = 0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (mu_[i] > lambda_[i]) throw DomainError("mu is not contained in lambda");
    size_ += lambda_[i] - mu_[i];
  }
}

SkewShape SkewShape::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

bool SkewShape::is_straight() const noexcept {
  return std::all_of(mu_.begin(), mu_.end(), [](int m) { return m == 0; });
}

bool SkewShape::contains(Box b) const noexcept {
  if (b.row < 1 || b.row > rows()) return false;
  const auto r = static_cast<std::size_t>(b.row - 1);
  return b.col > mu_[r] && b.col <= lambda_[r];
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r)
    for (int c = mu_[static_cast<std::size_t>(r - 1)] + 1; c <= lambda_[static_cast<std::size_t>(r - 1)]; ++c)
      out.push_back({r, c});
  return out;
}

std::string SkewShape::str() const {
  if (is_straight()) return join(lambda_);
  Partition mu = mu_;
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return join(lambda_) + "/" + join(mu);
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows()) throw DomainError("tableau row count does not match its shape");
  std::set<int> seen;
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (static_cast<int>(rows_[ur].size()) != shape_.lambda()[ur] - shape_.mu()[ur])
      throw DomainError("tableau row " + std::to_string(r + 1) + " does not match shape " + shape_.str());
    for (int v : rows_[ur])
      if (v < 1 || !seen.insert(v).second) throw DomainError("tableau entries must be distinct positive integers");
  }
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  Partition lambda;
  for (const auto& row : rows) lambda.push_back(static_cast<int>(row.size()));
  return Tableau(SkewShape(lambda), std::move(rows));
}

Tableau Tableau::parse(std::string_view text) {
  Partition lambda, mu;
  std::vector<std::vector<int>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string tok;
    int dots = 0, count = 0;
    std::vector<int> row;
    while (tokens >> tok) {
      ++count;
      if (tok == ".") {
        if (!row.empty()) throw DomainError("'.' after an entry in tableau row '" + line + "'");
        ++dots;
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw DomainError("bad tableau entry '" + tok + "'");
      row.push_back(v);
    }
    if (count == 0) continue;
    lambda.push_back(count);
    mu.push_back(dots);
    rows.push_back(std::move(row));
  }
  return Tableau(SkewShape(lambda, mu), std::move(rows));
}

int Tableau::at(Box b) const {
  if (!shape_.contains(b)) throw DomainError("box outside the tableau shape");
  const auto r = static_cast<std::size_t>(b.row - 1);
  return rows_[r][static_cast<std::size_t>(b.col - shape_.mu()[r] - 1)];
}

std::optional<Box> Tableau::find(int value) const {
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] == value) return Box{r + 1, shape_.mu()[static_cast<std::size_t>(r)] + 1 + static_cast<int>(k)};
  }
  return std::nullopt;
}

std::vector<int> Tableau::row_major() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

bool Tableau::is_increasing() const {
  for (const Box& b : shape_.boxes()) {
    const int v = at(b);
    const Box right{b.row, b.col + 1}, below{b.row + 1, b.col};
    if (shape_.contains(right) && at(right) <= v) return false;
    if (shape_.contains(below) && at(below) <= v) return false;
  }
  return true;
}

bool Tableau::is_standard() const { return max_entry() == size() && is_increasing(); }

std::string Tableau::str() const {
  std::string out;
  for (int r = 0; r < shape_.rows(); ++r) {
    std::string line;
    for (int k = 0; k < shape_.mu()[static_cast<std::size_t>(r)]; ++k) line += line.empty() ? "." : " .";
    for (int v : rows_[static_cast<std::size_t>(r)]) line += (line.empty() ? "" : " ") + std::to_string(v);
    out += line + "\n";
  }
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

long long hook_length_count(const Partition& lambda) {
  const SkewShape shape(lambda);
  Partition conj(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.front()), 0);
  for (int part : shape.lambda())
    for (int c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
  long long numerator = 1;
  std::vector<long long> hooks;
  for (const Box& b : shape.boxes()) {
    hooks.push_back((shape.lambda()[static_cast<std::size_t>(b.row - 1)] - b.col) +
                    (conj[static_cast<std::size_t>(b.col - 1)] - b.row) + 1);
  }
  for (int k = 2; k <= shape.size(); ++k) numerator *= k;
  // Every partial product of hooks divides n!, so each division is exact.
  for (long long h : hooks) numerator /= h;
  return numerator;
}

std::vector<SkewShape> skew_shapes(int n) {
  std::vector<SkewShape> out;
  // Built bottom row first.
  std::vector<int> lam, mu;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      Partition L(lam.rbegin(), lam.rend()), M(mu.rbegin(), mu.rend());
      out.emplace_back(L, M);
      return;
    }
    if (lam.empty()) {
      for (int a = 1; a <= remaining; ++a) {
        lam.push_back(a);
        mu.push_back(0);
        rec(remaining - a);
        lam.pop_back();
        mu.pop_back();
      }
      return;
    }
    const int below_lam = lam.back(), below_mu = mu.back();
    for (int m = below_mu; m <= below_lam; ++m) {
      for (int a = 1; a <= remaining; ++a) {
        const int l = m + a;
        if (l < below_lam) continue;
        lam.push_back(l);
        mu.push_back(m);
        rec(remaining - a);
        lam.pop_back();
        mu.pop_back();
      }
    }
  };
  if (n >= 1) rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_standard(const SkewShape& shape) {
  if (shape.size() == 0) throw EmptyShapeError("enumerate_standard: empty shape");
  const std::vector<Box> boxes = shape.boxes();
  std::map<Box, int> filling;
  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int next) {
    if (next > shape.size()) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
      for (const Box& b : boxes) rows[static_cast<std::size_t>(b.row - 1)].push_back(filling.at(b));
      out.emplace_back(shape, std::move(rows));
      return;
    }
    for (const Box& b : boxes) {
      if (filling.contains(b)) continue;
      const Box left{b.row, b.col - 1}, above{b.row - 1, b.col};
      if (shape.contains(left) && !filling.contains(left)) continue;
      if (shape.contains(above) && !filling.contains(above)) continue;
      filling[b] = next;
      rec(next + 1);
      filling.erase(b);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) { return a.row_major() < b.row_major(); });
  return out;
}

namespace {

Tableau fill_in_order(const SkewShape& shape, const std::vector<Box>& order) {
  std::map<Box, int> value;
  int next = 1;
  for (const Box& b : order) value[b] = next++;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (const Box& b : shape.boxes()) rows[static_cast<std::size_t>(b.row - 1)].push_back(value.at(b));
  return Tableau(shape, std::move(rows));
}

}  // namespace

Tableau row_tableau(const SkewShape& shape) { return fill_in_order(shape, shape.boxes()); }

Tableau column_tableau(const SkewShape& shape) {
  std::vector<Box> order = shape.boxes();
  std::sort(order.begin(), order.end(), [](const Box& a, const Box& b) { return std::pair(a.col, a.row) < std::pair(b.col, b.row); });
  return fill_in_order(shape, order);
}

ContentVector content_vector(const Tableau& Q) {
  if (!Q.is_standard()) throw DomainError("content_vector needs a standard tableau");
  ContentVector c(static_cast<std::size_t>(Q.size()));
  for (const Box& b : Q.shape().boxes()) c[static_cast<std::size_t>(Q.at(b) - 1)] = b.content();
  return c;
}

std::vector<long long> derived(const std::vector<long long>& v) {
  if (v.size() < 2) throw DomainError("derived needs a vector of length at least 2");
  std::vector<long long> out;
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
  return out;
}

std::optional<std::pair<int, int>> content_vector_violation(const ContentVector& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(j)]) continue;
      bool up = false, down = false;
      for (int r = i + 1; r < j; ++r) {
        up = up || c[static_cast<std::size_t>(r)] == c[static_cast<std::size_t>(i)] + 1;
        down = down || c[static_cast<std::size_t>(r)] == c[static_cast<std::size_t>(i)] - 1;
      }
      if (!up || !down) return std::pair{i + 1, j + 1};
    }
  }
  return std::nullopt;
}

bool is_content_vector(const ContentVector& c) { return !content_vector_violation(c).has_value(); }

namespace {

// Smallest skew shape (with its rows) holding exactly the given boxes.
SkewShape shape_of_boxes(const std::vector<Box>& boxes) {
  int max_row = 0;
  for (const Box& b : boxes) max_row = std::max(max_row, b.row);
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(max_row) + 1);
  for (const Box& b : boxes) cols[static_cast<std::size_t>(b.row)].push_back(b.col);
  Partition lambda(static_cast<std::size_t>(max_row)), mu(static_cast<std::size_t>(max_row));
  for (int r = max_row; r >= 1; --r) {
    auto& row = cols[static_cast<std::size_t>(r)];
    const auto ur = static_cast<std::size_t>(r - 1);
    if (row.empty()) {
      const int fill = r == max_row ? 0 : lambda[ur + 1];
      lambda[ur] = mu[ur] = fill;
      continue;
    }
    std::sort(row.begin(), row.end());
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k] != row[k - 1] + 1) throw std::logic_error("tableau_from_content produced a gapped row");
    lambda[ur] = row.back();
    mu[ur] = row.front() - 1;
  }
  return SkewShape(lambda, mu);
}

}  // namespace

Tableau tableau_from_content(const ContentVector& c) {
  if (c.empty()) throw ConstructionError("tableau_from_content: empty content vector");
  if (auto bad = content_vector_violation(c))
    throw ConstructionError("not a content vector: c_" + std::to_string(bad->first) + " = c_" + std::to_string(bad->second) +
                            " without both neighbouring contents strictly between");
  const std::size_t n = c.size();
  std::vector<Box> pos;
  std::set<Box> occupied;
  for (std::size_t m = 0; m < n; ++m) {
    const long long cm = c[m];
    std::optional<std::size_t> last;
    for (std::size_t k = 0; k < m; ++k)
      if (c[k] == cm) last = k;
    Box placed;
    if (last) {
      const Box prev = pos[*last];
      if (!occupied.contains({prev.row, prev.col + 1}) || !occupied.contains({prev.row + 1, prev.col}))
        throw ConstructionError("content vector is not realizable at letter " + std::to_string(m + 1));
      placed = {prev.row + 1, prev.col + 1};
    } else {
      std::optional<std::size_t> top_below, bottom_above;  // max content < cm, min content > cm
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k] < cm && (!top_below || c[k] > c[*top_below])) top_below = k;
        if (c[k] > cm && (!bottom_above || c[k] < c[*bottom_above])) bottom_above = k;
      }
      int row = 1;
      if (top_below) {
        const Box mb = pos[*top_below];
        row = c[*top_below] == cm - 1 ? mb.row : mb.row - 1;
      } else if (bottom_above) {
        row = pos[*bottom_above].row + 1;
      }
      if (top_below && bottom_above) {
        const int shift = (row - 1) - pos[*bottom_above].row;
        if (shift != 0) {
          for (std::size_t k = 0; k < m; ++k) {
            if (c[k] <= cm) continue;
            occupied.erase(pos[k]);
            pos[k].row += shift;
            pos[k].col += shift;
          }
          for (std::size_t k = 0; k < m; ++k)
            if (c[k] > cm) occupied.insert(pos[k]);
        }
      }
      placed = {row, row + static_cast<int>(cm)};
    }
    if (occupied.contains(placed)) throw std::logic_error("tableau_from_content: box collision");
    pos.push_back(placed);
    occupied.insert(placed);
  }

  int min_row = pos.front().row, min_col = pos.front().col;
  for (const Box& b : pos) {
    min_row = std::min(min_row, b.row);
    min_col = std::min(min_col, b.col);
  }
  const int shift = std::max(1 - min_row, 1 - min_col);
  for (Box& b : pos) {
    b.row += shift;
    b.col += shift;
  }
  const SkewShape shape = shape_of_boxes(pos);
  std::map<Box, int> value;
  for (std::size_t k = 0; k < n; ++k) value[pos[k]] = static_cast<int>(k) + 1;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (const Box& b : shape.boxes()) rows[static_cast<std::size_t>(b.row - 1)].push_back(value.at(b));
  Tableau Q(shape, std::move(rows));
  if (!Q.is_standard()) throw std::logic_error("tableau_from_content produced a nonstandard tableau");
  return Q;
}

Tableau relabel(const Tableau& Q, const Permutation& pi) {
  if (pi.size() != Q.max_entry())
    throw DomainError("relabel: permutation of degree " + std::to_string(pi.size()) + " for a tableau with largest entry " +
                      std::to_string(Q.max_entry()));
  const Permutation inv = pi.inverse();
  std::vector<std::vector<int>> rows = Q.rows();
  for (auto& row : rows)
    for (int& v : row) v = inv(v);
  return Tableau(Q.shape(), std::move(rows));
}

ReadingWords reading_words(const Tableau& Q) {
  if (!Q.shape().is_straight()) throw DomainError("reading words are defined here for straight shapes only");
  if (!Q.is_standard()) throw DomainError("reading words need a standard tableau");
  std::vector<int> row_word, down, up;
  for (const auto& row : Q.rows()) row_word.insert(row_word.end(), row.rbegin(), row.rend());
  const int width = Q.shape().lambda().front();
  for (int col = 1; col <= width; ++col) {
    std::vector<int> column;
    for (int r = 1; r <= Q.shape().rows(); ++r)
      if (Q.shape().contains({r, col})) column.push_back(Q.at({r, col}));
    down.insert(down.end(), column.begin(), column.end());
    up.insert(up.end(), column.rbegin(), column.rend());
  }
  return {Permutation(row_word), Permutation(down), Permutation(up)};
}

bool is_row_tableau(const Tableau& Q) {
  int max_so_far = 0;
  for (const auto& row : Q.rows()) {
    if (row.empty()) continue;
    if (*std::min_element(row.begin(), row.end()) < max_so_far) return false;
    max_so_far = std::max(max_so_far, *std::max_element(row.begin(), row.end()));
  }
  return true;
}

bool is_column_tableau(const Tableau& Q) {
  std::map<int, std::vector<int>> columns;
  for (const Box& b : Q.shape().boxes()) columns[b.col].push_back(Q.at(b));
  int max_so_far = 0;
  for (const auto& [col, entries] : columns) {
    if (*std::min_element(entries.begin(), entries.end()) < max_so_far) return false;
    max_so_far = std::max(max_so_far, *std::max_element(entries.begin(), entries.end()));
  }
  return true;
}

HookDistance hook_distance(const Tableau& Q, int k) {
  if (k < 1 || k >= Q.size()) throw DomainError("hook_distance: k out of range");
  if (!Q.is_standard()) throw DomainError("hook_distance needs a standard tableau");
  const Box a = *Q.find(k), b = *Q.find(k + 1);
  HookDistance h{b.content() - a.content(), HookCase::Neither};
  if (a.row == b.row)
    h.tag = HookCase::SameRow;
  else if (a.col == b.col)
    h.tag = HookCase::SameColumn;
  return h;
}

int inversions(const Tableau& Q) {
  if (!Q.is_standard()) throw DomainError("inversions needs a standard tableau");
  std::vector<int> row_of(static_cast<std::size_t>(Q.size()) + 1);
  for (const Box& b : Q.shape().boxes()) row_of[static_cast<std::size_t>(Q.at(b))] = b.row;
  int count = 0;
  for (int i = 1; i <= Q.size(); ++i)
    for (int j = i + 1; j <= Q.size(); ++j)
      if (row_of[static_cast<std::size_t>(i)] > row_of[static_cast<std::size_t>(j)]) ++count;
  return count;
}

}  // namespace ayrep
