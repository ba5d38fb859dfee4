#include "ferrers/placement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ferrers {

std::string RookPlacement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << columns[i];
  }
  os << ']';
  return os.str();
}

void validate_placement(const RookPlacement& x, const Partition& p) {
  if (x.rows() != p.rows())
    throw std::invalid_argument("placement has wrong number of rows");
  std::vector<int> seen;
  for (int i = 1; i <= x.rows(); ++i) {
    int c = x.column(i);
    if (c < 1 || c > p.part(i))
      throw std::invalid_argument("rook outside the board in row " +
                                  std::to_string(i));
    seen.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("two rooks share a column");
}

long long placement_count(const Partition& p) {
  const GjwSequence g = p.gjw();
  long long n = 1;
  for (int a : g.entries()) n *= a + 1;
  return n;
}

std::vector<RookPlacement> enumerate_placements(const Partition& p) {
  std::vector<RookPlacement> out;
  const int n = p.rows();
  std::vector<int> cur(n);
  std::vector<bool> used(p.rows() == 0 ? 1 : p.part(n) + 1, false);
  auto rec = [&](auto&& self, int row) -> void {
    if (row > n) {
      out.emplace_back(cur);
      return;
    }
    for (int c = 1; c <= p.part(row); ++c) {
      if (used[c]) continue;
      used[c] = true;
      cur[row - 1] = c;
      self(self, row + 1);
      used[c] = false;
    }
  };
  rec(rec, 1);
  return out;
}

RookPlacement max_placement(const Partition& p) {
  const int n = p.rows();
  std::vector<int> cols(n);
  std::vector<bool> used(n == 0 ? 1 : p.part(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int c = p.part(i);
    while (used[c]) --c;
    used[c] = true;
    cols[i - 1] = c;
  }
  return RookPlacement(std::move(cols));
}

RookPlacement min_placement(const Partition& p) {
  std::vector<int> cols(p.rows());
  for (int i = 0; i < p.rows(); ++i) cols[i] = i + 1;
  return RookPlacement(std::move(cols));
}

namespace {

bool dominates(const std::vector<int>& lo, const std::vector<int>& hi) {
  for (std::size_t t = 0; t < lo.size(); ++t)
    if (lo[t] > hi[t]) return false;
  return true;
}

}  // namespace

bool bruhat_leq(const RookPlacement& x, const RookPlacement& y) {
  if (x.rows() != y.rows())
    throw std::invalid_argument("placements live on different boards");
  std::vector<int> xs, ys;
  for (int j = 1; j <= x.rows(); ++j) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x.column(j)), x.column(j));
    ys.insert(std::upper_bound(ys.begin(), ys.end(), y.column(j)), y.column(j));
    if (!dominates(xs, ys)) return false;
  }
  return true;
}

std::vector<int> complete_to_permutation(const RookPlacement& x,
                                         const Partition& p) {
  const int n = x.rows();
  const int m = n == 0 ? 0 : p.part(n);
  std::vector<int> out(x.columns);
  std::vector<bool> used(m + 1, false);
  for (int c : out) used[c] = true;
  int next = 1;
  for (int i = n; i < m; ++i) {
    while (used[next]) ++next;
    used[next] = true;
    out.push_back(next);
  }
  return out;
}

int inversion_count(const std::vector<int>& values) {
  int inv = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inv;
  return inv;
}

int rank(const RookPlacement& x, const Partition& p) {
  return inversion_count(complete_to_permutation(x, p));
}

std::vector<RookPlacement> switch_moves(const RookPlacement& x) {
  std::vector<RookPlacement> out;
  const int n = x.rows();
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      const int j = x.column(i), l = x.column(k);
      if (j <= l) continue;
      // the rectangle spanned by (i,j) and (k,l) must hold no other rook
      bool empty = true;
      for (int r = i + 1; r < k && empty; ++r)
        if (x.column(r) >= l && x.column(r) <= j) empty = false;
      if (!empty) continue;
      RookPlacement y = x;
      y.columns[i - 1] = l;
      y.columns[k - 1] = j;
      out.push_back(std::move(y));
    }
  }
  return out;
}

std::vector<RookPlacement> push_moves(const RookPlacement& x) {
  std::vector<RookPlacement> out;
  const int n = x.rows();
  int maxcol = 0;
  for (int c : x.columns) maxcol = std::max(maxcol, c);
  // owner[c] = row of the rook in column c, 0 if the column is empty
  std::vector<int> owner(maxcol + 1, 0);
  for (int i = 1; i <= n; ++i) owner[x.column(i)] = i;
  for (int i = 1; i <= n; ++i) {
    const int j = x.column(i);
    for (int k = 1; k < j; ++k) {
      if (owner[k] != 0) continue;
      bool ok = true;
      for (int r = k + 1; r < j && ok; ++r)
        if (owner[r] == 0 || owner[r] >= i) ok = false;
      if (!ok) continue;
      RookPlacement y = x;
      y.columns[i - 1] = k;
      out.push_back(std::move(y));
    }
  }
  return out;
}

std::vector<RookPlacement> covers_down(const RookPlacement& x) {
  std::vector<RookPlacement> out = switch_moves(x);
  std::vector<RookPlacement> pushes = push_moves(x);
  out.insert(out.end(), pushes.begin(), pushes.end());
  return out;
}

RookPlacement conjugate_placement(const RookPlacement& x, const Partition& p) {
  if (!p.conjugable())
    throw std::invalid_argument(
        "conjugation requires the top row to have rows()+1 boxes");
  const int n = p.rows();
  // extend: the added top row takes the one unused column of {1..n+1}
  std::vector<bool> used(n + 2, false);
  for (int c : x.columns) used[c] = true;
  int missing = 1;
  while (used[missing]) ++missing;
  std::vector<int> cols(n + 1, 0);
  auto place = [&](int row, int col) {
    // reflected rook: (row, col) -> (n+2-col, n+2-row)
    int rr = n + 2 - col, rc = n + 2 - row;
    if (rr <= n) cols[rr - 1] = rc;  // row n+1 of the image is dropped
  };
  for (int i = 1; i <= n; ++i) place(i, x.column(i));
  place(n + 1, missing);
  cols.resize(n);
  return RookPlacement(std::move(cols));
}

Partition insert_zero_board(const Partition& p, int one_row) {
  GjwSequence g = p.gjw();
  if (one_row < 1 || one_row > g.size() || g.entry(one_row) != 1)
    throw std::invalid_argument("row " + std::to_string(one_row) +
                                " does not carry GJW value 1");
  std::vector<int> entries = g.entries();
  entries.insert(entries.begin() + one_row, 0);
  return Partition::from_gjw(GjwSequence(std::move(entries)));
}

RookPlacement insert_zero_map(const RookPlacement& x, const Partition& p,
                              int one_row) {
  GjwSequence g = p.gjw();
  if (one_row < 1 || one_row > g.size() || g.entry(one_row) != 1)
    throw std::invalid_argument("row " + std::to_string(one_row) +
                                " does not carry GJW value 1");
  const int n = one_row + 1;  // position of the inserted 0-row
  std::vector<int> cols(x.columns.begin(), x.columns.begin() + (n - 1));
  // rows below the insertion all sit in columns {1..n}; one column is free
  std::vector<bool> used(n + 1, false);
  for (int c : cols) used[c] = true;
  int missing = 1;
  while (used[missing]) ++missing;
  cols.push_back(missing);
  for (int i = n; i <= x.rows(); ++i) {
    int c = x.column(i);
    cols.push_back(c == missing ? n + 1 : c + 1);
  }
  return RookPlacement(std::move(cols));
}

int coatom_row(const RookPlacement& c, const Partition& p) {
  RookPlacement top = max_placement(p);
  for (int i = 1; i <= p.rows(); ++i)
    if (c.column(i) != top.column(i)) return i;
  throw std::invalid_argument("placement equals the maximum");
}

bool is_below_coatom(const RookPlacement& x, const RookPlacement& c,
                     const Partition& p) {
  const int i = coatom_row(c, p);
  std::vector<int> xs(x.columns.begin(), x.columns.begin() + i);
  std::vector<int> cs(c.columns.begin(), c.columns.begin() + i);
  std::sort(xs.begin(), xs.end());
  std::sort(cs.begin(), cs.end());
  return dominates(xs, cs);
}

RookPlacement parse_placement(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<int> cols;
  std::string tok;
  std::istringstream is(body);
  while (std::getline(is, tok, ',')) {
    try {
      cols.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse placement entry '" + tok + "'");
    }
  }
  return RookPlacement(std::move(cols));
}

}  // namespace ferrers
