#include "ferrers/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "ferrers/errors.hpp"
#include "json.hpp"

namespace ferrers {

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::vector<std::pair<int, int>> covers) {
  Poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  p.covers_ = std::move(covers);
  p.up_.assign(p.n_, {});
  p.down_.assign(p.n_, {});
  for (auto [lo, hi] : p.covers_) {
    if (lo < 0 || lo >= p.n_ || hi < 0 || hi >= p.n_ || lo == hi)
      throw std::invalid_argument("cover edge out of range");
    p.up_[lo].push_back(hi);
    p.down_[hi].push_back(lo);
  }

  // topological order by Kahn's algorithm
  std::vector<int> indeg(p.n_), topo;
  topo.reserve(p.n_);
  for (int x = 0; x < p.n_; ++x) indeg[x] = static_cast<int>(p.down_[x].size());
  std::queue<int> q;
  for (int x = 0; x < p.n_; ++x)
    if (indeg[x] == 0) q.push(x);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    topo.push_back(x);
    for (int y : p.up_[x])
      if (--indeg[y] == 0) q.push(y);
  }
  if (static_cast<int>(topo.size()) != p.n_)
    throw NotRookPosetError("structure", "cover relation has a cycle");

  int sources = 0, sinks = 0;
  for (int x = 0; x < p.n_; ++x) {
    if (p.down_[x].empty()) {
      ++sources;
      p.bottom_ = x;
    }
    if (p.up_[x].empty()) {
      ++sinks;
      p.top_ = x;
    }
  }
  if (p.n_ == 0 || sources != 1)
    throw NotRookPosetError("structure", "no unique minimum element");
  if (sinks != 1)
    throw NotRookPosetError("structure", "no unique maximum element");

  p.rank_.assign(p.n_, 0);
  for (int x : topo)
    for (int y : p.down_[x]) p.rank_[x] = std::max(p.rank_[x], p.rank_[y] + 1);
  for (auto [lo, hi] : p.covers_)
    if (p.rank_[hi] != p.rank_[lo] + 1)
      throw NotRookPosetError("structure", "cover relation is not graded");

  p.below_ = BitMatrix(p.n_, p.n_);
  for (int x : topo) {
    p.below_.set(x, x);
    for (int y : p.down_[x]) p.below_.or_row(x, y);
  }
  for (int x = 0; x < p.n_; ++x)
    if (!p.below_.test(p.top_, x))
      throw NotRookPosetError("structure", "element not below the maximum");

  return p;
}

Poset Poset::from_covers(int n, std::vector<std::pair<int, int>> covers) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_covers(std::move(labels), std::move(covers));
}

std::vector<int> Poset::coatoms() const {
  std::vector<int> out = down_[top_];
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::rank_sizes() const {
  std::vector<int> out(max_rank() + 1, 0);
  for (int x = 0; x < n_; ++x) ++out[rank_[x]];
  return out;
}

Poset build_poset(const Partition& p, long long max_elements) {
  const long long expect = placement_count(p);
  if (expect > max_elements) throw ResourceGuardError(expect, max_elements);

  std::vector<RookPlacement> elems = enumerate_placements(p);
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < elems.size(); ++i)
    id[elems[i].columns] = static_cast<int>(i);

  std::vector<std::string> labels(elems.size());
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels[i] = elems[i].to_string();
    for (const RookPlacement& y : covers_down(elems[i]))
      covers.emplace_back(id.at(y.columns), static_cast<int>(i));
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

std::string PoincarePolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) os << " + ";
    if (coefficients[k] != 1 || k == 0) os << coefficients[k];
    if (k == 1) os << 'q';
    if (k > 1) os << "q^" << k;
  }
  return os.str();
}

PoincarePolynomial poincare_polynomial(const Poset& p) {
  PoincarePolynomial out;
  out.coefficients.assign(p.max_rank() + 1, 0);
  for (int x = 0; x < p.size(); ++x) ++out.coefficients[p.rank_of(x)];
  return out;
}

PoincarePolynomial q_integer_product(const GjwSequence& g) {
  std::vector<long long> acc{1};
  for (int a : g.entries()) {
    std::vector<long long> next(acc.size() + a, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (int k = 0; k <= a; ++k) next[i + k] += acc[i];
    acc = std::move(next);
  }
  return PoincarePolynomial{std::move(acc)};
}

namespace {

// one bit per coatom, in coatoms() order
std::vector<std::uint64_t> coatom_masks(const Poset& p,
                                        const std::vector<int>& coatoms) {
  if (coatoms.size() > 63)
    throw NotRookPosetError("coatoms", "more than 63 coatoms");
  std::vector<std::uint64_t> mask(p.size(), 0);
  for (std::size_t c = 0; c < coatoms.size(); ++c)
    for (int x = 0; x < p.size(); ++x)
      if (p.leq(x, coatoms[c])) mask[x] |= std::uint64_t{1} << c;
  return mask;
}

std::uint64_t bits_of(const std::vector<int>& coatoms,
                      const std::vector<int>& subset) {
  std::uint64_t m = 0;
  for (int c : subset) {
    auto it = std::lower_bound(coatoms.begin(), coatoms.end(), c);
    if (it == coatoms.end() || *it != c)
      throw std::invalid_argument("element is not a coatom");
    m |= std::uint64_t{1} << (it - coatoms.begin());
  }
  return m;
}

}  // namespace

std::vector<int> subposet_x(const Poset& p,
                            const std::vector<int>& coatoms_in) {
  const std::vector<int> coats = p.coatoms();
  const std::vector<std::uint64_t> mask = coatom_masks(p, coats);
  const std::uint64_t keep = bits_of(coats, coatoms_in);
  const std::uint64_t all = coats.empty()
                                ? 0
                                : (~std::uint64_t{0} >> (64 - coats.size()));
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if ((mask[x] & all & ~keep) == 0) out.push_back(x);
  return out;
}

std::vector<int> subposet_x_eq(const Poset& p,
                               const std::vector<int>& coatoms_in) {
  const std::vector<int> coats = p.coatoms();
  const std::vector<std::uint64_t> mask = coatom_masks(p, coats);
  const std::uint64_t keep = bits_of(coats, coatoms_in);
  const std::uint64_t all = coats.empty()
                                ? 0
                                : (~std::uint64_t{0} >> (64 - coats.size()));
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if ((mask[x] & all & ~keep) == 0 && (mask[x] & keep) == keep)
      out.push_back(x);
  return out;
}

InducedPoset induced_subposet(const Poset& p, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end(),
            [&](int a, int b) {
              return std::pair(p.rank_of(a), a) < std::pair(p.rank_of(b), b);
            });
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  const int k = static_cast<int>(elements.size());

  InducedPoset out;
  out.original_id = elements;
  out.new_id.assign(p.size(), -1);
  for (int i = 0; i < k; ++i) out.new_id[elements[i]] = i;

  // strict comparabilities within the subset
  BitMatrix less(k, k);  // less.test(b, a) iff a < b
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a)
      if (a != b && p.leq(elements[a], elements[b])) less.set(b, a);

  std::vector<std::pair<int, int>> covers;
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) {
      if (!less.test(b, a)) continue;
      bool is_cover = true;
      for (int c = 0; c < k && is_cover; ++c)
        if (less.test(c, a) && less.test(b, c)) is_cover = false;
      if (is_cover) covers.emplace_back(a, b);
    }

  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = p.label(elements[i]);
  out.poset = Poset::from_covers(std::move(labels), std::move(covers));
  return out;
}

EntanglementGraph entanglement_graph(const Poset& p) {
  EntanglementGraph g;
  g.vertices = p.coatoms();
  if (p.size() == 0 || p.max_rank() < 2) return g;
  const std::vector<std::uint64_t> mask = coatom_masks(p, g.vertices);
  const std::size_t m = g.vertices.size();
  const std::uint64_t all =
      m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
  const int corank2 = p.max_rank() - 2;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t pair =
          (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      int count = 0;
      for (int x = 0; x < p.size(); ++x)
        if (p.rank_of(x) == corank2 && (mask[x] & pair) == pair &&
            (mask[x] & all & ~pair) == 0)
          ++count;
      if (count >= 2) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
    }
  }
  return g;
}

bool is_forest(const EntanglementGraph& g) {
  std::map<int, int> parent;
  for (int v : g.vertices) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

RowGraph switch_partner_graph(const GjwSequence& g) {
  RowGraph out;
  const auto& a = g.entries();
  const int n = g.size();
  for (int i = 1; i <= n; ++i)
    if (a[i - 1] >= 1) out.vertices.push_back(i);
  for (int i = 1; i <= n; ++i) {
    if (a[i - 1] < 1) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (a[j - 1] < a[i - 1]) {
        if (a[j - 1] >= 1) out.edges.emplace_back(i, j);
        break;
      }
    }
  }
  return out;
}

namespace {

// Joint iterative refinement of vertex colors by rank and neighbor color
// multisets. Returns false early when the color histograms diverge.
bool refine_colors(const Poset& A, const Poset& B, std::vector<int>& ca,
                   std::vector<int>& cb) {
  const int n = A.size();
  ca.assign(n, 0);
  cb.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    ca[x] = A.rank_of(x);
    cb[x] = B.rank_of(x);
  }
  int colors = A.max_rank() + 1;
  for (;;) {
    auto signature = [](const Poset& P, const std::vector<int>& col, int x) {
      std::vector<int> sig{col[x], -1};
      for (int y : P.upper_covers(x)) sig.push_back(col[y]);
      std::sort(sig.begin() + 2, sig.end());
      sig.push_back(-2);
      std::size_t base = sig.size();
      for (int y : P.lower_covers(x)) sig.push_back(col[y]);
      std::sort(sig.begin() + base, sig.end());
      return sig;
    };
    std::map<std::vector<int>, int> dict;
    std::vector<int> na(n), nb(n);
    for (int x = 0; x < n; ++x) {
      auto sig = signature(A, ca, x);
      auto [it, fresh] = dict.try_emplace(std::move(sig),
                                          static_cast<int>(dict.size()));
      (void)fresh;
      na[x] = it->second;
    }
    for (int x = 0; x < n; ++x) {
      auto sig = signature(B, cb, x);
      auto it = dict.find(sig);
      if (it == dict.end()) return false;
      nb[x] = it->second;
    }
    std::vector<int> ha(dict.size(), 0), hb(dict.size(), 0);
    for (int x = 0; x < n; ++x) {
      ++ha[na[x]];
      ++hb[nb[x]];
    }
    if (ha != hb) return false;
    int next = static_cast<int>(dict.size());
    ca.swap(na);
    cb.swap(nb);
    if (next == colors) return true;  // stable
    colors = next;
  }
}

class IsoSearch {
public:
  IsoSearch(const Poset& A, const Poset& B, const std::vector<int>& ca,
            const std::vector<int>& cb)
      : A_(A), B_(B), n_(A.size()), words_((n_ + 63) / 64) {
    cand_.assign(static_cast<std::size_t>(n_) * words_, 0);
    up_mask_.assign(static_cast<std::size_t>(n_) * words_, 0);
    down_mask_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int y = 0; y < n_; ++y) {
      for (int z : B_.upper_covers(y)) set_bit(&up_mask_[row(y)], z);
      for (int z : B_.lower_covers(y)) set_bit(&down_mask_[row(y)], z);
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (ca[x] == cb[y]) set_bit(&cand_[row(x)], y);
    mapped_.assign(n_, -1);
  }

  bool run() { return extend(0); }

private:
  std::size_t row(int x) const { return static_cast<std::size_t>(x) * words_; }
  static void set_bit(std::uint64_t* r, int c) {
    r[c / 64] |= std::uint64_t{1} << (c % 64);
  }

  void record_and_clear(int x, int w, std::uint64_t keep_mask) {
    std::uint64_t& word = cand_[row(x) + w];
    std::uint64_t next = word & keep_mask;
    if (next != word) {
      trail_.push_back({x, w, word});
      word = next;
    }
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    // most constrained unmapped vertex
    int best = -1, best_count = n_ + 1;
    for (int x = 0; x < n_; ++x) {
      if (mapped_[x] >= 0) continue;
      int cnt = 0;
      for (int w = 0; w < words_ && cnt < best_count; ++w)
        cnt += std::popcount(cand_[row(x) + w]);
      if (cnt == 0) return false;
      if (cnt < best_count) {
        best_count = cnt;
        best = x;
      }
    }
    const int x = best;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand_[row(x) + w];
      while (bits) {
        const int y = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::size_t mark = trail_.size();
        mapped_[x] = y;
        bool ok = prune(x, y);
        if (ok && extend(depth + 1)) return true;
        while (trail_.size() > mark) {
          const Change& c = trail_.back();
          cand_[row(c.vertex) + c.word] = c.old_value;
          trail_.pop_back();
        }
        mapped_[x] = -1;
      }
    }
    return false;
  }

  bool prune(int x, int y) {
    // y is taken
    for (int z = 0; z < n_; ++z) {
      if (mapped_[z] >= 0 || z == x) continue;
      record_and_clear(z, y / 64, ~(std::uint64_t{1} << (y % 64)));
    }
    // cover-neighbors of x must map onto cover-neighbors of y
    for (int z : A_.upper_covers(x))
      if (mapped_[z] < 0)
        for (int w = 0; w < words_; ++w)
          record_and_clear(z, w, up_mask_[row(y) + w]);
    for (int z : A_.lower_covers(x))
      if (mapped_[z] < 0)
        for (int w = 0; w < words_; ++w)
          record_and_clear(z, w, down_mask_[row(y) + w]);
    // mapped neighbors of x must already be neighbors of y
    for (int z : A_.upper_covers(x))
      if (mapped_[z] >= 0 &&
          !(up_mask_[row(y) + mapped_[z] / 64] &
            (std::uint64_t{1} << (mapped_[z] % 64))))
        return false;
    for (int z : A_.lower_covers(x))
      if (mapped_[z] >= 0 &&
          !(down_mask_[row(y) + mapped_[z] / 64] &
            (std::uint64_t{1} << (mapped_[z] % 64))))
        return false;
    return true;
  }

  struct Change {
    int vertex;
    int word;
    std::uint64_t old_value;
  };

  const Poset& A_;
  const Poset& B_;
  int n_, words_;
  std::vector<std::uint64_t> cand_, up_mask_, down_mask_;
  std::vector<int> mapped_;
  std::vector<Change> trail_;
};

}  // namespace

bool are_isomorphic(const Poset& a, const Poset& b, long long max_elements) {
  if (a.size() > max_elements || b.size() > max_elements)
    throw ResourceGuardError(std::max(a.size(), b.size()), max_elements);
  if (a.size() != b.size()) return false;
  if (a.covers().size() != b.covers().size()) return false;
  if (a.rank_sizes() != b.rank_sizes()) return false;
  if (a.size() == 0) return true;

  std::vector<int> ca, cb;
  if (!refine_colors(a, b, ca, cb)) return false;
  IsoSearch search(a, b, ca, cb);
  return search.run();
}

Poset product_poset(const Poset& a, const Poset& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::string> labels(static_cast<std::size_t>(na) * nb);
  std::vector<std::pair<int, int>> covers;
  auto id = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      labels[id(i, j)] = a.label(i) + "|" + b.label(j);
      for (int k : a.upper_covers(i)) covers.emplace_back(id(i, j), id(k, j));
      for (int k : b.upper_covers(j)) covers.emplace_back(id(i, j), id(i, k));
    }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

Poset with_anonymous_labels(const Poset& p) {
  std::vector<std::string> labels(p.size());
  for (int i = 0; i < p.size(); ++i) labels[i] = std::to_string(i);
  return Poset::from_covers(std::move(labels), p.covers());
}

std::string poset_to_json(const Poset& p) {
  nlohmann::ordered_json j;
  j["elements"] = nlohmann::ordered_json::array();
  for (int i = 0; i < p.size(); ++i) j["elements"].push_back(p.label(i));
  j["covers"] = nlohmann::ordered_json::array();
  for (auto [lo, hi] : p.covers())
    j["covers"].push_back({p.label(lo), p.label(hi)});
  nlohmann::ordered_json ranks;
  for (int i = 0; i < p.size(); ++i) ranks[p.label(i)] = p.rank_of(i);
  j["ranks"] = std::move(ranks);
  return j.dump(2);
}

Poset poset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array() ||
      !j.contains("covers") || !j["covers"].is_array())
    throw std::invalid_argument(
        "poset JSON needs \"elements\" and \"covers\" arrays");

  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (const auto& e : j["elements"]) {
    if (!e.is_string())
      throw std::invalid_argument("element labels must be strings");
    std::string lbl = e.get<std::string>();
    if (!id.emplace(lbl, static_cast<int>(labels.size())).second)
      throw std::invalid_argument("duplicate element label '" + lbl + "'");
    labels.push_back(std::move(lbl));
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
        !c[1].is_string())
      throw std::invalid_argument("covers must be [lower, upper] label pairs");
    auto lo = id.find(c[0].get<std::string>());
    auto hi = id.find(c[1].get<std::string>());
    if (lo == id.end() || hi == id.end())
      throw std::invalid_argument("cover references unknown element");
    covers.emplace_back(lo->second, hi->second);
  }
  Poset p = Poset::from_covers(std::move(labels), std::move(covers));
  if (j.contains("ranks")) {
    if (!j["ranks"].is_object())
      throw std::invalid_argument("\"ranks\" must map labels to integers");
    for (const auto& [lbl, val] : j["ranks"].items()) {
      auto it = id.find(lbl);
      if (it == id.end())
        throw std::invalid_argument("rank for unknown element '" + lbl + "'");
      if (!val.is_number_integer() ||
          p.rank_of(it->second) != val.get<int>())
        throw NotRookPosetError("ranks",
                                "provided rank disagrees with the grading");
    }
  }
  return p;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph rook_poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\\nrank " << p.rank_of(i)
       << "\"];\n";
  for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ferrers
