#include "ferrers/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

// Everything derived before any block is assembled. Coatoms are addressed
// by index into `coatoms` throughout.
struct Analysis {
  std::vector<int> coatoms;              // element ids, ascending
  std::vector<std::uint64_t> below;      // element -> set of coatoms above it
  std::uint64_t all = 0;
  std::vector<int> xi_edges;             // chain cover edges per coatom
  std::vector<int> xi_min;               // bottom element of each chain
  std::vector<std::vector<int>> adj;     // entanglement adjacency
  std::vector<std::vector<int>> comps;   // components, each sorted
};

Analysis analyze(const Poset& p) {
  Analysis a;
  a.coatoms = p.coatoms();
  const int m = static_cast<int>(a.coatoms.size());
  if (m > 63)
    throw NotRookPosetError("coatoms", "more than 63 coatoms");
  a.all = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));

  a.below.assign(p.size(), 0);
  for (int c = 0; c < m; ++c)
    for (int x = 0; x < p.size(); ++x)
      if (p.leq(x, a.coatoms[c])) a.below[x] |= bit(c);

  // X_i must be a saturated chain topped by the maximum.
  a.xi_edges.assign(m, 0);
  a.xi_min.assign(m, -1);
  for (int c = 0; c < m; ++c) {
    std::vector<int> xs;
    for (int x = 0; x < p.size(); ++x)
      if ((a.below[x] & a.all & ~bit(c)) == 0) xs.push_back(x);
    std::sort(xs.begin(), xs.end(),
              [&](int u, int v) { return p.rank_of(u) < p.rank_of(v); });
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (p.rank_of(xs[k]) != p.rank_of(xs[0]) + static_cast<int>(k))
        throw NotRookPosetError("xi-chain", "X_i is not a saturated chain");
      if (k > 0 && !p.leq(xs[k - 1], xs[k]))
        throw NotRookPosetError("xi-chain", "X_i is not totally ordered");
    }
    a.xi_edges[c] = static_cast<int>(xs.size()) - 1;
    a.xi_min[c] = xs.front();
  }

  // entangled pairs: two distinct corank-2 elements in X_{={c,d}}
  a.adj.assign(m, {});
  int edge_count = 0;
  const int corank2 = p.max_rank() - 2;
  for (int c = 0; c < m; ++c)
    for (int d = c + 1; d < m; ++d) {
      const std::uint64_t pair = bit(c) | bit(d);
      int count = 0;
      for (int x = 0; x < p.size(); ++x)
        if (p.rank_of(x) == corank2 && (a.below[x] & pair) == pair &&
            (a.below[x] & a.all & ~pair) == 0)
          ++count;
      if (count >= 2) {
        a.adj[c].push_back(d);
        a.adj[d].push_back(c);
        ++edge_count;
      }
    }

  // components; forest iff |E| = |V| - #components
  std::vector<int> comp_of(m, -1);
  for (int c = 0; c < m; ++c) {
    if (comp_of[c] >= 0) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(c);
    comp_of[c] = static_cast<int>(a.comps.size());
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : a.adj[u])
        if (comp_of[v] < 0) {
          comp_of[v] = comp_of[c];
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    a.comps.push_back(std::move(comp));
  }
  if (edge_count != m - static_cast<int>(a.comps.size()))
    throw NotRookPosetError("forest", "entanglement graph has a cycle");
  return a;
}

// Rooted component tree with (partially) ordered child lists.
struct Tree {
  int root = -1;
  std::vector<int> parent;               // by coatom index, -2 if absent
  std::vector<std::vector<int>> children;
  std::vector<int> depth;
  std::vector<int> bfs;                  // component members, root first
};

Tree build_tree(const Analysis& a, const std::vector<int>& comp, int root) {
  const int m = static_cast<int>(a.adj.size());
  Tree t;
  t.root = root;
  t.parent.assign(m, -2);
  t.children.assign(m, {});
  t.depth.assign(m, 0);
  t.parent[root] = -1;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    t.bfs.push_back(u);
    for (int v : a.adj[u])
      if (t.parent[v] == -2) {
        t.parent[v] = u;
        t.depth[v] = t.depth[u] + 1;
        t.children[u].push_back(v);
        q.push(v);
      }
  }
  if (t.bfs.size() != comp.size())
    throw NotRookPosetError("forest", "component is not connected");
  return t;
}

// Little ordered tree over an isolated coatom set, used to spell out the
// GJW sequence of the isolation and the two candidate interval boards.
struct IsolationTree {
  std::vector<int> values;          // per local node
  std::vector<std::vector<int>> kids;
  int add(int value) {
    values.push_back(value);
    kids.emplace_back();
    return static_cast<int>(values.size()) - 1;
  }
  // post-order value sequence; records 1-based positions of watched nodes
  void emit(int node, std::vector<int>& out,
            std::map<int, int>& positions) const {
    for (int k : kids[node]) emit(k, out, positions);
    out.push_back(values[node]);
    positions[node] = static_cast<int>(out.size());
  }
};

struct Marker {
  int path_index;  // marker hangs off path[path_index]
  int vertex;      // coatom index
  bool before;     // rows of the marker precede the main branch
};

class Reconstructor {
public:
  explicit Reconstructor(const Poset& p) : p_(p), a_(analyze(p)) {}

  NormalForm run() {
    NormalForm nf;
    if (p_.size() == 1) return nf;

    std::vector<int> final_comps, one_comps;
    for (std::size_t k = 0; k < a_.comps.size(); ++k) {
      int big = 0;
      for (int c : a_.comps[k]) big += a_.xi_edges[c] >= 2;
      if (big >= 2)
        throw NotRookPosetError("final-block",
                                "two push coatoms in one component");
      (big == 1 ? final_comps : one_comps).push_back(static_cast<int>(k));
    }

    order_subblocks(final_comps);
    std::vector<int> tail;
    for (int k : final_comps) {
      std::vector<int> seq = final_sequence(a_.comps[k]);
      if (!tail.empty() && seq.front() < tail.back() - 1)
        throw NotRookPosetError("final-assembly",
                                "sub-blocks do not join into a GJW segment");
      tail.insert(tail.end(), seq.begin(), seq.end());
    }
    if (!tail.empty()) nf.tail = Block(tail);

    for (int k : one_comps) nf.one_blocks.push_back(one_block(a_.comps[k]));
    std::sort(nf.one_blocks.begin(), nf.one_blocks.end());

    // the recovered blocks must reproduce the grading
    std::vector<long long> predicted{1};
    auto fold = [&predicted](const Block& b) {
      for (int e : b.entries()) {
        std::vector<long long> next(predicted.size() + e, 0);
        for (std::size_t i = 0; i < predicted.size(); ++i)
          for (int k = 0; k <= e; ++k) next[i + k] += predicted[i];
        predicted = std::move(next);
      }
    };
    for (const Block& b : nf.one_blocks) fold(b);
    if (nf.tail) fold(*nf.tail);
    if (predicted != poincare_polynomial(p_).coefficients)
      throw NotRookPosetError("rank-sizes",
                              "rank sizes do not match the recovered blocks");
    return nf;
  }

  const Analysis& analysis() const { return a_; }

  // --- 1-ending blocks ------------------------------------------------

  std::vector<int> block_roots(const std::vector<int>& comp) const {
    if (comp.size() == 1) return {comp[0]};
    std::uint64_t keep = 0;
    for (int c : comp) keep |= bit(c);
    std::vector<int> xs = x_subset(keep);

    int bottom = xs.front();
    for (int x : xs)
      if (p_.rank_of(x) < p_.rank_of(bottom)) bottom = x;
    for (int x : xs) {
      if (x != bottom && p_.rank_of(x) == p_.rank_of(bottom))
        throw NotRookPosetError("block-subposet",
                                "isolated block has two minimal elements");
      if (!p_.leq(bottom, x))
        throw NotRookPosetError("block-subposet",
                                "isolated block is not bounded below");
    }
    const int base = p_.rank_of(bottom);

    // m(c): least rank in the isolated subposet of an element not below c
    std::map<int, int> least_not_below;
    for (int c : comp) {
      int best = -1;
      for (int x : xs)
        if (!p_.leq(x, a_.coatoms[c]) &&
            (best < 0 || p_.rank_of(x) < p_.rank_of(best)))
          best = x;
      least_not_below[c] = p_.rank_of(best) - base;
    }

    std::vector<int> roots;
    for (int r : comp) {
      std::map<int, int> dist;
      dist[r] = 0;
      std::queue<int> q;
      q.push(r);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : a_.adj[u])
          if (!dist.count(v)) {
            dist[v] = dist[u] + 1;
            q.push(v);
          }
      }
      bool ok = true;
      for (int l : comp)
        if (l != r && a_.adj[l].size() == 1 &&
            least_not_below[l] != dist[l] + 1)
          ok = false;
      if (ok) roots.push_back(r);
    }
    return roots;
  }

private:
  // --- shared isolation machinery --------------------------------------

  std::vector<int> x_subset(std::uint64_t keep) const {
    std::vector<int> out;
    for (int x = 0; x < p_.size(); ++x)
      if ((a_.below[x] & a_.all & ~keep) == 0) out.push_back(x);
    return out;
  }

  // Identify the interval poset with one of two candidate boards; 0 picks
  // the first. Primary route is the recursive reconstruction; the generic
  // oracle arbitrates when the recursion reports an inconsistency.
  int classify_interval(const std::vector<int>& elems, const GjwSequence& g0,
                        const GjwSequence& g1) const {
    const NormalForm nf0 = normal_form(g0), nf1 = normal_form(g1);
    if (nf0 == nf1)
      throw NotRookPosetError("order-children",
                              "candidate boards are equivalent");
    InducedPoset ind = induced_subposet(p_, elems);
    bool have_nf = true;
    NormalForm nf;
    try {
      nf = reconstruct(ind.poset);
    } catch (const NotRookPosetError&) {
      have_nf = false;
    }
    if (have_nf) {
      if (nf == nf0) return 0;
      if (nf == nf1) return 1;
    }
    auto matches = [&](const GjwSequence& g) {
      Partition board = Partition::from_gjw(g);
      const long long size = ind.poset.size();
      if (placement_count(board) != size) return false;
      return are_isomorphic(ind.poset, build_poset(board, size), size);
    };
    const bool m0 = matches(g0), m1 = matches(g1);
    if (m0 != m1) return m0 ? 0 : 1;
    throw NotRookPosetError("order-children",
                            "interval matches neither candidate board");
  }

  std::vector<int> path_to_root(const Tree& t, int v) const {
    std::vector<int> path;
    for (int u = v; u != -1; u = t.parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;  // root first, v last
  }

  // Isolation tree for the classification at branch vertex `v`: the path
  // from the root, the sibling group under test, and at most one marker
  // branch pinned on a known side. Returns the local ids of the siblings.
  struct Isolation {
    IsolationTree tree;
    int local_root;
    std::vector<int> sibling_nodes;
    std::uint64_t keep = 0;
  };

  Isolation isolate(const std::vector<int>& path,
                    const std::vector<int>& siblings,
                    const std::optional<Marker>& marker, int rho) const {
    Isolation iso;
    std::vector<int> chain(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      chain[i] = iso.tree.add(rho + static_cast<int>(i));
      iso.keep |= bit(path[i]);
    }
    iso.local_root = chain[0];
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      iso.tree.kids[chain[i]].push_back(chain[i + 1]);
    const int w = rho + static_cast<int>(path.size());
    for (int s : siblings) {
      int node = iso.tree.add(w);
      iso.tree.kids[chain.back()].push_back(node);
      iso.sibling_nodes.push_back(node);
      iso.keep |= bit(s);
    }
    if (marker) {
      int node = iso.tree.add(rho + marker->path_index + 1);
      auto& kids = iso.tree.kids[chain[marker->path_index]];
      kids.insert(marker->before ? kids.begin() : kids.end(), node);
      iso.keep |= bit(marker->vertex);
    }
    return iso;
  }

  GjwSequence decremented(const std::vector<int>& values, int pos) const {
    std::vector<int> out = values;
    out[pos - 1] -= 1;
    try {
      return GjwSequence(out);
    } catch (const std::invalid_argument&) {
      throw NotRookPosetError("order-children",
                              "candidate is not a GJW sequence");
    }
  }

  std::vector<int> interval_below(const std::vector<int>& q, int coatom) const {
    std::vector<int> out;
    for (int x : q)
      if (p_.leq(x, coatom)) out.push_back(x);
    return out;
  }

  // True iff sibling x occupies the lower rows.
  bool pair_lower(const Tree& t, int v, int x, int y,
                  const std::optional<Marker>& marker, int rho) const {
    Isolation iso = isolate(path_to_root(t, v), {x, y}, marker, rho);
    std::vector<int> values;
    std::map<int, int> pos;
    iso.tree.emit(iso.local_root, values, pos);
    const int qx = pos[iso.sibling_nodes[0]], qy = pos[iso.sibling_nodes[1]];
    GjwSequence low = decremented(values, qx);
    GjwSequence high = decremented(values, qy);
    std::vector<int> q = x_subset(iso.keep);
    int cx = classify_interval(interval_below(q, a_.coatoms[x]), low, high);
    int cy = classify_interval(interval_below(q, a_.coatoms[y]), low, high);
    if (cx == cy)
      throw NotRookPosetError("order-children",
                              "siblings classify identically");
    return cx == 0;
  }

  // Which of three siblings at the first branch point is the middle one.
  int middle_of_triple(const Tree& t, int v, std::array<int, 3> s,
                       int rho) const {
    Isolation iso = isolate(path_to_root(t, v), {s[0], s[1], s[2]},
                            std::nullopt, rho);
    std::vector<int> values;
    std::map<int, int> pos;
    iso.tree.emit(iso.local_root, values, pos);
    const int q1 = pos[iso.sibling_nodes[0]];
    GjwSequence mid = decremented(values, q1 + 1);
    GjwSequence outer = decremented(values, q1);
    std::vector<int> q = x_subset(iso.keep);
    int found = -1;
    for (int i = 0; i < 3; ++i) {
      if (classify_interval(interval_below(q, a_.coatoms[s[i]]), mid, outer) ==
          0) {
        if (found >= 0)
          throw NotRookPosetError("order-children",
                                  "two middle branches in a triple");
        found = i;
      }
    }
    if (found < 0)
      throw NotRookPosetError("order-children", "no middle branch in triple");
    return s[found];
  }

  // Exact ordering of a sibling list by pairwise classification.
  void sort_exact(Tree& t, int v, const std::optional<Marker>& marker,
                  int rho) const {
    auto& ch = t.children[v];
    const int n = static_cast<int>(ch.size());
    std::map<std::pair<int, int>, bool> lower;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool ij = pair_lower(t, v, ch[i], ch[j], marker, rho);
        lower[{ch[i], ch[j]}] = ij;
        lower[{ch[j], ch[i]}] = !ij;
      }
    std::vector<int> sorted = ch;
    std::sort(sorted.begin(), sorted.end(),
              [&](int a, int b) { return lower.at({a, b}); });
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!lower.at({sorted[i], sorted[j]}))
          throw NotRookPosetError("order-children",
                                  "pairwise order is not transitive");
    ch = std::move(sorted);
  }

  // Up-to-mirror ordering of the first branch point of a 1-ending block:
  // betweenness from middle-of-triple tests, one orientation chosen.
  void sort_first_branch(Tree& t, int v) const {
    auto& ch = t.children[v];
    const int n = static_cast<int>(ch.size());
    if (n == 2) return;  // both orientations are mirror images
    std::map<std::array<int, 3>, int> mid;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          std::array<int, 3> key{ch[i], ch[j], ch[k]};
          mid[key] = middle_of_triple(t, v, key, 1);
        }
    auto middle = [&](int a, int b, int c) {
      std::array<int, 3> key{a, b, c};
      std::sort(key.begin(), key.end());
      return mid.at(key);
    };
    std::vector<int> ends;
    for (int x : ch) {
      bool is_middle = false;
      for (auto& [key, m] : mid)
        if (m == x) is_middle = true;
      if (!is_middle) ends.push_back(x);
    }
    if (ends.size() != 2)
      throw NotRookPosetError("order-children",
                              "branch betweenness has no two ends");
    const int e = ends[0];
    std::vector<int> sorted = ch;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      if (a == b) return false;
      if (a == e) return true;
      if (b == e) return false;
      return middle(e, a, b) == a;
    });
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (middle(sorted[i], sorted[j], sorted[k]) != sorted[j])
            throw NotRookPosetError("order-children",
                                    "branch betweenness is inconsistent");
    ch = std::move(sorted);
  }

  std::optional<Marker> find_marker(const Tree& t, int v) const {
    for (int u = t.parent[v], prev = v; u != -1;
         prev = u, u = t.parent[u]) {
      const auto& kids = t.children[u];
      if (kids.size() < 2) continue;
      auto it = std::find(kids.begin(), kids.end(), prev);
      const int pos = static_cast<int>(it - kids.begin());
      Marker m;
      m.path_index = t.depth[u];
      if (pos > 0) {
        m.vertex = kids[0];
        m.before = true;
      } else {
        m.vertex = kids.back();
        m.before = false;
      }
      return m;
    }
    return std::nullopt;
  }

  void order_tree(Tree& t, bool one_ending, int rho) const {
    int first_branch = -1;
    if (one_ending) {
      int u = t.root;
      while (t.children[u].size() == 1) u = t.children[u][0];
      if (t.children[u].size() >= 2) first_branch = u;
    }
    for (int v : t.bfs) {
      if (t.children[v].size() < 2) continue;
      if (one_ending && v == first_branch) {
        sort_first_branch(t, v);
      } else {
        std::optional<Marker> marker;
        if (one_ending) {
          marker = find_marker(t, v);
          if (!marker)
            throw NotRookPosetError("order-children",
                                    "no ordered branch above a branch point");
        }
        sort_exact(t, v, marker, rho);
      }
    }
  }

  std::vector<int> emit_values(const Tree& t, int rho) const {
    std::vector<int> out;
    auto rec = [&](auto&& self, int v) -> void {
      for (int c : t.children[v]) self(self, c);
      out.push_back(rho + t.depth[v]);
    };
    rec(rec, t.root);
    return out;
  }

  Block one_block(const std::vector<int>& comp) const {
    std::vector<int> roots = block_roots(comp);
    if (roots.empty())
      throw NotRookPosetError("root", "no root fits the leaf distances");
    std::optional<Block> result;
    for (int r : roots) {
      Tree t = build_tree(a_, comp, r);
      order_tree(t, true, 1);
      Block b = canonical_block(Block(emit_values(t, 1)));
      if (result && !(*result == b))
        throw NotRookPosetError("root", "consistent roots emit different blocks");
      result = b;
    }
    return *result;
  }

  // --- final block ------------------------------------------------------

  int push_root(const std::vector<int>& comp) const {
    for (int c : comp)
      if (a_.xi_edges[c] >= 2) return c;
    throw NotRookPosetError("final-block", "component lost its push coatom");
  }

  // Covers of the bottom of X_i that survive inside X_{i,x}: 1 when i's
  // rows precede x's, 2 otherwise.
  int pair_cover_count(int c, int d) const {
    const std::uint64_t keep = bit(c) | bit(d);
    int count = 0;
    for (int y : p_.lower_covers(a_.xi_min[c]))
      if ((a_.below[y] & a_.all & ~keep) == 0) ++count;
    return count;
  }

  bool subblock_before(int c, int d) const {
    const int cd = pair_cover_count(c, d);
    const int dc = pair_cover_count(d, c);
    if (cd == 1 && dc == 2) return true;
    if (cd == 2 && dc == 1) return false;
    throw NotRookPosetError("subblock-order",
                            "push coatoms do not order each other");
  }

  void order_subblocks(std::vector<int>& comps) const {
    if (comps.size() < 2) return;
    std::vector<int> roots(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      roots[i] = push_root(a_.comps[comps[i]]);
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return subblock_before(roots[i], roots[j]);
    });
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (!subblock_before(roots[order[i]], roots[order[j]]))
          throw NotRookPosetError("subblock-order",
                                  "sub-block order is not transitive");
    std::vector<int> sorted(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = comps[order[i]];
    comps = std::move(sorted);
  }

  std::vector<int> final_sequence(const std::vector<int>& comp) const {
    const int root = push_root(comp);
    Tree t = build_tree(a_, comp, root);
    order_tree(t, false, a_.xi_edges[root]);
    return emit_values(t, a_.xi_edges[root]);
  }

  const Poset& p_;
  Analysis a_;
};

}  // namespace

std::vector<CoatomProfile> coatom_profiles(const Poset& p) {
  Analysis a = analyze(p);
  std::vector<CoatomProfile> out;
  for (std::size_t k = 0; k < a.comps.size(); ++k)
    for (int c : a.comps[k])
      out.push_back({a.coatoms[c], a.xi_edges[c], a.xi_edges[c] >= 2,
                     static_cast<int>(k)});
  std::sort(out.begin(), out.end(),
            [](const CoatomProfile& x, const CoatomProfile& y) {
              return x.coatom < y.coatom;
            });
  return out;
}

std::vector<int> final_block_components(
    const std::vector<CoatomProfile>& profiles) {
  std::map<int, int> big;
  for (const CoatomProfile& pr : profiles) big[pr.component] += pr.is_push;
  std::vector<int> out;
  for (auto [comp, count] : big) {
    if (count >= 2)
      throw NotRookPosetError("final-block",
                              "two push coatoms in one component");
    if (count == 1) out.push_back(comp);
  }
  return out;
}

std::vector<int> consistent_roots(const Poset& p,
                                  const std::vector<int>& component_coatoms) {
  Reconstructor rec(p);
  const Analysis& a = rec.analysis();
  std::vector<int> idx;
  for (int id : component_coatoms) {
    auto it = std::lower_bound(a.coatoms.begin(), a.coatoms.end(), id);
    if (it == a.coatoms.end() || *it != id)
      throw std::invalid_argument("element is not a coatom");
    idx.push_back(static_cast<int>(it - a.coatoms.begin()));
  }
  std::sort(idx.begin(), idx.end());
  bool found = false;
  for (const auto& comp : a.comps) found = found || comp == idx;
  if (!found)
    throw std::invalid_argument("coatoms are not an entanglement component");
  std::vector<int> roots;
  for (int c : rec.block_roots(idx)) roots.push_back(a.coatoms[c]);
  return roots;
}

NormalForm reconstruct(const Poset& p) { return Reconstructor(p).run(); }

}  // namespace ferrers
