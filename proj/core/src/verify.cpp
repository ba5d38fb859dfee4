#include "ferrers/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "ferrers/bruhat.hpp"
#include "ferrers/placement.hpp"
#include "ferrers/reconstruct.hpp"

namespace ferrers {

std::vector<Partition> generate_corpus(const CorpusSpec& spec) {
  std::vector<Partition> out;
  out.emplace_back();  // the empty board
  std::vector<int> cur;
  long long size = 1;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(Partition::from_gjw(GjwSequence(cur)));
    if (static_cast<int>(cur.size()) == spec.max_rows) return;
    const int lo = cur.empty() ? 0 : std::max(0, cur.back() - 1);
    for (int a = lo; size * (a + 1) <= spec.max_poset_size; ++a) {
      cur.push_back(a);
      size *= a + 1;
      self(self);
      size /= a + 1;
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

struct BoardData {
  Partition board;
  std::vector<RookPlacement> placements;  // in poset id order
  Poset poset;
};

struct Failure {
  long long checks = 0;
  std::vector<std::string> messages;

  void ok() { ++checks; }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (messages.size() < 8) messages.push_back(what);
    ++extra_;
  }
  bool pass() const { return messages.empty() && extra_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    if (pass()) {
      os << checks << " checks";
      return os.str();
    }
    os << extra_ << " failed of " << checks << ": ";
    for (std::size_t i = 0; i < messages.size(); ++i)
      os << (i ? "; " : "") << messages[i];
    return os.str();
  }

private:
  long long extra_ = 0;
};

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

SuiteResult finish(const std::string& name, const Failure& f, const Timer& t) {
  return {name, f.pass(), f.detail(), t.seconds()};
}

// pairwise dominance over the whole element list
BitMatrix dominance_matrix(const std::vector<RookPlacement>& elems) {
  const int n = static_cast<int>(elems.size());
  BitMatrix leq(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (bruhat_leq(elems[a], elems[b])) leq.set(b, a);
  return leq;
}

SuiteResult suite_worked_example() {
  Timer t;
  Failure f;
  const Partition a = parse_board("g:2,2,3,2,1,0,1,0,0,3,2");
  const Partition b = parse_board("g:1,3,2,2,2,1,3,2");
  f.expect(equivalent(a, b), "worked example boards are inequivalent");
  f.expect(normal_form(a.gjw()).to_line() == "blocks: 1 | 22321 ; tail: 32",
           "unexpected normal form line: " + normal_form(a.gjw()).to_line());
  f.expect(normal_form(a.gjw()) == normal_form(b.gjw()),
           "normal forms differ");
  return finish("worked-example", f, t);
}

SuiteResult suite_conjugate_pair() {
  Timer t;
  Failure f;
  const Partition p(std::vector<int>{2, 3, 5, 6, 6});
  const Partition q(std::vector<int>{3, 4, 4, 5, 6});
  f.expect(p.conjugate() == q, "conjugate of (2,3,5,6,6) is not (3,4,4,5,6)");
  f.expect(equivalent(p, q), "conjugate pair tests inequivalent");
  const Poset pp = build_poset(p), qq = build_poset(q);
  f.expect(pp.size() == 72 && qq.size() == 72,
           "expected 72 = 2*2*3*3*2 elements");
  f.expect(are_isomorphic(pp, qq), "oracle denies the conjugate isomorphism");
  return finish("conjugate-pair-oracle", f, t);
}

SuiteResult suite_equivalence_vs_oracle(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  const int n = static_cast<int>(data.size());
  std::vector<NormalForm> nf(n);
  std::vector<std::string> ranks_key(n);
  for (int i = 0; i < n; ++i) {
    nf[i] = normal_form(data[i].board.gjw());
    std::ostringstream os;
    for (long long c : q_integer_product(data[i].board.gjw()).coefficients)
      os << c << ',';
    ranks_key[i] = os.str();
  }
  // equal normal forms force equal rank-size vectors
  auto nf_key = [](const NormalForm& form) {
    std::ostringstream os;
    for (const Block& b : form.one_blocks) {
      for (int e : b.entries()) os << e << ',';
      os << '|';
    }
    os << ';';
    if (form.tail)
      for (int e : form.tail->entries()) os << e << ',';
    return os.str();
  };
  std::map<std::string, std::string> class_ranks;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = class_ranks.try_emplace(nf_key(nf[i]), ranks_key[i]);
    f.expect(fresh || it->second == ranks_key[i],
             "equivalent boards with different rank sizes: " +
                 data[i].board.to_string());
  }
  std::map<std::string, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[ranks_key[i]].push_back(i);
  long long pairs = 0;
  for (const auto& [key, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const int i = members[a], j = members[b];
        const bool eq = nf[i] == nf[j];
        const bool iso = are_isomorphic(data[i].poset, data[j].poset);
        ++pairs;
        f.expect(eq == iso, "disagreement on " + data[i].board.to_string() +
                                " vs " + data[j].board.to_string());
      }
  }
  std::ostringstream os;
  os << n << " boards, " << pairs << " same-rank-size pairs";
  SuiteResult r = finish("equivalence-vs-oracle", f, t);
  if (r.pass) r.detail = os.str();
  return r;
}

SuiteResult suite_reconstruction(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data) {
    NormalForm expect = normal_form(d.board.gjw());
    try {
      NormalForm got = reconstruct(with_anonymous_labels(d.poset));
      f.expect(got == expect, "round trip failed on " + d.board.to_string() +
                                  ": got " + got.to_line());
    } catch (const std::exception& e) {
      f.expect(false, "reconstruct threw on " + d.board.to_string() + ": " +
                          e.what());
    }
  }
  return finish("reconstruction", f, t);
}

SuiteResult suite_counting(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data)
    f.expect(static_cast<long long>(d.placements.size()) ==
                 placement_count(d.board),
             "count mismatch on " + d.board.to_string());
  const Partition p(std::vector<int>{3, 3, 5, 6, 6});
  const Poset pp = build_poset(p);
  f.expect(pp.size() == 108, "(3,3,5,6,6) should have 108 placements");
  f.expect(pp.max_rank() == 8, "(3,3,5,6,6) should have top rank 8");
  return finish("counting", f, t);
}

SuiteResult suite_poincare(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data)
    f.expect(poincare_polynomial(d.poset) == q_integer_product(d.board.gjw()),
             "rank sizes mismatch on " + d.board.to_string());
  const Poset p24 = build_poset(Partition(std::vector<int>{2, 4}));
  f.expect(poincare_polynomial(p24).coefficients ==
               std::vector<long long>({1, 2, 2, 1}),
           "(2,4) rank sizes are not 1,2,2,1");
  return finish("poincare-product", f, t);
}

SuiteResult suite_structure(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data) {
    const GjwSequence g = d.board.gjw();
    const auto& entries = g.entries();
    int nonzero = 0;
    for (int a : entries) nonzero += a > 0;

    const std::vector<int> coats = d.poset.coatoms();
    f.expect(static_cast<int>(coats.size()) == nonzero,
             "coatom count mismatch on " + d.board.to_string());

    // coatom ids by the row the move acts on
    std::map<int, int> coatom_of_row;
    for (int c : coats)
      coatom_of_row[coatom_row(d.placements[c], d.board)] = c;
    f.expect(coatom_of_row.size() == coats.size(),
             "coatoms do not sit on distinct rows on " + d.board.to_string());

    // switch/push prediction and the X_i chains
    for (auto [row, c] : coatom_of_row) {
      int partner = 0;
      for (int j = row + 1; j <= g.size(); ++j)
        if (entries[j - 1] < entries[row - 1]) {
          partner = j;
          break;
        }
      const int expected_edges = partner ? 1 : entries[row - 1];
      const std::vector<int> xi = subposet_x(d.poset, {c});
      bool chain = true;
      std::vector<int> sorted = xi;
      std::sort(sorted.begin(), sorted.end(), [&](int u, int v) {
        return d.poset.rank_of(u) < d.poset.rank_of(v);
      });
      for (std::size_t k = 1; k < sorted.size(); ++k)
        if (!d.poset.leq(sorted[k - 1], sorted[k])) chain = false;
      f.expect(chain, "X_i is not a chain on " + d.board.to_string());
      f.expect(static_cast<int>(xi.size()) - 1 == expected_edges,
               "X_i size mismatch on " + d.board.to_string() + " row " +
                   std::to_string(row));
    }

    // entanglement graph equals the switch-partner graph and is a forest
    const EntanglementGraph eg = entanglement_graph(d.poset);
    f.expect(is_forest(eg), "entanglement graph has a cycle on " +
                                d.board.to_string());
    std::vector<std::pair<int, int>> abstract_edges;
    for (auto [a, b] : eg.edges) {
      int ra = coatom_row(d.placements[a], d.board);
      int rb = coatom_row(d.placements[b], d.board);
      abstract_edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(abstract_edges.begin(), abstract_edges.end());
    RowGraph rg = switch_partner_graph(g);
    std::sort(rg.edges.begin(), rg.edges.end());
    f.expect(abstract_edges == rg.edges,
             "entanglement edges disagree with switch partners on " +
                 d.board.to_string());

    // Hasse diagram from moves equals the transitive reduction of dominance
    const int n = static_cast<int>(d.placements.size());
    BitMatrix leq = dominance_matrix(d.placements);
    std::vector<std::pair<int, int>> reduced;
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        if (a == b || !leq.test(b, a)) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c)
          if (c != a && c != b && leq.test(c, a) && leq.test(b, c))
            cover = false;
        if (cover) reduced.emplace_back(a, b);
      }
    std::sort(reduced.begin(), reduced.end());
    std::vector<std::pair<int, int>> moves = d.poset.covers();
    std::sort(moves.begin(), moves.end());
    f.expect(reduced == moves,
             "move covers differ from the dominance reduction on " +
                 d.board.to_string());

    // every cover drops the rank by exactly one
    for (auto [lo, hi] : moves)
      f.expect(rank(d.placements[hi], d.board) ==
                   rank(d.placements[lo], d.board) + 1,
               "cover does not step rank by one on " + d.board.to_string());

    // the coatom dominance shortcut agrees with full dominance
    for (int c : coats)
      for (int x = 0; x < n; ++x)
        f.expect(is_below_coatom(d.placements[x], d.placements[c], d.board) ==
                     leq.test(c, x),
                 "coatom shortcut disagrees on " + d.board.to_string());
  }
  return finish("structure-lemmas", f, t);
}

SuiteResult suite_iso_maps(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data) {
    const GjwSequence g = d.board.gjw();
    const int n = d.board.rows();

    if (d.board.conjugable()) {
      const Partition conj = d.board.conjugate();
      std::map<std::vector<int>, int> conj_id;
      std::vector<RookPlacement> conj_elems = enumerate_placements(conj);
      for (std::size_t i = 0; i < conj_elems.size(); ++i)
        conj_id[conj_elems[i].columns] = static_cast<int>(i);
      std::vector<int> image;
      bool ok = true;
      for (const RookPlacement& x : d.placements) {
        RookPlacement y = conjugate_placement(x, d.board);
        auto it = conj_id.find(y.columns);
        if (it == conj_id.end()) {
          ok = false;
          break;
        }
        image.push_back(it->second);
      }
      f.expect(ok && image.size() == conj_elems.size(),
               "conjugation does not map onto the conjugate board on " +
                   d.board.to_string());
      if (ok) {
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        f.expect(sorted.size() == image.size(),
                 "conjugation is not injective on " + d.board.to_string());
        // cover edges map to cover edges; equal counts give a poset iso
        const Poset conj_poset = build_poset(conj);
        std::vector<std::pair<int, int>> mapped;
        for (auto [lo, hi] : d.poset.covers())
          mapped.emplace_back(std::min(image[lo], image[hi]),
                              std::max(image[lo], image[hi]));
        std::sort(mapped.begin(), mapped.end());
        std::vector<std::pair<int, int>> expect = conj_poset.covers();
        std::sort(expect.begin(), expect.end());
        f.expect(mapped == expect,
                 "conjugation does not preserve covers on " +
                     d.board.to_string());
        // the maximum maps to the maximum
        f.expect(conjugate_placement(max_placement(d.board), d.board) ==
                     max_placement(conj),
                 "conjugation moves the maximum on " + d.board.to_string());
        // involution, where the conjugate is itself conjugable (a leading
        // GJW 0 shrinks the top row of the image)
        if (conj.conjugable()) {
          f.expect(conj.conjugate() == d.board,
                   "conjugation is not an involution on " +
                       d.board.to_string());
          for (const RookPlacement& x : d.placements)
            f.expect(conjugate_placement(conjugate_placement(x, d.board),
                                         conj) == x,
                     "placement conjugation is not an involution on " +
                         d.board.to_string());
        }
      }
    }

    for (int row = 1; row <= n; ++row) {
      if (g.entry(row) != 1) continue;
      const Partition wide = insert_zero_board(d.board, row);
      std::map<std::vector<int>, int> wide_id;
      std::vector<RookPlacement> wide_elems = enumerate_placements(wide);
      for (std::size_t i = 0; i < wide_elems.size(); ++i)
        wide_id[wide_elems[i].columns] = static_cast<int>(i);
      f.expect(wide_elems.size() == d.placements.size(),
               "0-insertion changes the placement count on " +
                   d.board.to_string());
      std::vector<int> image;
      bool ok = true;
      for (const RookPlacement& x : d.placements) {
        RookPlacement y = insert_zero_map(x, d.board, row);
        auto it = wide_id.find(y.columns);
        if (it == wide_id.end()) {
          ok = false;
          break;
        }
        image.push_back(it->second);
      }
      f.expect(ok, "0-insertion leaves the target board on " +
                       d.board.to_string());
      if (ok) {
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        f.expect(sorted.size() == image.size(),
                 "0-insertion is not injective on " + d.board.to_string());
        const Poset wide_poset = build_poset(wide);
        std::vector<std::pair<int, int>> mapped;
        for (auto [lo, hi] : d.poset.covers())
          mapped.emplace_back(std::min(image[lo], image[hi]),
                              std::max(image[lo], image[hi]));
        std::sort(mapped.begin(), mapped.end());
        std::vector<std::pair<int, int>> expect = wide_poset.covers();
        std::sort(expect.begin(), expect.end());
        f.expect(mapped == expect, "0-insertion does not preserve covers on " +
                                       d.board.to_string());
      }
    }

    // product splitting at every 0 row
    for (int row = 1; row <= n; ++row) {
      if (g.entry(row) != 0) continue;
      std::vector<int> head(g.entries().begin(),
                            g.entries().begin() + row - 1);
      std::vector<int> tail(g.entries().begin() + row, g.entries().end());
      const Poset left = build_poset(Partition::from_gjw(GjwSequence(head)));
      const Poset right = build_poset(Partition::from_gjw(GjwSequence(tail)));
      f.expect(are_isomorphic(product_poset(left, right), d.poset),
               "product splitting fails on " + d.board.to_string() + " row " +
                   std::to_string(row));
    }
  }
  return finish("isomorphism-maps", f, t);
}

SuiteResult suite_bruhat(const std::vector<BoardData>& data) {
  Timer t;
  Failure f;
  for (const BoardData& d : data) {
    const Permutation top = top_permutation(d.board);
    const GjwSequence g = d.board.gjw();
    const auto& entries = g.entries();
    const int last = entries.empty() ? 0 : entries.back();
    // the top completion avoids 312 exactly when the poset is a symmetric
    // group interval (last GJW entry 0 or 1)
    f.expect(avoids_312(top) == (last <= 1),
             "312-avoidance does not match the last GJW entry on " +
                 d.board.to_string());
    if (last == 0 && !entries.empty())
      f.expect(board_from_312(top) == d.board,
               "board round trip fails on " + d.board.to_string());
    if (last <= 1) {
      f.expect(top_permutation(board_from_312(top)) == top,
               "permutation round trip fails on " + d.board.to_string());
      const Poset interval =
          lower_bruhat_interval(top, d.poset.size() + 1);
      f.expect(are_isomorphic(interval, d.poset),
               "lower interval differs from the rook poset on " +
                   d.board.to_string());
    }
  }
  return finish("bruhat-correspondence", f, t);
}

}  // namespace

std::vector<SuiteResult> run_verify(const CorpusSpec& spec) {
  std::vector<Partition> corpus = generate_corpus(spec);
  std::vector<BoardData> data;
  data.reserve(corpus.size());
  for (const Partition& p : corpus) {
    BoardData d;
    d.board = p;
    d.placements = enumerate_placements(p);
    d.poset = build_poset(p, spec.max_poset_size);
    data.push_back(std::move(d));
  }

  std::vector<SuiteResult> out;
  out.push_back(suite_worked_example());
  out.push_back(suite_conjugate_pair());
  out.push_back(suite_equivalence_vs_oracle(data));
  out.push_back(suite_reconstruction(data));
  out.push_back(suite_counting(data));
  out.push_back(suite_poincare(data));
  out.push_back(suite_structure(data));
  out.push_back(suite_iso_maps(data));
  out.push_back(suite_bruhat(data));
  return out;
}

}  // namespace ferrers
