#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ferrers/errors.hpp"
#include "ferrers/poset.hpp"
#include "ferrers/verify.hpp"

using namespace ferrers;

namespace {

Partition board(std::initializer_list<int> parts) {
  return Partition(std::vector<int>(parts));
}

// rows the coatoms of a board poset act on, matched to element ids
std::map<int, int> coatom_rows(const Poset& poset, const Partition& p) {
  std::map<int, int> row_of;
  for (int c : poset.coatoms())
    row_of[c] = coatom_row(parse_placement(poset.label(c)), p);
  return row_of;
}

}  // namespace

TEST_SUITE_BEGIN("poset");

TEST_CASE("building rook posets") {
  const Poset p22 = build_poset(board({2, 2}));
  CHECK(p22.size() == 2);
  CHECK(p22.covers().size() == 1);

  CHECK(build_poset(board({1, 2, 3})).size() == 1);

  const Poset p24 = build_poset(board({2, 4}));
  CHECK(p24.size() == 6);
  CHECK(p24.rank_sizes() == std::vector<int>{1, 2, 2, 1});
  CHECK(p24.covers().size() == 7);

  const Poset big = build_poset(board({3, 3, 5, 6, 6}));
  CHECK(big.size() == 108);
  CHECK(big.max_rank() == 8);
  CHECK(big.coatoms().size() == 5);

  CHECK_THROWS_AS(build_poset(parse_board("g:2,2,3,2,1,0,1,0,0,3,2")),
                  ResourceGuardError);
}

TEST_CASE("poincare polynomials") {
  PoincarePolynomial p = poincare_polynomial(build_poset(board({2, 4})));
  CHECK(p.coefficients == std::vector<long long>{1, 2, 2, 1});
  CHECK(p == q_integer_product(GjwSequence({1, 2})));
  CHECK(p.to_string() == "1 + 2q + 2q^2 + q^3");
  CHECK(poincare_polynomial(build_poset(board({1, 2, 3}))).coefficients ==
        std::vector<long long>{1});

  long long total = 0;
  PoincarePolynomial big = poincare_polynomial(build_poset(board({3, 3, 5, 6, 6})));
  for (long long c : big.coefficients) total += c;
  CHECK(total == 108);
  CHECK(big.coefficients.size() == 9);
}

TEST_CASE("coatoms") {
  CHECK(build_poset(board({3, 3, 5, 6, 6})).coatoms().size() == 5);
  CHECK(build_poset(board({2, 2})).coatoms().size() == 1);
  CHECK(build_poset(board({1, 2, 3})).coatoms().empty());
}

TEST_CASE("X subposets are the predicted chains") {
  const Partition p = board({2, 4});  // gjw 1,2: two push coatoms
  const Poset poset = build_poset(p);
  const auto rows = coatom_rows(poset, p);
  for (auto [c, row] : rows) {
    std::vector<int> xi = subposet_x(poset, {c});
    CHECK(static_cast<int>(xi.size()) == (row == 1 ? 2 : 3));
  }
  // keeping every coatom keeps everything
  CHECK(subposet_x(poset, poset.coatoms()).size() == 6);
}

TEST_CASE("X_eq detects entanglement") {
  // gjw (3,2): a switch pair, two corank-2 elements below both coatoms
  const Poset entangled = build_poset(board({4, 4}));
  auto coats = entangled.coatoms();
  REQUIRE(coats.size() == 2);
  std::vector<int> xeq = subposet_x_eq(entangled, coats);
  int corank2 = 0;
  for (int x : xeq)
    if (entangled.rank_of(x) == entangled.max_rank() - 2) ++corank2;
  CHECK(corank2 == 2);

  // gjw (1,2): unrelated coatoms share exactly one corank-2 element
  const Poset apart = build_poset(board({2, 4}));
  coats = apart.coatoms();
  REQUIRE(coats.size() == 2);
  xeq = subposet_x_eq(apart, coats);
  corank2 = 0;
  for (int x : xeq)
    if (apart.rank_of(x) == apart.max_rank() - 2) ++corank2;
  CHECK(corank2 == 1);
}

TEST_CASE("entanglement graphs") {
  const Partition p = board({3, 3, 5, 6, 6});
  const Poset poset = build_poset(p);
  EntanglementGraph g = entanglement_graph(poset);
  CHECK(g.vertices.size() == 5);
  CHECK(is_forest(g));
  const auto rows = coatom_rows(poset, p);
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges) {
    int ra = rows.at(a), rb = rows.at(b);
    edges.insert({std::min(ra, rb), std::max(ra, rb)});
  }
  CHECK(edges == std::set<std::pair<int, int>>{{1, 2}, {3, 5}, {4, 5}});

  CHECK(entanglement_graph(build_poset(board({2, 4}))).edges.empty());
  CHECK(entanglement_graph(build_poset(board({2, 2}))).vertices.size() == 1);

  RowGraph rg = switch_partner_graph(p.gjw());
  std::set<std::pair<int, int>> row_edges(rg.edges.begin(), rg.edges.end());
  CHECK(row_edges == edges);
}

TEST_CASE("isomorphism oracle") {
  const Poset a = build_poset(board({2, 3, 5, 6, 6}));
  const Poset b = build_poset(board({3, 4, 4, 5, 6}));
  CHECK(a.size() == 72);
  CHECK(are_isomorphic(a, a));
  CHECK(are_isomorphic(a, b));

  // same rank sizes, different posets
  const Poset p35 = build_poset(board({3, 5}));
  const Poset p44 = build_poset(board({4, 4}));
  CHECK(p35.rank_sizes() == p44.rank_sizes());
  CHECK_FALSE(are_isomorphic(p35, p44));

  CHECK_FALSE(are_isomorphic(build_poset(board({2, 2})),
                             build_poset(board({2, 3}))));
  CHECK_THROWS_AS(are_isomorphic(a, b, 10), ResourceGuardError);
}

TEST_CASE("products split at zero rows") {
  // gjw (1,0,1): the 0 row separates two independent blocks
  const Poset whole = build_poset(Partition::from_gjw(GjwSequence({1, 0, 1})));
  const Poset chain2 = build_poset(board({2}));
  CHECK(are_isomorphic(product_poset(chain2, chain2), whole));
}

TEST_CASE("structural validation of covers") {
  // two minima
  CHECK_THROWS_AS(Poset::from_covers(3, {{0, 2}, {1, 2}}), NotRookPosetError);
  // cycle
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), NotRookPosetError);
  // shortcut edge breaks gradedness
  CHECK_THROWS_AS(Poset::from_covers(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}),
                  NotRookPosetError);
  CHECK_NOTHROW(Poset::from_covers(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}));
  CHECK_NOTHROW(Poset::from_covers(1, {}));
}

TEST_CASE("json round trip") {
  const Poset p = build_poset(board({2, 4}));
  const Poset q = poset_from_json(poset_to_json(p));
  CHECK(q.size() == p.size());
  CHECK(q.covers() == p.covers());
  CHECK(q.rank_sizes() == p.rank_sizes());
  CHECK(q.labels() == p.labels());

  CHECK_THROWS_AS(poset_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      poset_from_json(
          R"({"elements": ["a", "b"], "covers": [["a", "b"]], "ranks": {"b": 7}})"),
      NotRookPosetError);
  CHECK_NOTHROW(poset_from_json(
      R"({"elements": ["a", "b"], "covers": [["a", "b"]], "ranks": {"a": 0, "b": 1}})"));
}

TEST_CASE("dot export") {
  std::string dot = poset_to_dot(build_poset(board({2, 4})));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 6 + 7 + 1);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("anonymous labels keep the structure") {
  const Poset p = build_poset(board({2, 4}));
  const Poset q = with_anonymous_labels(p);
  CHECK(q.covers() == p.covers());
  CHECK(q.label(0) == "0");
  CHECK(are_isomorphic(p, q));
}

TEST_SUITE_END();
