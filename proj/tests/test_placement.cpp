#include <algorithm>
#include <set>

#include "doctest.h"
#include "ferrers/placement.hpp"
#include "ferrers/verify.hpp"

using namespace ferrers;

namespace {

Partition board(std::initializer_list<int> parts) {
  return Partition(std::vector<int>(parts));
}

RookPlacement pl(std::initializer_list<int> cols) {
  return RookPlacement(std::vector<int>(cols));
}

std::set<std::vector<int>> column_set(const std::vector<RookPlacement>& v) {
  std::set<std::vector<int>> out;
  for (const RookPlacement& x : v) out.insert(x.columns);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("placement");

TEST_CASE("enumeration matches the product formula") {
  CHECK(column_set(enumerate_placements(board({1, 2, 3}))) ==
        std::set<std::vector<int>>{{1, 2, 3}});
  CHECK(column_set(enumerate_placements(board({2, 4}))) ==
        std::set<std::vector<int>>{
            {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}});
  CHECK(enumerate_placements(board({3, 3, 5, 6, 6})).size() == 108);
  CHECK(placement_count(board({3, 3, 5, 6, 6})) == 108);

  for (const Partition& p : generate_corpus({4, 150})) {
    const auto elems = enumerate_placements(p);
    CHECK(static_cast<long long>(elems.size()) == placement_count(p));
    for (const RookPlacement& x : elems) CHECK_NOTHROW(validate_placement(x, p));
  }
}

TEST_CASE("extremal placements") {
  CHECK(max_placement(board({3, 3, 5, 6, 6})) == pl({3, 2, 5, 6, 4}));
  CHECK(max_placement(board({1, 2, 3})) == pl({1, 2, 3}));
  CHECK(max_placement(board({2, 4})) == pl({2, 4}));
  CHECK(min_placement(board({3, 3, 5, 6, 6})) == pl({1, 2, 3, 4, 5}));
  CHECK(min_placement(board({2, 2})) == pl({1, 2}));
}

TEST_CASE("dominance order") {
  CHECK(bruhat_leq(pl({2, 1, 5, 3, 4}), pl({3, 1, 5, 2, 6})));
  CHECK(bruhat_leq(pl({2, 4}), pl({2, 4})));
  CHECK_FALSE(bruhat_leq(pl({1, 4}), pl({2, 3})));
  CHECK_FALSE(bruhat_leq(pl({2, 3}), pl({1, 4})));
  CHECK_THROWS_AS(bruhat_leq(pl({1}), pl({1, 2})), std::invalid_argument);
}

TEST_CASE("completion and rank") {
  CHECK(complete_to_permutation(pl({3, 2, 5, 6, 4}), board({3, 3, 5, 6, 6})) ==
        std::vector<int>{3, 2, 5, 6, 4, 1});
  CHECK(complete_to_permutation(pl({1, 2}), board({2, 2})) ==
        std::vector<int>{1, 2});
  CHECK(complete_to_permutation(pl({2, 4}), board({2, 4})) ==
        std::vector<int>{2, 4, 1, 3});

  CHECK(rank(min_placement(board({3, 3, 5, 6, 6})), board({3, 3, 5, 6, 6})) ==
        0);
  CHECK(rank(max_placement(board({3, 3, 5, 6, 6})), board({3, 3, 5, 6, 6})) ==
        8);
  CHECK(rank(pl({2, 4}), board({2, 4})) == 3);
}

TEST_CASE("switch moves") {
  CHECK(column_set(switch_moves(pl({2, 1}))) ==
        std::set<std::vector<int>>{{1, 2}});
  CHECK(switch_moves(min_placement(board({3, 3, 5, 6, 6}))).empty());
  const auto from_max = column_set(switch_moves(pl({3, 2, 5, 6, 4})));
  CHECK(from_max.count({2, 3, 5, 6, 4}) == 1);
}

TEST_CASE("push moves") {
  // rook 2 pushes only to column 3; rook 1 pushes to column 1
  CHECK(column_set(push_moves(pl({2, 4}))) ==
        std::set<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK(push_moves(min_placement(board({2, 4}))).empty());
  // column 2 is empty but column 3 is not occupied below row 2
  CHECK(column_set(push_moves(pl({1, 4}))) ==
        std::set<std::vector<int>>{{1, 3}});
}

TEST_CASE("covers") {
  CHECK(column_set(covers_down(max_placement(board({2, 2})))) ==
        std::set<std::vector<int>>{{1, 2}});
  CHECK(covers_down(min_placement(board({2, 4}))).empty());
  CHECK(covers_down(max_placement(board({3, 3, 5, 6, 6}))).size() == 5);
}

TEST_CASE("covers agree with the dominance oracle") {
  // oracle: y is covered by x iff y < x, ranks differ by one, and nothing
  // sits strictly between
  for (const Partition& p : generate_corpus({3, 60})) {
    const auto elems = enumerate_placements(p);
    for (const RookPlacement& x : elems) {
      std::set<std::vector<int>> expected;
      for (const RookPlacement& y : elems) {
        if (y == x || !bruhat_leq(y, x)) continue;
        if (rank(y, p) != rank(x, p) - 1) continue;
        bool between = false;
        for (const RookPlacement& z : elems)
          if (z != x && z != y && bruhat_leq(y, z) && bruhat_leq(z, x))
            between = true;
        if (!between) expected.insert(y.columns);
      }
      CHECK(column_set(covers_down(x)) == expected);
    }
  }
}

TEST_CASE("placement conjugation") {
  const Partition p = board({2, 3, 5, 6, 6});
  const Partition c = p.conjugate();
  CHECK(conjugate_placement(max_placement(p), p) == max_placement(c));
  CHECK(conjugate_placement(min_placement(p), p) == min_placement(c));
  for (const RookPlacement& x : enumerate_placements(p)) {
    RookPlacement y = conjugate_placement(x, p);
    CHECK_NOTHROW(validate_placement(y, c));
    CHECK(conjugate_placement(y, c) == x);
  }
  // order preserving in both directions
  const Partition small = board({3, 3});
  const auto elems = enumerate_placements(small);
  for (const RookPlacement& x : elems)
    for (const RookPlacement& y : elems)
      CHECK(bruhat_leq(x, y) == bruhat_leq(conjugate_placement(x, small),
                                           conjugate_placement(y, small)));
  CHECK_THROWS_AS(conjugate_placement(pl({1, 2}), board({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("zero insertion map") {
  const Partition p = board({3, 3, 5, 6, 6});  // gjw 2,1,2,2,1
  CHECK(insert_zero_board(p, 2) ==
        Partition::from_gjw(GjwSequence({2, 1, 0, 2, 2, 1})));
  CHECK(insert_zero_map(pl({3, 2, 5, 6, 4}), p, 2) == pl({3, 2, 1, 6, 7, 5}));
  CHECK(insert_zero_map(pl({1, 2, 3, 4, 5}), p, 2) == pl({1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(insert_zero_map(pl({3, 2, 5, 6, 4}), p, 1),
                  std::invalid_argument);  // row 1 carries 2, not 1

  // bijective order isomorphism on a small board
  const Partition small = board({3, 3});  // gjw 2,1
  const Partition wide = insert_zero_board(small, 2);
  const auto elems = enumerate_placements(small);
  std::set<std::vector<int>> images;
  for (const RookPlacement& x : elems) {
    RookPlacement y = insert_zero_map(x, small, 2);
    CHECK_NOTHROW(validate_placement(y, wide));
    images.insert(y.columns);
  }
  CHECK(images.size() == enumerate_placements(wide).size());
  for (const RookPlacement& x : elems)
    for (const RookPlacement& y : elems)
      CHECK(bruhat_leq(x, y) == bruhat_leq(insert_zero_map(x, small, 2),
                                           insert_zero_map(y, small, 2)));
}

TEST_CASE("coatom dominance shortcut") {
  const Partition p = board({3, 3, 5, 6, 6});
  const auto elems = enumerate_placements(p);
  const RookPlacement top = max_placement(p);
  for (const RookPlacement& c : covers_down(top)) {
    CHECK(is_below_coatom(c, c, p));
    CHECK_FALSE(is_below_coatom(top, c, p));
    for (const RookPlacement& x : elems)
      CHECK(is_below_coatom(x, c, p) == bruhat_leq(x, c));
  }
}

TEST_CASE("placement text form") {
  CHECK(pl({3, 2, 5, 6, 4}).to_string() == "[3,2,5,6,4]");
  CHECK(parse_placement("[3,2,5,6,4]") == pl({3, 2, 5, 6, 4}));
  CHECK(parse_placement("3,2,5,6,4") == pl({3, 2, 5, 6, 4}));
  CHECK_THROWS_AS(parse_placement("[a]"), std::invalid_argument);
}

TEST_SUITE_END();
