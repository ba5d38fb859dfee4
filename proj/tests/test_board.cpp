#include <algorithm>

#include "doctest.h"
#include "ferrers/board.hpp"
#include "ferrers/verify.hpp"

using namespace ferrers;

namespace {

GjwSequence gjw_of(std::initializer_list<int> entries) {
  return GjwSequence(std::vector<int>(entries));
}

Partition board(std::initializer_list<int> parts) {
  return Partition(std::vector<int>(parts));
}

std::vector<std::vector<int>> block_entries(const std::vector<Block>& bs) {
  std::vector<std::vector<int>> out;
  for (const Block& b : bs) out.push_back(b.entries());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("board");

TEST_CASE("partition validation") {
  CHECK_NOTHROW(board({3, 3, 5, 6, 6}));
  CHECK_NOTHROW(Partition());
  CHECK_THROWS_AS(board({3, 2}), std::invalid_argument);   // decreasing
  CHECK_THROWS_AS(board({1, 1}), std::invalid_argument);   // misses staircase
  CHECK_THROWS_AS(board({0, 1}), std::invalid_argument);   // nonpositive part
}

TEST_CASE("gjw sequences") {
  CHECK(board({3, 3, 5, 6, 6}).gjw() == gjw_of({2, 1, 2, 2, 1}));
  CHECK(board({1, 2, 3}).gjw() == gjw_of({0, 0, 0}));
  CHECK(board({2, 3, 5, 6, 6}).gjw() == gjw_of({1, 1, 2, 2, 1}));

  CHECK(Partition::from_gjw(gjw_of({2, 1, 2, 2, 1})) == board({3, 3, 5, 6, 6}));
  CHECK(Partition::from_gjw(GjwSequence()) == Partition());
  CHECK(Partition::from_gjw(gjw_of({1, 0})) == board({2, 2}));

  CHECK_THROWS_AS(gjw_of({2, 0}), std::invalid_argument);  // drops by 2
  CHECK_THROWS_AS(gjw_of({-1}), std::invalid_argument);
}

TEST_CASE("gjw round trip over the small corpus") {
  for (const Partition& p : generate_corpus({4, 120})) {
    CHECK(Partition::from_gjw(p.gjw()) == p);
  }
}

TEST_CASE("conjugation") {
  CHECK(board({2, 3, 5, 6, 6}).conjugate() == board({3, 4, 4, 5, 6}));
  CHECK(board({3, 3}).conjugate() == board({3, 3}));
  CHECK_THROWS_AS(board({2, 2}).conjugate(), std::invalid_argument);

  // a leading zero entry shrinks the image's top row
  CHECK(board({1, 3}).conjugate() == board({2, 2}));

  for (const Partition& p : generate_corpus({4, 120})) {
    if (!p.conjugable()) continue;
    Partition c = p.conjugate();
    if (c.conjugable()) CHECK(c.conjugate() == p);
    CHECK(equivalent(p, c));
  }
}

TEST_CASE("block decomposition") {
  CHECK(block_entries(blocks(gjw_of({2, 2, 3, 2, 1, 0, 1, 0, 0, 3, 2}))) ==
        std::vector<std::vector<int>>{{2, 2, 3, 2, 1}, {1}, {3, 2}});
  CHECK(block_entries(blocks(gjw_of({2, 1, 2, 2, 1}))) ==
        std::vector<std::vector<int>>{{2, 1}, {2, 2, 1}});
  CHECK(blocks(gjw_of({0, 0, 0})).empty());
}

TEST_CASE("block decomposition reassembles over the corpus") {
  for (const Partition& p : generate_corpus({5, 120})) {
    GjwSequence g = p.gjw();
    std::vector<int> nonzero;
    for (int a : g.entries())
      if (a != 0) nonzero.push_back(a);
    std::vector<int> joined;
    const std::vector<Block> bs = blocks(g);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (int e : bs[i].entries()) joined.push_back(e);
      if (i + 1 < bs.size()) CHECK(bs[i].ends_in_one());
    }
    CHECK(joined == nonzero);
  }
}

TEST_CASE("block conjugation") {
  CHECK(conjugate_block(Block({2, 2, 3, 2, 1})) == Block({3, 2, 2, 2, 1}));
  CHECK(conjugate_block(Block({2, 1})) == Block({2, 1}));
  CHECK(conjugate_block(Block({2, 1, 1})) == Block({1, 2, 1}));
  CHECK(conjugate_block(Block({2, 2, 1})) == Block({2, 2, 1}));
  CHECK_THROWS_AS(conjugate_block(Block({3, 2})), std::invalid_argument);

  for (const Partition& p : generate_corpus({5, 120}))
    for (const Block& b : blocks(p.gjw()))
      if (b.ends_in_one()) CHECK(conjugate_block(conjugate_block(b)) == b);
}

TEST_CASE("normal form") {
  NormalForm nf = normal_form(gjw_of({2, 2, 3, 2, 1, 0, 1, 0, 0, 3, 2}));
  REQUIRE(nf.one_blocks.size() == 2);
  CHECK(nf.one_blocks[0] == Block({1}));
  CHECK(nf.one_blocks[1] == Block({2, 2, 3, 2, 1}));  // lex-min of the pair
  REQUIRE(nf.tail.has_value());
  CHECK(*nf.tail == Block({3, 2}));
  CHECK(nf.to_line() == "blocks: 1 | 22321 ; tail: 32");

  CHECK(normal_form(gjw_of({1, 3, 2, 2, 2, 1, 3, 2})) == nf);

  CHECK(normal_form(gjw_of({0})) == NormalForm{});
  CHECK(NormalForm{}.to_line() == "blocks: ; tail: -");
  CHECK(normal_form(gjw_of({2, 1, 2, 2, 1})).to_line() ==
        "blocks: 21 | 221 ; tail: -");
}

TEST_CASE("equivalence") {
  const Partition a = parse_board("g:2,2,3,2,1,0,1,0,0,3,2");
  const Partition b = parse_board("g:1,3,2,2,2,1,3,2");
  CHECK(equivalent(a, b));
  CHECK(equivalent(b, a));
  CHECK(equivalent(a, a));
  CHECK_FALSE(equivalent(board({2, 2}), board({2, 3})));
}

TEST_CASE("zero insertion on sequences") {
  CHECK(insert_zero_after_ones(gjw_of({2, 1, 2, 2, 1})) ==
        gjw_of({2, 1, 0, 2, 2, 1, 0}));
  CHECK(insert_zero_after_ones(gjw_of({0, 0})) == gjw_of({0, 0}));
  CHECK(insert_zero_after_ones(gjw_of({1, 0})) == gjw_of({1, 0}));
  for (const Partition& p : generate_corpus({4, 120}))
    CHECK(equivalent(p, Partition::from_gjw(insert_zero_after_ones(p.gjw()))));
}

TEST_CASE("board parsing and rendering") {
  CHECK(parse_board("3,3,5,6,6") == board({3, 3, 5, 6, 6}));
  CHECK(parse_board("g:2,1,2,2,1") == board({3, 3, 5, 6, 6}));
  CHECK(parse_board("") == Partition());
  CHECK(board({3, 3, 5, 6, 6}).to_string() == "3,3,5,6,6");
  CHECK_THROWS_AS(parse_board("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board("g:3,1"), std::invalid_argument);

  CHECK(Block({2, 2, 3, 2, 1}).to_string() == "22321");
  CHECK(Block({22}).to_string() == "(22)");  // distinct from 2,2
  CHECK(Block({2, 2}).to_string() == "22");
  CHECK(Block({10, 9, 1}).to_string() == "(10,9,1)");
}

TEST_SUITE_END();
