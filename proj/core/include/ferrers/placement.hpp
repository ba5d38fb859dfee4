#ifndef FERRERS_PLACEMENT_HPP
#define FERRERS_PLACEMENT_HPP

#include <string>
#include <vector>

#include "ferrers/board.hpp"

namespace ferrers {

// A maximal non-attacking rook placement: columns[i] is the (1-based)
// column of the rook in row i+1, counting rows bottom-up.
struct RookPlacement {
  std::vector<int> columns;

  RookPlacement() = default;
  explicit RookPlacement(std::vector<int> cols) : columns(std::move(cols)) {}

  int rows() const { return static_cast<int>(columns.size()); }
  int column(int row) const { return columns[row - 1]; }

  bool operator==(const RookPlacement&) const = default;
  bool operator<(const RookPlacement& o) const { return columns < o.columns; }

  std::string to_string() const;  // "[3,2,5,6,4]"
};

void validate_placement(const RookPlacement& x, const Partition& p);

// All maximal placements, in lexicographic column order. The count always
// equals the product of (gjw entry + 1) over the rows.
std::vector<RookPlacement> enumerate_placements(const Partition& p);
long long placement_count(const Partition& p);

// Bruhat maximum: fill rows bottom-up, each rook as far right as possible.
RookPlacement max_placement(const Partition& p);
// Bruhat minimum: the staircase placement x_i = i.
RookPlacement min_placement(const Partition& p);

// x <= y iff for every prefix length j the sorted column sets dominate
// entrywise.
bool bruhat_leq(const RookPlacement& x, const RookPlacement& y);

// Extend the column sequence to a permutation of {1..lambda_n} by giving
// each phantom row in turn the smallest unused column.
std::vector<int> complete_to_permutation(const RookPlacement& x,
                                         const Partition& p);

int inversion_count(const std::vector<int>& values);

// Grading: inversions of the completed permutation. The minimum has rank 0
// and the maximum has rank equal to the sum of the GJW entries.
int rank(const RookPlacement& x, const Partition& p);

// The two cover-generating moves. Both produce elements covered by x.
std::vector<RookPlacement> switch_moves(const RookPlacement& x);
std::vector<RookPlacement> push_moves(const RookPlacement& x);
std::vector<RookPlacement> covers_down(const RookPlacement& x);

// The order isomorphism onto the conjugate board: extend to the augmented
// board, transpose the rook set across the diagonal, drop the full top row.
RookPlacement conjugate_placement(const RookPlacement& x, const Partition& p);

// The order isomorphism onto the board with a 0 inserted after a 1.
// `one_row` is the 1-based row whose GJW entry is 1; the image lives on the
// board whose GJW sequence has a 0 inserted right after that row.
RookPlacement insert_zero_map(const RookPlacement& x, const Partition& p,
                              int one_row);
Partition insert_zero_board(const Partition& p, int one_row);

// Dominance shortcut for coatoms: x lies below coatom c (the coatom for row
// i) iff the sorted length-i prefixes dominate. Agrees with bruhat_leq.
bool is_below_coatom(const RookPlacement& x, const RookPlacement& c,
                     const Partition& p);

// Row a coatom acts on: the single changed row of a push, the lower changed
// row of a switch.
int coatom_row(const RookPlacement& c, const Partition& p);

RookPlacement parse_placement(const std::string& text);  // "[3,2,5,6,4]"

}  // namespace ferrers

#endif
