#ifndef FERRERS_BOARD_HPP
#define FERRERS_BOARD_HPP

#include <optional>
#include <string>
#include <vector>

namespace ferrers {

class GjwSequence;

// A Ferrers board: row lengths lambda_1 <= ... <= lambda_n, bottom-up,
// every part positive and lambda_i >= i (the board holds n non-attacking
// rooks). Immutable once constructed; construction validates.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition from_gjw(const GjwSequence& g);

  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int row) const { return parts_[row - 1]; }  // rows are 1-based
  const std::vector<int>& parts() const { return parts_; }

  GjwSequence gjw() const;

  // Conjugation is defined only when the top row is one box wider than the
  // board is tall: append a full top row, reflect across the upper-left to
  // lower-right diagonal, drop the full row again.
  bool conjugable() const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;  // "3,3,5,6,6"; empty board -> ""

private:
  std::vector<int> parts_;
};

// The sequence lambda_i - i. Entries are nonnegative and can drop by at
// most one per step; this characterizes exactly the valid boards.
class GjwSequence {
public:
  GjwSequence() = default;
  explicit GjwSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_[i - 1]; }  // 1-based
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const GjwSequence&) const = default;

  std::string to_string() const;  // "2,1,2,2,1"

private:
  std::vector<int> entries_;
};

// A contiguous segment of a GJW sequence after breaking behind every 1 and
// dropping zeros. Entries are positive; a 1 appears only as the last entry.
// Only the last block of a decomposition may end in something bigger than 1.
class Block {
public:
  explicit Block(std::vector<int> entries);

  bool ends_in_one() const { return entries_.back() == 1; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Block&) const = default;
  bool operator<(const Block& o) const { return entries_ < o.entries_; }

  // Digit string ("22321") while all entries are single digits, otherwise
  // comma-separated.
  std::string to_string() const;

private:
  std::vector<int> entries_;
};

// The complete isomorphism invariant: the multiset of 1-ending blocks, each
// replaced by the lexicographically smaller member of its conjugation pair,
// plus the trailing block (entries all >= 2) kept verbatim when present.
struct NormalForm {
  std::vector<Block> one_blocks;  // canonical representatives, sorted
  std::optional<Block> tail;

  bool operator==(const NormalForm&) const = default;

  std::string to_line() const;  // "blocks: 1 | 22321 ; tail: 32"
};

std::vector<Block> blocks(const GjwSequence& g);

Block conjugate_block(const Block& b);  // requires b.ends_in_one()
Block canonical_block(const Block& b);

NormalForm normal_form(const GjwSequence& g);

bool equivalent(const Partition& a, const Partition& b);

// Insert a 0 after every 1 that is not already followed by one. Preserves
// the rook poset up to isomorphism.
GjwSequence insert_zero_after_ones(const GjwSequence& g);

// CLI board syntax: "3,3,5,6,6" or "g:2,1,2,2,1"; "" is the empty board.
Partition parse_board(const std::string& text);

}  // namespace ferrers

#endif
