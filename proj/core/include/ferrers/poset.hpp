#ifndef FERRERS_POSET_HPP
#define FERRERS_POSET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/placement.hpp"

namespace ferrers {

inline constexpr long long kDefaultMaxElements = 5000;

// Row-major bit matrix; row r holds a subset of {0..cols-1}.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : cols_(cols), words_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_) {}

  void set(int r, int c) { bits_[idx(r, c)] |= mask(c); }
  bool test(int r, int c) const { return bits_[idx(r, c)] & mask(c); }
  // row r |= row s
  void or_row(int r, int s) {
    for (int w = 0; w < words_; ++w)
      bits_[static_cast<std::size_t>(r) * words_ + w] |=
          bits_[static_cast<std::size_t>(s) * words_ + w];
  }

private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * words_ + c / 64;
  }
  static std::uint64_t mask(int c) { return std::uint64_t{1} << (c % 64); }

  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A finite graded poset with a unique minimum and maximum, stored as its
// Hasse diagram plus the reflexive-transitive closure of the cover
// relation. Elements are dense integer ids; labels are free-form strings.
// Construction validates boundedness and gradedness and throws
// NotRookPosetError otherwise.
class Poset {
public:
  Poset() = default;

  static Poset from_covers(std::vector<std::string> labels,
                           std::vector<std::pair<int, int>> covers);
  static Poset from_covers(int n, std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  int rank_of(int x) const { return rank_[x]; }
  int max_rank() const { return n_ == 0 ? 0 : rank_[top_]; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  bool leq(int a, int b) const { return below_.test(b, a); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Elements covered by the top, in id order.
  std::vector<int> coatoms() const;
  std::vector<int> rank_sizes() const;

private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  BitMatrix below_;  // below_.test(x, y) iff y <= x
  int top_ = -1, bottom_ = -1;
};

// The rook poset of a board: all maximal placements ordered by prefix
// dominance, covers generated by the switch/push moves.
Poset build_poset(const Partition& p,
                  long long max_elements = kDefaultMaxElements);

struct PoincarePolynomial {
  std::vector<long long> coefficients;  // coefficient of q^k at index k

  bool operator==(const PoincarePolynomial&) const = default;
  std::string to_string() const;  // "1 + 2q + 2q^2 + q^3"
};

PoincarePolynomial poincare_polynomial(const Poset& p);
// prod over rows of (1 + q + ... + q^{a_i}); equals the rank sizes.
PoincarePolynomial q_integer_product(const GjwSequence& g);

// X_I: elements lying below no coatom outside I. X_{=I}: members of X_I
// lying below every coatom of I. Coatoms are given by element id.
std::vector<int> subposet_x(const Poset& p, const std::vector<int>& coatoms_in);
std::vector<int> subposet_x_eq(const Poset& p,
                               const std::vector<int>& coatoms_in);

struct InducedPoset {
  Poset poset;
  std::vector<int> original_id;  // new id -> id in the parent poset
  std::vector<int> new_id;       // parent id -> new id, -1 if dropped
};

// Restrict the order to `elements` and rebuild covers by transitive
// reduction. Throws NotRookPosetError if the result is not bounded/graded.
InducedPoset induced_subposet(const Poset& p, std::vector<int> elements);

struct EntanglementGraph {
  std::vector<int> vertices;                  // coatom element ids
  std::vector<std::pair<int, int>> edges;     // unordered, by element id
};

// Coatoms i, j are joined iff X_{={i,j}} holds two distinct corank-2
// elements. For rook posets this is always a forest.
EntanglementGraph entanglement_graph(const Poset& p);
bool is_forest(const EntanglementGraph& g);

// Board-side route to the same graph: rows i and j are joined iff the
// first later GJW entry below entry i sits in row j and is nonzero.
// Vertices are 1-based rows with nonzero entries.
struct RowGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};
RowGraph switch_partner_graph(const GjwSequence& g);

// Brute-force order-isomorphism oracle: degree/rank refinement followed by
// backtracking. Exact; refuses inputs larger than `max_elements`.
bool are_isomorphic(const Poset& a, const Poset& b,
                    long long max_elements = kDefaultMaxElements);

// Direct product with componentwise order (oracle-side construct).
Poset product_poset(const Poset& a, const Poset& b);

// Drop labels, keeping only the abstract cover structure.
Poset with_anonymous_labels(const Poset& p);

// JSON object {"elements": [...], "covers": [[lo, hi], ...], "ranks": {...}}.
// Parsing recomputes ranks and validates any provided ones.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

std::string poset_to_dot(const Poset& p);

}  // namespace ferrers

#endif
