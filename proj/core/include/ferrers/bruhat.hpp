#ifndef FERRERS_BRUHAT_HPP
#define FERRERS_BRUHAT_HPP

#include <string>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/placement.hpp"
#include "ferrers/poset.hpp"

namespace ferrers {

// One-line notation for an element of a symmetric group.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs);

  int size() const { return static_cast<int>(images.size()); }
  int image(int i) const { return images[i - 1]; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }

  std::string to_string() const;  // "[3,2,5,6,4,1]"
};

// Completion of the Bruhat-maximal placement; tops of rook posets are
// exactly the 312-avoiding permutations.
Permutation top_permutation(const Partition& p);

// No i<j<k with w_j < w_k < w_i.
bool avoids_312(const Permutation& w);

// Bruhat order by prefix dominance on full permutations.
bool perm_bruhat_leq(const Permutation& v, const Permutation& w);

// {v : v <= w}, materialized by descending through inversion-reducing
// transpositions; covers by transitive reduction of dominance.
Poset lower_bruhat_interval(const Permutation& w,
                            long long max_elements = kDefaultMaxElements);

// Round trip of top_permutation on 312-avoiding input:
// lambda_i = max(i, max_{j<=i} w_j).
Partition board_from_312(const Permutation& w);

Permutation parse_permutation(const std::string& text);

}  // namespace ferrers

#endif
