#ifndef FERRERS_RECONSTRUCT_HPP
#define FERRERS_RECONSTRUCT_HPP

#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/poset.hpp"

namespace ferrers {

// Per-coatom data the reconstruction works from: the size of the chain X_i
// (elements below no other coatom) and the entanglement-forest component.
struct CoatomProfile {
  int coatom;          // element id
  int xi_chain_edges;  // cover edges of the chain X_i
  bool is_push;        // xi_chain_edges >= 2; marks final-block membership
  int component;       // entanglement-forest component index
};

// Computes X_i chains and entanglement components; throws NotRookPosetError
// when X_i fails to be a chain or the entanglement graph is not a forest.
std::vector<CoatomProfile> coatom_profiles(const Poset& p);

// Indices of components that belong to the final (non-1-ending) block:
// exactly those holding a coatom with xi_chain_edges >= 2. Throws when a
// component holds two such coatoms.
std::vector<int> final_block_components(
    const std::vector<CoatomProfile>& profiles);

// Roots of a 1-ending block's entanglement tree compatible with the
// leaf-rank criterion: for every leaf, the minimal rank (within the block's
// isolated subposet) of an element not below the leaf equals its distance
// to the root plus one. Genuine blocks give one root, or the two ends of a
// path-shaped tree, which emit identical blocks.
std::vector<int> consistent_roots(const Poset& p,
                                  const std::vector<int>& component_coatoms);

// Recover the block normal form of the board underlying an abstract graded
// rook poset: identify the final block and its sub-block order, root and
// order every 1-ending block's tree, and read the GJW values off the
// ordered trees. Never consults element labels. Throws NotRookPosetError
// when any structural assumption fails.
NormalForm reconstruct(const Poset& p);

}  // namespace ferrers

#endif
