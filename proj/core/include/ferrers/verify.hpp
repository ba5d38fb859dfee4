#ifndef FERRERS_VERIFY_HPP
#define FERRERS_VERIFY_HPP

#include <string>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/poset.hpp"

namespace ferrers {

// Bounds for exhaustive small-board verification: every staircase-containing
// board with at most max_rows rows whose rook poset has at most
// max_poset_size elements.
struct CorpusSpec {
  int max_rows = 4;
  long long max_poset_size = 200;
};

// All boards within the bounds (including the empty board), enumerated by
// GJW sequence in lexicographic order.
std::vector<Partition> generate_corpus(const CorpusSpec& spec);

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The nine verification suites, in order:
//   1 worked-example          the two-sequence equivalence fixed point
//   2 conjugate-pair-oracle   (2,3,5,6,6) vs (3,4,4,5,6), invariant + oracle
//   3 equivalence-vs-oracle   normal-form test vs brute-force isomorphism
//   4 reconstruction          round trip through the abstract poset
//   5 counting                placement counts match the product formula
//   6 poincare-product        rank sizes match the q-integer product
//   7 structure-lemmas        coatoms, X_i chains, entanglement, Hasse,
//                             coatom dominance shortcut
//   8 isomorphism-maps        conjugation, 0-insertion, product splitting
//   9 bruhat-correspondence   312-avoidance and lower-interval isomorphism
std::vector<SuiteResult> run_verify(const CorpusSpec& spec);

}  // namespace ferrers

#endif
