#pragma once

#include "cat/covering.hpp"

namespace sqk {

// One morphism of the formal-multiset category: an index map on positions
// plus a base morphism per source position.
struct CminMor {
  int src = -1, dst = -1;   // multiset object indices
  std::vector<int> alpha;   // source position -> target position
  std::vector<int> comps;   // base morphism per source position
};

// Squares category with complements built over formal multisets of
// non-initial base objects, truncated by multiset size. Morphisms are the
// maps whose fibers are sub-multisets of listed covering families; the
// coproduct inclusions form M, and a square is distinguished exactly when it
// is a pullback whose complement fibers are full covering families.
struct CminPackage {
  SquaresCategory C;
  CovCategory lifted;  // covering structure on the same multiset category
  CovCategory base;
  CoprodTable table;   // concatenation, only within the size bound
  std::vector<std::vector<int>> multisets;  // object -> sorted base objects
  std::vector<CminMor> mors;                // aligned with morphism indices
  std::vector<int> obj_embed;  // base object -> singleton multiset
  std::vector<int> mor_embed;  // base morphism -> singleton map, -1 if absent
  int bound = 0;

  // Every position's combined fiber across `maps` is exactly a listed family
  // of the component; on the empty multiset the condition is vacuous, so any
  // family of endomaps covers it (their pairwise pullbacks are all initial).
  bool is_multiset_covering(int target, const std::vector<int> &maps) const;
};

// pre: A.validate() passes; the coproduct conditions are the caller's
// concern. Throws input_error when size_bound < 1.
CminPackage build_cmin(const CovCategory &A, int size_bound);

// Wire the package for check_B_conditions: shared ambient, concatenation
// monoidal structure, semantic multiset covering oracle. The package must
// outlive the returned environment.
BEnv make_benv(const CminPackage &P);

json cmin_to_json(const CminPackage &P);

}  // namespace sqk
