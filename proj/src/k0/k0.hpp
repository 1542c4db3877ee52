#pragma once

#include <string>
#include <vector>

#include "cat/cmin.hpp"
#include "cat/covering.hpp"
#include "cat/squares.hpp"
#include "k0/snf.hpp"

namespace sqk {

// Z{generators} modulo the subgroup generated by the relation rows.
struct AbelianGroupPresentation {
  std::vector<std::string> generators;
  ZMat relations;  // every row has generators.size() entries

  json to_json() const;
};

struct AbelianGroupInvariants {
  int rank = 0;
  ZVec torsion;  // each >= 2, each dividing the next

  bool operator==(const AbelianGroupInvariants &o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  json to_json() const;
};

// Generators are all objects; relations kill the basepoint and impose
// [A] + [D] = [B] + [C] per distinguished square. Zero and duplicate rows
// are dropped (the span is unchanged).
// pre: S.validate() passes
AbelianGroupPresentation k0_presentation_squares(const SquaresCategory &S);

// Generators are the non-initial objects; one relation [T] = sum of member
// sources per listed covering family.
// pre: A.validate() passes
AbelianGroupPresentation k0_presentation_assembler(const CovCategory &A);

AbelianGroupInvariants k0_invariants(const AbelianGroupPresentation &p);

// Certifies that [A] -> [singleton A] is an isomorphism between the
// assembler presentation quotient and the multiset model presentation
// quotient: both unit maps respect relations and are mutually inverse on
// generators modulo relations. Failed memberships report Inconclusive, not
// Fail: a larger bound may supply the missing relation witnesses.
// pre: A.validate() passes; bound semantics as in build_cmin
Report k0_compare_cmin(const CovCategory &A, int bound);

}  // namespace sqk
