#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cat/fincat.hpp"
#include "cat/squares.hpp"

namespace sqk {

// Covering family over one target. `maps` is a sorted multiset of morphism
// indices, normalized: members whose source is the initial object are
// dropped (they can be duplicated or erased freely via the initial-object
// families, so they carry no information).
struct CovFamily {
  int target;
  std::vector<int> maps;
  bool operator<(const CovFamily &o) const {
    return target != o.target ? target < o.target : maps < o.maps;
  }
  bool operator==(const CovFamily &o) const {
    return target == o.target && maps == o.maps;
  }
};

struct CoprodEntry {
  int obj = -1, inl = -1, inr = -1;
};
using CoprodTable = std::map<std::pair<int, int>, CoprodEntry>;

class CovCategory {
 public:
  FinCategory cat;
  int initial = -1;
  // {∅→∅}_I covering for every finite I, including I = ∅; kept as a flag.
  bool empty_covers_initial = true;
  std::vector<CovFamily> families;  // normalized, deduped, sorted
  std::optional<std::vector<std::array<int, 5>>> coproducts;  // a,b,a⨿b,inl,inr

  static CovCategory from_json(const json &j);
  static CovCategory from_json(const json &j, Report &rep);
  json to_json() const;

  std::vector<int> normalize(const std::vector<int> &maps) const;
  bool is_listed(int target, const std::vector<int> &normalized) const;
  // indices into `families`
  const std::vector<int> &families_of(int target) const;

  // Base laws + strict initial + identity-singleton families + one-step
  // substitution closure of the listed families.
  Report validate() const;

  void rebuild_index();

 private:
  std::set<CovFamily> family_set_;
  std::map<int, std::vector<int>> by_target_;
};

Report validate_covering(const json &j);

// (i) empty family covers ∅, (ii) all morphisms mono, (iii) listed families
// pairwise disjoint, (iv) pairwise common refinements among families of size
// ≤ refinement_bound. Overall Inconclusive when only (iv) ran out of room.
Report is_assembler(const CovCategory &A, int refinement_bound);

// Coproducts here are restricted pushouts over the initial object. (C1)
// verifies a supplied table or derives one by enumeration; the table used is
// written to *table_out when given.
Report check_C_conditions(const CovCategory &A, CoprodTable *table_out = nullptr);

// W(A): tuples of non-initial objects, morphisms = index map + per-fiber
// covering families.
struct WObject {
  std::vector<int> comps;  // base object indices, ordered tuple
};
struct WMorphism {
  int src, dst;             // indices into the enumerated object list
  std::vector<int> alpha;   // index map, size = |src tuple|
  std::vector<int> comps;   // comps[i] : S_i -> T_alpha[i]
};
struct WCat {
  std::vector<WObject> objects;
  std::vector<WMorphism> morphisms;
  json to_json(const CovCategory &A) const;
};
WCat wcat_enumerate(const CovCategory &A, int k);

// Covering structure and monoidal structure on the ambient category of a
// squares category, as callbacks so that both plain listed families and the
// symbolic multiset ambient can feed the same condition checker.
struct CoveringOracle {
  std::function<bool(int, const std::vector<int> &)> is_covering;
  std::function<std::vector<std::vector<int>>(int)> listed;
};
struct MonoidalOps {
  std::function<std::optional<CoprodEntry>(int, int)> obj_coprod;
  std::function<int(int, int)> mor_coprod;  // -1 when unresolved
};

// Shared-ambient wiring: the covering category sits on the same finite
// category as the squares category; monoidal data from a coproduct table.
MonoidalOps monoidal_from_table(const FinCategory &cat, const CoprodTable &table);
CoveringOracle oracle_from_listed(const CovCategory &A);

struct BEnv {
  const SquaresCategory *C = nullptr;
  const CovCategory *A = nullptr;   // covering data over its own base
  std::vector<int> obj_embed;       // base object -> ambient object
  std::vector<int> mor_embed;       // base morphism -> ambient morphism
  CoveringOracle cov;               // ambient covering structure
  MonoidalOps mono;                 // ambient monoidal structure
};

// The eleven comparison conditions. Finite quantifier domains are checked
// exhaustively; domains cut off by wbound or sampled down to `samples` draws
// are labeled "sampled".
Report check_B_conditions(const BEnv &env, int samples, unsigned long long seed,
                          int wbound = 2);

// Both structures on one shared ambient category.
BEnv make_benv(const SquaresCategory &C, const CovCategory &A,
               const CoprodTable &table);

}  // namespace sqk
