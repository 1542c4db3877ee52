#pragma once

#include <array>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cat/fincat.hpp"

namespace sqk {

// Distinguished square, oriented as
//
//     A --f--> B        f, g in M (horizontal)
//     |        |        h, j in E (vertical)
//     h        j        commuting: j∘f == g∘h
//     v        v
//     C --g--> D
//
struct Square {
  int f, h, j, g;
  bool operator==(const Square &o) const {
    return f == o.f && h == o.h && j == o.j && g == o.g;
  }
};

struct Complement {
  int object;  // B\A
  int eps;     // B\A -> B, must lie in E
};

class SquaresCategory {
 public:
  FinCategory cat;
  std::vector<char> inE, inM;
  int O = -1;
  std::vector<Square> distinguished;
  std::map<int, Complement> complements;  // keyed by M-morphism index

  static SquaresCategory from_json(const json &j);
  static SquaresCategory from_json(const json &j, Report &rep);
  json to_json() const;

  bool is_distinguished(const Square &s) const;
  bool is_distinguished(int f, int h, int j, int g) const {
    return is_distinguished(Square{f, h, j, g});
  }

  // Unique morphism O -> X inside the subcategory; -1 if not exactly one.
  int unique_E_from_O(int x) const;
  int unique_M_from_O(int x) const;

  // Ambient laws + wide/closed E and M + distinguished-square laws
  // (commutation, composition closures, identity families, O initiality).
  Report validate() const;

  // pre: e in E. The square with identity left edge over O and e right edge.
  bool is_weak_equivalence(int e) const;

  Report check_complement_axioms() const;

  // The unique morphism compl(f).object -> compl(g).object commuting with j
  // over the eps maps and forming a pullback ((A5) shape). `candidates` holds
  // every commuting+pullback morphism found; ok iff exactly one.
  struct Induced {
    std::vector<int> candidates;
    bool has_complements = true;
    bool ok() const { return has_complements && candidates.size() == 1; }
    int mor() const { return candidates[0]; }
  };
  const Induced &induced_map(int f, int g, int j) const;

  // Spec-facing wrapper: checks the square is (A5)-shaped first.
  Report induced_complement_map_report(const Square &sq) const;

  void rebuild_index();

 private:
  std::unordered_map<std::uint64_t, std::vector<Square>> dist_index_;
  mutable std::map<std::array<int, 3>, Induced> induced_cache_;
  static std::uint64_t sq_hash(const Square &s);

  friend struct CminBuilder;
};

Report check_squares_category(const json &j);

}  // namespace sqk
