#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "cat/squares.hpp"

namespace sqk {

// Chain of n composable M-morphisms; the objects of the degree-n level of the
// horizontal-nerve construction. degree() == 0 means a bare object.
struct ChainObject {
  std::vector<int> objects;  // n+1 objects
  std::vector<int> maps;     // maps[k]: objects[k] -> objects[k+1], in M
  int degree() const { return static_cast<int>(maps.size()); }
  auto operator<=>(const ChainObject &) const = default;
};

// Natural transformation between chains: one E-component per column, every
// naturality square (adjacent and composite) distinguished.
struct ChainMorphism {
  ChainObject src, dst;
  std::vector<int> comp;  // comp[k]: src.objects[k] -> dst.objects[k], in E
  auto operator<=>(const ChainMorphism &) const = default;
};

enum class Variant { Tplus, Ssquare };
const char *variant_str(Variant v);

// Triangular staircase of distinguished squares. Row i lives at columns
// i..n with the basepoint on the diagonal; verticals point from row i to
// row i-1 (and from row 0 to the top row when present).
//
//   top:  A_0 >--> A_1 >--> ... >--> A_n        (Tplus only)
//   row0: O >--> X_{01} >--> ... >--> X_{0n}    (each X with an E-map up)
//   row1:        O >--> X_{12} >--> ...
//   ...
//   rown:                             O
//
// Serialization uses row -1 for the top row; horizontals are keyed by their
// source position "i,j" (arrow to column j+1), verticals likewise (arrow to
// row i-1).
struct StaircaseDiagram {
  int n = 0;
  Variant variant = Variant::Ssquare;
  std::vector<int> top, top_h;          // sizes n+1 / n when Tplus, else empty
  std::vector<std::vector<int>> grid;   // grid[i][j-i] = X_{ij}, X_{ii} = O
  std::vector<std::vector<int>> row_h;  // row_h[i][j-i]: X_{ij} -> X_{i,j+1}
  std::vector<std::vector<int>> up_v;   // up_v[i][j-i]: X_{ij} -> X_{i-1,j};
                                        // up_v[0] targets the top row

  bool with_top() const { return variant == Variant::Tplus; }
  int obj(int i, int j) const;  // i == -1 addresses the top row
  int hor(int i, int j) const;
  int ver(int i, int j) const;
  auto operator<=>(const StaircaseDiagram &) const = default;
  json to_json(const FinCategory &C) const;
};

// Natural transformation between staircases of the same shape: E-components
// per position, mixed naturality squares distinguished, vertical-only
// naturality squares commuting.
struct DiagMorphism {
  StaircaseDiagram src, dst;
  std::vector<int> top_c;              // top-row components when Tplus
  std::vector<std::vector<int>> comp;  // comp[i][j-i]: X_{ij} -> X'_{ij}
  auto operator<=>(const DiagMorphism &) const = default;
};

// Composite objects[i] -> objects[j] of a chain segment; identity when i == j.
int chain_composite(const FinCategory &C, const ChainObject &c, int i, int j);

Report validate_chain(const SquaresCategory &S, const ChainObject &c);
Report validate_chain_morphism(const SquaresCategory &S, const ChainMorphism &m);
Report validate_staircase(const SquaresCategory &S, const StaircaseDiagram &d);
Report validate_diag_morphism(const SquaresCategory &S, const DiagMorphism &m);

// All valid degree-n chains / staircases, in canonical (lexicographic index)
// order. Staircase enumeration is capped at n <= 4.
std::vector<ChainObject> enumerate_chains(const SquaresCategory &S, int n);
std::vector<ChainMorphism> enumerate_chain_morphisms(const SquaresCategory &S,
                                                     const ChainObject &src);
std::vector<StaircaseDiagram> enumerate_staircases(const SquaresCategory &S,
                                                   int n, Variant v);

// Simplicial structure maps on chains: face composes at position i (drops the
// end at the boundary), degeneracy inserts an identity at position i.
ChainObject face(const FinCategory &C, const ChainObject &c, int i);
ChainObject degeneracy(const FinCategory &C, const ChainObject &c, int i);

// Forgets everything except the top row. Requires the Tplus variant.
ChainObject functor_U(const SquaresCategory &S, const StaircaseDiagram &d);
ChainMorphism functor_U(const SquaresCategory &S, const DiagMorphism &m);

// Fills the staircase under a chain with the complements of its composites:
// entry (i,j) is the complement of A_i -> A_j, horizontals are the unique
// (A5)-induced maps, verticals are complement eps maps transported along the
// (A6) isomorphisms. Every constituent square is certified distinguished;
// certification failure (an axiom violation in S) throws input_error. The
// (A6) witnesses are recorded per position in *a6_witnesses when given.
StaircaseDiagram functor_F(const SquaresCategory &S, const ChainObject &c,
                           json *a6_witnesses = nullptr);
DiagMorphism functor_F(const SquaresCategory &S, const ChainMorphism &m);

// G deletes the top row, H repeats the first row with identity verticals.
// G(H(s)) == s on the nose; H validates its output.
StaircaseDiagram functor_G(const SquaresCategory &S, const StaircaseDiagram &d);
StaircaseDiagram functor_H(const SquaresCategory &S, const StaircaseDiagram &d);

// The comparison morphism H(G(d)) -> d: top components are d's row-0
// verticals, everything below is an identity.
DiagMorphism natural_HG_to_id(const SquaresCategory &S,
                              const StaircaseDiagram &d);

ChainMorphism compose(const FinCategory &C, const ChainMorphism &g,
                      const ChainMorphism &f);
DiagMorphism compose(const FinCategory &C, const DiagMorphism &g,
                     const DiagMorphism &f);

// The comparison morphism d -> F(U(d)): per position (i,j) the pasted square
// (O >-> X_{ij}, O -> A_i, X_{ij} -> A_j, A_i >-> A_j) is certified
// distinguished and the component is the induced map onto the complement of
// A_i -> A_j. Failures throw input_error naming the position.
DiagMorphism roundtrip_components(const SquaresCategory &S,
                                  const StaircaseDiagram &d);

// Runs roundtrip_components over every enumerated degree-n Tplus object and
// certifies the result is a valid staircase morphism; failures are reported
// with object index and position. n <= 3.
Report check_roundtrip_transformations(const SquaresCategory &S, int n);

}  // namespace sqk
