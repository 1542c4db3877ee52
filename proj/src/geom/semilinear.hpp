#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geom/linalg.hpp"
#include "support/rat.hpp"

namespace sqk {

// a . x  rel  b
enum class Rel { Lt, Le, Eq, Ne, Gt, Ge };

std::string rel_str(Rel r);
Rel rel_from_str(const std::string &s);

struct LinConstraint {
  QVec a;
  mpq_class b;
  Rel rel = Rel::Le;
  bool operator==(const LinConstraint &) const = default;
};

// Total order used for the canonical form.
bool lc_less(const LinConstraint &x, const LinConstraint &y);

// One conjunction of constraints; an empty conjunction is the whole space.
using Conj = std::vector<LinConstraint>;

// Finite union of constraint conjunctions over a fixed ambient dimension.
// An empty DNF is the empty set.
struct SemilinearSet {
  int dim = 0;
  std::vector<Conj> dnf;

  static SemilinearSet from_json(const json &j);
  json to_json() const;
  bool operator==(const SemilinearSet &) const = default;
};

SemilinearSet sl_empty(int dim);
SemilinearSet sl_space(int dim);

// Order-normalized, duplicate-free, with constant atoms evaluated and
// infeasible conjunctions dropped.
SemilinearSet canonicalize(const SemilinearSet &X);

bool conj_holds(const Conj &c, const QVec &p);
bool contains_point(const SemilinearSet &X, const QVec &p);

// Rewrites != atoms as a union of < and > branches; output conjs are !=-free.
std::vector<Conj> split_ne(const Conj &c);

SemilinearSet sl_union(const SemilinearSet &X, const SemilinearSet &Y);
SemilinearSet sl_intersection(const SemilinearSet &X, const SemilinearSet &Y);
SemilinearSet sl_complement(const SemilinearSet &X);
SemilinearSet sl_difference(const SemilinearSet &X, const SemilinearSet &Y);
SemilinearSet sl_product(const SemilinearSet &X, const SemilinearSet &Y);

// X x {0}^m x {0}  union  {0}^n x Y x {1}  inside R^{n+m+1}.
SemilinearSet sl_coproduct(const SemilinearSet &X, const SemilinearSet &Y);

// Exact emptiness / witness for one conjunction (Fourier-Motzkin after
// substituting equalities; != atoms split internally).
bool conj_feasible(int dim, const Conj &c);
std::optional<QVec> conj_witness(int dim, const Conj &c);
bool sl_is_empty(const SemilinearSet &X);

// Image of {x : c(x)} under x |-> mat x + off (exact projection).
std::vector<Conj> conj_affine_image(int dim, const Conj &c, const QMat &mat, const QVec &off);
SemilinearSet sl_affine_image(const SemilinearSet &X, const QMat &mat, const QVec &off);

// Preimage by substitution; exact.
Conj conj_affine_preimage(const Conj &c, const QMat &mat, const QVec &off);
SemilinearSet sl_affine_preimage(const SemilinearSet &Y, int domain_dim, const QMat &mat,
                                 const QVec &off);

} // namespace sqk
