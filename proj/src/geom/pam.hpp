#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../support/report.hpp"
#include "arrangement.hpp"
#include "linalg.hpp"
#include "semilinear.hpp"

namespace sqk {

// Piecewise-affine map over Q: finitely many affine pieces x |-> mat*x + off,
// each restricted to a semilinear domain piece. Domains must be pairwise
// disjoint; the map is defined exactly on their union.
struct AffinePiece {
  SemilinearSet domain;
  QMat mat;  // out_dim x in_dim
  QVec off;  // out_dim

  bool operator==(const AffinePiece &) const = default;
};

struct PAMap {
  int in_dim = 1;
  int out_dim = 1;
  std::vector<AffinePiece> pieces;

  static PAMap from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;

  bool operator==(const PAMap &) const = default;
};

// Throws input_error when piece shapes are inconsistent with the declared
// dimensions or when two piece domains overlap.
void pam_validate(const PAMap &f);

PAMap pam_identity(int dim);
PAMap pam_constant(const SemilinearSet &domain, const QVec &value);
PAMap pam_affine(const SemilinearSet &domain, const QMat &mat, const QVec &off);

// Union of the piece domains.
SemilinearSet pam_domain(const PAMap &f);

// Value at a point in the domain; nullopt outside it.
std::optional<QVec> pam_apply(const PAMap &f, const QVec &x);

SemilinearSet pam_image_on(const PAMap &f, const SemilinearSet &X);
SemilinearSet pam_preimage(const PAMap &f, const SemilinearSet &Y);
PAMap pam_restrict(const PAMap &f, const SemilinearSet &X);
PAMap pam_compose(const PAMap &g, const PAMap &f);  // g after f

// Pairing x |-> (f(x), g(x)) on the common refinement of the two domains.
PAMap pam_stack(const PAMap &f, const PAMap &g);

// Exact predicates. All of these quantify over semilinear sets via
// Fourier-Motzkin feasibility, so they are independent of the ambient
// arrangement caps.
bool pam_total_on(const PAMap &f, const SemilinearSet &X);
bool pam_agree_on(const PAMap &f, const PAMap &g, const SemilinearSet &X);

// f restricted to X is injective. Throws input_error if f is not total on X.
bool is_definable_injection(const PAMap &f, const SemilinearSet &X);
bool is_bijection_onto(const PAMap &f, const SemilinearSet &X, const SemilinearSet &Y);

// Continuity of f|X in the subspace topology, decided on a cell complex
// adapted to X and the piece domains: f is continuous iff for every pair of
// incident cells the governing formulas agree on the smaller cell's closure
// boundary. Throws input_error if f is not total on X or pieces overlap on X.
bool is_continuous_on(const PAMap &f, const SemilinearSet &X, const GeomLimits &lim = {});

// Two-sided inverse of f|X on f(X), when f|X is injective and piecewise
// invertible along each cell; nullopt when some cell's linear part is not
// injective on the cell's direction space.
std::optional<PAMap> inverse_on_image(const PAMap &f, const SemilinearSet &X,
                                      const GeomLimits &lim = {});

bool relatively_open_in(const SemilinearSet &U, const SemilinearSet &Y,
                        const GeomLimits &lim = {});
bool relatively_closed_in(const SemilinearSet &U, const SemilinearSet &Y,
                          const GeomLimits &lim = {});

// Embedding predicates for f : X -> Y.
bool is_open_embedding(const PAMap &f, const SemilinearSet &X, const SemilinearSet &Y,
                       const GeomLimits &lim = {});
bool is_closed_embedding(const PAMap &f, const SemilinearSet &X, const SemilinearSet &Y,
                         const GeomLimits &lim = {});
bool is_definable_homeomorphism(const PAMap &f, const SemilinearSet &X, const SemilinearSet &Y,
                                const GeomLimits &lim = {});

// Coproduct of two semilinear sets together with its inclusion maps.
struct CoproductData {
  SemilinearSet sum;
  PAMap inl;
  PAMap inr;
};
CoproductData coproduct_with_inclusions(const SemilinearSet &X, const SemilinearSet &Y);

// Which geometric model of the squares axioms to check against.
//   Def:      all definable sets, M = E = definable injections.
//   DefLc:    locally closed sets, M = closed embeddings, E = any definable map.
//   TildeDefLc: locally closed sets, M = closed embeddings, E = open embeddings.
enum class DefVariant { Def, DefLc, TildeDefLc };

std::string variant_name(DefVariant v);

// A commuting square of definable sets and piecewise-affine maps:
//
//        f
//    A >---> B
//    h |     | j
//    v       v
//    C >---> D
//        g
struct DefSquare {
  SemilinearSet A, B, C, D;
  PAMap f, h, j, g;

  static DefSquare from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
};

// Checks that the square is distinguished in the chosen variant: legs are in
// the right map classes, the square commutes and is a pullback, and the
// complement condition holds. One report item per condition; membership
// violations name the failing leg.
Report squares_instance_check(DefVariant variant, const DefSquare &sq,
                              const GeomLimits &lim = {});
bool squares_instance_ok(DefVariant variant, const DefSquare &sq, const GeomLimits &lim = {});

// Randomized audit of the squares axioms over sampled locally closed sets and
// their distinguished squares. One report item per axiom A1..A8.
Report sample_semilinear_axioms(DefVariant variant, int n_samples, uint64_t seed,
                                const GeomLimits &lim = {});

}  // namespace sqk
