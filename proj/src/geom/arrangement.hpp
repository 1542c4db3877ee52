#pragma once

#include <vector>

#include "geom/semilinear.hpp"

namespace sqk {

struct GeomLimits {
  int max_dim = 3;
  int max_constraints = 64; // distinct hyperplanes per arrangement
};

// Canonical form: primitive integer coefficients, first nonzero positive.
struct Hyperplane {
  QVec a;
  mpq_class b;
  bool operator==(const Hyperplane &) const = default;
};

Hyperplane canonical_hyperplane(QVec a, mpq_class b);
bool hp_less(const Hyperplane &x, const Hyperplane &y);

// Distinct hyperplanes appearing in the canonical form of X.
std::vector<Hyperplane> hyperplanes_of(const SemilinearSet &X);

// Relatively open convex cell of the arrangement, identified by its sign
// vector over arr.planes. The witness is any point of the cell.
struct Face {
  std::vector<int8_t> sign;
  int dim = 0;
  QVec witness;
};

struct Arrangement {
  int dim = 0;
  std::vector<Hyperplane> planes; // sorted canonical order
  std::vector<Face> faces;        // sorted by sign vector

  // faces[lo] contained in the closure of faces[hi]
  bool closure_leq(int lo, int hi) const;
  Conj face_conj(int f) const;
};

Arrangement arrangement_of(const std::vector<SemilinearSet> &sets,
                           const std::vector<Hyperplane> &extra = {},
                           const GeomLimits &lim = {});

// Face membership flags for X; the arrangement must be adapted to X
// (every hyperplane of X present), which this checks.
std::vector<char> member_flags(const Arrangement &arr, const SemilinearSet &X);

struct CellComplex {
  Arrangement arr;
  std::vector<std::vector<char>> in_sets; // one flag vector per input set
};

CellComplex cell_decomposition(const std::vector<SemilinearSet> &sets,
                               const GeomLimits &lim = {});

int flags_dimension(const Arrangement &arr, const std::vector<char> &in);
int flags_euler(const Arrangement &arr, const std::vector<char> &in);
std::vector<char> closure_flags(const Arrangement &arr, const std::vector<char> &in);
bool flags_closed(const Arrangement &arr, const std::vector<char> &in);
SemilinearSet set_of_flags(const Arrangement &arr, const std::vector<char> &in);

int dimension(const SemilinearSet &X, const GeomLimits &lim = {});
int euler_char(const SemilinearSet &X, const GeomLimits &lim = {});
SemilinearSet closure(const SemilinearSet &X, const GeomLimits &lim = {});
SemilinearSet frontier(const SemilinearSet &X, const GeomLimits &lim = {});
bool is_locally_closed(const SemilinearSet &X, const GeomLimits &lim = {});

bool set_equal(const SemilinearSet &X, const SemilinearSet &Y, const GeomLimits &lim = {});
bool subset_of(const SemilinearSet &X, const SemilinearSet &Y, const GeomLimits &lim = {});

} // namespace sqk
