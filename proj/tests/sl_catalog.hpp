#pragma once

// Catalog of small semilinear fixtures shared across the geometry tests,
// with their known Euler characteristics.

#include <utility>
#include <vector>

#include "geom/semilinear.hpp"

namespace slcat {

using namespace sqk;

inline LinConstraint atom(QVec a, mpq_class b, Rel r) { return {std::move(a), std::move(b), r}; }

inline SemilinearSet one_point() {
  return canonicalize({1, {{atom({1}, 0, Rel::Eq)}}});
}

inline SemilinearSet open_interval() {
  return canonicalize({1, {{atom({1}, 0, Rel::Gt), atom({1}, 1, Rel::Lt)}}});
}

inline SemilinearSet closed_interval() {
  return canonicalize({1, {{atom({1}, 0, Rel::Ge), atom({1}, 1, Rel::Le)}}});
}

inline SemilinearSet half_open_interval() {
  return canonicalize({1, {{atom({1}, 0, Rel::Ge), atom({1}, 1, Rel::Lt)}}});
}

inline SemilinearSet two_closed_intervals() {
  return canonicalize({1,
                       {{atom({1}, 0, Rel::Ge), atom({1}, 1, Rel::Le)},
                        {atom({1}, 2, Rel::Ge), atom({1}, 3, Rel::Le)}}});
}

inline SemilinearSet open_square() {
  return canonicalize({2,
                       {{atom({1, 0}, 0, Rel::Gt), atom({1, 0}, 1, Rel::Lt),
                         atom({0, 1}, 0, Rel::Gt), atom({0, 1}, 1, Rel::Lt)}}});
}

inline SemilinearSet closed_square() {
  return canonicalize({2,
                       {{atom({1, 0}, 0, Rel::Ge), atom({1, 0}, 1, Rel::Le),
                         atom({0, 1}, 0, Rel::Ge), atom({0, 1}, 1, Rel::Le)}}});
}

inline SemilinearSet square_boundary() {
  return sl_difference(closed_square(), open_square());
}

inline SemilinearSet square_annulus() {
  SemilinearSet outer = canonicalize({2,
                                      {{atom({1, 0}, 0, Rel::Ge), atom({1, 0}, 3, Rel::Le),
                                        atom({0, 1}, 0, Rel::Ge), atom({0, 1}, 3, Rel::Le)}}});
  SemilinearSet hole = canonicalize({2,
                                     {{atom({1, 0}, 1, Rel::Gt), atom({1, 0}, 2, Rel::Lt),
                                       atom({0, 1}, 1, Rel::Gt), atom({0, 1}, 2, Rel::Lt)}}});
  return sl_difference(outer, hole);
}

// The closed square minus one open boundary edge; not locally closed.
inline SemilinearSet square_minus_open_edge() {
  SemilinearSet edge = canonicalize({2,
                                     {{atom({1, 0}, 0, Rel::Gt), atom({1, 0}, 1, Rel::Lt),
                                       atom({0, 1}, 0, Rel::Eq)}}});
  return sl_difference(closed_square(), edge);
}

struct CatalogEntry {
  const char *name;
  SemilinearSet set;
  int chi;
};

inline std::vector<CatalogEntry> chi_catalog() {
  return {
      {"point", one_point(), 1},
      {"open interval", open_interval(), -1},
      {"closed interval", closed_interval(), 1},
      {"half-open interval", half_open_interval(), 0},
      {"open square", open_square(), 1},
      {"closed square", closed_square(), 1},
      {"square boundary", square_boundary(), 0},
      {"square annulus", square_annulus(), 0},
      {"two closed intervals", two_closed_intervals(), 2},
  };
}

} // namespace slcat
