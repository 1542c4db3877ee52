#pragma once

#include <gmpxx.h>

#include <vector>

namespace sqk {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // row major

ZMat z_identity(int n);
// Throws input_error on dimension mismatch or ragged rows.
ZMat z_mul(const ZMat &a, const ZMat &b);
// Exact integer determinant (fraction-free elimination). 0x0 gives 1.
mpz_class z_det(const ZMat &m);

// l * m * r == d with l, r unimodular; d diagonal, entries nonnegative and
// each dividing the next.
struct SmithNF {
  ZMat d, l, r;
};

// `width` fixes the column count so empty matrices keep their shape.
SmithNF smith_normal_form(const ZMat &m, int width);

// Membership in the subgroup of Z^width generated by the rows. The normal
// form is computed once; queries are quadratic in width.
class RowSpan {
 public:
  RowSpan(const ZMat &rows, int width);
  bool contains(const ZVec &v) const;

 private:
  int width_;
  ZMat r_;     // right transform of the defining matrix
  ZVec diag_;  // padded with zeros to width
};

}  // namespace sqk
