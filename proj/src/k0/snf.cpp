#include "k0/snf.hpp"

#include <cstdlib>
#include <utility>

#include "support/rat.hpp"

namespace sqk {

namespace {

void check_rect(const ZMat &m, int width, const char *who) {
  for (const auto &row : m)
    if (static_cast<int>(row.size()) != width)
      throw input_error(std::string(who) + ": ragged matrix");
}

}  // namespace

ZMat z_identity(int n) {
  ZMat e(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

ZMat z_mul(const ZMat &a, const ZMat &b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  check_rect(a, k, "z_mul");
  check_rect(b, m, "z_mul");
  ZMat c(n, ZVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

mpz_class z_det(const ZMat &m) {
  int n = static_cast<int>(m.size());
  check_rect(m, n, "z_det");
  if (n == 0) return 1;
  ZMat a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n && p < 0; ++i)
        if (a[i][k] != 0) p = i;
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithNF smith_normal_form(const ZMat &m, int width) {
  check_rect(m, width, "smith_normal_form");
  int rows = static_cast<int>(m.size());
  int cols = width;
  SmithNF s{m, z_identity(rows), z_identity(cols)};
  ZMat &d = s.d;

  auto row_swap = [&](int a, int b) {
    std::swap(d[a], d[b]);
    std::swap(s.l[a], s.l[b]);
  };
  auto col_swap = [&](int a, int b) {
    for (auto &row : d) std::swap(row[a], row[b]);
    for (auto &row : s.r) std::swap(row[a], row[b]);
  };
  // row a += q * row b
  auto row_add = [&](int a, int b, const mpz_class &q) {
    for (int j = 0; j < cols; ++j) d[a][j] += q * d[b][j];
    for (int j = 0; j < rows; ++j) s.l[a][j] += q * s.l[b][j];
  };
  // col a += q * col b
  auto col_add = [&](int a, int b, const mpz_class &q) {
    for (int i = 0; i < rows; ++i) d[i][a] += q * d[i][b];
    for (size_t i = 0; i < s.r.size(); ++i) s.r[i][a] += q * s.r[i][b];
  };

  for (int t = 0; t < rows && t < cols; ++t) {
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        mpz_class a = abs(d[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);

    for (;;) {
      // euclid steps shrink the pivot until row t and column t are clear
      bool moved = false;
      for (int i = t + 1; i < rows && !moved; ++i) {
        if (d[i][t] == 0) continue;
        mpz_class q = d[i][t] / d[t][t];
        if (q != 0) row_add(i, t, -q);
        if (d[i][t] != 0) {
          row_swap(t, i);
          moved = true;
        }
      }
      if (moved) continue;
      for (int j = t + 1; j < cols && !moved; ++j) {
        if (d[t][j] == 0) continue;
        mpz_class q = d[t][j] / d[t][t];
        if (q != 0) col_add(j, t, -q);
        if (d[t][j] != 0) {
          col_swap(t, j);
          moved = true;
        }
      }
      if (moved) continue;

      // pivot must divide the rest; folding in an offending row restarts
      // the clearing with a strictly smaller pivot, so this terminates
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  for (int t = 0; t < rows && t < cols; ++t)
    if (d[t][t] < 0) {
      for (int j = 0; j < cols; ++j) d[t][j] = -d[t][j];
      for (int j = 0; j < rows; ++j) s.l[t][j] = -s.l[t][j];
    }
  return s;
}

RowSpan::RowSpan(const ZMat &rows, int width) : width_(width) {
  SmithNF s = smith_normal_form(rows, width);
  r_ = std::move(s.r);
  diag_.assign(width, 0);
  int n = std::min(static_cast<int>(rows.size()), width);
  for (int k = 0; k < n; ++k) diag_[k] = s.d[k][k];
}

bool RowSpan::contains(const ZVec &v) const {
  if (static_cast<int>(v.size()) != width_)
    throw input_error("RowSpan::contains: wrong length");
  // v in the span iff v * r is divisible entry-wise by the diagonal
  for (int j = 0; j < width_; ++j) {
    mpz_class w = 0;
    for (int i = 0; i < width_; ++i) w += v[i] * r_[i][j];
    if (diag_[j] == 0 ? w != 0 : w % diag_[j] != 0) return false;
  }
  return true;
}

}  // namespace sqk
