#include "geom/linalg.hpp"

#include <cassert>

namespace sqk {

QVec qvec_zero(int n) { return QVec(n, 0); }

QMat qmat_identity(int n) {
  QMat m(n, QVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmat_zero(int rows, int cols) { return QMat(rows, QVec(cols, 0)); }

mpq_class dot(const QVec &a, const QVec &b) {
  assert(a.size() == b.size());
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec &a, const QVec &b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec &a, const QVec &b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const mpq_class &c, const QVec &a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const QVec &a) {
  for (const auto &x : a)
    if (x != 0) return false;
  return true;
}

QVec mat_apply(const QMat &m, const QVec &x) {
  QVec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

QMat mat_mul(const QMat &a, const QMat &b) {
  if (a.empty() || b.empty()) return QMat(a.size(), QVec(b.empty() ? 0 : b[0].size(), 0));
  size_t n = a.size(), k = b.size(), m = b[0].size();
  QMat r(n, QVec(m, 0));
  for (size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  }
  return r;
}

QMat mat_sub(const QMat &a, const QMat &b) {
  assert(a.size() == b.size());
  QMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(QMat &m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    mpq_class inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

} // namespace

int rank(QMat m) { return (int)echelon(m).size(); }

QMat nullspace(const QMat &m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  QMat e = m;
  std::vector<int> pivots = echelon(e);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  QMat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat &a, const QVec &b) {
  size_t rows = a.size();
  assert(b.size() == rows);
  if (rows == 0) return QVec{};
  size_t cols = a[0].size();
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == (int)cols) return std::nullopt;
  QVec x(cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::optional<QMat> mat_inverse(const QMat &m) {
  size_t n = m.size();
  QMat aug(n, QVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    assert(m[i].size() == n);
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (pivots.size() != n || (!pivots.empty() && pivots.back() >= (int)n)) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

} // namespace sqk
