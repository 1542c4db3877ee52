#include "geom/semilinear.hpp"

#include <algorithm>
#include <cassert>

namespace sqk {

std::string rel_str(Rel r) {
  switch (r) {
  case Rel::Lt: return "<";
  case Rel::Le: return "<=";
  case Rel::Eq: return "=";
  case Rel::Ne: return "!=";
  case Rel::Gt: return ">";
  case Rel::Ge: return ">=";
  }
  return "?";
}

Rel rel_from_str(const std::string &s) {
  if (s == "<") return Rel::Lt;
  if (s == "<=") return Rel::Le;
  if (s == "=") return Rel::Eq;
  if (s == "!=") return Rel::Ne;
  if (s == ">") return Rel::Gt;
  if (s == ">=") return Rel::Ge;
  throw input_error("semilinear set: unknown relation '" + s + "'");
}

namespace {

int vec_cmp(const QVec &x, const QVec &y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Clear denominators and divide by the content; unique up to sign.
void prim_scale(QVec &a, mpq_class &b) {
  mpz_class l = 1;
  for (const auto &x : a) l = lcm(l, x.get_den());
  l = lcm(l, b.get_den());
  mpq_class lq(l);
  for (auto &x : a) x *= lq;
  b *= lq;
  mpz_class g = 0;
  for (const auto &x : a) g = gcd(g, x.get_num());
  g = gcd(g, b.get_num());
  if (g == 0) return;
  mpq_class gq(g);
  for (auto &x : a) x /= gq;
  b /= gq;
}

struct NormAtom {
  int tag = 0; // 0 atom, 1 constant-true, 2 constant-false
  LinConstraint atom;
};

NormAtom canonical_atom(LinConstraint t) {
  if (t.rel == Rel::Gt || t.rel == Rel::Ge) {
    for (auto &x : t.a) x = -x;
    t.b = -t.b;
    t.rel = t.rel == Rel::Gt ? Rel::Lt : Rel::Le;
  }
  if (is_zero(t.a)) {
    bool val = false;
    switch (t.rel) {
    case Rel::Lt: val = sgn(t.b) > 0; break;
    case Rel::Le: val = sgn(t.b) >= 0; break;
    case Rel::Eq: val = sgn(t.b) == 0; break;
    case Rel::Ne: val = sgn(t.b) != 0; break;
    default: break;
    }
    return {val ? 1 : 2, {}};
  }
  prim_scale(t.a, t.b);
  if (t.rel == Rel::Eq || t.rel == Rel::Ne) {
    for (const auto &x : t.a) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto &y : t.a) y = -y;
        t.b = -t.b;
      }
      break;
    }
  }
  return {0, t};
}

bool conj_less(const Conj &x, const Conj &y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), lc_less);
}

// ---- exact linear feasibility (equality substitution + Fourier-Motzkin) ----

enum class RK { Eq, Le, Lt };

struct Row {
  QVec a;
  mpq_class b;
  RK k = RK::Le;
};

Row row_of(const LinConstraint &c) {
  switch (c.rel) {
  case Rel::Lt: return {c.a, c.b, RK::Lt};
  case Rel::Le: return {c.a, c.b, RK::Le};
  case Rel::Eq: return {c.a, c.b, RK::Eq};
  default: break;
  }
  assert(false && "row_of needs a normalized atom");
  return {};
}

// True/false for rows with zero coefficients, nullopt otherwise.
std::optional<bool> const_eval(const Row &r) {
  if (!is_zero(r.a)) return std::nullopt;
  switch (r.k) {
  case RK::Eq: return sgn(r.b) == 0;
  case RK::Le: return sgn(r.b) >= 0;
  case RK::Lt: return sgn(r.b) > 0;
  }
  return std::nullopt;
}

// Drops constant-true rows; false on a constant contradiction.
bool sweep_constants(std::vector<Row> &rows) {
  std::vector<Row> out;
  for (auto &r : rows) {
    auto cv = const_eval(r);
    if (!cv) {
      out.push_back(std::move(r));
      continue;
    }
    if (!*cv) return false;
  }
  rows = std::move(out);
  return true;
}

// Sort and keep only the binding bound per coefficient vector.
void dedup_rows(std::vector<Row> &rows) {
  for (auto &r : rows) prim_scale(r.a, r.b);
  std::sort(rows.begin(), rows.end(), [](const Row &x, const Row &y) {
    int c = vec_cmp(x.a, y.a);
    if (c != 0) return c < 0;
    if (x.k != y.k) return (int)x.k < (int)y.k;
    return cmp(x.b, y.b) < 0;
  });
  std::vector<Row> out;
  size_t i = 0;
  while (i < rows.size()) {
    size_t j = i;
    while (j < rows.size() && vec_cmp(rows[j].a, rows[i].a) == 0) ++j;
    bool have_ineq = false;
    Row best;
    for (size_t t = i; t < j; ++t) {
      const Row &r = rows[t];
      if (r.k == RK::Eq) {
        if (out.empty() || out.back().k != RK::Eq || vec_cmp(out.back().a, r.a) != 0 ||
            out.back().b != r.b)
          out.push_back(r);
        continue;
      }
      if (!have_ineq) {
        best = r;
        have_ineq = true;
        continue;
      }
      int c = cmp(r.b, best.b);
      if (c < 0 || (c == 0 && r.k == RK::Lt)) best = r;
    }
    if (have_ineq) out.push_back(best);
    i = j;
  }
  rows = std::move(out);
}

// Eliminates the last of m variables from an inequality system (equality rows
// may appear only with zero last coefficient). nullopt = infeasible.
std::optional<std::vector<Row>> fm_eliminate_last(const std::vector<Row> &rows, int m) {
  std::vector<Row> rest, pos, neg;
  for (const auto &r : rows) {
    assert((int)r.a.size() == m);
    if (r.a[m - 1] == 0) {
      Row t = r;
      t.a.pop_back();
      rest.push_back(std::move(t));
      continue;
    }
    assert(r.k != RK::Eq && "equality rows are substituted before elimination");
    (sgn(r.a[m - 1]) > 0 ? pos : neg).push_back(r);
  }
  for (const auto &u : pos) {
    for (const auto &l : neg) {
      const mpq_class &um = u.a[m - 1];
      mpq_class nl = -l.a[m - 1];
      Row c;
      c.a.resize(m - 1);
      for (int i = 0; i < m - 1; ++i) c.a[i] = um * l.a[i] + nl * u.a[i];
      c.b = um * l.b + nl * u.b;
      c.k = (u.k == RK::Lt || l.k == RK::Lt) ? RK::Lt : RK::Le;
      rest.push_back(std::move(c));
    }
  }
  if (!sweep_constants(rest)) return std::nullopt;
  dedup_rows(rest);
  return rest;
}

// Witness of a solvable Eq/Le/Lt system, or nullopt.
std::optional<QVec> fm_witness(int dim, const std::vector<Row> &in_rows) {
  QMat eq_a;
  QVec eq_b;
  std::vector<Row> ineq;
  for (const auto &r : in_rows) {
    assert((int)r.a.size() == dim);
    if (r.k == RK::Eq) {
      eq_a.push_back(r.a);
      eq_b.push_back(r.b);
    } else {
      ineq.push_back(r);
    }
  }
  QVec x0(dim, 0);
  QMat basis;
  if (!eq_a.empty()) {
    auto sol = solve(eq_a, eq_b);
    if (!sol) return std::nullopt;
    x0 = *sol;
    basis = nullspace(eq_a);
  } else {
    basis = qmat_identity(dim);
  }
  int f = (int)basis.size();
  std::vector<Row> cur;
  for (const auto &r : ineq) {
    Row nr;
    nr.a.resize(f);
    for (int i = 0; i < f; ++i) nr.a[i] = dot(r.a, basis[i]);
    nr.b = r.b - dot(r.a, x0);
    nr.k = r.k;
    cur.push_back(std::move(nr));
  }
  if (!sweep_constants(cur)) return std::nullopt;
  dedup_rows(cur);
  std::vector<std::vector<Row>> stack;
  for (int m = f; m >= 1; --m) {
    stack.push_back(cur);
    auto next = fm_eliminate_last(cur, m);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  QVec t;
  for (int k = 1; k <= f; ++k) {
    const auto &sys = stack[f - k];
    bool have_lo = false, have_hi = false, lo_strict = false, hi_strict = false;
    mpq_class lo, hi;
    for (const auto &r : sys) {
      const mpq_class &am = r.a[k - 1];
      if (am == 0) continue;
      mpq_class rest = r.b;
      for (int j = 0; j + 1 < k; ++j) rest -= r.a[j] * t[j];
      mpq_class v = rest / am;
      if (sgn(am) > 0) {
        if (!have_hi || cmp(v, hi) < 0 || (cmp(v, hi) == 0 && r.k == RK::Lt)) {
          hi = v;
          hi_strict = r.k == RK::Lt;
        }
        have_hi = true;
      } else {
        if (!have_lo || cmp(v, lo) > 0 || (cmp(v, lo) == 0 && r.k == RK::Lt)) {
          lo = v;
          lo_strict = r.k == RK::Lt;
        }
        have_lo = true;
      }
    }
    mpq_class val = 0;
    if (have_lo && have_hi) {
      int c = cmp(lo, hi);
      if (c > 0 || (c == 0 && (lo_strict || hi_strict)))
        throw input_error("feasibility: inconsistent bounds after elimination");
      val = c == 0 ? lo : mpq_class((lo + hi) / 2);
    } else if (have_lo) {
      val = lo + 1;
    } else if (have_hi) {
      val = hi - 1;
    }
    t.push_back(val);
  }
  QVec x = x0;
  for (int i = 0; i < f; ++i) x = add(x, scale(t[i], basis[i]));
  return x;
}

// Projects out the variables in `drop` (equality substitution first, then
// Fourier-Motzkin). Kept variables keep their relative order. nullopt when a
// contradiction surfaces during elimination.
std::optional<std::vector<Row>> fm_project(int dim, std::vector<Row> rows,
                                           const std::vector<int> &drop) {
  std::vector<char> is_drop(dim, 0);
  for (int d : drop) {
    assert(d >= 0 && d < dim);
    is_drop[d] = 1;
  }
  std::vector<int> perm;
  for (int i = 0; i < dim; ++i)
    if (!is_drop[i]) perm.push_back(i);
  int target = (int)perm.size();
  for (int i = 0; i < dim; ++i)
    if (is_drop[i]) perm.push_back(i);
  for (auto &r : rows) {
    assert((int)r.a.size() == dim);
    QVec na(dim);
    for (int i = 0; i < dim; ++i) na[i] = r.a[perm[i]];
    r.a = std::move(na);
  }
  if (!sweep_constants(rows)) return std::nullopt;
  int m = dim;
  while (m > target) {
    int piv = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].k == RK::Eq && rows[i].a[m - 1] != 0) {
        piv = (int)i;
        break;
      }
    }
    if (piv >= 0) {
      Row p = rows[piv];
      rows.erase(rows.begin() + piv);
      for (auto &r : rows) {
        if (r.a[m - 1] == 0) continue;
        mpq_class f = r.a[m - 1] / p.a[m - 1];
        for (int j = 0; j < m; ++j) r.a[j] -= f * p.a[j];
        r.b -= f * p.b;
      }
      for (auto &r : rows) r.a.pop_back();
      if (!sweep_constants(rows)) return std::nullopt;
      --m;
      continue;
    }
    auto next = fm_eliminate_last(rows, m);
    if (!next) return std::nullopt;
    rows = std::move(*next);
    --m;
  }
  dedup_rows(rows);
  return rows;
}

// Ne-free conjunction -> rows; nullopt on a constant-false atom.
std::optional<std::vector<Row>> rows_of_conj(const Conj &c) {
  std::vector<Row> rows;
  for (const auto &atom : c) {
    NormAtom na = canonical_atom(atom);
    if (na.tag == 1) continue;
    if (na.tag == 2) return std::nullopt;
    assert(na.atom.rel != Rel::Ne && "split_ne before building rows");
    rows.push_back(row_of(na.atom));
  }
  return rows;
}

LinConstraint atom_of_row(const Row &r) {
  Rel rel = r.k == RK::Eq ? Rel::Eq : (r.k == RK::Lt ? Rel::Lt : Rel::Le);
  return {r.a, r.b, rel};
}

} // namespace

bool lc_less(const LinConstraint &x, const LinConstraint &y) {
  if (x.rel != y.rel) return (int)x.rel < (int)y.rel;
  int c = vec_cmp(x.a, y.a);
  if (c != 0) return c < 0;
  return cmp(x.b, y.b) < 0;
}

SemilinearSet sl_empty(int dim) { return SemilinearSet{dim, {}}; }

SemilinearSet sl_space(int dim) { return SemilinearSet{dim, {Conj{}}}; }

std::vector<Conj> split_ne(const Conj &c) {
  Conj rest;
  std::vector<LinConstraint> nes;
  for (const auto &atom : c) {
    NormAtom na = canonical_atom(atom);
    if (na.tag == 1) continue;
    if (na.tag == 2) return {};
    (na.atom.rel == Rel::Ne ? nes : rest).push_back(na.atom);
  }
  if (nes.size() > 12) throw input_error("semilinear set: too many disequalities in one conjunction");
  std::vector<Conj> out;
  for (size_t mask = 0; mask < (size_t{1} << nes.size()); ++mask) {
    Conj branch = rest;
    for (size_t i = 0; i < nes.size(); ++i) {
      LinConstraint lc = nes[i];
      lc.rel = Rel::Lt;
      if (mask & (size_t{1} << i)) {
        for (auto &x : lc.a) x = -x;
        lc.b = -lc.b;
      }
      branch.push_back(lc);
    }
    out.push_back(std::move(branch));
  }
  return out;
}

bool conj_feasible(int dim, const Conj &c) { return conj_witness(dim, c).has_value(); }

std::optional<QVec> conj_witness(int dim, const Conj &c) {
  for (const auto &branch : split_ne(c)) {
    auto rows = rows_of_conj(branch);
    if (!rows) continue;
    auto w = fm_witness(dim, *rows);
    if (w) return w;
  }
  return std::nullopt;
}

SemilinearSet canonicalize(const SemilinearSet &X) {
  SemilinearSet out;
  out.dim = X.dim;
  for (const auto &c : X.dnf) {
    Conj atoms;
    bool dead = false;
    for (const auto &atom : c) {
      assert((int)atom.a.size() == X.dim);
      NormAtom na = canonical_atom(atom);
      if (na.tag == 1) continue;
      if (na.tag == 2) {
        dead = true;
        break;
      }
      atoms.push_back(na.atom);
    }
    if (dead) continue;
    std::sort(atoms.begin(), atoms.end(), lc_less);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (atoms.empty()) return sl_space(X.dim);
    if (!conj_feasible(X.dim, atoms)) continue;
    out.dnf.push_back(std::move(atoms));
  }
  std::sort(out.dnf.begin(), out.dnf.end(), conj_less);
  out.dnf.erase(std::unique(out.dnf.begin(), out.dnf.end()), out.dnf.end());
  return out;
}

bool conj_holds(const Conj &c, const QVec &p) {
  for (const auto &atom : c) {
    mpq_class v = dot(atom.a, p);
    int s = cmp(v, atom.b);
    bool ok = false;
    switch (atom.rel) {
    case Rel::Lt: ok = s < 0; break;
    case Rel::Le: ok = s <= 0; break;
    case Rel::Eq: ok = s == 0; break;
    case Rel::Ne: ok = s != 0; break;
    case Rel::Gt: ok = s > 0; break;
    case Rel::Ge: ok = s >= 0; break;
    }
    if (!ok) return false;
  }
  return true;
}

bool contains_point(const SemilinearSet &X, const QVec &p) {
  assert((int)p.size() == X.dim);
  for (const auto &c : X.dnf)
    if (conj_holds(c, p)) return true;
  return false;
}

SemilinearSet sl_union(const SemilinearSet &X, const SemilinearSet &Y) {
  if (X.dim != Y.dim) throw input_error("semilinear union: dimension mismatch");
  SemilinearSet out;
  out.dim = X.dim;
  out.dnf = X.dnf;
  out.dnf.insert(out.dnf.end(), Y.dnf.begin(), Y.dnf.end());
  return canonicalize(out);
}

SemilinearSet sl_intersection(const SemilinearSet &X, const SemilinearSet &Y) {
  if (X.dim != Y.dim) throw input_error("semilinear intersection: dimension mismatch");
  SemilinearSet out;
  out.dim = X.dim;
  for (const auto &cx : X.dnf) {
    for (const auto &cy : Y.dnf) {
      Conj c = cx;
      c.insert(c.end(), cy.begin(), cy.end());
      out.dnf.push_back(std::move(c));
    }
  }
  return canonicalize(out);
}

namespace {

LinConstraint negate_atom(const LinConstraint &atom) {
  LinConstraint n = atom;
  switch (atom.rel) {
  case Rel::Lt: n.rel = Rel::Ge; break;
  case Rel::Le: n.rel = Rel::Gt; break;
  case Rel::Eq: n.rel = Rel::Ne; break;
  case Rel::Ne: n.rel = Rel::Eq; break;
  case Rel::Gt: n.rel = Rel::Le; break;
  case Rel::Ge: n.rel = Rel::Lt; break;
  }
  return n;
}

} // namespace

SemilinearSet sl_complement(const SemilinearSet &X) {
  SemilinearSet cx = canonicalize(X);
  SemilinearSet acc = sl_space(X.dim);
  for (const auto &c : cx.dnf) {
    SemilinearSet next;
    next.dim = X.dim;
    for (const auto &s : acc.dnf) {
      for (const auto &atom : c) {
        Conj merged = s;
        merged.push_back(negate_atom(atom));
        next.dnf.push_back(std::move(merged));
      }
    }
    acc = canonicalize(next);
    if (acc.dnf.empty()) break;
  }
  return acc;
}

SemilinearSet sl_difference(const SemilinearSet &X, const SemilinearSet &Y) {
  if (X.dim != Y.dim) throw input_error("semilinear difference: dimension mismatch");
  return sl_intersection(X, sl_complement(Y));
}

namespace {

// Pad a constraint into a larger ambient space at the given coordinate offset.
LinConstraint pad_atom(const LinConstraint &atom, int offset, int total) {
  LinConstraint p;
  p.a = QVec(total, 0);
  for (size_t i = 0; i < atom.a.size(); ++i) p.a[offset + i] = atom.a[i];
  p.b = atom.b;
  p.rel = atom.rel;
  return p;
}

LinConstraint coord_eq(int idx, const mpq_class &val, int total) {
  LinConstraint c;
  c.a = QVec(total, 0);
  c.a[idx] = 1;
  c.b = val;
  c.rel = Rel::Eq;
  return c;
}

} // namespace

SemilinearSet sl_product(const SemilinearSet &X, const SemilinearSet &Y) {
  int total = X.dim + Y.dim;
  SemilinearSet out;
  out.dim = total;
  for (const auto &cx : X.dnf) {
    for (const auto &cy : Y.dnf) {
      Conj c;
      for (const auto &atom : cx) c.push_back(pad_atom(atom, 0, total));
      for (const auto &atom : cy) c.push_back(pad_atom(atom, X.dim, total));
      out.dnf.push_back(std::move(c));
    }
  }
  return canonicalize(out);
}

SemilinearSet sl_coproduct(const SemilinearSet &X, const SemilinearSet &Y) {
  int total = X.dim + Y.dim + 1;
  SemilinearSet out;
  out.dim = total;
  for (const auto &cx : X.dnf) {
    Conj c;
    for (const auto &atom : cx) c.push_back(pad_atom(atom, 0, total));
    for (int j = 0; j < Y.dim; ++j) c.push_back(coord_eq(X.dim + j, 0, total));
    c.push_back(coord_eq(total - 1, 0, total));
    out.dnf.push_back(std::move(c));
  }
  for (const auto &cy : Y.dnf) {
    Conj c;
    for (int i = 0; i < X.dim; ++i) c.push_back(coord_eq(i, 0, total));
    for (const auto &atom : cy) c.push_back(pad_atom(atom, X.dim, total));
    c.push_back(coord_eq(total - 1, 1, total));
    out.dnf.push_back(std::move(c));
  }
  return canonicalize(out);
}

bool sl_is_empty(const SemilinearSet &X) {
  for (const auto &c : X.dnf)
    if (conj_feasible(X.dim, c)) return false;
  return true;
}

std::vector<Conj> conj_affine_image(int dim, const Conj &c, const QMat &mat, const QVec &off) {
  int out_dim = (int)mat.size();
  assert((int)off.size() == out_dim);
  int total = dim + out_dim;
  std::vector<int> drop;
  for (int i = 0; i < dim; ++i) drop.push_back(i);
  std::vector<Conj> result;
  for (const auto &branch : split_ne(c)) {
    auto base = rows_of_conj(branch);
    if (!base) continue;
    std::vector<Row> rows;
    for (const auto &r : *base) {
      Row er;
      er.a = r.a;
      er.a.resize(total, 0);
      er.b = r.b;
      er.k = r.k;
      rows.push_back(std::move(er));
    }
    for (int i = 0; i < out_dim; ++i) {
      assert((int)mat[i].size() == dim);
      Row er;
      er.a = QVec(total, 0);
      for (int j = 0; j < dim; ++j) er.a[j] = -mat[i][j];
      er.a[dim + i] = 1;
      er.b = off[i];
      er.k = RK::Eq;
      rows.push_back(std::move(er));
    }
    auto proj = fm_project(total, std::move(rows), drop);
    if (!proj) continue;
    Conj out;
    for (const auto &r : *proj) out.push_back(atom_of_row(r));
    result.push_back(std::move(out));
  }
  return result;
}

SemilinearSet sl_affine_image(const SemilinearSet &X, const QMat &mat, const QVec &off) {
  SemilinearSet out;
  out.dim = (int)mat.size();
  for (const auto &c : X.dnf) {
    auto imgs = conj_affine_image(X.dim, c, mat, off);
    out.dnf.insert(out.dnf.end(), imgs.begin(), imgs.end());
  }
  return canonicalize(out);
}

Conj conj_affine_preimage(const Conj &c, const QMat &mat, const QVec &off) {
  int in_dim = mat.empty() ? 0 : (int)mat[0].size();
  Conj out;
  for (const auto &atom : c) {
    assert(atom.a.size() == mat.size());
    LinConstraint p;
    p.a = QVec(in_dim, 0);
    for (size_t i = 0; i < mat.size(); ++i)
      for (int j = 0; j < in_dim; ++j) p.a[j] += atom.a[i] * mat[i][j];
    p.b = atom.b - dot(atom.a, off);
    p.rel = atom.rel;
    out.push_back(std::move(p));
  }
  return out;
}

SemilinearSet sl_affine_preimage(const SemilinearSet &Y, int domain_dim, const QMat &mat,
                                 const QVec &off) {
  SemilinearSet out;
  out.dim = domain_dim;
  for (const auto &c : Y.dnf) out.dnf.push_back(conj_affine_preimage(c, mat, off));
  return canonicalize(out);
}

SemilinearSet SemilinearSet::from_json(const json &j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("dnf"))
    throw input_error("semilinear set: expected an object with dim and dnf");
  if (!j["dim"].is_number_integer())
    throw input_error("semilinear set: dim must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1) throw input_error("semilinear set: ambient dimension must be at least 1");
  if (!j["dnf"].is_array()) throw input_error("semilinear set: dnf must be an array");
  SemilinearSet X;
  X.dim = dim;
  for (const auto &cj : j["dnf"]) {
    if (!cj.is_array()) throw input_error("semilinear set: each dnf entry is a constraint list");
    Conj c;
    for (const auto &aj : cj) {
      if (!aj.is_object() || !aj.contains("a") || !aj.contains("b") || !aj.contains("rel"))
        throw input_error("semilinear set: constraint needs a, b, rel");
      if (!aj["rel"].is_string())
        throw input_error("semilinear set: rel must be a string");
      LinConstraint lc;
      lc.a = rat_vec_from_json(aj["a"]);
      if ((int)lc.a.size() != dim)
        throw input_error("semilinear set: coefficient vector length differs from dim");
      lc.b = rat_from_json(aj["b"]);
      lc.rel = rel_from_str(aj["rel"].get<std::string>());
      c.push_back(std::move(lc));
    }
    X.dnf.push_back(std::move(c));
  }
  return canonicalize(X);
}

json SemilinearSet::to_json() const {
  json out_dnf = json::array();
  for (const auto &c : dnf) {
    json cj = json::array();
    for (const auto &atom : c) {
      cj.push_back({{"a", rat_vec_to_json(atom.a)},
                    {"b", rat_to_json(atom.b)},
                    {"rel", rel_str(atom.rel)}});
    }
    out_dnf.push_back(cj);
  }
  return {{"dim", dim}, {"dnf", out_dnf}};
}

} // namespace sqk
