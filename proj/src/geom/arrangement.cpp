#include "geom/arrangement.hpp"

#include <algorithm>
#include <cassert>

namespace sqk {

namespace {

int vec_cmp(const QVec &x, const QVec &y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

void prim_scale_hp(QVec &a, mpq_class &b) {
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

LinConstraint sign_atom(const Hyperplane &h, int8_t s) {
  LinConstraint c;
  c.a = h.a;
  c.b = h.b;
  c.rel = s == 0 ? Rel::Eq : (s > 0 ? Rel::Gt : Rel::Lt);
  return c;
}

} // namespace

Hyperplane canonical_hyperplane(QVec a, mpq_class b) {
  assert(!is_zero(a));
  prim_scale_hp(a, b);
  for (const auto &x : a) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto &y : a) y = -y;
      b = -b;
    }
    break;
  }
  return {std::move(a), std::move(b)};
}

bool hp_less(const Hyperplane &x, const Hyperplane &y) {
  int c = vec_cmp(x.a, y.a);
  if (c != 0) return c < 0;
  return cmp(x.b, y.b) < 0;
}

std::vector<Hyperplane> hyperplanes_of(const SemilinearSet &X) {
  SemilinearSet cx = canonicalize(X);
  std::vector<Hyperplane> out;
  for (const auto &c : cx.dnf)
    for (const auto &atom : c) out.push_back(canonical_hyperplane(atom.a, atom.b));
  std::sort(out.begin(), out.end(), hp_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Arrangement::closure_leq(int lo, int hi) const {
  const auto &l = faces[lo].sign;
  const auto &h = faces[hi].sign;
  for (size_t i = 0; i < planes.size(); ++i)
    if (l[i] != 0 && l[i] != h[i]) return false;
  return true;
}

Conj Arrangement::face_conj(int f) const {
  Conj c;
  for (size_t i = 0; i < planes.size(); ++i) c.push_back(sign_atom(planes[i], faces[f].sign[i]));
  return c;
}

Arrangement arrangement_of(const std::vector<SemilinearSet> &sets,
                           const std::vector<Hyperplane> &extra, const GeomLimits &lim) {
  int dim = -1;
  std::vector<Hyperplane> planes = extra;
  for (const auto &s : sets) {
    if (dim < 0) dim = s.dim;
    if (s.dim != dim) throw input_error("cell decomposition: ambient dimension mismatch");
    auto hp = hyperplanes_of(s);
    planes.insert(planes.end(), hp.begin(), hp.end());
  }
  if (dim < 0 && !extra.empty()) dim = (int)extra[0].a.size();
  if (dim < 1) throw input_error("cell decomposition: no input sets");
  if (dim > lim.max_dim) throw input_error("cell decomposition: ambient dimension exceeds cap");
  for (auto &h : planes) {
    if ((int)h.a.size() != dim) throw input_error("cell decomposition: hyperplane dimension mismatch");
    h = canonical_hyperplane(h.a, h.b);
  }
  std::sort(planes.begin(), planes.end(), hp_less);
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  if (planes.size() > (size_t)lim.max_constraints)
    throw input_error("cell decomposition: constraint count exceeds cap");

  Arrangement arr;
  arr.dim = dim;
  arr.planes = planes;
  arr.faces.push_back(Face{{}, dim, QVec(dim, 0)});

  std::vector<Hyperplane> done;
  for (const auto &h : planes) {
    std::vector<Face> next;
    for (const auto &f : arr.faces) {
      Conj base;
      for (size_t i = 0; i < done.size(); ++i) base.push_back(sign_atom(done[i], f.sign[i]));
      auto with = [&](Rel rel) {
        Conj c = base;
        c.push_back(LinConstraint{h.a, h.b, rel});
        return conj_witness(dim, c);
      };
      auto child = [&](int8_t s, int d, QVec w) {
        Face nf;
        nf.sign = f.sign;
        nf.sign.push_back(s);
        nf.dim = d;
        nf.witness = std::move(w);
        next.push_back(std::move(nf));
      };
      mpq_class v = dot(h.a, f.witness) - h.b;
      int sv = sgn(v);
      if (sv != 0) {
        auto on = with(Rel::Eq);
        if (!on) {
          child((int8_t)sv, f.dim, f.witness);
          continue;
        }
        // the face is relatively open, so touching the plane forces both sides
        auto far = with(sv > 0 ? Rel::Lt : Rel::Gt);
        if (!far) throw input_error("cell decomposition: face split lost a side");
        child(0, f.dim - 1, *on);
        child((int8_t)sv, f.dim, f.witness);
        child((int8_t)(-sv), f.dim, *far);
      } else {
        auto below = with(Rel::Lt);
        if (!below) {
          child(0, f.dim, f.witness); // entire face inside the hyperplane
          continue;
        }
        auto above = with(Rel::Gt);
        if (!above) throw input_error("cell decomposition: face split lost a side");
        child(0, f.dim - 1, f.witness);
        child(-1, f.dim, *below);
        child(1, f.dim, *above);
      }
    }
    arr.faces = std::move(next);
    done.push_back(h);
  }
  std::sort(arr.faces.begin(), arr.faces.end(),
            [](const Face &x, const Face &y) { return x.sign < y.sign; });
  return arr;
}

std::vector<char> member_flags(const Arrangement &arr, const SemilinearSet &X) {
  if (X.dim != arr.dim) throw input_error("membership: ambient dimension mismatch");
  SemilinearSet cx = canonicalize(X);
  for (const auto &h : hyperplanes_of(cx)) {
    auto it = std::lower_bound(arr.planes.begin(), arr.planes.end(), h, hp_less);
    if (it == arr.planes.end() || !(*it == h))
      throw input_error("membership: arrangement not adapted to the set");
  }
  std::vector<char> in(arr.faces.size(), 0);
  for (size_t f = 0; f < arr.faces.size(); ++f)
    in[f] = contains_point(cx, arr.faces[f].witness) ? 1 : 0;
  return in;
}

CellComplex cell_decomposition(const std::vector<SemilinearSet> &sets, const GeomLimits &lim) {
  CellComplex cc;
  cc.arr = arrangement_of(sets, {}, lim);
  for (const auto &s : sets) cc.in_sets.push_back(member_flags(cc.arr, s));
  return cc;
}

int flags_dimension(const Arrangement &arr, const std::vector<char> &in) {
  int d = -1;
  for (size_t f = 0; f < arr.faces.size(); ++f)
    if (in[f]) d = std::max(d, arr.faces[f].dim);
  return d;
}

int flags_euler(const Arrangement &arr, const std::vector<char> &in) {
  int chi = 0;
  for (size_t f = 0; f < arr.faces.size(); ++f)
    if (in[f]) chi += (arr.faces[f].dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<char> closure_flags(const Arrangement &arr, const std::vector<char> &in) {
  std::vector<char> out(in.size(), 0);
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    if (out[f]) continue;
    for (size_t g = 0; g < arr.faces.size(); ++g) {
      if (!in[g]) continue;
      if (arr.closure_leq((int)f, (int)g)) {
        out[f] = 1;
        break;
      }
    }
  }
  return out;
}

bool flags_closed(const Arrangement &arr, const std::vector<char> &in) {
  return closure_flags(arr, in) == in;
}

SemilinearSet set_of_flags(const Arrangement &arr, const std::vector<char> &in) {
  SemilinearSet out;
  out.dim = arr.dim;
  for (size_t f = 0; f < arr.faces.size(); ++f)
    if (in[f]) out.dnf.push_back(arr.face_conj((int)f));
  return canonicalize(out);
}

int dimension(const SemilinearSet &X, const GeomLimits &lim) {
  auto cc = cell_decomposition({X}, lim);
  return flags_dimension(cc.arr, cc.in_sets[0]);
}

int euler_char(const SemilinearSet &X, const GeomLimits &lim) {
  auto cc = cell_decomposition({X}, lim);
  return flags_euler(cc.arr, cc.in_sets[0]);
}

SemilinearSet closure(const SemilinearSet &X, const GeomLimits &lim) {
  auto cc = cell_decomposition({X}, lim);
  return set_of_flags(cc.arr, closure_flags(cc.arr, cc.in_sets[0]));
}

SemilinearSet frontier(const SemilinearSet &X, const GeomLimits &lim) {
  auto cc = cell_decomposition({X}, lim);
  auto cl = closure_flags(cc.arr, cc.in_sets[0]);
  for (size_t f = 0; f < cl.size(); ++f)
    if (cc.in_sets[0][f]) cl[f] = 0;
  return set_of_flags(cc.arr, cl);
}

bool is_locally_closed(const SemilinearSet &X, const GeomLimits &lim) {
  auto cc = cell_decomposition({X}, lim);
  auto cl = closure_flags(cc.arr, cc.in_sets[0]);
  for (size_t f = 0; f < cl.size(); ++f)
    if (cc.in_sets[0][f]) cl[f] = 0;
  return flags_closed(cc.arr, cl);
}

bool set_equal(const SemilinearSet &X, const SemilinearSet &Y, const GeomLimits &lim) {
  auto cc = cell_decomposition({X, Y}, lim);
  return cc.in_sets[0] == cc.in_sets[1];
}

bool subset_of(const SemilinearSet &X, const SemilinearSet &Y, const GeomLimits &lim) {
  auto cc = cell_decomposition({X, Y}, lim);
  for (size_t f = 0; f < cc.in_sets[0].size(); ++f)
    if (cc.in_sets[0][f] && !cc.in_sets[1][f]) return false;
  return true;
}

} // namespace sqk
