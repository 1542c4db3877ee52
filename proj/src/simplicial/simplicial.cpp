#include "simplicial/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace sqk {

namespace {

std::string poskey(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

// Distinguished squares bucketed by (top edge, left edge). Row enumeration
// walks left to right: each bucket entry fixes the next vertical and the
// horizontal of the row above.
struct SquareChoices {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_fh;

  explicit SquareChoices(const SquaresCategory &S) {
    for (const Square &s : S.distinguished) by_fh[{s.f, s.h}].push_back({s.j, s.g});
    for (auto &kv : by_fh) {
      std::sort(kv.second.begin(), kv.second.end());
      kv.second.erase(std::unique(kv.second.begin(), kv.second.end()),
                      kv.second.end());
    }
  }

  const std::vector<std::pair<int, int>> &at(int f, int h) const {
    static const std::vector<std::pair<int, int>> none;
    auto it = by_fh.find({f, h});
    return it == by_fh.end() ? none : it->second;
  }
};

json sq_names(const FinCategory &C, const Square &s) {
  return json{C.mor_id(s.f), C.mor_id(s.h), C.mor_id(s.j), C.mor_id(s.g)};
}

// First structural problem, null when the shape is coherent. Split out so the
// later class/square passes can index freely.
json staircase_shape_problem(const SquaresCategory &S,
                             const StaircaseDiagram &d) {
  const FinCategory &C = S.cat;
  int n = d.n;
  auto problem = [](const std::string &what, json extra = json::object()) {
    extra["problem"] = what;
    return extra;
  };
  if (n < 0) return problem("negative degree");
  if (static_cast<int>(d.grid.size()) != n + 1 ||
      static_cast<int>(d.row_h.size()) != n + 1 ||
      static_cast<int>(d.up_v.size()) != n + 1)
    return problem("row count mismatch");
  for (int i = 0; i <= n; ++i) {
    if (static_cast<int>(d.grid[i].size()) != n - i + 1)
      return problem("grid row size", {{"row", i}});
    if (static_cast<int>(d.row_h[i].size()) != n - i)
      return problem("horizontal row size", {{"row", i}});
    int want_v = i == 0 ? (d.with_top() ? n + 1 : 0) : n - i + 1;
    if (static_cast<int>(d.up_v[i].size()) != want_v)
      return problem("vertical row size", {{"row", i}});
  }
  if (d.with_top()) {
    if (static_cast<int>(d.top.size()) != n + 1 ||
        static_cast<int>(d.top_h.size()) != n)
      return problem("top row size");
  } else if (!d.top.empty() || !d.top_h.empty()) {
    return problem("top row present on an S-variant diagram");
  }

  auto obj_ok = [&](int o) { return o >= 0 && o < C.n_objects(); };
  auto mor_ok = [&](int m) { return m >= 0 && m < C.n_morphisms(); };
  for (int i = 0; i <= n; ++i) {
    for (int x : d.grid[i])
      if (!obj_ok(x)) return problem("entry index out of range", {{"row", i}});
    for (int m : d.row_h[i])
      if (!mor_ok(m)) return problem("horizontal index out of range", {{"row", i}});
    for (int m : d.up_v[i])
      if (!mor_ok(m)) return problem("vertical index out of range", {{"row", i}});
  }
  for (int x : d.top)
    if (!obj_ok(x)) return problem("top entry index out of range");
  for (int m : d.top_h)
    if (!mor_ok(m)) return problem("top horizontal index out of range");

  for (int i = 0; i <= n; ++i)
    if (d.grid[i][0] != S.O)
      return problem("diagonal entry is not the basepoint", {{"row", i}});

  int top_row = d.with_top() ? -1 : 0;
  for (int i = top_row; i <= n; ++i)
    for (int j = std::max(i, 0); j < n; ++j) {
      int m = d.hor(i, j);
      if (C.src(m) != d.obj(i, j) || C.dst(m) != d.obj(i, j + 1))
        return problem("horizontal endpoints", {{"row", i}, {"col", j}});
    }
  for (int i = d.with_top() ? 0 : 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      int m = d.ver(i, j);
      if (C.src(m) != d.obj(i, j) || C.dst(m) != d.obj(i - 1, j))
        return problem("vertical endpoints", {{"row", i}, {"col", j}});
    }
  return json();
}

}  // namespace

const char *variant_str(Variant v) {
  return v == Variant::Tplus ? "T+" : "S";
}

int StaircaseDiagram::obj(int i, int j) const {
  return i < 0 ? top[j] : grid[i][j - i];
}
int StaircaseDiagram::hor(int i, int j) const {
  return i < 0 ? top_h[j] : row_h[i][j - i];
}
int StaircaseDiagram::ver(int i, int j) const { return up_v[i][j - i]; }

json StaircaseDiagram::to_json(const FinCategory &C) const {
  json entries = json::object(), horiz = json::object(), vert = json::object();
  if (with_top()) {
    for (int j = 0; j <= n; ++j) entries[poskey(-1, j)] = C.obj_id(top[j]);
    for (int j = 0; j < n; ++j) horiz[poskey(-1, j)] = C.mor_id(top_h[j]);
    for (int j = 0; j <= n; ++j) vert[poskey(0, j)] = C.mor_id(up_v[0][j]);
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) entries[poskey(i, j)] = C.obj_id(grid[i][j - i]);
    for (int j = i; j < n; ++j) horiz[poskey(i, j)] = C.mor_id(row_h[i][j - i]);
    if (i >= 1)
      for (int j = i; j <= n; ++j) vert[poskey(i, j)] = C.mor_id(up_v[i][j - i]);
  }
  return {{"n", n},
          {"variant", variant_str(variant)},
          {"entries", entries},
          {"horiz", horiz},
          {"vert", vert}};
}

int chain_composite(const FinCategory &C, const ChainObject &c, int i, int j) {
  if (i < 0 || j > c.degree() || i > j)
    throw input_error("chain segment out of range");
  int acc = C.identity(c.objects[i]);
  for (int k = i; k < j; ++k) {
    acc = C.compose(c.maps[k], acc);
    if (acc < 0) return -1;
  }
  return acc;
}

Report validate_chain(const SquaresCategory &S, const ChainObject &c) {
  Report rep;
  const FinCategory &C = S.cat;
  bool shape = !c.objects.empty() && c.maps.size() + 1 == c.objects.size();
  for (int x : c.objects)
    shape = shape && x >= 0 && x < C.n_objects();
  for (int m : c.maps)
    shape = shape && m >= 0 && m < C.n_morphisms();
  for (size_t k = 0; shape && k < c.maps.size(); ++k)
    shape = C.src(c.maps[k]) == c.objects[k] &&
            C.dst(c.maps[k]) == c.objects[k + 1];
  rep.require("chain-shape", shape);
  if (!shape) return rep;
  bool cls = true;
  json bad;
  for (int m : c.maps)
    if (!S.inM[m]) {
      cls = false;
      bad = {{"morphism", C.mor_id(m)}};
      break;
    }
  rep.require("chain-classes", cls, bad);
  return rep;
}

Report validate_chain_morphism(const SquaresCategory &S, const ChainMorphism &m) {
  Report rep;
  const FinCategory &C = S.cat;
  bool ends = validate_chain(S, m.src).all_passed() &&
              validate_chain(S, m.dst).all_passed();
  rep.require("endpoint-chains", ends);
  if (!ends) return rep;

  int n = m.src.degree();
  bool shape = m.dst.degree() == n && static_cast<int>(m.comp.size()) == n + 1;
  for (int e : m.comp)
    shape = shape && e >= 0 && e < C.n_morphisms();
  for (int k = 0; shape && k <= n; ++k)
    shape = C.src(m.comp[k]) == m.src.objects[k] &&
            C.dst(m.comp[k]) == m.dst.objects[k];
  rep.require("morphism-shape", shape);
  if (!shape) return rep;

  bool cls = true;
  json badc;
  for (int e : m.comp)
    if (!S.inE[e]) {
      cls = false;
      badc = {{"morphism", C.mor_id(e)}};
      break;
    }
  rep.require("components-in-E", cls, badc);

  // every naturality square, composite segments included
  bool nat = true;
  json badn;
  for (int i = 0; i < n && nat; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Square sq{chain_composite(C, m.src, i, j), m.comp[i], m.comp[j],
                chain_composite(C, m.dst, i, j)};
      if (sq.f < 0 || sq.g < 0 || !S.is_distinguished(sq)) {
        nat = false;
        badn = {{"i", i}, {"j", j}};
        if (sq.f >= 0 && sq.g >= 0) badn["square"] = sq_names(C, sq);
        break;
      }
    }
  rep.require("naturality-squares", nat, badn);
  return rep;
}

Report validate_staircase(const SquaresCategory &S, const StaircaseDiagram &d) {
  Report rep;
  const FinCategory &C = S.cat;
  json bad = staircase_shape_problem(S, d);
  rep.require("staircase-shape", bad.is_null(), bad);
  if (!bad.is_null()) return rep;

  bool cls = true;
  json badc;
  int top_row = d.with_top() ? -1 : 0;
  for (int i = top_row; i <= d.n && cls; ++i)
    for (int j = std::max(i, 0); j < d.n; ++j)
      if (!S.inM[d.hor(i, j)]) {
        cls = false;
        badc = {{"row", i}, {"col", j}, {"morphism", C.mor_id(d.hor(i, j))}};
        break;
      }
  for (int i = d.with_top() ? 0 : 1; i <= d.n && cls; ++i)
    for (int j = i; j <= d.n; ++j)
      if (!S.inE[d.ver(i, j)]) {
        cls = false;
        badc = {{"row", i}, {"col", j}, {"morphism", C.mor_id(d.ver(i, j))}};
        break;
      }
  rep.require("staircase-classes", cls, badc);

  // squares are indexed by lower row i and left column j; for a Tplus diagram
  // the pair (row 0, top) appears as i == 0
  bool all_ok = true;
  for (int i = d.with_top() ? 0 : 1; i <= d.n; ++i)
    for (int j = i; j < d.n; ++j) {
      Square sq{d.hor(i, j), d.ver(i, j), d.ver(i, j + 1), d.hor(i - 1, j)};
      if (!S.is_distinguished(sq)) {
        all_ok = false;
        rep.add(CheckItem::fail("staircase-squares",
                                {{"row", i}, {"col", j}, {"square", sq_names(C, sq)}}));
      }
    }
  if (all_ok) rep.add(CheckItem::pass("staircase-squares"));
  return rep;
}

Report validate_diag_morphism(const SquaresCategory &S, const DiagMorphism &m) {
  Report rep;
  const FinCategory &C = S.cat;
  bool ends = validate_staircase(S, m.src).all_passed() &&
              validate_staircase(S, m.dst).all_passed();
  rep.require("endpoint-staircases", ends);
  if (!ends) return rep;

  int n = m.src.n;
  bool shape = m.dst.n == n && m.src.variant == m.dst.variant &&
               static_cast<int>(m.comp.size()) == n + 1 &&
               static_cast<int>(m.top_c.size()) ==
                   (m.src.with_top() ? n + 1 : 0);
  for (int i = 0; i <= n && shape; ++i)
    shape = static_cast<int>(m.comp[i].size()) == n - i + 1;
  if (shape) {
    for (int e : m.top_c)
      shape = shape && e >= 0 && e < C.n_morphisms();
    for (const auto &row : m.comp)
      for (int e : row) shape = shape && e >= 0 && e < C.n_morphisms();
  }
  auto cmp = [&](int i, int j) { return i < 0 ? m.top_c[j] : m.comp[i][j - i]; };
  if (shape) {
    int top_row = m.src.with_top() ? -1 : 0;
    for (int i = top_row; i <= n && shape; ++i)
      for (int j = std::max(i, 0); j <= n; ++j) {
        if (i >= 0 && j < i) continue;
        int e = cmp(i, j);
        if (C.src(e) != m.src.obj(i, j) || C.dst(e) != m.dst.obj(i, j)) {
          shape = false;
          break;
        }
      }
  }
  rep.require("morphism-shape", shape);
  if (!shape) return rep;

  bool cls = true;
  json badc;
  int top_row = m.src.with_top() ? -1 : 0;
  for (int i = top_row; i <= n && cls; ++i)
    for (int j = std::max(i, 0); j <= n; ++j) {
      int e = cmp(i, j);
      if (!S.inE[e]) {
        cls = false;
        badc = {{"row", i}, {"col", j}, {"morphism", C.mor_id(e)}};
        break;
      }
    }
  rep.require("components-in-E", cls, badc);

  // naturality over the generating arrows: mixed squares must be
  // distinguished, vertical-only squares must commute
  bool mixed = true;
  json badm;
  for (int i = top_row; i <= n && mixed; ++i)
    for (int j = std::max(i, 0); j < n; ++j) {
      Square sq{m.src.hor(i, j), cmp(i, j), cmp(i, j + 1), m.dst.hor(i, j)};
      if (!S.is_distinguished(sq)) {
        mixed = false;
        badm = {{"row", i}, {"col", j}, {"square", sq_names(C, sq)}};
        break;
      }
    }
  rep.require("mixed-squares", mixed, badm);

  bool vert = true;
  json badv;
  for (int i = m.src.with_top() ? 0 : 1; i <= n && vert; ++i)
    for (int j = i; j <= n; ++j) {
      int lhs = C.compose(cmp(i - 1, j), m.src.ver(i, j));
      int rhs = C.compose(m.dst.ver(i, j), cmp(i, j));
      if (lhs < 0 || lhs != rhs) {
        vert = false;
        badv = {{"row", i}, {"col", j}};
        break;
      }
    }
  rep.require("vertical-squares", vert, badv);
  return rep;
}

std::vector<ChainObject> enumerate_chains(const SquaresCategory &S, int n) {
  if (n < 0) throw input_error("chain degree out of range: " + std::to_string(n));
  const FinCategory &C = S.cat;
  std::vector<ChainObject> out;
  ChainObject c;
  std::function<void()> grow = [&]() {
    if (c.degree() == n) {
      out.push_back(c);
      return;
    }
    for (int m : C.outof(c.objects.back())) {
      if (!S.inM[m]) continue;
      c.maps.push_back(m);
      c.objects.push_back(C.dst(m));
      grow();
      c.maps.pop_back();
      c.objects.pop_back();
    }
  };
  for (int x = 0; x < C.n_objects(); ++x) {
    c.objects = {x};
    c.maps.clear();
    grow();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChainMorphism> enumerate_chain_morphisms(const SquaresCategory &S,
                                                     const ChainObject &src) {
  if (!validate_chain(S, src).all_passed())
    throw input_error("enumerate_chain_morphisms: source is not an M-chain");
  const FinCategory &C = S.cat;
  SquareChoices choices(S);
  int n = src.degree();

  std::vector<ChainMorphism> out;
  ChainMorphism m;
  m.src = src;
  std::vector<int> dst_maps;
  std::function<void(int)> grow = [&](int k) {
    if (k == n) {
      m.dst.objects.clear();
      for (int e : m.comp) m.dst.objects.push_back(C.dst(e));
      m.dst.maps = dst_maps;
      if (validate_chain_morphism(S, m).all_passed()) out.push_back(m);
      return;
    }
    for (auto [jv, g] : choices.at(src.maps[k], m.comp[k])) {
      m.comp.push_back(jv);
      dst_maps.push_back(g);
      grow(k + 1);
      m.comp.pop_back();
      dst_maps.pop_back();
    }
  };
  for (int e : C.outof(src.objects[0])) {
    if (!S.inE[e]) continue;
    m.comp = {e};
    dst_maps.clear();
    grow(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StaircaseDiagram> enumerate_staircases(const SquaresCategory &S,
                                                   int n, Variant v) {
  if (n < 0 || n > 4)
    throw input_error("staircase degree out of range: " + std::to_string(n));
  const FinCategory &C = S.cat;
  SquareChoices choices(S);

  // maps out of the basepoint by class and target, usually singletons
  std::vector<std::vector<int>> e_from_o(C.n_objects()), m_from_o(C.n_objects());
  for (int x = 0; x < C.n_objects(); ++x)
    for (int m : C.hom(S.O, x)) {
      if (S.inE[m]) e_from_o[x].push_back(m);
      if (S.inM[m]) m_from_o[x].push_back(m);
    }

  std::vector<StaircaseDiagram> out;
  StaircaseDiagram d;
  d.n = n;
  d.variant = Variant::Ssquare;
  d.grid.assign(n + 1, {});
  d.row_h.assign(n + 1, {});
  d.up_v.assign(n + 1, {});
  d.grid[n] = {S.O};

  std::function<void(int)> start_row;
  std::function<void(int, int)> grow;
  std::function<void(int)> grow_top;

  auto done_rows = [&]() {
    if (v == Variant::Ssquare) {
      out.push_back(d);
      return;
    }
    // top extension: a free E-map out of the basepoint, then square choices
    for (int x = 0; x < C.n_objects(); ++x)
      for (int e : e_from_o[x]) {
        d.top = {x};
        d.top_h.clear();
        d.up_v[0] = {e};
        grow_top(0);
      }
    d.top.clear();
    d.top_h.clear();
    d.up_v[0].clear();
  };

  // row r+1 is complete; rows below are complete; choose row r together with
  // the verticals out of row r+1
  start_row = [&](int r) {
    for (int x = 0; x < C.n_objects(); ++x)
      for (int e : e_from_o[x])
        for (int m : m_from_o[x]) {
          d.grid[r] = {S.O, x};
          d.row_h[r] = {m};
          d.up_v[r + 1] = {e};
          grow(r, r + 1);
        }
    d.grid[r].clear();
    d.row_h[r].clear();
    d.up_v[r + 1].clear();
  };

  grow = [&](int r, int j) {
    if (j == n) {
      if (r == 0)
        done_rows();
      else
        start_row(r - 1);
      return;
    }
    int f = d.row_h[r + 1][j - (r + 1)];
    int h = d.up_v[r + 1][j - (r + 1)];
    for (auto [jv, g] : choices.at(f, h)) {
      d.up_v[r + 1].push_back(jv);
      d.row_h[r].push_back(g);
      d.grid[r].push_back(C.dst(g));
      grow(r, j + 1);
      d.up_v[r + 1].pop_back();
      d.row_h[r].pop_back();
      d.grid[r].pop_back();
    }
  };

  grow_top = [&](int j) {
    if (j == n) {
      d.variant = Variant::Tplus;
      out.push_back(d);
      d.variant = Variant::Ssquare;
      return;
    }
    int f = d.row_h[0][j];
    int h = d.up_v[0][j];
    for (auto [jv, g] : choices.at(f, h)) {
      d.up_v[0].push_back(jv);
      d.top_h.push_back(g);
      d.top.push_back(C.dst(g));
      grow_top(j + 1);
      d.up_v[0].pop_back();
      d.top_h.pop_back();
      d.top.pop_back();
    }
  };

  if (n == 0)
    done_rows();
  else
    start_row(n - 1);

  // construction guarantees the square conditions; the filter keeps the
  // result exact on malformed inputs (mixed classes in the distinguished set)
  std::vector<StaircaseDiagram> valid;
  for (auto &s : out)
    if (validate_staircase(S, s).all_passed()) valid.push_back(std::move(s));
  std::sort(valid.begin(), valid.end());
  return valid;
}

ChainObject face(const FinCategory &C, const ChainObject &c, int i) {
  int n = c.degree();
  if (n < 1 || i < 0 || i > n) throw input_error("face index out of range");
  ChainObject r = c;
  if (i == 0) {
    r.objects.erase(r.objects.begin());
    r.maps.erase(r.maps.begin());
  } else if (i == n) {
    r.objects.pop_back();
    r.maps.pop_back();
  } else {
    int comp = C.compose(c.maps[i], c.maps[i - 1]);
    if (comp < 0) throw input_error("face composite undefined");
    r.maps[i - 1] = comp;
    r.maps.erase(r.maps.begin() + i);
    r.objects.erase(r.objects.begin() + i);
  }
  return r;
}

ChainObject degeneracy(const FinCategory &C, const ChainObject &c, int i) {
  int n = c.degree();
  if (i < 0 || i > n) throw input_error("degeneracy index out of range");
  ChainObject r = c;
  r.objects.insert(r.objects.begin() + i, c.objects[i]);
  r.maps.insert(r.maps.begin() + i, C.identity(c.objects[i]));
  return r;
}

ChainObject functor_U(const SquaresCategory &S, const StaircaseDiagram &d) {
  (void)S;
  if (!d.with_top()) throw input_error("functor U needs a T+ diagram");
  return ChainObject{d.top, d.top_h};
}

ChainMorphism functor_U(const SquaresCategory &S, const DiagMorphism &m) {
  if (!m.src.with_top() || !m.dst.with_top())
    throw input_error("functor U needs a T+ morphism");
  return ChainMorphism{functor_U(S, m.src), functor_U(S, m.dst), m.top_c};
}

StaircaseDiagram functor_F(const SquaresCategory &S, const ChainObject &c,
                           json *a6_witnesses) {
  const FinCategory &C = S.cat;
  if (!validate_chain(S, c).all_passed())
    throw input_error("functor F: input is not an M-chain");
  int n = c.degree();

  std::vector<std::vector<int>> f(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) {
    f[i][i] = C.identity(c.objects[i]);
    for (int j = i + 1; j <= n; ++j) {
      f[i][j] = C.compose(c.maps[j - 1], f[i][j - 1]);
      if (f[i][j] < 0) throw input_error("functor F: chain composite undefined");
    }
  }

  auto compl_of = [&](int m) -> const Complement & {
    auto it = S.complements.find(m);
    if (it == S.complements.end())
      throw input_error("functor F: no complement for " + C.mor_id(m));
    return it->second;
  };

  StaircaseDiagram d;
  d.n = n;
  d.variant = Variant::Tplus;
  d.top = c.objects;
  d.top_h = c.maps;
  d.grid.assign(n + 1, {});
  d.row_h.assign(n + 1, {});
  d.up_v.assign(n + 1, {});

  for (int i = 0; i <= n; ++i) {
    d.grid[i].push_back(S.O);
    for (int j = i + 1; j <= n; ++j) d.grid[i].push_back(compl_of(f[i][j]).object);
  }

  // horizontals: the first step leaves the basepoint, the rest are the unique
  // (A5)-induced maps between complements of nested composites
  for (int i = 0; i <= n; ++i)
    for (int j = i; j < n; ++j) {
      int u;
      if (j == i) {
        u = S.unique_M_from_O(d.grid[i][1]);
        if (u < 0)
          throw input_error("functor F: no unique M-map from the basepoint to " +
                            C.obj_id(d.grid[i][1]));
      } else {
        const auto &ind = S.induced_map(f[i][j], f[i][j + 1], c.maps[j]);
        if (!ind.ok())
          throw input_error("functor F: no unique (A5) map over " +
                            C.mor_id(f[i][j]) + " -> " + C.mor_id(f[i][j + 1]));
        u = ind.mor();
      }
      d.row_h[i].push_back(u);
    }

  // top verticals are the complement eps maps
  {
    int e0 = S.unique_E_from_O(c.objects[0]);
    if (e0 < 0)
      throw input_error("functor F: no unique E-map from the basepoint to " +
                        C.obj_id(c.objects[0]));
    d.up_v[0].push_back(e0);
    for (int j = 1; j <= n; ++j) d.up_v[0].push_back(compl_of(f[0][j]).eps);
  }

  // lower verticals: eps of the complement of the horizontal composite one
  // row up, transported along the (A6) witness isomorphism
  for (int i = 1; i <= n; ++i) {
    int e0 = S.unique_E_from_O(d.grid[i - 1][1]);
    if (e0 < 0)
      throw input_error("functor F: no unique E-map from the basepoint to " +
                        C.obj_id(d.grid[i - 1][1]));
    d.up_v[i].push_back(e0);
    for (int j = i + 1; j <= n; ++j) {
      int m = C.identity(d.grid[i - 1][1]);
      for (int k = i; k < j; ++k) m = C.compose(d.row_h[i - 1][k - (i - 1)], m);
      if (m < 0) throw input_error("functor F: row composite undefined");
      const Complement &cm = compl_of(m);
      const auto &w = S.induced_map(m, f[i][j], compl_of(f[i - 1][j]).eps);
      if (!w.ok())
        throw input_error("functor F: no unique (A6) witness at " + poskey(i, j));
      auto winv = C.inverse(w.mor());
      if (!winv)
        throw input_error("functor F: (A6) witness not an isomorphism at " +
                          poskey(i, j));
      int vmap = C.compose(cm.eps, *winv);
      if (vmap < 0) throw input_error("functor F: vertical does not compose");
      if (a6_witnesses) (*a6_witnesses)[poskey(i, j)] = C.mor_id(w.mor());
      d.up_v[i].push_back(vmap);
    }
  }

  Report rep = validate_staircase(S, d);
  if (!rep.all_passed())
    for (const auto &it : rep.items)
      if (it.status != Status::Pass)
        throw input_error("functor F: certification failed: " + it.name + " " +
                          it.witness.dump());
  return d;
}

DiagMorphism functor_F(const SquaresCategory &S, const ChainMorphism &cm) {
  const FinCategory &C = S.cat;
  if (!validate_chain_morphism(S, cm).all_passed())
    throw input_error("functor F: input is not a chain morphism");
  int n = cm.src.degree();

  DiagMorphism m;
  m.src = functor_F(S, cm.src);
  m.dst = functor_F(S, cm.dst);
  m.top_c = cm.comp;
  m.comp.assign(n + 1, {});
  for (int i = 0; i <= n; ++i) {
    m.comp[i].push_back(C.identity(S.O));
    for (int j = i + 1; j <= n; ++j) {
      int fa = chain_composite(C, cm.src, i, j);
      int fb = chain_composite(C, cm.dst, i, j);
      const auto &ind = S.induced_map(fa, fb, cm.comp[j]);
      if (!ind.ok())
        throw input_error("functor F: no unique component at " + poskey(i, j));
      m.comp[i].push_back(ind.mor());
    }
  }

  Report rep = validate_diag_morphism(S, m);
  if (!rep.all_passed())
    for (const auto &it : rep.items)
      if (it.status != Status::Pass)
        throw input_error("functor F: morphism certification failed: " +
                          it.name + " " + it.witness.dump());
  return m;
}

StaircaseDiagram functor_G(const SquaresCategory &S, const StaircaseDiagram &d) {
  (void)S;
  if (!d.with_top()) throw input_error("functor G needs a T+ diagram");
  StaircaseDiagram r = d;
  r.variant = Variant::Ssquare;
  r.top.clear();
  r.top_h.clear();
  r.up_v[0].clear();
  return r;
}

StaircaseDiagram functor_H(const SquaresCategory &S, const StaircaseDiagram &d) {
  if (d.with_top()) throw input_error("functor H needs an S-variant diagram");
  StaircaseDiagram r = d;
  r.variant = Variant::Tplus;
  r.top = d.grid[0];
  r.top_h = d.row_h[0];
  r.up_v[0].clear();
  for (int j = 0; j <= d.n; ++j)
    r.up_v[0].push_back(S.cat.identity(d.grid[0][j]));
  Report rep = validate_staircase(S, r);
  if (!rep.all_passed())
    throw input_error("functor H: output is not a valid staircase");
  return r;
}

DiagMorphism natural_HG_to_id(const SquaresCategory &S,
                              const StaircaseDiagram &d) {
  if (!d.with_top())
    throw input_error("HG-to-id comparison needs a T+ diagram");
  DiagMorphism m;
  m.src = functor_H(S, functor_G(S, d));
  m.dst = d;
  m.top_c = d.up_v[0];
  m.comp.assign(d.n + 1, {});
  for (int i = 0; i <= d.n; ++i)
    for (int j = i; j <= d.n; ++j)
      m.comp[i].push_back(S.cat.identity(d.obj(i, j)));
  Report rep = validate_diag_morphism(S, m);
  if (!rep.all_passed())
    for (const auto &it : rep.items)
      if (it.status != Status::Pass)
        throw input_error("HG-to-id comparison failed: " + it.name + " " +
                          it.witness.dump());
  return m;
}

ChainMorphism compose(const FinCategory &C, const ChainMorphism &g,
                      const ChainMorphism &f) {
  if (f.dst != g.src) throw input_error("chain morphisms not composable");
  ChainMorphism r;
  r.src = f.src;
  r.dst = g.dst;
  for (size_t k = 0; k < f.comp.size(); ++k) {
    int c = C.compose(g.comp[k], f.comp[k]);
    if (c < 0) throw input_error("chain morphism composite undefined");
    r.comp.push_back(c);
  }
  return r;
}

DiagMorphism compose(const FinCategory &C, const DiagMorphism &g,
                     const DiagMorphism &f) {
  if (f.dst != g.src) throw input_error("staircase morphisms not composable");
  DiagMorphism r;
  r.src = f.src;
  r.dst = g.dst;
  for (size_t k = 0; k < f.top_c.size(); ++k) {
    int c = C.compose(g.top_c[k], f.top_c[k]);
    if (c < 0) throw input_error("staircase morphism composite undefined");
    r.top_c.push_back(c);
  }
  r.comp.assign(f.comp.size(), {});
  for (size_t i = 0; i < f.comp.size(); ++i)
    for (size_t k = 0; k < f.comp[i].size(); ++k) {
      int c = C.compose(g.comp[i][k], f.comp[i][k]);
      if (c < 0) throw input_error("staircase morphism composite undefined");
      r.comp[i].push_back(c);
    }
  return r;
}

namespace {

// Builds the comparison d -> F(U(d)). Returns null on success, otherwise a
// witness naming the first failing position.
json roundtrip_build(const SquaresCategory &S, const StaircaseDiagram &d,
                     DiagMorphism &out) {
  const FinCategory &C = S.cat;
  ChainObject u = functor_U(S, d);
  try {
    out.dst = functor_F(S, u);
  } catch (const input_error &e) {
    return {{"position", "top"}, {"problem", e.what()}};
  }
  out.src = d;
  int n = d.n;
  out.top_c.clear();
  out.comp.assign(n + 1, {});
  for (int j = 0; j <= n; ++j) out.top_c.push_back(C.identity(d.top[j]));

  for (int i = 0; i <= n; ++i) {
    out.comp[i].push_back(C.identity(S.O));
    for (int j = i + 1; j <= n; ++j) {
      // the pasted square: row composite across, vertical composites up
      int fbig = C.identity(S.O);
      for (int k = i; k < j; ++k) fbig = C.compose(d.hor(i, k), fbig);
      int vl = C.identity(S.O);
      for (int r = i; r >= 0; --r) vl = C.compose(d.ver(r, i), vl);
      int vr = C.identity(d.obj(i, j));
      for (int r = i; r >= 0; --r) vr = C.compose(d.ver(r, j), vr);
      int g = chain_composite(C, u, i, j);
      if (fbig < 0 || vl < 0 || vr < 0 || g < 0)
        return {{"position", poskey(i, j)},
                {"problem", "pasted edges do not compose"}};
      Square big{fbig, vl, vr, g};
      if (!S.is_distinguished(big))
        return {{"position", poskey(i, j)},
                {"problem", "pasted square not distinguished"},
                {"square", sq_names(C, big)}};
      auto itc = S.complements.find(fbig);
      if (itc == S.complements.end())
        return {{"position", poskey(i, j)},
                {"problem", "no complement for the pasted row composite"}};
      const auto &ind = S.induced_map(fbig, g, vr);
      if (!ind.ok())
        return {{"position", poskey(i, j)},
                {"problem", "no unique induced component"}};
      auto epsinv = C.inverse(itc->second.eps);
      if (!epsinv)
        return {{"position", poskey(i, j)},
                {"problem", "complement of a basepoint inclusion is not an isomorphism"}};
      int comp = C.compose(ind.mor(), *epsinv);
      if (comp < 0)
        return {{"position", poskey(i, j)}, {"problem", "component does not compose"}};
      out.comp[i].push_back(comp);
    }
  }

  Report rep = validate_diag_morphism(S, out);
  for (const auto &it : rep.items)
    if (it.status != Status::Pass)
      return {{"position", "morphism"}, {"problem", it.name}, {"witness", it.witness}};
  return json();
}

}  // namespace

DiagMorphism roundtrip_components(const SquaresCategory &S,
                                  const StaircaseDiagram &d) {
  if (!d.with_top()) throw input_error("roundtrip needs a T+ diagram");
  DiagMorphism m;
  json fail = roundtrip_build(S, d, m);
  if (!fail.is_null()) throw input_error("roundtrip: " + fail.dump());
  return m;
}

Report check_roundtrip_transformations(const SquaresCategory &S, int n) {
  if (n < 0 || n > 3)
    throw input_error("roundtrip degree out of range: " + std::to_string(n));
  Report rep;
  rep.command = "simplicial-roundtrip";
  auto objs = enumerate_staircases(S, n, Variant::Tplus);
  {
    CheckItem it = CheckItem::pass("enumerated");
    it.witness = {{"objects", static_cast<int>(objs.size())}, {"n", n}};
    rep.add(std::move(it));
  }
  bool all_ok = true;
  for (size_t k = 0; k < objs.size(); ++k) {
    DiagMorphism m;
    json fail = roundtrip_build(S, objs[k], m);
    if (!fail.is_null()) {
      all_ok = false;
      fail["object"] = static_cast<int>(k);
      fail["diagram"] = objs[k].to_json(S.cat);
      rep.add(CheckItem::fail("roundtrip", fail));
    }
  }
  if (all_ok) {
    CheckItem it = CheckItem::pass("roundtrip");
    it.witness = {{"objects", static_cast<int>(objs.size())}};
    rep.add(std::move(it));
  }
  return rep;
}

}  // namespace sqk
