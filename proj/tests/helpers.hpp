#pragma once

// Shared test utilities. ConcreteCat builds categories of honest finite sets
// and functions; composition, identities and the comp table are generated
// set-theoretically, independently of the library's table machinery, so
// expectations derived here act as oracles for the abstract code under test.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace testutil {

using nlohmann::json;

struct ConcreteCat {
  // Object = named finite set of ints. Morphism = named function.
  struct Obj {
    std::string id;
    std::vector<int> elems;
  };
  struct Mor {
    std::string id;
    int src, dst;
    std::map<int, int> map;  // defined on every element of src
  };

  std::vector<Obj> objects;
  std::vector<Mor> morphisms;

  int add_object(const std::string &id, std::vector<int> elems) {
    objects.push_back({id, std::move(elems)});
    return static_cast<int>(objects.size()) - 1;
  }

  int find_mor(int src, int dst, const std::map<int, int> &m) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
      if (morphisms[i].src == src && morphisms[i].dst == dst &&
          morphisms[i].map == m)
        return static_cast<int>(i);
    return -1;
  }

  int add_morphism(const std::string &id, int src, int dst,
                   std::map<int, int> m) {
    morphisms.push_back({id, src, dst, std::move(m)});
    return static_cast<int>(morphisms.size()) - 1;
  }

  // Adds id_X for every object, then every binary composite. Fails loudly if
  // a composite is missing and cannot be named automatically.
  void close() {
    for (size_t o = 0; o < objects.size(); ++o) {
      std::map<int, int> idm;
      for (int e : objects[o].elems) idm[e] = e;
      if (find_mor(static_cast<int>(o), static_cast<int>(o), idm) < 0)
        add_morphism("id_" + objects[o].id, static_cast<int>(o),
                     static_cast<int>(o), idm);
    }
    bool grew = true;
    int fresh = 0;
    while (grew) {
      grew = false;
      size_t n = morphisms.size();
      for (size_t gi = 0; gi < n; ++gi)
        for (size_t fi = 0; fi < n; ++fi) {
          const Mor &g = morphisms[gi], &f = morphisms[fi];
          if (f.dst != g.src) continue;
          std::map<int, int> comp;
          for (auto [x, y] : f.map) comp[x] = g.map.at(y);
          if (find_mor(f.src, g.dst, comp) < 0) {
            add_morphism("c" + std::to_string(fresh++) + "_" + g.id + "." +
                             f.id,
                         f.src, g.dst, comp);
            grew = true;
          }
        }
    }
  }

  json to_json() const {
    json j;
    j["objects"] = json::array();
    for (const auto &o : objects) j["objects"].push_back(o.id);
    j["morphisms"] = json::array();
    for (const auto &m : morphisms)
      j["morphisms"].push_back({{"id", m.id},
                                {"src", objects[m.src].id},
                                {"dst", objects[m.dst].id}});
    json ids = json::object();
    for (size_t o = 0; o < objects.size(); ++o) {
      std::map<int, int> idm;
      for (int e : objects[o].elems) idm[e] = e;
      ids[objects[o].id] = morphisms[find_mor(static_cast<int>(o),
                                              static_cast<int>(o), idm)]
                               .id;
    }
    j["identities"] = std::move(ids);
    json comp = json::array();
    for (const auto &g : morphisms)
      for (const auto &f : morphisms) {
        if (f.dst != g.src) continue;
        std::map<int, int> cm;
        for (auto [x, y] : f.map) cm[x] = g.map.at(y);
        int c = find_mor(f.src, g.dst, cm);
        if (c < 0) throw std::runtime_error("ConcreteCat not closed");
        comp.push_back({g.id, f.id, morphisms[c].id});
      }
    j["comp"] = std::move(comp);
    return j;
  }

  bool injective(const Mor &m) const {
    std::set<int> seen;
    for (auto [_, y] : m.map)
      if (!seen.insert(y).second) return false;
    return true;
  }
};

// Skeleton of finite sets 0..max_size with every function.
inline ConcreteCat finset_skeleton(int max_size) {
  ConcreteCat c;
  for (int n = 0; n <= max_size; ++n) {
    std::vector<int> elems;
    for (int e = 0; e < n; ++e) elems.push_back(e);
    c.add_object("s" + std::to_string(n), std::move(elems));
  }
  int fresh = 0;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b) {
      // enumerate all b^a functions
      if (a == 0) {
        c.add_morphism("f" + std::to_string(fresh++), a, b, {});
        continue;
      }
      if (b == 0) continue;
      std::vector<int> digits(a, 0);
      while (true) {
        std::map<int, int> m;
        for (int i = 0; i < a; ++i) m[i] = digits[i];
        c.add_morphism("f" + std::to_string(fresh++), a, b, m);
        int i = 0;
        for (; i < a; ++i) {
          if (++digits[i] < b) break;
          digits[i] = 0;
        }
        if (i == a) break;
      }
    }
  c.close();
  return c;
}

// Independent oracle for distinguished squares over honest finite sets:
// the square commutes, the top-left corner is the pullback (a ↦ (f a, h a)
// bijects onto {(b, c) : j b = g c}), and the bottom-right is the union
// (j(B) ∪ g(C) = D). Complements are literal set differences.
struct SetSquares {
  const ConcreteCat &c;

  bool commutes(const ConcreteCat::Mor &f, const ConcreteCat::Mor &h,
                const ConcreteCat::Mor &j, const ConcreteCat::Mor &g) const {
    if (f.src != h.src || f.dst != j.src || h.dst != g.src || j.dst != g.dst)
      return false;
    for (int a : c.objects[f.src].elems)
      if (j.map.at(f.map.at(a)) != g.map.at(h.map.at(a))) return false;
    return true;
  }

  bool is_distinguished(const ConcreteCat::Mor &f, const ConcreteCat::Mor &h,
                        const ConcreteCat::Mor &j, const ConcreteCat::Mor &g) const {
    if (!commutes(f, h, j, g)) return false;
    std::set<std::pair<int, int>> want, got;
    for (int b : c.objects[f.dst].elems)
      for (int cc : c.objects[h.dst].elems)
        if (j.map.at(b) == g.map.at(cc)) want.insert({b, cc});
    for (int a : c.objects[f.src].elems)
      if (!got.insert({f.map.at(a), h.map.at(a)}).second) return false;
    if (want != got) return false;
    std::set<int> covered;
    for (int b : c.objects[j.src].elems) covered.insert(j.map.at(b));
    for (int cc : c.objects[g.src].elems) covered.insert(g.map.at(cc));
    return covered.size() == c.objects[g.dst].elems.size();
  }
};

// Full squares-category fixture over a ConcreteCat whose objects include a
// set for every needed complement: E and M are given by predicates,
// distinguished squares come from the set oracle above.
template <class PredE, class PredM>
json squares_fixture(const ConcreteCat &c, int o_idx, PredE in_e, PredM in_m) {
  json j = c.to_json();
  SetSquares oracle{c};
  json E = json::array(), M = json::array();
  std::vector<int> ms;
  for (size_t i = 0; i < c.morphisms.size(); ++i) {
    if (in_e(c.morphisms[i])) E.push_back(c.morphisms[i].id);
    if (in_m(c.morphisms[i])) {
      M.push_back(c.morphisms[i].id);
      ms.push_back(int(i));
    }
  }
  j["E"] = E;
  j["M"] = M;
  j["O"] = c.objects[o_idx].id;

  json dist = json::array();
  for (const auto &f : c.morphisms) {
    if (!in_m(f)) continue;
    for (const auto &h : c.morphisms) {
      if (!in_e(h) || h.src != f.src) continue;
      for (const auto &jj : c.morphisms) {
        if (!in_e(jj) || jj.src != f.dst) continue;
        for (const auto &g : c.morphisms) {
          if (!in_m(g) || g.src != h.dst || g.dst != jj.dst) continue;
          if (oracle.is_distinguished(f, h, jj, g))
            dist.push_back({f.id, h.id, jj.id, g.id});
        }
      }
    }
  }
  j["distinguished"] = dist;

  json comps = json::object();
  for (int mi : ms) {
    const auto &m = c.morphisms[mi];
    std::set<int> im;
    for (auto [x, y] : m.map) im.insert(y);
    std::vector<int> diff;
    for (int e : c.objects[m.dst].elems)
      if (!im.count(e)) diff.push_back(e);
    int obj = -1;
    for (size_t oi = 0; oi < c.objects.size(); ++oi)
      if (c.objects[oi].elems == diff) obj = int(oi);
    if (obj < 0) throw std::runtime_error("fixture lacks a complement object");
    std::map<int, int> incl;
    for (int e : diff) incl[e] = e;
    int eps = c.find_mor(obj, m.dst, incl);
    if (eps < 0) throw std::runtime_error("fixture lacks a complement inclusion");
    comps[m.id] = {{"object", c.objects[obj].id}, {"eps", c.morphisms[eps].id}};
  }
  j["complements"] = comps;
  return j;
}

// Subsets of {0,1} with every injection between them.
inline ConcreteCat injections_cat() {
  ConcreteCat c;
  int e = c.add_object("empty", {});
  int s0 = c.add_object("s0", {0});
  int s1 = c.add_object("s1", {1});
  int s01 = c.add_object("s01", {0, 1});
  c.add_morphism("b0", e, s0, {});
  c.add_morphism("b1", e, s1, {});
  c.add_morphism("b01", e, s01, {});
  c.add_morphism("a0", s0, s1, {{0, 1}});
  c.add_morphism("a1", s1, s0, {{1, 0}});
  c.add_morphism("i0", s0, s01, {{0, 0}});
  c.add_morphism("i0x", s0, s01, {{0, 1}});
  c.add_morphism("i1", s1, s01, {{1, 1}});
  c.add_morphism("i1x", s1, s01, {{1, 0}});
  c.add_morphism("swap", s01, s01, {{0, 1}, {1, 0}});
  c.close();
  return c;
}

// Poset of subsets of {0..n-1} with inclusions.
inline ConcreteCat subsets_poset(int n) {
  ConcreteCat c;
  int total = 1 << n;
  auto name = [](int mask) {
    if (mask == 0) return std::string("empty");
    std::string s = "s";
    for (int b = 0; b < 16; ++b)
      if (mask & (1 << b)) s += std::to_string(b);
    return s;
  };
  for (int mask = 0; mask < total; ++mask) {
    std::vector<int> elems;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) elems.push_back(b);
    c.add_object(name(mask), std::move(elems));
  }
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      if ((a & b) != a || a == b) continue;
      std::map<int, int> m;
      for (int bit = 0; bit < n; ++bit)
        if (a & (1 << bit)) m[bit] = bit;
      c.add_morphism("i_" + name(a) + "_" + name(b), a, b, std::move(m));
    }
  c.close();
  return c;
}

}  // namespace testutil
