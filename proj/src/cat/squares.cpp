#include "cat/squares.hpp"

#include <algorithm>

namespace sqk {

std::uint64_t SquaresCategory::sq_hash(const Square &s) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t a = (std::uint64_t(std::uint32_t(s.f)) << 32) | std::uint32_t(s.h);
  std::uint64_t b = (std::uint64_t(std::uint32_t(s.j)) << 32) | std::uint32_t(s.g);
  return mix(a) ^ (mix(b) * 0x100000001b3ULL);
}

void SquaresCategory::rebuild_index() {
  dist_index_.clear();
  for (const auto &s : distinguished) dist_index_[sq_hash(s)].push_back(s);
  induced_cache_.clear();
}

bool SquaresCategory::is_distinguished(const Square &s) const {
  auto it = dist_index_.find(sq_hash(s));
  if (it == dist_index_.end()) return false;
  for (const auto &t : it->second)
    if (t == s) return true;
  return false;
}

SquaresCategory SquaresCategory::from_json(const json &j) {
  Report rep;
  SquaresCategory s = from_json(j, rep);
  for (const auto &it : rep.items)
    if (it.status == Status::Error) throw input_error(it.name + ": " + it.witness.dump());
  return s;
}

SquaresCategory SquaresCategory::from_json(const json &j, Report &rep) {
  SquaresCategory s;
  s.cat = FinCategory::from_json(j, rep);
  int nm = s.cat.n_morphisms();
  s.inE.assign(nm, 0);
  s.inM.assign(nm, 0);

  auto read_class = [&](const char *key, std::vector<char> &flags) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      rep.add(CheckItem::error("parse", {{"problem", std::string("missing ") + key}}));
      return;
    }
    for (const auto &e : j.at(key)) {
      int m = e.is_string() ? s.cat.find_morphism(e.get<std::string>()) : -1;
      if (m < 0)
        rep.add(CheckItem::error("parse", {{"problem", "unknown morphism in class"},
                                           {"class", key},
                                           {"morphism", e}}));
      else
        flags[m] = 1;
    }
  };
  read_class("E", s.inE);
  read_class("M", s.inM);

  if (j.contains("O") && j.at("O").is_string())
    s.O = s.cat.find_object(j.at("O").get<std::string>());
  if (s.O < 0)
    rep.add(CheckItem::error("parse", {{"problem", "missing or unknown basepoint O"}}));

  if (j.contains("distinguished") && j.at("distinguished").is_array()) {
    for (const auto &row : j.at("distinguished")) {
      if (!row.is_array() || row.size() != 4) {
        rep.add(CheckItem::error("parse", {{"problem", "distinguished row needs 4 ids"},
                                           {"row", row}}));
        continue;
      }
      int ids[4];
      bool bad = false;
      for (int k = 0; k < 4; ++k) {
        ids[k] = row[k].is_string() ? s.cat.find_morphism(row[k].get<std::string>()) : -1;
        if (ids[k] < 0) bad = true;
      }
      if (bad) {
        rep.add(CheckItem::error("parse", {{"problem", "unknown morphism in square"},
                                           {"row", row}}));
        continue;
      }
      Square sq{ids[0], ids[1], ids[2], ids[3]};
      bool aligned = s.cat.src(sq.f) == s.cat.src(sq.h) &&
                     s.cat.dst(sq.f) == s.cat.src(sq.j) &&
                     s.cat.dst(sq.h) == s.cat.src(sq.g) &&
                     s.cat.dst(sq.j) == s.cat.dst(sq.g);
      if (!aligned) {
        rep.add(CheckItem::error("parse", {{"problem", "square corners do not align"},
                                           {"row", row}}));
        continue;
      }
      if (!s.inM[sq.f] || !s.inM[sq.g] || !s.inE[sq.h] || !s.inE[sq.j]) {
        rep.add(CheckItem::error("parse", {{"problem", "square edge in wrong class"},
                                           {"row", row}}));
        continue;
      }
      s.distinguished.push_back(sq);
    }
  } else {
    rep.add(CheckItem::error("parse", {{"problem", "missing distinguished list"}}));
  }

  if (j.contains("complements")) {
    if (!j.at("complements").is_object()) {
      rep.add(CheckItem::error("parse", {{"problem", "complements must be an object"}}));
    } else {
      for (const auto &[key, val] : j.at("complements").items()) {
        int m = s.cat.find_morphism(key);
        if (m < 0 || !s.inM[m]) {
          rep.add(CheckItem::error("parse", {{"problem", "complement key not an M-morphism"},
                                             {"morphism", key}}));
          continue;
        }
        if (!val.is_object() || !val.contains("object") || !val.contains("eps")) {
          rep.add(CheckItem::error("parse", {{"problem", "complement entry needs object and eps"},
                                             {"morphism", key}}));
          continue;
        }
        int obj = val.at("object").is_string()
                      ? s.cat.find_object(val.at("object").get<std::string>())
                      : -1;
        int eps = val.at("eps").is_string()
                      ? s.cat.find_morphism(val.at("eps").get<std::string>())
                      : -1;
        if (obj < 0 || eps < 0) {
          rep.add(CheckItem::error("parse", {{"problem", "unknown id in complement entry"},
                                             {"morphism", key}}));
          continue;
        }
        s.complements[m] = Complement{obj, eps};
      }
    }
  }

  s.rebuild_index();
  return s;
}

json SquaresCategory::to_json() const {
  json j = cat.to_json();
  json e = json::array(), m = json::array();
  for (int i = 0; i < cat.n_morphisms(); ++i) {
    if (inE[i]) e.push_back(cat.mor_id(i));
    if (inM[i]) m.push_back(cat.mor_id(i));
  }
  j["E"] = std::move(e);
  j["M"] = std::move(m);
  j["O"] = cat.obj_id(O);
  json rows = json::array();
  for (const auto &s : distinguished)
    rows.push_back({cat.mor_id(s.f), cat.mor_id(s.h), cat.mor_id(s.j), cat.mor_id(s.g)});
  j["distinguished"] = std::move(rows);
  json comps = json::object();
  for (const auto &[m_idx, c] : complements)
    comps[cat.mor_id(m_idx)] = {{"object", cat.obj_id(c.object)}, {"eps", cat.mor_id(c.eps)}};
  j["complements"] = std::move(comps);
  return j;
}

int SquaresCategory::unique_E_from_O(int x) const {
  int found = -1;
  for (int m : cat.hom(O, x)) {
    if (!inE[m]) continue;
    if (found >= 0) return -1;
    found = m;
  }
  return found;
}

int SquaresCategory::unique_M_from_O(int x) const {
  int found = -1;
  for (int m : cat.hom(O, x)) {
    if (!inM[m]) continue;
    if (found >= 0) return -1;
    found = m;
  }
  return found;
}

bool SquaresCategory::is_weak_equivalence(int e) const {
  int f = unique_M_from_O(cat.src(e));
  int g = unique_M_from_O(cat.dst(e));
  int h = unique_E_from_O(O);
  if (f < 0 || g < 0 || h < 0) return false;
  return is_distinguished(f, h, e, g);
}

Report SquaresCategory::validate() const {
  Report rep;
  cat.check_laws(rep);

  auto class_checks = [&](const char *label, const std::vector<char> &flags) {
    for (int o = 0; o < cat.n_objects(); ++o)
      if (!flags[cat.identity(o)]) {
        rep.add(CheckItem::error(std::string(label) + "-wide",
                                 {{"object", cat.obj_id(o)}, {"problem", "identity not in class"}}));
        return;
      }
    rep.add(CheckItem::pass(std::string(label) + "-wide"));
    for (int g = 0; g < cat.n_morphisms(); ++g) {
      if (!flags[g]) continue;
      for (int f : cat.into(cat.src(g))) {
        if (!flags[f]) continue;
        int gf = cat.compose(g, f);
        if (gf >= 0 && !flags[gf]) {
          rep.add(CheckItem::error(std::string(label) + "-closed",
                                   {{"g", cat.mor_id(g)},
                                    {"f", cat.mor_id(f)},
                                    {"composite", cat.mor_id(gf)}}));
          return;
        }
      }
    }
    rep.add(CheckItem::pass(std::string(label) + "-closed"));
  };
  class_checks("E", inE);
  class_checks("M", inM);

  {
    bool ok = true;
    for (const auto &s : distinguished) {
      if (cat.compose(s.j, s.f) != cat.compose(s.g, s.h) || cat.compose(s.j, s.f) < 0) {
        rep.add(CheckItem::fail("distinguished-commute",
                                {{"square", {cat.mor_id(s.f), cat.mor_id(s.h), cat.mor_id(s.j),
                                             cat.mor_id(s.g)}}}));
        ok = false;
        break;
      }
    }
    if (ok) rep.add(CheckItem::pass("distinguished-commute"));
  }

  // Horizontal pasting: glue along a shared vertical edge (j of left == h of right).
  {
    std::unordered_map<int, std::vector<int>> by_left;
    for (size_t i = 0; i < distinguished.size(); ++i)
      by_left[distinguished[i].h].push_back(int(i));
    bool ok = true;
    for (const auto &s : distinguished) {
      auto it = by_left.find(s.j);
      if (it == by_left.end()) continue;
      for (int ti : it->second) {
        const Square &t = distinguished[ti];
        int f2 = cat.compose(t.f, s.f), g2 = cat.compose(t.g, s.g);
        if (f2 < 0 || g2 < 0) continue;
        if (!is_distinguished(f2, s.h, t.j, g2)) {
          rep.add(CheckItem::fail(
              "distinguished-horizontal-closure",
              {{"left", {cat.mor_id(s.f), cat.mor_id(s.h), cat.mor_id(s.j), cat.mor_id(s.g)}},
               {"right", {cat.mor_id(t.f), cat.mor_id(t.h), cat.mor_id(t.j), cat.mor_id(t.g)}},
               {"composite",
                {cat.mor_id(f2), cat.mor_id(s.h), cat.mor_id(t.j), cat.mor_id(g2)}}}));
          ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) rep.add(CheckItem::pass("distinguished-horizontal-closure"));
  }

  // Vertical pasting: glue along a shared horizontal edge (g of top == f of bottom).
  {
    std::unordered_map<int, std::vector<int>> by_top;
    for (size_t i = 0; i < distinguished.size(); ++i)
      by_top[distinguished[i].f].push_back(int(i));
    bool ok = true;
    for (const auto &s : distinguished) {
      auto it = by_top.find(s.g);
      if (it == by_top.end()) continue;
      for (int ti : it->second) {
        const Square &t = distinguished[ti];
        int h2 = cat.compose(t.h, s.h), j2 = cat.compose(t.j, s.j);
        if (h2 < 0 || j2 < 0) continue;
        if (!is_distinguished(s.f, h2, j2, t.g)) {
          rep.add(CheckItem::fail(
              "distinguished-vertical-closure",
              {{"top", {cat.mor_id(s.f), cat.mor_id(s.h), cat.mor_id(s.j), cat.mor_id(s.g)}},
               {"bottom", {cat.mor_id(t.f), cat.mor_id(t.h), cat.mor_id(t.j), cat.mor_id(t.g)}},
               {"composite",
                {cat.mor_id(s.f), cat.mor_id(h2), cat.mor_id(j2), cat.mor_id(t.g)}}}));
          ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) rep.add(CheckItem::pass("distinguished-vertical-closure"));
  }

  {
    bool ok = true;
    for (int e = 0; e < cat.n_morphisms() && ok; ++e) {
      if (!inE[e]) continue;
      if (!is_distinguished(cat.identity(cat.src(e)), e, e, cat.identity(cat.dst(e)))) {
        rep.add(CheckItem::fail("identity-squares-E", {{"morphism", cat.mor_id(e)}}));
        ok = false;
      }
    }
    if (ok) rep.add(CheckItem::pass("identity-squares-E"));
    ok = true;
    for (int m = 0; m < cat.n_morphisms() && ok; ++m) {
      if (!inM[m]) continue;
      if (!is_distinguished(m, cat.identity(cat.src(m)), cat.identity(cat.dst(m)), m)) {
        rep.add(CheckItem::fail("identity-squares-M", {{"morphism", cat.mor_id(m)}}));
        ok = false;
      }
    }
    if (ok) rep.add(CheckItem::pass("identity-squares-M"));
  }

  {
    bool okE = true, okM = true;
    for (int x = 0; x < cat.n_objects(); ++x) {
      if (okE && unique_E_from_O(x) < 0) {
        rep.add(CheckItem::fail("O-initial-E", {{"object", cat.obj_id(x)}}));
        okE = false;
      }
      if (okM && unique_M_from_O(x) < 0) {
        rep.add(CheckItem::fail("O-initial-M", {{"object", cat.obj_id(x)}}));
        okM = false;
      }
    }
    if (okE) rep.add(CheckItem::pass("O-initial-E"));
    if (okM) rep.add(CheckItem::pass("O-initial-M"));
  }

  return rep;
}

const SquaresCategory::Induced &SquaresCategory::induced_map(int f, int g, int j) const {
  std::array<int, 3> key{f, g, j};
  auto it = induced_cache_.find(key);
  if (it != induced_cache_.end()) return it->second;
  Induced res;
  auto cf = complements.find(f), cg = complements.find(g);
  if (cf == complements.end() || cg == complements.end()) {
    res.has_complements = false;
    return induced_cache_.emplace(key, std::move(res)).first->second;
  }
  int ef = cf->second.eps, eg = cg->second.eps;
  int want = cat.compose(j, ef);
  for (int u : cat.hom(cf->second.object, cg->second.object)) {
    if (cat.compose(eg, u) != want || want < 0) continue;
    if (cat.is_pullback(eg, j, cf->second.object, u, ef)) res.candidates.push_back(u);
  }
  return induced_cache_.emplace(key, std::move(res)).first->second;
}

json mor_names(const SquaresCategory &S, const Square &s) {
  return {S.cat.mor_id(s.f), S.cat.mor_id(s.h), S.cat.mor_id(s.j), S.cat.mor_id(s.g)};
}

Report SquaresCategory::induced_complement_map_report(const Square &sq) const {
  Report rep;
  if (!inM[sq.f] || !inM[sq.g] ||
      !((inM[sq.h] && inM[sq.j]) || (inE[sq.h] && inE[sq.j]))) {
    rep.add(CheckItem::error("induced-map", {{"problem", "square edges in wrong classes"},
                                             {"square", mor_names(*this, sq)}}));
    return rep;
  }
  if (cat.compose(sq.j, sq.f) != cat.compose(sq.g, sq.h) || cat.compose(sq.j, sq.f) < 0) {
    rep.add(CheckItem::error("induced-map", {{"problem", "square does not commute"},
                                             {"square", mor_names(*this, sq)}}));
    return rep;
  }
  if (!cat.is_pullback(sq.j, sq.g, cat.src(sq.f), sq.f, sq.h)) {
    rep.add(CheckItem::error("induced-map", {{"problem", "square is not a pullback"},
                                             {"square", mor_names(*this, sq)}}));
    return rep;
  }
  const Induced &ind = induced_map(sq.f, sq.g, sq.j);
  if (!ind.has_complements) {
    rep.add(CheckItem::error("induced-map", {{"problem", "missing complement data"},
                                             {"square", mor_names(*this, sq)}}));
  } else if (ind.ok()) {
    CheckItem it = CheckItem::pass("induced-map");
    it.witness = json{{"morphism", cat.mor_id(ind.mor())}};
    rep.add(std::move(it));
  } else {
    json cands = json::array();
    for (int u : ind.candidates) cands.push_back(cat.mor_id(u));
    rep.add(CheckItem::fail("induced-map", {{"problem", "candidate count is not one"},
                                            {"candidates", cands},
                                            {"square", mor_names(*this, sq)}}));
  }
  return rep;
}

Report SquaresCategory::check_complement_axioms() const {
  Report rep;
  const FinCategory &C = cat;
  int nm = C.n_morphisms();

  auto sq_json = [&](int f, int h, int j, int g) {
    return json{C.mor_id(f), C.mor_id(h), C.mor_id(j), C.mor_id(g)};
  };

  // (A1) every M-morphism is mono
  {
    bool ok = true;
    for (int m = 0; m < nm && ok; ++m) {
      if (!inM[m]) continue;
      if (!C.is_mono(m)) {
        rep.add(CheckItem::fail("A1", {{"morphism", C.mor_id(m)}, {"problem", "not mono"}}));
        ok = false;
      }
    }
    if (ok) rep.add(CheckItem::pass("A1"));
  }

  // (A2) complements: totality, eps in E with the right endpoints, the
  // complement square distinguished, and X\O -> X iso for every X.
  {
    bool ok = true;
    for (int m = 0; m < nm && ok; ++m) {
      if (!inM[m]) continue;
      auto it = complements.find(m);
      if (it == complements.end()) {
        rep.add(CheckItem::error("A2", {{"morphism", C.mor_id(m)},
                                        {"problem", "complement data missing"}}));
        ok = false;
        break;
      }
      const Complement &c = it->second;
      if (!inE[c.eps] || C.src(c.eps) != c.object || C.dst(c.eps) != C.dst(m)) {
        rep.add(CheckItem::fail("A2", {{"morphism", C.mor_id(m)},
                                       {"problem", "eps not an E-map complement -> target"}}));
        ok = false;
        break;
      }
      int top = unique_M_from_O(c.object);
      int left = unique_E_from_O(C.src(m));
      if (top < 0 || left < 0 || !is_distinguished(top, left, c.eps, m)) {
        rep.add(CheckItem::fail("A2", {{"morphism", C.mor_id(m)},
                                       {"problem", "complement square not distinguished"}}));
        ok = false;
        break;
      }
    }
    for (int x = 0; x < C.n_objects() && ok; ++x) {
      int m0 = unique_M_from_O(x);
      if (m0 < 0) continue;
      auto it = complements.find(m0);
      if (it == complements.end()) continue;
      if (!C.is_iso(it->second.eps)) {
        rep.add(CheckItem::fail("A2", {{"object", C.obj_id(x)},
                                       {"problem", "complement of O -> X not iso onto X"}}));
        ok = false;
      }
    }
    if (ok) rep.add(CheckItem::pass("A2"));
  }

  // (A3) both classes stable under pullback along the other
  {
    bool ok = true;
    for (int m = 0; m < nm && ok; ++m) {
      if (!inM[m]) continue;
      for (int e : C.into(C.dst(m))) {
        if (!inE[e]) continue;
        auto cones = C.all_pullbacks(m, e);
        if (cones.empty()) continue;
        bool good = false;
        for (const auto &pc : cones)
          if (inE[pc.p] && inM[pc.q]) {
            good = true;
            break;
          }
        if (!good) {
          rep.add(CheckItem::fail("A3", {{"m", C.mor_id(m)},
                                         {"e", C.mor_id(e)},
                                         {"problem", "no pullback cone with legs in E and M"}}));
          ok = false;
          break;
        }
      }
    }
    if (ok) rep.add(CheckItem::pass("A3"));
  }

  // (A4) every distinguished square is a pullback
  {
    bool ok = true;
    for (const auto &s : distinguished) {
      if (!C.is_pullback(s.j, s.g, C.src(s.f), s.f, s.h)) {
        rep.add(CheckItem::fail("A4", {{"square", mor_names(*this, s)}}));
        ok = false;
        break;
      }
    }
    if (ok) rep.add(CheckItem::pass("A4"));
  }

  // (A5) unique induced map between complements for every pullback square with
  // horizontals in M and verticals both in M or both in E.
  bool a5_ok = true;
  {
    for (int f = 0; f < nm && a5_ok; ++f) {
      if (!inM[f]) continue;
      for (int g = 0; g < nm && a5_ok; ++g) {
        if (!inM[g]) continue;
        for (int h : C.hom(C.src(f), C.src(g))) {
          bool hM = inM[h], hE = inE[h];
          if (!hM && !hE) continue;
          for (int jm : C.hom(C.dst(f), C.dst(g))) {
            if (!((hM && inM[jm]) || (hE && inE[jm]))) continue;
            int a = C.compose(jm, f);
            if (a < 0 || a != C.compose(g, h)) continue;
            if (!C.is_pullback(jm, g, C.src(f), f, h)) continue;
            const Induced &ind = induced_map(f, g, jm);
            if (!ind.ok()) {
              json cands = json::array();
              for (int u : ind.candidates) cands.push_back(C.mor_id(u));
              rep.add(CheckItem::fail("A5", {{"square", sq_json(f, h, jm, g)},
                                             {"candidates", cands}}));
              a5_ok = false;
              break;
            }
          }
          if (!a5_ok) break;
        }
      }
    }
    if (a5_ok) rep.add(CheckItem::pass("A5"));
  }

  // (A6) nested complements: (A2\A0)\(A1\A0) -> A2\A1 is iso for every
  // composable pair A0 >-> A1 >-> A2.
  {
    bool ok = true;
    for (int f01 = 0; f01 < nm && ok; ++f01) {
      if (!inM[f01]) continue;
      for (int f12 : C.outof(C.dst(f01))) {
        if (!inM[f12]) continue;
        int f02 = C.compose(f12, f01);
        if (f02 < 0 || !inM[f02]) continue;
        const Induced &u1 = induced_map(f01, f02, f12);
        if (!u1.ok()) {
          rep.add(CheckItem::fail("A6", {{"f01", C.mor_id(f01)},
                                         {"f12", C.mor_id(f12)},
                                         {"problem", "no unique map (A1\\A0) -> (A2\\A0)"}}));
          ok = false;
          break;
        }
        int u = u1.mor();
        if (!inM[u]) {
          rep.add(CheckItem::fail("A6", {{"f01", C.mor_id(f01)},
                                         {"f12", C.mor_id(f12)},
                                         {"problem", "induced map not in M"},
                                         {"morphism", C.mor_id(u)}}));
          ok = false;
          break;
        }
        const Induced &v = induced_map(u, f12, complements.at(f02).eps);
        if (!v.ok()) {
          rep.add(CheckItem::fail("A6", {{"f01", C.mor_id(f01)},
                                         {"f12", C.mor_id(f12)},
                                         {"problem", "no unique iterated complement map"}}));
          ok = false;
          break;
        }
        if (!C.is_iso(v.mor())) {
          rep.add(CheckItem::fail("A6", {{"f01", C.mor_id(f01)},
                                         {"f12", C.mor_id(f12)},
                                         {"morphism", C.mor_id(v.mor())},
                                         {"problem", "iterated complement map not iso"}}));
          ok = false;
          break;
        }
      }
    }
    if (ok) rep.add(CheckItem::pass("A6"));
  }

  // (A7) pullback square with M horizontals, E verticals and iso induced map
  // must be distinguished.
  {
    bool ok = true;
    for (int f = 0; f < nm && ok; ++f) {
      if (!inM[f]) continue;
      for (int g = 0; g < nm && ok; ++g) {
        if (!inM[g]) continue;
        for (int h : C.hom(C.src(f), C.src(g))) {
          if (!inE[h]) continue;
          for (int jm : C.hom(C.dst(f), C.dst(g))) {
            if (!inE[jm]) continue;
            int a = C.compose(jm, f);
            if (a < 0 || a != C.compose(g, h)) continue;
            if (!C.is_pullback(jm, g, C.src(f), f, h)) continue;
            const Induced &ind = induced_map(f, g, jm);
            if (!ind.ok() || !C.is_iso(ind.mor())) continue;
            if (!is_distinguished(f, h, jm, g)) {
              rep.add(CheckItem::fail("A7", {{"square", sq_json(f, h, jm, g)},
                                             {"induced", C.mor_id(ind.mor())}}));
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    if (ok) rep.add(CheckItem::pass("A7"));
  }

  // (A8) cutting a distinguished square along a pullback of M-subobjects
  // yields a distinguished square of complements.
  {
    bool ok = true;
    for (const auto &s : distinguished) {
      if (!ok) break;
      int A = C.src(s.f), Cc = C.dst(s.h);
      for (int i = 0; i < nm && ok; ++i) {
        if (!inM[i] || C.dst(i) != A) continue;
        for (int j2 = 0; j2 < nm && ok; ++j2) {
          if (!inM[j2] || C.dst(j2) != Cc) continue;
          for (int h0 : C.hom(C.src(i), C.src(j2))) {
            if (!inE[h0]) continue;
            int a = C.compose(s.h, i);
            if (a < 0 || a != C.compose(j2, h0)) continue;
            if (!C.is_pullback(s.h, j2, C.src(i), i, h0)) continue;
            int fi = C.compose(s.f, i), gj = C.compose(s.g, j2);
            if (fi < 0 || gj < 0 || !inM[fi] || !inM[gj]) continue;
            const Induced &top = induced_map(i, fi, s.f);
            const Induced &bottom = induced_map(j2, gj, s.g);
            const Induced &left = induced_map(i, j2, s.h);
            const Induced &right = induced_map(fi, gj, s.j);
            if (!top.ok() || !bottom.ok() || !left.ok() || !right.ok()) {
              rep.add(CheckItem::fail("A8", {{"square", mor_names(*this, s)},
                                             {"i", C.mor_id(i)},
                                             {"j", C.mor_id(j2)},
                                             {"problem", "induced complement maps not unique"}}));
              ok = false;
              break;
            }
            if (!is_distinguished(top.mor(), left.mor(), right.mor(), bottom.mor())) {
              rep.add(CheckItem::fail(
                  "A8", {{"square", mor_names(*this, s)},
                         {"i", C.mor_id(i)},
                         {"j", C.mor_id(j2)},
                         {"induced", sq_json(top.mor(), left.mor(), right.mor(), bottom.mor())},
                         {"problem", "complement square not distinguished"}}));
              ok = false;
              break;
            }
          }
        }
      }
    }
    if (ok) rep.add(CheckItem::pass("A8"));
  }

  return rep;
}

Report check_squares_category(const json &j) {
  Report rep;
  SquaresCategory s = SquaresCategory::from_json(j, rep);
  if (rep.overall() == Status::Error) return rep;
  Report v = s.validate();
  for (auto &it : v.items) rep.add(std::move(it));
  if (rep.overall() != Status::Pass) return rep;
  Report a = s.check_complement_axioms();
  for (auto &it : a.items) rep.add(std::move(it));
  return rep;
}

}  // namespace sqk
