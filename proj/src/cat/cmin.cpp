#include "cat/cmin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sqk {

namespace {

using MorData = std::tuple<int, int, std::vector<int>, std::vector<int>>;

// multiset inclusion, both sides sorted
bool sub_multiset(const std::vector<int> &sub, const std::vector<int> &sup) {
  size_t i = 0;
  for (size_t j = 0; j < sup.size() && i < sub.size(); ++j)
    if (sub[i] == sup[j]) ++i;
  return i == sub.size();
}

// fiber is a sub-multiset of some listed family of the component
bool sub_of_listed(const CovCategory &base, int comp_obj,
                   const std::vector<int> &fiber) {
  if (fiber.empty()) return true;
  for (int fi : base.families_of(comp_obj))
    if (sub_multiset(fiber, base.families[fi].maps)) return true;
  return false;
}

std::string multiset_id(const FinCategory &bc, const std::vector<int> &ms) {
  std::string s = "[";
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ",";
    s += bc.obj_id(ms[i]);
  }
  return s + "]";
}

std::string mor_id_of(const FinCategory &bc, const std::string &src_id,
                      const std::string &dst_id, const std::vector<int> &alpha,
                      const std::vector<int> &comps) {
  std::string s = src_id + ">" + dst_id + "|";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]) + ":" + bc.mor_id(comps[i]);
  }
  return s;
}

}  // namespace

bool CminPackage::is_multiset_covering(int target,
                                       const std::vector<int> &maps) const {
  const auto &tm = multisets[target];
  std::vector<std::vector<int>> fibers(tm.size());
  for (int mi : maps) {
    const CminMor &m = mors[mi];
    if (m.dst != target) return false;
    for (size_t i = 0; i < m.alpha.size(); ++i)
      fibers[m.alpha[i]].push_back(m.comps[i]);
  }
  for (size_t l = 0; l < tm.size(); ++l) {
    std::sort(fibers[l].begin(), fibers[l].end());
    if (!base.is_listed(tm[l], fibers[l])) return false;
  }
  return true;
}

CminPackage build_cmin(const CovCategory &A, int size_bound) {
  if (size_bound < 1) throw input_error("size_bound must be at least 1");
  const FinCategory &bc = A.cat;

  CminPackage P;
  P.base = A;
  P.bound = size_bound;

  std::vector<int> bases;
  for (int o = 0; o < bc.n_objects(); ++o)
    if (o != A.initial) bases.push_back(o);

  // objects: sorted tuples over non-initial base objects, by length then lex
  std::map<std::vector<int>, int> obj_index;
  {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= size_bound; ++len) {
      for (const auto &ms : layer) obj_index.emplace(ms, -1);
      std::vector<std::vector<int>> next;
      for (const auto &ms : layer)
        for (int b : bases) {
          if (!ms.empty() && b < ms.back()) continue;
          auto grown = ms;
          grown.push_back(b);
          next.push_back(std::move(grown));
        }
      layer = std::move(next);
    }
  }
  {
    std::vector<std::vector<int>> ordered;
    for (const auto &[ms, idx] : obj_index) ordered.push_back(ms);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto &a, const auto &b) {
                       return a.size() != b.size() ? a.size() < b.size()
                                                   : a < b;
                     });
    P.multisets = std::move(ordered);
    for (size_t i = 0; i < P.multisets.size(); ++i)
      obj_index[P.multisets[i]] = int(i);
  }

  FinCategory cat;
  for (const auto &ms : P.multisets) cat.add_object(multiset_id(bc, ms));

  // morphisms: every (alpha, comps) whose fibers are sub-multisets of listed
  // families; pruning is sound because fibers only grow along the recursion
  std::map<MorData, int> index_of;
  int n_obj = int(P.multisets.size());
  for (int si = 0; si < n_obj; ++si)
    for (int ti = 0; ti < n_obj; ++ti) {
      const auto &S = P.multisets[si];
      const auto &T = P.multisets[ti];
      std::vector<int> alpha(S.size()), comps(S.size());
      std::vector<std::vector<int>> fibers(T.size());
      auto emit = [&]() {
        std::string id = mor_id_of(bc, cat.obj_id(si), cat.obj_id(ti), alpha, comps);
        int idx = cat.add_morphism(id, si, ti);
        P.mors.push_back({si, ti, alpha, comps});
        index_of.emplace(MorData{si, ti, alpha, comps}, idx);
      };
      auto rec = [&](auto &&self, size_t i) -> void {
        if (i == S.size()) {
          emit();
          return;
        }
        for (size_t t = 0; t < T.size(); ++t)
          for (int m : bc.hom(S[i], T[t])) {
            auto &fib = fibers[t];
            fib.insert(std::upper_bound(fib.begin(), fib.end(), m), m);
            if (sub_of_listed(A, T[t], fib)) {
              alpha[i] = int(t);
              comps[i] = m;
              self(self, i + 1);
            }
            fib.erase(std::find(fib.begin(), fib.end(), m));
          }
      };
      rec(rec, 0);
    }

  auto find_mor = [&](int si, int ti, const std::vector<int> &alpha,
                      const std::vector<int> &comps) {
    auto it = index_of.find(MorData{si, ti, alpha, comps});
    return it == index_of.end() ? -1 : it->second;
  };

  for (int o = 0; o < n_obj; ++o) {
    const auto &ms = P.multisets[o];
    std::vector<int> alpha(ms.size()), comps(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) {
      alpha[i] = int(i);
      comps[i] = bc.identity(ms[i]);
    }
    cat.set_identity(o, find_mor(o, o, alpha, comps));
  }

  int nm = cat.n_morphisms();
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (P.mors[f].dst != P.mors[g].src) continue;
      const CminMor &mf = P.mors[f];
      const CminMor &mg = P.mors[g];
      std::vector<int> alpha(mf.alpha.size()), comps(mf.alpha.size());
      for (size_t i = 0; i < mf.alpha.size(); ++i) {
        alpha[i] = mg.alpha[mf.alpha[i]];
        comps[i] = bc.compose(mg.comps[mf.alpha[i]], mf.comps[i]);
      }
      int gf = find_mor(mf.src, mg.dst, alpha, comps);
      if (gf < 0)
        throw input_error(
            "composite escapes the enumeration; listed families are not "
            "substitution closed");
      cat.set_comp(g, f, gf);
    }
  cat.finalize();

  SquaresCategory &C = P.C;
  C.cat = cat;
  C.O = obj_index.at({});
  C.inE.assign(nm, 1);
  C.inM.assign(nm, 0);
  std::vector<std::vector<int>> m_by_target(n_obj);
  std::vector<std::vector<int>> image_of(nm);
  for (int m = 0; m < nm; ++m) {
    const CminMor &d = P.mors[m];
    std::vector<int> img(d.alpha);
    std::sort(img.begin(), img.end());
    bool inj = std::adjacent_find(img.begin(), img.end()) == img.end();
    bool ident = true;
    for (size_t i = 0; i < d.comps.size() && ident; ++i)
      ident = d.comps[i] == bc.identity(P.multisets[d.src][i]);
    if (inj && ident) {
      C.inM[m] = 1;
      m_by_target[d.dst].push_back(m);
      image_of[m] = std::move(img);
    }
  }

  // complement of an inclusion: the positions it misses, in ascending order
  for (int m = 0; m < nm; ++m) {
    if (!C.inM[m]) continue;
    const CminMor &d = P.mors[m];
    std::vector<char> hit(P.multisets[d.dst].size(), 0);
    for (int t : d.alpha) hit[t] = 1;
    std::vector<int> rest_pos, rest_ms;
    for (size_t t = 0; t < hit.size(); ++t)
      if (!hit[t]) {
        rest_pos.push_back(int(t));
        rest_ms.push_back(P.multisets[d.dst][t]);
      }
    int cobj = obj_index.at(rest_ms);
    std::vector<int> comps(rest_ms.size());
    for (size_t i = 0; i < rest_ms.size(); ++i) comps[i] = bc.identity(rest_ms[i]);
    int eps = find_mor(cobj, d.dst, rest_pos, comps);
    C.complements[m] = Complement{cobj, eps};
  }

  // distinguished squares: right edge j, bottom inclusion g; the square is
  // determined up to the choice of top inclusion onto the pulled-back
  // positions, and is distinguished when every fiber of j outside the image
  // of g is exactly a listed family
  for (int j = 0; j < nm; ++j) {
    const CminMor &dj = P.mors[j];
    const auto &D = P.multisets[dj.dst];
    for (int g : m_by_target[dj.dst]) {
      std::vector<char> in_g(D.size(), 0);
      for (int t : P.mors[g].alpha) in_g[t] = 1;
      bool good = true;
      for (size_t l = 0; l < D.size() && good; ++l) {
        if (in_g[l]) continue;
        std::vector<int> fiber;
        for (size_t i = 0; i < dj.alpha.size(); ++i)
          if (dj.alpha[i] == int(l)) fiber.push_back(dj.comps[i]);
        std::sort(fiber.begin(), fiber.end());
        good = A.is_listed(D[l], fiber);
      }
      if (!good) continue;
      std::vector<int> pf;
      for (size_t i = 0; i < dj.alpha.size(); ++i)
        if (in_g[dj.alpha[i]]) pf.push_back(int(i));
      std::vector<int> g_inv(D.size(), -1);
      for (size_t p = 0; p < P.mors[g].alpha.size(); ++p)
        g_inv[P.mors[g].alpha[p]] = int(p);
      for (int f : m_by_target[dj.src]) {
        if (image_of[f] != pf) continue;
        const CminMor &df = P.mors[f];
        std::vector<int> ah(df.alpha.size()), ch(df.alpha.size());
        for (size_t i = 0; i < df.alpha.size(); ++i) {
          ah[i] = g_inv[dj.alpha[df.alpha[i]]];
          ch[i] = dj.comps[df.alpha[i]];
        }
        int h = find_mor(df.src, P.mors[g].src, ah, ch);
        if (h < 0)
          throw input_error(
              "pullback restriction escapes the enumeration; listed families "
              "are not substitution closed");
        C.distinguished.push_back(Square{f, h, j, g});
      }
    }
  }
  C.rebuild_index();

  // covering structure on the same category: identity singletons plus every
  // per-position choice of base families, realized by singleton-source maps
  CovCategory &L = P.lifted;
  L.cat = cat;
  L.initial = C.O;
  L.empty_covers_initial = true;
  for (int o = 0; o < n_obj; ++o) {
    const auto &ms = P.multisets[o];
    if (ms.empty()) continue;
    L.families.push_back(CovFamily{o, {cat.identity(o)}});
    bool coverable = true;
    for (int b : ms) coverable = coverable && !A.families_of(b).empty();
    if (!coverable) continue;
    std::vector<int> choice(ms.size(), 0);
    for (;;) {
      std::vector<int> members;
      for (size_t l = 0; l < ms.size(); ++l) {
        int fi = A.families_of(ms[l])[choice[l]];
        for (int bm : A.families[fi].maps) {
          int src_obj = obj_index.at({bc.src(bm)});
          members.push_back(find_mor(src_obj, o, {int(l)}, {bm}));
        }
      }
      std::sort(members.begin(), members.end());
      L.families.push_back(CovFamily{o, members});
      size_t l = 0;
      while (l < ms.size() &&
             choice[l] + 1 == int(A.families_of(ms[l]).size())) {
        choice[l] = 0;
        ++l;
      }
      if (l == ms.size()) break;
      ++choice[l];
    }
  }
  L.rebuild_index();

  // concatenation: S's copies of each component come before T's
  for (int a = 0; a < n_obj; ++a)
    for (int b = 0; b < n_obj; ++b) {
      const auto &S = P.multisets[a];
      const auto &T = P.multisets[b];
      if (int(S.size() + T.size()) > size_bound) continue;
      std::vector<int> U(S);
      U.insert(U.end(), T.begin(), T.end());
      std::sort(U.begin(), U.end());
      int u = obj_index.at(U);
      std::vector<int> al, ar;
      for (size_t i = 0; i < S.size(); ++i) {
        int before = int(std::lower_bound(U.begin(), U.end(), S[i]) - U.begin());
        int rank = int(i) - int(std::lower_bound(S.begin(), S.end(), S[i]) - S.begin());
        al.push_back(before + rank);
      }
      for (size_t i = 0; i < T.size(); ++i) {
        int before = int(std::lower_bound(U.begin(), U.end(), T[i]) - U.begin());
        int s_copies = int(std::upper_bound(S.begin(), S.end(), T[i]) -
                           std::lower_bound(S.begin(), S.end(), T[i]));
        int rank = int(i) - int(std::lower_bound(T.begin(), T.end(), T[i]) - T.begin());
        ar.push_back(before + s_copies + rank);
      }
      std::vector<int> cl(S.size()), cr(T.size());
      for (size_t i = 0; i < S.size(); ++i) cl[i] = bc.identity(S[i]);
      for (size_t i = 0; i < T.size(); ++i) cr[i] = bc.identity(T[i]);
      CoprodEntry e;
      e.obj = u;
      e.inl = find_mor(a, u, al, cl);
      e.inr = find_mor(b, u, ar, cr);
      P.table[{a, b}] = e;
    }

  P.obj_embed.assign(bc.n_objects(), -1);
  for (int o = 0; o < bc.n_objects(); ++o)
    P.obj_embed[o] = o == A.initial ? C.O : obj_index.at({o});
  P.mor_embed.assign(bc.n_morphisms(), -1);
  for (int m = 0; m < bc.n_morphisms(); ++m) {
    if (bc.src(m) == A.initial) {
      P.mor_embed[m] = find_mor(C.O, P.obj_embed[bc.dst(m)], {}, {});
    } else {
      P.mor_embed[m] =
          find_mor(P.obj_embed[bc.src(m)], P.obj_embed[bc.dst(m)], {0}, {m});
    }
  }
  return P;
}

BEnv make_benv(const CminPackage &P) {
  BEnv env = make_benv(P.C, P.lifted, P.table);
  env.cov.is_covering = [&P](int target, const std::vector<int> &maps) {
    return P.is_multiset_covering(target, maps);
  };
  return env;
}

json cmin_to_json(const CminPackage &P) {
  json objs = json::array();
  for (size_t i = 0; i < P.multisets.size(); ++i) {
    json comps = json::array();
    for (int b : P.multisets[i]) comps.push_back(P.base.cat.obj_id(b));
    objs.push_back({{"id", P.C.cat.obj_id(int(i))}, {"components", comps}});
  }
  int m_count = 0;
  for (char c : P.C.inM) m_count += c;
  json embed = json::object();
  for (int o = 0; o < P.base.cat.n_objects(); ++o)
    embed[P.base.cat.obj_id(o)] = P.C.cat.obj_id(P.obj_embed[o]);
  return {{"bound", P.bound},
          {"objects", objs},
          {"object_count", P.C.cat.n_objects()},
          {"morphism_count", P.C.cat.n_morphisms()},
          {"m_count", m_count},
          {"distinguished_count", P.C.distinguished.size()},
          {"embedding", embed}};
}

}  // namespace sqk
