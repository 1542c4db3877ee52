#include "k0/k0.hpp"

#include <algorithm>
#include <set>

namespace sqk {

namespace {

json mpz_to_json(const mpz_class &z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

void push_row(ZMat &rows, std::set<ZVec> &seen, ZVec row) {
  bool zero = std::all_of(row.begin(), row.end(),
                          [](const mpz_class &z) { return z == 0; });
  if (zero) return;
  if (seen.insert(row).second) rows.push_back(std::move(row));
}

}  // namespace

json AbelianGroupPresentation::to_json() const {
  json gens = json::array(), rels = json::array();
  for (const auto &g : generators) gens.push_back(g);
  for (const auto &row : relations) {
    json r = json::array();
    for (const auto &z : row) r.push_back(mpz_to_json(z));
    rels.push_back(std::move(r));
  }
  return {{"generators", gens}, {"relations", rels}};
}

json AbelianGroupInvariants::to_json() const {
  json t = json::array();
  for (const auto &d : torsion) t.push_back(mpz_to_json(d));
  return {{"rank", rank}, {"torsion", t}};
}

AbelianGroupPresentation k0_presentation_squares(const SquaresCategory &S) {
  AbelianGroupPresentation p;
  int g = S.cat.n_objects();
  for (int o = 0; o < g; ++o) p.generators.push_back(S.cat.obj_id(o));

  std::set<ZVec> seen;
  ZVec base(g, 0);
  base[S.O] = 1;
  push_row(p.relations, seen, base);
  for (const Square &s : S.distinguished) {
    ZVec row(g, 0);
    row[S.cat.src(s.f)] += 1;
    row[S.cat.dst(s.g)] += 1;
    row[S.cat.dst(s.f)] -= 1;
    row[S.cat.dst(s.h)] -= 1;
    push_row(p.relations, seen, std::move(row));
  }
  return p;
}

AbelianGroupPresentation k0_presentation_assembler(const CovCategory &A) {
  AbelianGroupPresentation p;
  std::vector<int> gen_of(A.cat.n_objects(), -1);
  for (int o = 0; o < A.cat.n_objects(); ++o) {
    if (o == A.initial) continue;
    gen_of[o] = static_cast<int>(p.generators.size());
    p.generators.push_back(A.cat.obj_id(o));
  }

  int g = static_cast<int>(p.generators.size());
  std::set<ZVec> seen;
  for (const CovFamily &f : A.families) {
    ZVec row(g, 0);
    if (gen_of[f.target] >= 0) row[gen_of[f.target]] += 1;
    // members with initial source were dropped by normalization
    for (int m : f.maps) row[gen_of[A.cat.src(m)]] -= 1;
    push_row(p.relations, seen, std::move(row));
  }
  return p;
}

AbelianGroupInvariants k0_invariants(const AbelianGroupPresentation &p) {
  int g = static_cast<int>(p.generators.size());
  SmithNF s = smith_normal_form(p.relations, g);
  AbelianGroupInvariants inv;
  int nonzero = 0;
  int n = std::min(static_cast<int>(p.relations.size()), g);
  for (int k = 0; k < n; ++k) {
    if (s.d[k][k] == 0) continue;
    ++nonzero;
    if (s.d[k][k] >= 2) inv.torsion.push_back(s.d[k][k]);
  }
  inv.rank = g - nonzero;
  return inv;
}

Report k0_compare_cmin(const CovCategory &A, int bound) {
  Report rep;
  rep.command = "k0-compare";
  if (bound < 2) {
    rep.add(CheckItem::inconclusive(
        "relation-witnesses",
        {{"problem", "coproduct relations only appear at bound 2"},
         {"bound", bound}}));
    return rep;
  }

  CminPackage P = build_cmin(A, bound);
  AbelianGroupPresentation pa = k0_presentation_assembler(A);
  AbelianGroupPresentation pc = k0_presentation_squares(P.C);
  int ga = static_cast<int>(pa.generators.size());
  int gc = static_cast<int>(pc.generators.size());

  // unit maps on generators: phi sends a base object to its singleton,
  // psi sends a multiset to the sum of its components
  std::vector<int> base_obj(ga, -1), sing(ga, -1);
  {
    int k = 0;
    for (int o = 0; o < A.cat.n_objects(); ++o) {
      if (o == A.initial) continue;
      base_obj[k] = o;
      sing[k] = P.obj_embed[o];
      ++k;
    }
  }
  std::vector<int> gen_of(A.cat.n_objects(), -1);
  for (int k = 0; k < ga; ++k) gen_of[base_obj[k]] = k;

  auto phi = [&](const ZVec &v) {
    ZVec u(gc, 0);
    for (int k = 0; k < ga; ++k) u[sing[k]] += v[k];
    return u;
  };
  auto psi = [&](const ZVec &v) {
    ZVec u(ga, 0);
    for (int t = 0; t < gc; ++t) {
      if (v[t] == 0) continue;
      for (int comp : P.multisets[t]) u[gen_of[comp]] += v[t];
    }
    return u;
  };

  RowSpan span_a(pa.relations, ga);
  RowSpan span_c(pc.relations, gc);

  auto membership = [&](const char *name, const ZMat &rows, auto &&map,
                        const RowSpan &span) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (!span.contains(map(rows[i]))) {
        rep.add(CheckItem::inconclusive(
            name, {{"problem", "image of a relation is not certified"},
                   {"relation", static_cast<int>(i)},
                   {"bound", bound}}));
        return;
      }
    rep.add(CheckItem::pass(name));
  };
  membership("phi-respects-relations", pa.relations, phi, span_c);
  membership("psi-respects-relations", pc.relations, psi, span_a);

  bool ok = true;
  for (int k = 0; k < ga && ok; ++k) {
    ZVec e(ga, 0);
    e[k] = 1;
    ZVec u = psi(phi(e));
    u[k] -= 1;
    if (!span_a.contains(u)) {
      rep.add(CheckItem::inconclusive(
          "psi-after-phi", {{"generator", pa.generators[k]}}));
      ok = false;
    }
  }
  if (ok) rep.add(CheckItem::pass("psi-after-phi"));

  ok = true;
  for (int t = 0; t < gc && ok; ++t) {
    ZVec e(gc, 0);
    e[t] = 1;
    ZVec u = phi(psi(e));
    u[t] -= 1;
    if (!span_c.contains(u)) {
      rep.add(CheckItem::inconclusive(
          "phi-after-psi", {{"generator", pc.generators[t]}, {"bound", bound}}));
      ok = false;
    }
  }
  if (ok) rep.add(CheckItem::pass("phi-after-psi"));

  AbelianGroupInvariants ia = k0_invariants(pa);
  AbelianGroupInvariants ic = k0_invariants(pc);
  if (ia == ic)
    rep.add(CheckItem::pass("invariants-agree"));
  else
    rep.add(CheckItem::inconclusive(
        "invariants-agree",
        {{"assembler", ia.to_json()}, {"model", ic.to_json()}}));
  return rep;
}

}  // namespace sqk
