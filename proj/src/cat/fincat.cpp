#include "cat/fincat.hpp"

#include <algorithm>

namespace sqk {

int FinCategory::add_object(const std::string &id) {
  if (obj_index_.count(id)) throw input_error("duplicate object id: " + id);
  int idx = n_objects();
  obj_ids_.push_back(id);
  obj_index_[id] = idx;
  identity_.push_back(-1);
  return idx;
}

int FinCategory::add_morphism(const std::string &id, int src, int dst) {
  if (mor_index_.count(id)) throw input_error("duplicate morphism id: " + id);
  int idx = n_morphisms();
  mor_ids_.push_back(id);
  mor_index_[id] = idx;
  src_.push_back(src);
  dst_.push_back(dst);
  return idx;
}

void FinCategory::set_identity(int obj, int mor) { identity_[obj] = mor; }

void FinCategory::set_comp(int g, int f, int gf) { comp_[key(g, f)] = gf; }

void FinCategory::finalize() {
  int n = n_objects();
  hom_.assign(static_cast<size_t>(n) * n, {});
  into_.assign(n, {});
  outof_.assign(n, {});
  std::vector<int> order(n_morphisms());
  for (int m = 0; m < n_morphisms(); ++m) order[m] = m;
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return mor_ids_[a] < mor_ids_[b]; });
  for (int m : order) {
    hom_[static_cast<size_t>(src_[m]) * n + dst_[m]].push_back(m);
    into_[dst_[m]].push_back(m);
    outof_[src_[m]].push_back(m);
  }
  finalized_ = true;
}

int FinCategory::find_object(const std::string &id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::find_morphism(const std::string &id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? -1 : it->second;
}

int FinCategory::compose(int g, int f) const {
  auto it = comp_.find(key(g, f));
  return it == comp_.end() ? -1 : it->second;
}

const std::vector<int> &FinCategory::hom(int a, int b) const {
  return hom_[static_cast<size_t>(a) * n_objects() + b];
}

FinCategory FinCategory::parse(const json &j, Report *rep) {
  auto complain = [&](const std::string &msg, json witness) {
    if (rep)
      rep->add(CheckItem::error(msg, std::move(witness)));
    else
      throw input_error(msg + ": " + witness.dump());
  };

  FinCategory c;
  if (!j.is_object()) throw input_error("category fixture must be an object");
  if (!j.contains("objects") || !j["objects"].is_array())
    throw input_error("category fixture needs an \"objects\" array");
  for (const auto &o : j["objects"]) {
    if (!o.is_string()) throw input_error("object ids must be strings");
    std::string id = o.get<std::string>();
    if (c.obj_index_.count(id)) {
      complain("duplicate object id", id);
      continue;
    }
    c.add_object(id);
  }

  if (!j.contains("morphisms") || !j["morphisms"].is_array())
    throw input_error("category fixture needs a \"morphisms\" array");
  for (const auto &m : j["morphisms"]) {
    if (!m.is_object() || !m.contains("id") || !m.contains("src") ||
        !m.contains("dst"))
      throw input_error("morphism entries need id/src/dst");
    std::string id = m["id"].get<std::string>();
    int s = c.find_object(m["src"].get<std::string>());
    int d = c.find_object(m["dst"].get<std::string>());
    if (s < 0 || d < 0) {
      complain("morphism references unknown object", m);
      continue;
    }
    if (c.mor_index_.count(id)) {
      complain("duplicate morphism id", id);
      continue;
    }
    c.add_morphism(id, s, d);
  }

  if (j.contains("identities")) {
    if (!j["identities"].is_object())
      throw input_error("\"identities\" must be an object map");
    for (auto it = j["identities"].begin(); it != j["identities"].end(); ++it) {
      int o = c.find_object(it.key());
      int m = c.find_morphism(it.value().get<std::string>());
      if (o < 0 || m < 0) {
        complain("identity entry references unknown id",
                 {{it.key(), it.value()}});
        continue;
      }
      if (c.src(m) != o || c.dst(m) != o) {
        complain("identity morphism is not an endomorphism of its object",
                 {{it.key(), it.value()}});
        continue;
      }
      c.set_identity(o, m);
    }
  }

  if (j.contains("comp")) {
    if (!j["comp"].is_array()) throw input_error("\"comp\" must be an array");
    for (const auto &row : j["comp"]) {
      if (!row.is_array() || row.size() != 3)
        throw input_error("comp rows must be [g, f, gf]");
      int g = c.find_morphism(row[0].get<std::string>());
      int f = c.find_morphism(row[1].get<std::string>());
      int gf = c.find_morphism(row[2].get<std::string>());
      if (g < 0 || f < 0 || gf < 0) {
        complain("comp row references unknown morphism id", row);
        continue;
      }
      if (c.dst(f) != c.src(g)) {
        complain("comp row lists a non-composable pair", row);
        continue;
      }
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) {
        complain("composite has wrong endpoints", row);
        continue;
      }
      c.set_comp(g, f, gf);
    }
  }

  c.finalize();
  return c;
}

FinCategory FinCategory::from_json(const json &j) { return parse(j, nullptr); }

FinCategory FinCategory::from_json(const json &j, Report &rep) {
  return parse(j, &rep);
}

json FinCategory::to_json() const {
  json j;
  j["objects"] = obj_ids_;
  json mors = json::array();
  for (int m = 0; m < n_morphisms(); ++m)
    mors.push_back({{"id", mor_ids_[m]},
                    {"src", obj_ids_[src_[m]]},
                    {"dst", obj_ids_[dst_[m]]}});
  j["morphisms"] = std::move(mors);
  json ids = json::object();
  for (int o = 0; o < n_objects(); ++o)
    if (identity_[o] >= 0) ids[obj_ids_[o]] = mor_ids_[identity_[o]];
  j["identities"] = std::move(ids);
  json comp = json::array();
  // Deterministic row order: by (g, f) morphism index, which follows
  // insertion order of the fixture.
  std::vector<std::pair<std::uint64_t, int>> rows(comp_.begin(), comp_.end());
  std::sort(rows.begin(), rows.end());
  for (const auto &[k, gf] : rows) {
    int g = static_cast<int>(k >> 32);
    int f = static_cast<int>(k & 0xffffffffu);
    comp.push_back({mor_ids_[g], mor_ids_[f], mor_ids_[gf]});
  }
  j["comp"] = std::move(comp);
  return j;
}

json FinCategory::mor_witness(int m) const {
  if (m < 0) return nullptr;
  return {{"id", mor_ids_[m]},
          {"src", obj_ids_[src_[m]]},
          {"dst", obj_ids_[dst_[m]]}};
}

void FinCategory::check_laws(Report &rep) const {
  bool ok_ids = true;
  for (int o = 0; o < n_objects(); ++o) {
    if (identity_[o] < 0) {
      rep.add(CheckItem::fail("identity-present", obj_ids_[o]));
      ok_ids = false;
    }
  }
  if (ok_ids) rep.add(CheckItem::pass("identity-present"));

  // Totality: every composable pair has a table entry.
  int missing = 0;
  json missing_witness;
  for (int f = 0; f < n_morphisms(); ++f)
    for (int g : outof_[dst_[f]])
      if (compose(g, f) < 0) {
        if (missing == 0)
          missing_witness = {{"g", mor_ids_[g]}, {"f", mor_ids_[f]}};
        ++missing;
      }
  if (missing)
    rep.add(CheckItem::fail("composition-total",
                            {{"missing", missing}, {"first", missing_witness}}));
  else
    rep.add(CheckItem::pass("composition-total"));

  bool unit_ok = true;
  for (int f = 0; f < n_morphisms() && unit_ok; ++f) {
    int il = identity_[dst_[f]], ir = identity_[src_[f]];
    if (ir >= 0 && compose(f, ir) != f) {
      rep.add(CheckItem::fail("identity-law",
                              {{"f", mor_ids_[f]}, {"side", "right"}}));
      unit_ok = false;
    }
    if (unit_ok && il >= 0 && compose(il, f) != f) {
      rep.add(CheckItem::fail("identity-law",
                              {{"f", mor_ids_[f]}, {"side", "left"}}));
      unit_ok = false;
    }
  }
  if (unit_ok) rep.add(CheckItem::pass("identity-law"));

  bool assoc_ok = true;
  for (int f = 0; f < n_morphisms() && assoc_ok; ++f) {
    for (int g : outof_[dst_[f]]) {
      int gf = compose(g, f);
      if (gf < 0) continue;
      for (int h : outof_[dst_[g]]) {
        int hg = compose(h, g);
        if (hg < 0) continue;
        int a = compose(h, gf), b = compose(hg, f);
        if (a < 0 || b < 0) continue;  // totality already reported
        if (a != b) {
          rep.add(CheckItem::fail(
              "associativity",
              {{"h", mor_ids_[h]}, {"g", mor_ids_[g]}, {"f", mor_ids_[f]},
               {"h(gf)", mor_ids_[a]}, {"(hg)f", mor_ids_[b]}}));
          assoc_ok = false;
          break;
        }
      }
      if (!assoc_ok) break;
    }
  }
  if (assoc_ok) rep.add(CheckItem::pass("associativity"));
}

bool FinCategory::is_mono(int f) const {
  int a = src_[f];
  for (int z = 0; z < n_objects(); ++z) {
    const auto &hz = hom(z, a);
    for (size_t i = 0; i < hz.size(); ++i)
      for (size_t k = i + 1; k < hz.size(); ++k)
        if (compose(f, hz[i]) == compose(f, hz[k])) return false;
  }
  return true;
}

std::optional<int> FinCategory::inverse(int f) const {
  int a = src_[f], b = dst_[f];
  for (int g : hom(b, a))
    if (compose(g, f) == identity_[a] && compose(f, g) == identity_[b])
      return g;
  return std::nullopt;
}

bool FinCategory::is_initial(int obj) const {
  for (int x = 0; x < n_objects(); ++x)
    if (hom(obj, x).size() != 1) return false;
  return true;
}

bool FinCategory::is_strict_initial(int obj) const {
  if (!is_initial(obj)) return false;
  for (int x = 0; x < n_objects(); ++x)
    if (!hom(x, obj).empty() && !objects_isomorphic(x, obj)) return false;
  return true;
}

bool FinCategory::objects_isomorphic(int a, int b) const {
  if (a == b) return true;
  for (int f : hom(a, b))
    if (is_iso(f)) return true;
  return false;
}

bool FinCategory::is_pullback(int a, int b, int apex, int p, int q) const {
  if (src(p) != apex || src(q) != apex) return false;
  if (dst(p) != src(a) || dst(q) != src(b)) return false;
  int ap = compose(a, p), bq = compose(b, q);
  if (ap < 0 || ap != bq) return false;
  for (int z = 0; z < n_objects(); ++z) {
    const auto &hu = hom(z, src(a));
    const auto &hv = hom(z, src(b));
    if (hu.empty() || hv.empty()) continue;
    const auto &hw = hom(z, apex);
    for (int u : hu)
      for (int v : hv) {
        if (compose(a, u) != compose(b, v)) continue;
        int count = 0;
        for (int w : hw)
          if (compose(p, w) == u && compose(q, w) == v) {
            if (++count > 1) return false;
          }
        if (count != 1) return false;
      }
  }
  return true;
}

std::vector<PullbackCone> FinCategory::all_pullbacks(int a, int b) const {
  std::vector<PullbackCone> out;
  int A = src(a), B = src(b);
  // Representability pruning: a universal apex P has |hom(Z,P)| equal to the
  // number of commuting cones from Z, for every Z.
  std::vector<long long> cones(n_objects(), 0);
  for (int z = 0; z < n_objects(); ++z) {
    for (int u : hom(z, A))
      for (int v : hom(z, B))
        if (compose(a, u) == compose(b, v)) ++cones[z];
  }
  for (int apex = 0; apex < n_objects(); ++apex) {
    bool sizes_ok = true;
    for (int z = 0; z < n_objects() && sizes_ok; ++z)
      if (static_cast<long long>(hom(z, apex).size()) != cones[z])
        sizes_ok = false;
    if (!sizes_ok) continue;
    for (int p : hom(apex, A))
      for (int q : hom(apex, B))
        if (compose(a, p) == compose(b, q) && is_pullback(a, b, apex, p, q))
          out.push_back({apex, p, q});
  }
  return out;
}

std::optional<PullbackCone> FinCategory::pullback(int a, int b) const {
  auto cones = all_pullbacks(a, b);
  if (cones.empty()) return std::nullopt;
  auto best = std::min_element(
      cones.begin(), cones.end(), [this](const auto &x, const auto &y) {
        return std::make_tuple(obj_id(x.apex), mor_id(x.p), mor_id(x.q)) <
               std::make_tuple(obj_id(y.apex), mor_id(y.p), mor_id(y.q));
      });
  return *best;
}

Report validate_category(const json &j) {
  Report rep;
  rep.command = "validate-cat";
  FinCategory c = FinCategory::from_json(j, rep);
  c.check_laws(rep);
  return rep;
}

}  // namespace sqk
