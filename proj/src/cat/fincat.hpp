#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "support/report.hpp"
#include "support/rat.hpp"

namespace sqk {

// Pullback cone over a cospan (a: A->T <- B :b): legs p: apex->A, q: apex->B.
struct PullbackCone {
  int apex;
  int p;
  int q;
};

// Finite category with an explicit composition table. Objects and morphisms
// are dense indices internally; string ids are kept for fixtures, reports and
// deterministic tie-breaks.
class FinCategory {
 public:
  int add_object(const std::string &id);
  int add_morphism(const std::string &id, int src, int dst);
  void set_identity(int obj, int mor);
  void set_comp(int g, int f, int gf);
  void finalize();

  // Strict parse: throws input_error on structural problems.
  static FinCategory from_json(const json &j);
  // Lenient parse: structural problems become Error items; bad entries are
  // dropped so law checks can still run on the rest.
  static FinCategory from_json(const json &j, Report &rep);
  json to_json() const;

  // Identity and composition laws, totality of composition on composable
  // pairs, associativity. Structural issues are reported by the parse.
  void check_laws(Report &rep) const;

  int n_objects() const { return static_cast<int>(obj_ids_.size()); }
  int n_morphisms() const { return static_cast<int>(mor_ids_.size()); }
  const std::string &obj_id(int o) const { return obj_ids_[o]; }
  const std::string &mor_id(int m) const { return mor_ids_[m]; }
  int src(int m) const { return src_[m]; }
  int dst(int m) const { return dst_[m]; }
  int identity(int obj) const { return identity_[obj]; }
  int find_object(const std::string &id) const;
  int find_morphism(const std::string &id) const;

  // -1 when the pair is not composable or the table has no entry.
  int compose(int g, int f) const;
  const std::vector<int> &hom(int a, int b) const;
  const std::vector<int> &into(int b) const { return into_[b]; }
  const std::vector<int> &outof(int a) const { return outof_[a]; }

  bool is_mono(int f) const;
  std::optional<int> inverse(int f) const;
  bool is_iso(int f) const { return inverse(f).has_value(); }
  bool is_initial(int obj) const;
  bool is_strict_initial(int obj) const;
  bool objects_isomorphic(int a, int b) const;

  // Universal property of a given cone, checked against every competing cone.
  bool is_pullback(int a, int b, int apex, int p, int q) const;
  // Every universal cone for the cospan (they are all isomorphic).
  std::vector<PullbackCone> all_pullbacks(int a, int b) const;
  // Canonical choice: smallest apex id, then smallest leg ids.
  std::optional<PullbackCone> pullback(int a, int b) const;

  json mor_witness(int m) const;

 private:
  std::vector<std::string> obj_ids_;
  std::vector<std::string> mor_ids_;
  std::vector<int> src_, dst_;
  std::vector<int> identity_;
  std::unordered_map<std::string, int> obj_index_, mor_index_;
  std::unordered_map<std::uint64_t, int> comp_;
  std::vector<std::vector<int>> hom_;  // hom_[a * n_objects + b]
  std::vector<std::vector<int>> into_, outof_;
  bool finalized_ = false;

  static std::uint64_t key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }
  static FinCategory parse(const json &j, Report *rep);
};

// validate-cat entry point: structural report + law report.
Report validate_category(const json &j);

}  // namespace sqk
