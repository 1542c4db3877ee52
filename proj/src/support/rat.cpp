#include "support/rat.hpp"

#include <cctype>

namespace sqk {

static bool digits_only(const std::string &s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpq_class parse_rat(const std::string &s) {
  size_t slash = s.find('/');
  size_t num_beg = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_only(s, num_beg, num_end))
    throw input_error("bad rational literal: '" + s + "'");
  if (slash != std::string::npos) {
    if (!digits_only(s, slash + 1, s.size()))
      throw input_error("bad rational literal: '" + s + "'");
  }
  mpq_class q(s);
  if (q.get_den() == 0) throw input_error("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const mpq_class &q) { return q.get_str(); }

mpq_class rat_from_json(const json &j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer())
    return parse_rat(std::to_string(j.get<long long>()));
  throw input_error("rational must be a \"p/q\" string, got " + j.dump());
}

json rat_to_json(const mpq_class &q) { return json(rat_str(q)); }

std::vector<mpq_class> rat_vec_from_json(const json &j) {
  if (!j.is_array()) throw input_error("expected array of rationals");
  std::vector<mpq_class> v;
  v.reserve(j.size());
  for (const auto &e : j) v.push_back(rat_from_json(e));
  return v;
}

json rat_vec_to_json(const std::vector<mpq_class> &v) {
  json j = json::array();
  for (const auto &q : v) j.push_back(rat_str(q));
  return j;
}

}  // namespace sqk
