#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sqk {

using json = nlohmann::json;

// Thrown for malformed fixtures, unknown ids, bad options. The command
// layer maps it to status 2 (input error).
struct input_error : std::runtime_error {
  explicit input_error(const std::string &what) : std::runtime_error(what) {}
};

// Parses "p/q" or "p" (q > 0 after canonicalization). Rejects anything else.
mpq_class parse_rat(const std::string &s);

// Canonical form: lowest terms, q > 0, "p" when q == 1.
std::string rat_str(const mpq_class &q);

mpq_class rat_from_json(const json &j);
json rat_to_json(const mpq_class &q);

std::vector<mpq_class> rat_vec_from_json(const json &j);
json rat_vec_to_json(const std::vector<mpq_class> &v);

}  // namespace sqk
