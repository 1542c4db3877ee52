#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sqk {

using json = nlohmann::json;

enum class Status { Pass, Fail, Inconclusive, Error };

const char *status_str(Status s);

// One verdict line. `label` distinguishes exhaustive from sampled checks
// where the distinction matters; empty otherwise.
struct CheckItem {
  std::string name;
  Status status = Status::Pass;
  json witness;  // null unless the check produced one
  std::string label;

  static CheckItem pass(std::string name, std::string label = "");
  static CheckItem fail(std::string name, json witness, std::string label = "");
  static CheckItem inconclusive(std::string name, json witness = nullptr);
  static CheckItem error(std::string name, json witness);
};

struct Report {
  std::string command;
  unsigned long long seed = 0;
  long long elapsed_ms = 0;
  std::vector<CheckItem> items;

  void add(CheckItem item) { items.push_back(std::move(item)); }
  void require(const std::string &name, bool ok, json witness = nullptr,
               const std::string &label = "");

  bool all_passed() const;
  // Worst status wins: Error > Fail > Inconclusive > Pass.
  Status overall() const;

  // deterministic=true zeroes elapsed_ms so identical inputs give identical
  // bytes; the human rendering keeps real timing.
  json to_json(bool deterministic) const;
  std::string to_text() const;
};

}  // namespace sqk
