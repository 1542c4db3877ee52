#include "support/report.hpp"

#include <sstream>

namespace sqk {

const char *status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::Error: return "error";
  }
  return "?";
}

CheckItem CheckItem::pass(std::string name, std::string label) {
  return CheckItem{std::move(name), Status::Pass, nullptr, std::move(label)};
}
CheckItem CheckItem::fail(std::string name, json witness, std::string label) {
  return CheckItem{std::move(name), Status::Fail, std::move(witness),
                   std::move(label)};
}
CheckItem CheckItem::inconclusive(std::string name, json witness) {
  return CheckItem{std::move(name), Status::Inconclusive, std::move(witness),
                   ""};
}
CheckItem CheckItem::error(std::string name, json witness) {
  return CheckItem{std::move(name), Status::Error, std::move(witness), ""};
}

void Report::require(const std::string &name, bool ok, json witness,
                     const std::string &label) {
  if (ok)
    add(CheckItem::pass(name, label));
  else
    add(CheckItem::fail(name, std::move(witness), label));
}

bool Report::all_passed() const { return overall() == Status::Pass; }

Status Report::overall() const {
  Status worst = Status::Pass;
  auto rank = [](Status s) {
    switch (s) {
      case Status::Pass: return 0;
      case Status::Inconclusive: return 1;
      case Status::Fail: return 2;
      case Status::Error: return 3;
    }
    return 0;
  };
  for (const auto &it : items)
    if (rank(it.status) > rank(worst)) worst = it.status;
  return worst;
}

json Report::to_json(bool deterministic) const {
  json verdicts = json::array();
  for (const auto &it : items) {
    json v;
    v["name"] = it.name;
    v["status"] = status_str(it.status);
    if (!it.witness.is_null()) v["witness"] = it.witness;
    if (!it.label.empty()) v["label"] = it.label;
    verdicts.push_back(std::move(v));
  }
  json j;
  j["command"] = command;
  j["verdicts"] = std::move(verdicts);
  j["seed"] = seed;
  j["elapsed_ms"] = deterministic ? 0 : elapsed_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << status_str(overall()) << " (" << items.size()
     << " checks, " << elapsed_ms << " ms, seed " << seed << ")\n";
  for (const auto &it : items) {
    os << "  [" << status_str(it.status) << "] " << it.name;
    if (!it.label.empty()) os << " (" << it.label << ")";
    if (!it.witness.is_null()) os << "  witness: " << it.witness.dump();
    os << "\n";
  }
  return os.str();
}

}  // namespace sqk
