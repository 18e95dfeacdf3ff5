#include "ctc/report.hpp"

#include <cstdio>

namespace ctc {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

ReportItem& Report::add(std::string check, Status status, nlohmann::json witness, std::string message) {
  items.push_back({std::move(check), status, std::move(witness), std::move(message), 0});
  return items.back();
}

ReportItem& Report::expect(std::string check, bool ok, nlohmann::json witness, std::string message) {
  return add(std::move(check), ok ? Status::pass : Status::fail, ok ? nlohmann::json() : std::move(witness),
             std::move(message));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto item : other.items) {
    if (!prefix.empty()) item.check = prefix + item.check;
    items.push_back(std::move(item));
  }
}

bool Report::all_pass() const { return exit_code() == 0; }

int Report::exit_code() const {
  int code = 0;
  for (const auto& it : items) {
    if (it.status == Status::error) return 2;
    if (it.status == Status::fail) code = 1;
  }
  return code;
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& it : items) {
    nlohmann::json j = {{"check", it.check}, {"status", status_name(it.status)}};
    if (!it.witness.is_null()) j["witness"] = it.witness;
    if (!it.message.empty()) j["message"] = it.message;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"items", std::move(arr)}}.dump();
}

std::string Report::to_text() const {
  std::string out;
  std::size_t fails = 0, errors = 0;
  for (const auto& it : items) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", it.elapsed_ms);
    out += "[" + std::string(status_name(it.status)) + "] " + it.check;
    if (it.elapsed_ms > 0) out += "  (" + std::string(ms) + ")";
    out += "\n";
    if (!it.message.empty()) out += "    " + it.message + "\n";
    if (!it.witness.is_null()) out += "    witness: " + it.witness.dump() + "\n";
    fails += it.status == Status::fail;
    errors += it.status == Status::error;
  }
  out += std::to_string(items.size()) + " checks, " + std::to_string(fails) + " failed, " + std::to_string(errors) +
         " errors\n";
  return out;
}

}  // namespace ctc
