#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ctc {

enum class Status { pass, fail, error };

std::string_view status_name(Status s);

struct ReportItem {
  std::string check;
  Status status = Status::pass;
  nlohmann::json witness;  // null when there is nothing to show
  std::string message;
  double elapsed_ms = 0;
};

class Report {
 public:
  std::vector<ReportItem> items;

  ReportItem& add(std::string check, Status status, nlohmann::json witness = nullptr, std::string message = {});
  /// pass when `ok`, fail otherwise.
  ReportItem& expect(std::string check, bool ok, nlohmann::json witness = nullptr, std::string message = {});
  void append(const Report& other, const std::string& prefix = {});

  bool all_pass() const;
  /// 0 all pass, 1 some fail, 2 some error.
  int exit_code() const;

  /// Compact JSON with sorted keys; timings are left out so output is byte-stable.
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace ctc
