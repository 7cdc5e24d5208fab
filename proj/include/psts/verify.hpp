#pragma once

#include <string>
#include <vector>

namespace psts {

struct CheckEntry {
  std::string id;
  std::string summary;
};

struct CheckOutcome {
  std::string id;
  std::string status;  // "pass", "fail", "skip"
  std::string details;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckOutcome> entries;
  bool all_passed() const;
};

// The full battery of structural checks, in fixed order.
std::vector<CheckEntry> list_checks();

// Run all checks (empty scope) or a subset by id. Unknown ids throw.
VerifyReport run_paper_suite(const std::vector<std::string>& scope = {}, int workers = 1);

std::string render_report(const VerifyReport& report);  // one line per check
std::string junit_xml(const VerifyReport& report);

}  // namespace psts
