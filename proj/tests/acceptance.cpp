// Runs the full battery of structural checks, printing one line per criterion.
#include <cstdio>
#include <thread>

#include "psts/verify.hpp"

int main() {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  auto report = psts::run_paper_suite({}, workers);
  int idx = 0;
  for (const auto& e : report.entries) {
    ++idx;
    std::printf("criterion %2d %-4s %s (%.2fs)%s%s\n", idx,
                e.status == "pass" ? "PASS" : "FAIL", e.id.c_str(), e.seconds,
                e.details.empty() ? "" : " -- ", e.details.c_str());
  }
  std::printf("%s\n", report.all_passed() ? "ALL CRITERIA PASSED" : "FAILURES PRESENT");
  return report.all_passed() ? 0 : 1;
}
