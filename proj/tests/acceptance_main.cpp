// Acceptance suite: runs the ten pinned verification criteria and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "zzschur/report.hpp"

int main() {
  int jobs = 4;
  if (const char* env = std::getenv("ZZSCHUR_JOBS")) jobs = std::atoi(env);
  auto start = std::chrono::steady_clock::now();
  auto criteria = zzschur::acceptance_criteria(jobs);
  bool pass = true;
  for (auto& [title, thunk] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    zzschur::VerifyReport r = thunk();
    auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool ok = r.all_pass();
    pass = pass && ok;
    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", title.c_str(), secs);
    std::fflush(stdout);
    if (!ok)
      for (const auto& c : r.checks)
        if (!c.pass)
          std::printf("       failed: %s  %s\n", c.name.c_str(),
                      c.detail.c_str());
  }
  auto total = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
  std::printf("%s (%zu criteria, %.1fs)\n", pass ? "ALL PASS" : "FAILURES",
              criteria.size(), total);
  return pass ? 0 : 1;
}
