// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <cstdio>

#include "sigma1/acceptance.hpp"

int main() {
  bool all = true;
  for (const sigma1::CriterionResult& r : sigma1::run_acceptance()) {
    std::printf("[%s] %02d %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.empty() ? "" : ": ", r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
