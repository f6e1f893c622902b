#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bilv {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Effective worker count: `requested` when positive, else the hardware
// count, both capped by the BILV_THREADS environment variable.
int thread_cap(int requested);

// Every identity check that applies at this k, in a fixed order. Checks
// whose symbolic cost explodes with k are included only below their cap.
// Exceptions inside a check are caught and reported as failures.
std::vector<CheckResult> run_all(int k, uint64_t seed = 20240601, int threads = 0);

}  // namespace bilv
