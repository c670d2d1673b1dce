#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lcplab {

// One regression check of the reproduction suite. run() returns an empty
// string on success and a diagnostic on failure; exceptions are caught by
// the runner and reported as failures too.
struct ReproCheck {
  std::string name;
  std::function<std::string()> run;
};

struct ReproResult {
  std::string name;
  bool pass = false;
  std::string message;
};

const std::vector<ReproCheck>& repro_checks();
ReproResult run_repro_check(const ReproCheck& c);
std::vector<ReproResult> run_repro_checks();

}  // namespace lcplab
