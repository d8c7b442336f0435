// One line per acceptance criterion; exit status is nonzero unless all pass.
#include <iostream>

#include "evokit/evokit.hpp"

int main() {
  bool ok = true;
  evokit::run_all_checks({}, [&](const evokit::CheckResult& r) {
    std::cout << evokit::format_result(r) << std::endl;
    ok = ok && r.verdict == evokit::Verdict::Pass;
  });
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
