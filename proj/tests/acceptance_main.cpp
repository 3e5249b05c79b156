// Release gate: runs every acceptance criterion and the golden-data check,
// printing one verdict line per criterion. Documented bound violations are
// printed as XFAIL with their measured values; only unexpected failures make
// the binary exit nonzero.

#include <cstdio>
#include <cstring>
#include <string>

#include "ladder/acceptance.hpp"
#include "ladder/golden.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  std::string golden_path = "data/golden.csv";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    else if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc)
      golden_path = argv[++i];
  }

  const auto results = ladder::run_acceptance(quick);
  int unexpected = 0;
  for (const auto& r : results) {
    const char* tag = "PASS";
    if (r.status == ladder::CriterionResult::kFail) {
      tag = "FAIL";
      ++unexpected;
    } else if (r.status == ladder::CriterionResult::kExpectedFail) {
      tag = "XFAIL";
    }
    std::printf("criterion %2d [%s] %s%s%s\n", r.id, tag, r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
  }

  bool golden_ok = true;
  try {
    const auto checks =
        ladder::verify_golden(ladder::load_golden_file(golden_path), quick);
    for (const auto& c : checks)
      if (!c.pass) {
        golden_ok = false;
        std::printf("golden mismatch: %s at u=%g, 2N=%d (stored %.17g, "
                    "recomputed %.17g)\n",
                    c.row.quantity.c_str(), c.row.u, c.row.rungs, c.row.value,
                    c.recomputed);
      }
  } catch (const std::exception& e) {
    golden_ok = false;
    std::printf("golden file error: %s\n", e.what());
  }
  std::printf("golden data  [%s]\n", golden_ok ? "PASS" : "FAIL");
  if (!golden_ok) ++unexpected;

  std::printf("%s (%d unexpected failure%s)\n",
              unexpected == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED",
              unexpected, unexpected == 1 ? "" : "s");
  return unexpected == 0 ? 0 : 1;
}
