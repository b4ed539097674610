#pragma once

#include <string>
#include <vector>

namespace hkgeom::cli {

// 0 success, 1 usage or input error, 2 a verified identity did not hold.
enum ExitCode : int { ok = 0, usage_error = 1, verification_failed = 2 };

struct Outcome {
  int exit_code = ok;
  std::string out;
  std::string err;
};

// `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

// Thread count from HKGEOM_THREADS, or 1.
unsigned default_threads();

}  // namespace hkgeom::cli
