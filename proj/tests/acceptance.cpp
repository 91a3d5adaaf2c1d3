// One line per acceptance criterion; exit status 1 when any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "galcov/acceptance.hpp"

int main(int argc, char **argv) {
  galcov::SuiteOptions opt;
  if (const char *s = std::getenv("GALCOV_SEED"))
    opt.seed = std::stoull(s);
  std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
  bool ok = true;
  for (int id = 1; id <= 8; ++id) {
    if (argc > 1 && std::to_string(id) != argv[1])
      continue;
    galcov::SuiteResult r = galcov::run_criterion(id, opt);
    std::printf("%s\n", galcov::format_line(r).c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
