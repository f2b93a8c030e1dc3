#include <cstdio>

#include "fsg/selftest.hpp"

int main() {
  bool all = true;
  for (const fsg::CriterionResult& r : fsg::run_acceptance()) {
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
