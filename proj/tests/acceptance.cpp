// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "ngroup/verify.hpp"

int main() {
  ngroup::acceptance::Options const opt;
  bool all = true;
  for (auto const& criterion : ngroup::acceptance::all_criteria()) {
    auto const c = criterion(opt);
    all = all && c.passed;
    std::cout << ngroup::acceptance::format(c) << std::endl;
  }
  std::cout << (all ? "all acceptance criteria pass" : "acceptance FAILED") << std::endl;
  return all ? 0 : 1;
}
