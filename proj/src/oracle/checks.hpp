#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"

namespace starprod::oracle {

// One formula-vs-enumeration comparison. A budget overflow is a failing case
// whose detail names the error; it is never skipped silently.
struct CheckCase {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CheckGrid {
  std::uint64_t qmax = 3;
  std::size_t nmax = 5;
  unsigned threads = 1;
  EnumBudget budget;
};

// Known checks: kernel, zerodiag, intersection, mds, support, jensen.
const std::vector<std::string>& check_names();
// Errors: InvalidArgument for an unknown check name.
std::vector<CheckCase> run_check(const std::string& name, const CheckGrid& grid);

// Prime powers in [2, qmax].
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t qmax);

}  // namespace starprod::oracle
