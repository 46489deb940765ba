#pragma once

#include <string>
#include <vector>

namespace octg2 {

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // gap / violation count, whatever the check measures
  double tol = 0.0;       // threshold it was held against
};

// Suites: octonion, representation, g2-cacciatori, g2-arenas, dims, torus,
// param.  Each aggregates the module's invariants; names are stable (they
// appear in CI logs).
std::vector<std::string> verify_suite_names();
std::vector<Check> verify_suite(const std::string& suite);

}  // namespace octg2
