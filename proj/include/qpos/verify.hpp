#pragma once

#include <string>
#include <vector>

namespace qpos {

// Self-check driver shared by the CLI and the test suite.  Each suite walks
// every isomorphism class up to max_n and cross-validates one identity.

struct VerifyOptions {
  int max_n = 5;   // 1..6
  int trunc_m = 4; // expansion cutoff for the suites that truncate
  std::vector<std::string> suites; // empty = all suites
  int threads = 1;
};

struct VerifyOutcome {
  bool ok = true;
  std::string report; // one line per suite / per n, '\n'-terminated
};

// canonical suite order
std::vector<std::string> verify_suite_names();

VerifyOutcome run_verify(const VerifyOptions& opt);

// counts classes per n and collisions of the q=0 expansion
VerifyOutcome run_survey(int max_n, int threads = 1);

// looks for two classes at exactly n with equal q=0 expansion but
// different q-expansion; reports the first separating coefficient
VerifyOutcome run_collision_search(int n, int threads = 1);

}  // namespace qpos
