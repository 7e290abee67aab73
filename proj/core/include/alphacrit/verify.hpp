#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alphacrit {

struct SweepFailure {
  std::string instance;
  std::string message;
};

struct SweepResult {
  std::string suite;
  long long checked = 0;
  std::vector<SweepFailure> failures;
  bool pass() const { return failures.empty(); }
};

struct SweepOptions {
  int max_n = 0;      // 0 picks the suite default
  int instances = 0;  // 0 picks the suite default
  uint64_t seed = 20260816;
  int threads = 1;
};

// Random-instance property sweeps for the basic layers.
SweepResult verify_graph_core(const SweepOptions& opt);
SweepResult verify_solver(const SweepOptions& opt);
SweepResult verify_ops(const SweepOptions& opt);
SweepResult verify_reduce(const SweepOptions& opt);

// Join stability identity, the six-condition characterization (forward and
// single-violation converse), and the K1-reduction equivalence.
SweepResult verify_join_theorem(const SweepOptions& opt);

// Predicted maximal families vs brute-force enumeration on compositions.
SweepResult verify_ev_maximal(const SweepOptions& opt);
SweepResult verify_join_maximal(const SweepOptions& opt);

// Three-part reducibility characterization of joins.
SweepResult verify_basic_theorem(const SweepOptions& opt);

// Degree bound and defect facts over the alpha-critical census.
SweepResult verify_hajnal(const SweepOptions& opt);

// Defect 1 and defect 2 census classes against their closed forms.
SweepResult verify_defect_census(const SweepOptions& opt);

// Dispatch by suite name; "all" runs everything.
std::vector<SweepResult> run_suites(const std::string& name,
                                    const SweepOptions& opt);

std::vector<std::string> suite_names();

}  // namespace alphacrit
