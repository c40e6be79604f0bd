// Randomized property suites: one entry per cataloged statement, driven by
// a deterministic generator so every report is reproducible from its seed.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "doublekit/complexes.hpp"
#include "doublekit/relative.hpp"

namespace doublekit {

// Deterministic 64-bit generator (splitmix64).  The standard library's
// distributions are implementation-defined, which would break byte-stable
// reports across toolchains; this one is pinned.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  uint64_t below(uint64_t bound);            // uniform in [0, bound)
  long range(long lo, long hi);              // uniform in [lo, hi]
  bool chance(unsigned percent);             // true with the given percentage

private:
  uint64_t state_;
};

// Size bounds for generated instances.
struct InstanceSpec {
  unsigned max_vars = 3;
  unsigned max_rank = 3;
  unsigned max_generators = 4;
  unsigned max_degree = 3;
  long coeff_bound = 5;
};

struct PropertyFailure {
  unsigned trial = 0;
  uint64_t seed = 0;         // per-trial derived seed
  std::string replay;        // session-grammar serialization of the instance
};

struct PropertyReport {
  std::string id;
  unsigned trials = 0;
  std::vector<PropertyFailure> failures;          // ordered by trial
  std::vector<std::pair<std::string, unsigned>> notes;  // label -> count
  double wall_ms = 0.0;

  bool pass() const { return failures.empty(); }
  std::string summary_line() const;  // "PROP <id> trials=<n> failures=<k>"
};

struct PropertyEntry {
  std::string id;
  std::string kind;  // "property" | "formal" | "out-of-scope" | "selftest"
  std::string summary;
};

// Every cataloged statement, in fixed order.
const std::vector<PropertyEntry>& property_catalog();
bool property_known(const std::string& id);

// Runs `trials` independent randomized checks of the property.  Trials are
// seeded individually from (seed, index), so the report is identical for a
// fixed seed regardless of thread count.  Throws on unknown id.
PropertyReport run_property(const std::string& id, unsigned trials,
                            uint64_t seed, const InstanceSpec& spec = {});

// Worker cap: DOUBLEKIT_THREADS when set (min 1), hardware concurrency
// otherwise.
unsigned verifier_thread_cap();

// Deterministic instance generator used by the suites; exposed for audits.
Submodule gen_submodule(const InstanceSpec& spec, uint64_t seed);

// Tally of (base exact, doubled exact) over randomized bounded complexes.
struct ExactnessExperiment {
  unsigned both = 0;
  unsigned base_only = 0;
  unsigned doubled_only = 0;  // any entry here with base false would refute
                              // the propagation implication
  unsigned neither = 0;
};
ExactnessExperiment exactness_experiment(unsigned trials, uint64_t seed,
                                         const InstanceSpec& spec = {});

// Writes one replay file per failure into directory `dir` (default: cwd),
// named replay-<id>-trial<k>.dk; returns the file names written.
std::vector<std::string> write_replay_files(const PropertyReport& report,
                                            const std::string& dir = ".");

}  // namespace doublekit
