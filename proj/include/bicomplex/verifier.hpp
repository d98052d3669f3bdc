#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicomplex/io.hpp"

namespace bicomplex::verify {

struct CheckConfig {
  std::string check_id;
  std::uint64_t seed = 42;
  long trials = 0;  ///< 0 selects the check's default trial count
  long min_dim = 1;
  long max_dim = 8;
  double tol = 1e-10;
};

/// Outcome of one check. `worst_witness` holds the inputs of the trial that
/// produced `worst_value`; feeding it to `reevaluate` reproduces the value.
struct CheckReport {
  std::string check_id;
  bool pass = false;
  double worst_value = 0.0;
  double bound = 0.0;  ///< pass <=> worst_value <= bound
  io::Json worst_witness;
  long trials_run = 0;
  std::uint64_t seed = 0;
  double elapsed = 0.0;  ///< seconds
};

/// Inputs of a single trial.
struct Witness {
  std::vector<Bicomplexd> scalars;
  std::vector<TVectord> vectors;
  std::vector<TMatrixd> matrices;
  std::vector<double> reals;
};

io::Json to_json(const Witness& w);
Witness witness_from_json(const io::Json& j);

/// Identifiers of every check, in execution order.
const std::vector<std::string>& check_ids();
long default_trials(const std::string& check_id);

/// Throws UnknownCheckId, or std::invalid_argument for a malformed config.
CheckReport run_check(const CheckConfig& cfg);
/// trials = 0 runs each check with its default count.
std::vector<CheckReport> run_all(std::uint64_t seed, long trials = 0, double tol = 1e-10);

/// Re-evaluates a check on a stored witness.
double reevaluate(const CheckConfig& cfg, const io::Json& witness);

/// One JSON line per report; `elapsed` is included only on request so that
/// output is byte-identical across runs.
io::Json to_json(const CheckReport& report, bool with_elapsed = false);

}  // namespace bicomplex::verify
