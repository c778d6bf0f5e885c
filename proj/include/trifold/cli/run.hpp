#pragma once

#include "trifold/cli/config.hpp"
#include "trifold/cli/report.hpp"

namespace trifold::cli {

/// Inputs of one trial, drawn from (seed, index) alone.
struct Instance {
  int index = 0;
  Matrix3 omega;
  std::optional<Matrix3> lambda;
  MobiusParameters mobius, mobius2;
};

Instance make_instance(const RunConfig& c, int index);

VerificationReport run(const RunConfig& config);

}  // namespace trifold::cli
