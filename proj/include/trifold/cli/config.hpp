#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trifold/typea/typea.hpp"
#include "trifold/typeb/system.hpp"

namespace trifold::cli {

/// Invalid configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Names accepted in "checks", in default battery order.
const std::vector<std::string>& known_checks();

struct LambdaSpec {
  enum class Kind { Random, Matrix, Symbolic, Gl2, GlN };
  Kind kind = Kind::Random;
  Matrix3 matrix;
  MobiusParameters mobius;
  int n = 3;
};

struct RunConfig {
  /// Absent means a random integer matrix per trial.
  std::optional<Matrix3> omega;
  bool omega_symbolic = false;
  std::string f_text = "formal";
  FSpec fspec = FSpec::formal();
  LambdaSpec lambda;
  std::vector<std::string> checks = known_checks();
  std::uint64_t seed = 0;
  int trials = 1;
  unsigned max_jet_order = Frame::kDefaultBudget;

  /// Canonical form echoed into reports.
  nlohmann::json echo() const;
};

/// Parses a rational-coefficient expression in z over +, -, *, /, ^ and
/// parentheses; exponents are non-negative integer literals.
RDE parse_expression(std::string_view text, const FramePtr& zframe);

RunConfig parse_config(std::string_view text);

/// Re-parses f for the current jet budget and checks f'' != 0.
void set_f(RunConfig& config, const std::string& text);

}  // namespace trifold::cli
