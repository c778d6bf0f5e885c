#pragma once

#include <functional>
#include <string>

#include "trifold/diffalg/rde.hpp"
#include "trifold/diffalg/sqrt_ext.hpp"

namespace trifold {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// One named entry of a verification report.
struct VerificationCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  /// First nonzero residual (rendered) when failing.
  std::string residual;
  /// Conventions or details worth reporting alongside the outcome.
  std::string note;
  double elapsed_ms = 0;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Accumulates the residuals of one check. A check passes iff every
/// residual is exactly zero and every asserted condition holds.
class Residuals {
 public:
  void zero(const std::string& label, const RDE& r);
  void zero(const std::string& label, const SqrtExt& r);
  void holds(const std::string& label, bool ok, const std::string& detail = "");
  void note(const std::string& text);

  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  const std::string& notes() const { return notes_; }
  std::size_t count() const { return count_; }

 private:
  void fail(const std::string& text);

  std::string failure_;
  std::string notes_;
  std::size_t count_ = 0;
};

/// Runs body, times it, and turns kernel errors into a failed entry.
VerificationCheck run_check(std::string name, const std::function<void(Residuals&)>& body);

VerificationCheck skipped_check(std::string name, std::string reason);

}  // namespace trifold
