#include "trifold/check.hpp"

#include <chrono>

#include "trifold/diffalg/errors.hpp"

namespace trifold {
namespace {

constexpr std::size_t kMaxRendered = 4000;

std::string clip(std::string s) {
  if (s.size() > kMaxRendered) s = s.substr(0, kMaxRendered) + " ...";
  return s;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void Residuals::fail(const std::string& text) {
  if (failure_.empty()) failure_ = clip(text);
}

void Residuals::zero(const std::string& label, const RDE& r) {
  ++count_;
  if (!r.is_zero()) fail(label + ": " + r.to_string());
}

void Residuals::zero(const std::string& label, const SqrtExt& r) {
  ++count_;
  if (!r.is_zero()) fail(label + ": " + r.to_string());
}

void Residuals::holds(const std::string& label, bool ok, const std::string& detail) {
  ++count_;
  if (!ok) fail(detail.empty() ? label : label + ": " + detail);
}

void Residuals::note(const std::string& text) {
  if (!notes_.empty()) notes_ += "; ";
  notes_ += text;
}

VerificationCheck run_check(std::string name, const std::function<void(Residuals&)>& body) {
  VerificationCheck c;
  c.name = std::move(name);
  Residuals r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
    c.status = r.ok() ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = r.failure();
  } catch (const Error& e) {
    c.status = CheckStatus::Fail;
    c.residual = std::string("error: ") + e.what();
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  c.note = r.notes();
  return c;
}

VerificationCheck skipped_check(std::string name, std::string reason) {
  VerificationCheck c;
  c.name = std::move(name);
  c.status = CheckStatus::Skipped;
  c.note = std::move(reason);
  return c;
}

}  // namespace trifold
