#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "trifold/check.hpp"
#include "trifold/typeb/qspace.hpp"

namespace trifold::cli {

struct ReportEntry {
  std::string check;  // name selected in the config
  int instance = 0;
  VerificationCheck result;
};

/// LaTeX of the potentials and of the supercharge for one concrete system.
struct SystemRendering {
  int instance = 0;
  std::string v_plus, v_minus, p3_minus;
};

struct VerificationReport {
  nlohmann::json config;
  std::vector<ReportEntry> entries;
  std::vector<SystemRendering> systems;
  unsigned max_jet_order = 0;
  std::size_t peak_terms = 0;

  int count(CheckStatus s) const;
  /// 0 when every non-skipped entry passed, 1 otherwise.
  int exit_code() const;
};

bool operator==(const VerificationReport& a, const VerificationReport& b);

nlohmann::json to_json(const VerificationReport& r, bool with_timing = true);
VerificationReport report_from_json(const nlohmann::json& j);

enum class Format { Text, Json, Latex };
Format parse_format(const std::string& name);
std::string render(const VerificationReport& r, Format format);

template <class S>
SystemRendering render_system(const EWF<S>& x, int instance = 0) {
  const auto v = potentials(x);
  return {instance, v.plus.latex(), v.minus.latex(), supercharge(x).latex("q")};
}

}  // namespace trifold::cli
