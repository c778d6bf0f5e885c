#include "trifold/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "trifold/cli/config.hpp"

namespace trifold::cli {

using nlohmann::json;

int VerificationReport::count(CheckStatus s) const {
  int n = 0;
  for (const auto& e : entries) n += e.result.status == s;
  return n;
}

int VerificationReport::exit_code() const { return count(CheckStatus::Fail) == 0 ? 0 : 1; }

bool operator==(const VerificationReport& a, const VerificationReport& b) { return to_json(a) == to_json(b); }

namespace {

CheckStatus status_from(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ConfigError("report: unknown status \"" + s + "\"");
}

std::string ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

}  // namespace

json to_json(const VerificationReport& r, bool with_timing) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"check", e.check},
           {"instance", e.instance},
           {"name", e.result.name},
           {"status", to_string(e.result.status)}};
    if (!e.result.residual.empty()) j["residual"] = e.result.residual;
    if (!e.result.note.empty()) j["note"] = e.result.note;
    if (with_timing) j["elapsed_ms"] = e.result.elapsed_ms;
    entries.push_back(std::move(j));
  }
  json systems = json::array();
  for (const auto& s : r.systems)
    systems.push_back({{"instance", s.instance}, {"V_plus", s.v_plus}, {"V_minus", s.v_minus}, {"P3_minus", s.p3_minus}});
  return {{"config", r.config},
          {"entries", entries},
          {"systems", systems},
          {"kernel", {{"max_jet_order", r.max_jet_order}, {"peak_terms", r.peak_terms}}},
          {"summary",
           {{"passed", r.count(CheckStatus::Pass)},
            {"failed", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)}}}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.config = j.at("config");
  for (const auto& e : j.at("entries")) {
    ReportEntry x;
    x.check = e.at("check").get<std::string>();
    x.instance = e.at("instance").get<int>();
    x.result.name = e.at("name").get<std::string>();
    x.result.status = status_from(e.at("status").get<std::string>());
    if (e.contains("residual")) x.result.residual = e["residual"].get<std::string>();
    if (e.contains("note")) x.result.note = e["note"].get<std::string>();
    if (e.contains("elapsed_ms")) x.result.elapsed_ms = e["elapsed_ms"].get<double>();
    r.entries.push_back(std::move(x));
  }
  for (const auto& s : j.at("systems"))
    r.systems.push_back({s.at("instance").get<int>(), s.at("V_plus").get<std::string>(),
                         s.at("V_minus").get<std::string>(), s.at("P3_minus").get<std::string>()});
  r.max_jet_order = j.at("kernel").at("max_jet_order").get<unsigned>();
  r.peak_terms = j.at("kernel").at("peak_terms").get<std::size_t>();
  return r;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw ConfigError("--format: expected text, json or latex");
}

std::string render(const VerificationReport& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << to_json(r).dump(2) << "\n";
      break;
    case Format::Text: {
      for (const auto& e : r.entries) {
        os << std::left << std::setw(8) << to_string(e.result.status) << e.check << "[" << e.instance << "] "
           << e.result.name << "  (" << ms(e.result.elapsed_ms) << " ms)\n";
        if (!e.result.note.empty()) os << "        " << e.result.note << "\n";
        if (!e.result.residual.empty()) os << "        residual: " << e.result.residual << "\n";
      }
      os << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
         << r.count(CheckStatus::Skipped) << " skipped; max jet order " << r.max_jet_order << ", peak terms "
         << r.peak_terms << "\n";
      break;
    }
    case Format::Latex: {
      if (r.systems.empty()) os << "% no concrete systems in this run\n";
      else os << "% s = z'(q) with s^2 = 2A(z)\n";
      for (const auto& s : r.systems) {
        os << "% instance " << s.instance << "\n\\begin{align*}\n"
           << "V^{+}(q) &= " << s.v_plus << ",\\\\\n"
           << "V^{-}(q) &= " << s.v_minus << ",\\\\\n"
           << "P_{3}^{-} &= " << s.p3_minus << ".\n\\end{align*}\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace trifold::cli
