#include "trifold/cli/config.hpp"

#include <cctype>
#include <set>

#include "trifold/diffalg/errors.hpp"

namespace trifold::cli {
namespace {

using nlohmann::json;

class ExprParser {
 public:
  ExprParser(std::string_view text, FramePtr frame) : s_(text), frame_(std::move(frame)) {}

  RDE parse() {
    RDE r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("f: column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RDE sum() {
    RDE r = product();
    for (;;) {
      if (eat('+')) r = r + product();
      else if (eat('-')) r = r - product();
      else return r;
    }
  }

  RDE product() {
    RDE r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RDE d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RDE unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RDE power() {
    RDE base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer literal");
    if (pos_ - start > 4) fail("exponent too large");
    return base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
  }

  RDE atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RDE r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'z') {
      ++pos_;
      return RDE::var(vars::z(), frame_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RDE(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FramePtr frame_;
  std::size_t pos_ = 0;
};

Rational parse_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) throw ConfigError(field + ": expected an exact rational string such as \"3/4\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error&) {
    throw ConfigError(field + ": cannot parse \"" + v.get<std::string>() + "\" as a rational");
  }
}

Matrix3 parse_matrix(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) throw ConfigError(field + ": expected a 3x3 array or \"symbolic\"");
  std::array<std::array<Rational, 3>, 3> e;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 3) throw ConfigError(row + ": expected 3 entries");
    for (std::size_t j = 0; j < 3; ++j) e[i][j] = parse_rational(v[i][j], row + "[" + std::to_string(j) + "]");
  }
  return Matrix3(e);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& field) {
  for (const auto& [k, _] : obj.items())
    if (!allowed.count(k)) throw ConfigError(field + ": unknown key \"" + k + "\"");
}

MobiusParameters parse_mobius(const json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigError(field + ": expected an object");
  MobiusParameters m;
  RDE* slots[] = {&m.alpha, &m.beta, &m.gamma, &m.delta};
  const char* names[] = {"alpha", "beta", "gamma", "delta"};
  for (int i = 0; i < 4; ++i) {
    if (!v.contains(names[i])) throw ConfigError(field + ": missing \"" + names[i] + "\"");
    *slots[i] = RDE(parse_rational(v[names[i]], field + "." + names[i]));
  }
  if (m.Delta().is_zero()) throw ConfigError(field + ": alpha delta - beta gamma must be nonzero");
  return m;
}

LambdaSpec parse_lambda(const json& v) {
  LambdaSpec s;
  if (v.is_string()) {
    if (v.get<std::string>() != "symbolic") throw ConfigError("lambda: expected a 3x3 array, \"symbolic\", {\"gl2\": ...} or {\"glN\": ...}");
    s.kind = LambdaSpec::Kind::Symbolic;
    return s;
  }
  if (v.is_array()) {
    s.kind = LambdaSpec::Kind::Matrix;
    s.matrix = parse_matrix(v, "lambda");
    if (s.matrix.det().is_zero()) throw ConfigError("lambda: matrix is singular");
    return s;
  }
  if (!v.is_object() || v.size() != 1) throw ConfigError("lambda: expected a 3x3 array, \"symbolic\", {\"gl2\": ...} or {\"glN\": ...}");
  reject_unknown(v, {"gl2", "glN"}, "lambda");
  if (v.contains("gl2")) {
    reject_unknown(v["gl2"], {"alpha", "beta", "gamma", "delta"}, "lambda.gl2");
    s.kind = LambdaSpec::Kind::Gl2;
    s.mobius = parse_mobius(v["gl2"], "lambda.gl2");
    return s;
  }
  const json& g = v["glN"];
  reject_unknown(g, {"n", "alpha", "beta", "gamma", "delta"}, "lambda.glN");
  if (!g.contains("n") || !g["n"].is_number_integer() || g["n"].get<int>() < 2 || g["n"].get<int>() > 64)
    throw ConfigError("lambda.glN.n: expected an integer between 2 and 64");
  s.kind = LambdaSpec::Kind::GlN;
  s.n = g["n"].get<int>();
  s.mobius = parse_mobius(g, "lambda.glN");
  return s;
}

json matrix_json(const Matrix3& m) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m.rational(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

json mobius_json(const MobiusParameters& m) {
  return {{"alpha", m.alpha.constant_value().to_string()},
          {"beta", m.beta.constant_value().to_string()},
          {"gamma", m.gamma.constant_value().to_string()},
          {"delta", m.delta.constant_value().to_string()}};
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "preservation", "conditions", "abc-covariance", "adjoint", "invariants", "superalgebra-tier1",
      "superalgebra-tier2", "constants-invariance", "typea-limit", "transvectants", "embedding"};
  return names;
}

RDE parse_expression(std::string_view text, const FramePtr& zframe) {
  return ExprParser(text, zframe).parse().in_frame(zframe);
}

void set_f(RunConfig& c, const std::string& text) {
  c.f_text = text;
  if (text == "formal") {
    c.fspec = FSpec::formal();
    return;
  }
  const FramePtr zf = Frame::z_frame(c.max_jet_order);
  const RDE f = parse_expression(text, zf);
  if (f.derive(zf).derive(zf).is_zero()) throw ConfigError("f: f'' vanishes identically");
  c.fspec = FSpec::concrete(f);
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  reject_unknown(doc, {"omega", "f", "lambda", "checks", "seed", "random-trials", "max-jet-order"}, "config");

  RunConfig c;
  if (doc.contains("max-jet-order")) {
    const json& v = doc["max-jet-order"];
    if (!v.is_number_integer() || v.get<int>() < 4 || v.get<int>() > 12)
      throw ConfigError("max-jet-order: expected an integer between 4 and 12");
    c.max_jet_order = v.get<unsigned>();
  }
  if (doc.contains("omega")) {
    const json& v = doc["omega"];
    if (v.is_string() && v.get<std::string>() == "symbolic") {
      c.omega = Matrix3::symbolic();
      c.omega_symbolic = true;
    } else {
      c.omega = parse_matrix(v, "omega");
    }
  }
  if (doc.contains("f")) {
    if (!doc["f"].is_string()) throw ConfigError("f: expected a string");
    set_f(c, doc["f"].get<std::string>());
  }
  if (doc.contains("lambda")) c.lambda = parse_lambda(doc["lambda"]);
  if (doc.contains("checks")) {
    const json& v = doc["checks"];
    if (!v.is_array()) throw ConfigError("checks: expected an array of names");
    c.checks.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string field = "checks[" + std::to_string(i) + "]";
      if (!v[i].is_string()) throw ConfigError(field + ": expected a string");
      const std::string name = v[i].get<std::string>();
      const auto& k = known_checks();
      if (std::find(k.begin(), k.end(), name) == k.end()) throw ConfigError(field + ": unknown check \"" + name + "\"");
      c.checks.push_back(name);
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed: expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("random-trials")) {
    const json& v = doc["random-trials"];
    if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > 1000)
      throw ConfigError("random-trials: expected an integer between 1 and 1000");
    c.trials = v.get<int>();
  }
  return c;
}

json RunConfig::echo() const {
  json out;
  if (!omega) out["omega"] = "random";
  else if (omega_symbolic) out["omega"] = "symbolic";
  else out["omega"] = matrix_json(*omega);
  out["f"] = f_text;
  switch (lambda.kind) {
    case LambdaSpec::Kind::Random: out["lambda"] = "random"; break;
    case LambdaSpec::Kind::Symbolic: out["lambda"] = "symbolic"; break;
    case LambdaSpec::Kind::Matrix: out["lambda"] = matrix_json(lambda.matrix); break;
    case LambdaSpec::Kind::Gl2: out["lambda"] = {{"gl2", mobius_json(lambda.mobius)}}; break;
    case LambdaSpec::Kind::GlN: {
      json g = mobius_json(lambda.mobius);
      g["n"] = lambda.n;
      out["lambda"] = {{"glN", g}};
      break;
    }
  }
  out["checks"] = checks;
  out["seed"] = seed;
  out["random-trials"] = trials;
  out["max-jet-order"] = max_jet_order;
  return out;
}

}  // namespace trifold::cli
