#include "doctest.h"
#include "trifold/cli/run.hpp"

using namespace trifold;
using namespace trifold::cli;

TEST_CASE("valid configurations") {
  RunConfig c = parse_config(R"({"omega": [["1","0","0"],["0","1","0"],["0","0","1"]], "f": "z^3", "checks": ["preservation"]})");
  CHECK(c.omega == Matrix3::identity());
  CHECK_FALSE(c.fspec.is_formal());
  CHECK(c.checks == std::vector<std::string>{"preservation"});

  RunConfig a = parse_config(R"({"f": "z^2", "checks": ["typea-limit"]})");
  CHECK_FALSE(a.omega.has_value());

  RunConfig d = parse_config("{}");
  CHECK(d.fspec.is_formal());
  CHECK(d.checks == known_checks());

  RunConfig s = parse_config(R"({"omega": "symbolic", "lambda": {"gl2": {"alpha": "1", "beta": "2", "gamma": 0, "delta": "1/2"}}})");
  CHECK(s.omega_symbolic);
  CHECK(s.lambda.kind == LambdaSpec::Kind::Gl2);
  CHECK(s.lambda.mobius.delta == RDE(Rational(1, 2)));
}

TEST_CASE("configuration errors name the field") {
  auto message = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"f": "z + 1"})").find("f''") != std::string::npos);
  CHECK(message(R"({"omg": 1})").find("unknown key \"omg\"") != std::string::npos);
  CHECK(message(R"({"omega": [["1","0"]]})").find("omega") != std::string::npos);
  CHECK(message(R"({"omega": [["1","0","x"],["0","1","0"],["0","0","1"]]})").find("omega[0][2]") != std::string::npos);
  CHECK(message(R"({"omega": [[0.5,0,0],[0,1,0],[0,0,1]]})").find("omega[0][0]") != std::string::npos);
  CHECK(message(R"({"checks": ["nope"]})").find("checks[0]") != std::string::npos);
  CHECK(message(R"({"lambda": [["1","2","3"],["2","4","6"],["0","0","1"]]})").find("singular") != std::string::npos);
  CHECK(message(R"({"lambda": {"glN": {"n": 1, "alpha": 1, "beta": 0, "gamma": 0, "delta": 1}}})").find("lambda.glN.n") != std::string::npos);
  CHECK(message(R"({"f": "z^2 +* z"})").find("column 6") != std::string::npos);
  CHECK(message("{\"f\": \n 3").find("malformed JSON") != std::string::npos);
  CHECK(message("[1]").find("object") != std::string::npos);
}

TEST_CASE("expression parser") {
  const FramePtr zf = Frame::z_frame();
  const RDE z = RDE::var(vars::z(), zf);
  CHECK(parse_expression("3/4*z^3", zf) == RDE(Rational(3, 4)) * z * z * z);
  CHECK(parse_expression("(z^2+1)/(z-1)", zf) == (z * z + RDE(1)) / (z - RDE(1)));
  CHECK(parse_expression("-z^2", zf) == -(z * z));
  CHECK(parse_expression(" 2 ", zf) == RDE(2));
  CHECK_THROWS_AS(parse_expression("z^-1", zf), ConfigError);
  CHECK_THROWS_AS(parse_expression("y", zf), ConfigError);
  CHECK_THROWS_AS(parse_expression("1/(z-z)", zf), ConfigError);
  CHECK_THROWS_AS(parse_expression("(z", zf), ConfigError);
}

TEST_CASE("running checks") {
  RunConfig c = parse_config(R"({"omega": [["0","0","0"],["0","0","0"],["0","0","0"]], "f": "z^3", "checks": ["preservation"]})");
  VerificationReport r = run(c);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].result.status == CheckStatus::Pass);
  CHECK(r.exit_code() == 0);
  CHECK(r.systems.empty());  // A vanishes

  RunConfig e = parse_config(R"({"checks": []})");
  VerificationReport empty = run(e);
  CHECK(empty.entries.empty());
  CHECK(empty.exit_code() == 0);

  RunConfig t = parse_config(R"({"f": "z^2", "checks": ["typea-limit", "conditions"], "seed": 3})");
  VerificationReport tr = run(t);
  CHECK(tr.count(CheckStatus::Fail) == 0);
  CHECK(tr.entries[0].result.status == CheckStatus::Pass);
}

TEST_CASE("a failing entry sets the exit code") {
  VerificationReport r;
  r.entries.push_back({"preservation", 0, skipped_check("preservation", "x")});
  CHECK(r.exit_code() == 0);
  VerificationCheck bad;
  bad.name = "preservation";
  bad.status = CheckStatus::Fail;
  r.entries.push_back({"preservation", 0, bad});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("instances depend only on seed and index") {
  RunConfig a = parse_config(R"({"seed": 11, "checks": ["preservation"]})");
  RunConfig b = parse_config(R"({"seed": 11, "checks": ["embedding", "invariants"]})");
  for (int i = 0; i < 3; ++i) {
    Instance x = make_instance(a, i), y = make_instance(b, i);
    CHECK(x.omega == y.omega);
    CHECK(*x.lambda == *y.lambda);
  }
  CHECK_FALSE(make_instance(a, 0).omega == make_instance(a, 1).omega);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  RunConfig c = parse_config(R"({"f": "z^3 + z^2", "seed": 5, "random-trials": 2})");
  VerificationReport r1 = run(c), r2 = run(c);
  CHECK(to_json(r1, false).dump() == to_json(r2, false).dump());
  CHECK(report_from_json(to_json(r1)) == r1);
  CHECK(report_from_json(nlohmann::json::parse(render(r1, Format::Json))) == r1);
  CHECK_FALSE(r1.systems.empty());
  CHECK(render(r1, Format::Latex).find("V^{+}(q)") != std::string::npos);
}

TEST_CASE("LaTeX rendering") {
  EWF<RDE> zero{RDE(), RDE(), RDE()};
  SystemRendering s = render_system(zero);
  CHECK(s.v_plus == "0");
  CHECK(s.v_minus == "0");
  CHECK(parse_format("latex") == Format::Latex);
  CHECK_THROWS_AS(parse_format("yaml"), ConfigError);
}
