// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "support/frames.hpp"
#include "trifold/cli/run.hpp"
#include "trifold/typea/typea.hpp"

using namespace trifold;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Collects failures for one criterion.
struct Tally {
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void expect(const VerificationCheck& c, const std::string& where) {
    expect(c.passed(), where + ": " + c.name + (c.residual.empty() ? "" : " [" + c.residual.substr(0, 200) + "]"));
  }
};

bool all_ok = true;

void criterion(int n, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = Clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  const bool ok = t.failures.empty();
  all_ok = all_ok && ok;
  std::printf("criterion %d: %s  %s  (%d checks, %.2f s)\n", n, ok ? "PASS" : "FAIL", title.c_str(), t.checks, secs);
  for (const auto& note : t.notes) std::printf("    note: %s\n", note.c_str());
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("    failed: %s\n", t.failures[i].c_str());
  std::fflush(stdout);
}

std::vector<FSpec> fspecs() {
  const FramePtr zf = Frame::z_frame();
  const RDE z = RDE::var(vars::z(), zf);
  return {FSpec::formal(), FSpec::concrete(z * z), FSpec::concrete(z * z * z), FSpec::concrete(z * z * z + z * z),
          FSpec::concrete(z * z * z * z - z)};
}

/// 20 seeded random integer matrices with entries in [-5, 5] times the five f choices.
std::vector<TypeBSystem> preservation_instances() {
  testing::Gen g(20240);
  std::vector<Matrix3> omegas;
  for (int i = 0; i < 20; ++i) omegas.push_back(testing::random_matrix(g, -5, 5));
  std::vector<TypeBSystem> out;
  for (const auto& fs : fspecs())
    for (const auto& om : omegas) out.push_back(build_system(om, fs));
  return out;
}

struct Proc {
  int status = -1;
  std::string out;
};

Proc run_tool(const std::string& args) {
  Proc p;
  const std::string cmd = std::string(TRIFOLD_TOOL) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int st = pclose(pipe);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::string strip_timing(const std::string& report) {
  auto j = nlohmann::json::parse(report);
  for (auto& e : j["entries"]) e.erase("elapsed_ms");
  return j.dump();
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  const auto build_start = Clock::now();
  const std::vector<TypeBSystem> systems = preservation_instances();
  const double build_secs = seconds_since(build_start);

  criterion(1, "preservation: H phi_i + (Omega phi)_i = 0 for 20 random Omega x 5 choices of f", [&](Tally& t) {
    for (std::size_t i = 0; i < systems.size(); ++i) t.expect(verify_preservation(systems[i]), "instance " + std::to_string(i));
    char buf[64];
    std::snprintf(buf, sizeof buf, "building the 100 systems took %.2f s", build_secs);
    t.notes.push_back(buf);
    t.expect(build_secs < 10.0, "construction within 10 s");
  });

  criterion(2, "sectors: P3- kills <1, z, f>, P3+ kills (1/f'')<1, f', z f' - f>", [&](Tally& t) {
    for (std::size_t i = 0; i < systems.size(); ++i) t.expect(verify_sectors(systems[i]), "instance " + std::to_string(i));
  });

  criterion(3, "GL(3) covariance of A, B, C, Q: symbolic Omega, 10 random Lambda and one symbolic Lambda", [&](Tally& t) {
    testing::Gen g(303);
    const Matrix3 om = Matrix3::symbolic();
    for (int i = 0; i < 10; ++i) {
      const Matrix3 l = testing::random_invertible(g);
      t.expect(verify_ABC_covariance(om, l), "random Lambda " + std::to_string(i));
      t.expect(verify_adjoint(om, l), "random Lambda " + std::to_string(i));
    }
    const auto start = Clock::now();
    t.expect(verify_ABC_covariance(om, Matrix3::symbolic_lambda()), "symbolic Lambda");
    const double secs = seconds_since(start);
    t.expect(secs < 60.0, "symbolic Lambda within 60 s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "symbolic Lambda case took %.2f s", secs);
    t.notes.push_back(buf);
  });

  criterion(4, "invariance: closed-form Wronskians, J = 0, phi1''' f'' = phi1'' f''', I1..I3, factor shifts", [&](Tally& t) {
    testing::Gen g(404);
    std::vector<Matrix3> lambdas{Matrix3::symbolic_lambda()};
    for (int i = 0; i < 5; ++i) lambdas.push_back(testing::random_invertible(g));
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const std::string where = i == 0 ? "symbolic Lambda" : "random Lambda " + std::to_string(i);
      t.expect(verify_wronskian_forms(lambdas[i]), where);
      t.expect(verify_invariants(lambdas[i]), where);
      const auto s = factor_shifts(gl3_frame(lambdas[i]));
      t.expect((s[0] + s[1] + s[2]).is_zero(), where + ": factor shifts sum to zero");
    }
    // With E and F independent the I2 shift has a nonzero linear part.
    const FramePtr qw = Frame::qw_frame();
    const EWF<RDE> x = free_EWF(qw), hat = transform_EWF(x, gl3_frame(lambdas[1]), qw);
    t.expect(invariants(hat).I1 == invariants(x).I1, "I1 with independent E, W, F");
    t.expect(!(invariants(hat).I2 == invariants(x).I2), "independent E, F are not a valid setting for I2");
    t.notes.push_back("I2, I3 checked with E, F induced by an arbitrary w(q) and W free; with E, F independent I2 is not invariant (shown)");
  });

  criterion(5, "reconstruction from invariants: supercharge and potentials with E, W, F free", [&](Tally& t) {
    for (const FramePtr& qf : {Frame::q_frame(), Frame::qw_frame()}) {
      const EWF<RDE> x = free_EWF(qf);
      const auto inv = invariants(x);
      t.expect(supercharge_from_invariants(inv, qf) == supercharge(x, qf), "supercharge in " + qf->name());
      const auto v1 = potential_from_invariants(inv), v2 = potentials(x);
      t.expect(v1.plus == v2.plus, "V+ in " + qf->name());
      t.expect(v1.minus == v2.minus, "V- in " + qf->name());
    }
  });

  criterion(6, "superalgebra: Cayley-Hamilton on the sector, constants, conjugation invariance", [&](Tally& t) {
    for (std::size_t i = 0; i < systems.size(); ++i) t.expect(verify_superalgebra_tier1(systems[i]), "instance " + std::to_string(i));
    t.expect(verify_constants(Matrix3::symbolic()), "symbolic Omega");
    testing::Gen g(606);
    for (int i = 0; i < 5; ++i)
      t.expect(verify_invariance_of_constants(Matrix3::symbolic(), testing::random_invertible(g)), "conjugation " + std::to_string(i));

    const Matrix3 d = Matrix3::diagonal(Rational(1), Rational(2), Rational(3));
    const auto k = superalgebra_constants(d);
    t.expect(k.C0 == RDE(2) && k.C1 == RDE(-1) && k.C2.is_zero(), "diag(1,2,3) gives (2, -1, 0)");
    for (int e : {-1, -2, -3}) {
      const RDE x = RDE(e) + k.C0;
      t.expect((x * x * x + k.C1 * x + k.C2).is_zero(), "eigenvalue " + std::to_string(e) + " is a root");
    }
    const FramePtr zf = Frame::z_frame();
    const RDE z = RDE::var(vars::z(), zf);
    const TypeBSystem sys = build_system(d, FSpec::concrete(z * z * z));
    for (int i = 0; i < 3; ++i)
      t.expect(sys.H.apply(sys.sector_minus[i]) == RDE(-(i + 1)) * sys.sector_minus[i],
               "sector element " + std::to_string(i + 1) + " has eigenvalue " + std::to_string(-(i + 1)));

    // Tier 2 is informational.
    int tier2 = 0, tier2_pass = 0;
    for (std::size_t i = 0; i < systems.size(); i += 7) {
      if (systems[i].A.is_zero()) continue;
      ++tier2;
      tier2_pass += verify_superalgebra_tier2(systems[i]).passed();
    }
    t.notes.push_back("tier 2 (full sixth-order product, scalar -(z')^6 = -8A^3 against 8[...]): " +
                      std::to_string(tier2_pass) + "/" + std::to_string(tier2) + " instances");
  });

  criterion(7, "conditions and intertwining", [&](Tally& t) {
    testing::Gen g(707);
    const auto fs = fspecs();
    int built = 0;
    while (built < 10) {
      const TypeBSystem s = build_system(testing::random_invertible(g, -5, 5), fs[1 + built % 4]);
      if (s.A.is_zero()) continue;
      t.expect(verify_conditions(s), "system " + std::to_string(built));
      t.expect(verify_intertwining(s), "system " + std::to_string(built));
      ++built;
    }
    t.expect(verify_intertwining_free(Frame::q_frame()), "free E, W, F");
    t.notes.push_back("free-jet residual is -2 R2 d - R2' - (2W - F/2) R2 - R3/6: first order, multiplicative exactly when R2 = 0");
  });

  criterion(8, "type A limit, transvectants, GL(2) and GL(N) embeddings, invariant reduction", [&](Tally& t) {
    t.expect(verify_typea_limit(TypeACoefficients::symbolic()), "symbolic type A");
    t.expect(verify_transvectants(TypeACoefficients::symbolic()), "symbolic type A");
    const MobiusParameters sym = MobiusParameters::symbolic();
    t.expect(gl2_embedding(sym).det() == sym.Delta().pow(3), "det = Delta^3 symbolically");
    testing::Gen g(808);
    auto mobius = [&] {
      for (;;) {
        MobiusParameters m{RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4))};
        if (!m.Delta().is_zero()) return m;
      }
    };
    for (int i = 0; i < 5; ++i) t.expect(verify_gl2_embedding(mobius()), "gl2 " + std::to_string(i));
    for (int n = 2; n <= 5; ++n)
      for (int i = 0; i < 10; ++i)
        t.expect(verify_glN_multiplicativity(n, mobius(), mobius()), "N = " + std::to_string(n) + " pair " + std::to_string(i));
    const FramePtr qf = Frame::q_frame();
    const EWF<RDE> x = free_EWF(qf);
    const auto r = invariants(EWF<RDE>{x.E, x.W, RDE()});
    t.expect(r.I1 == x.W, "I1 -> W");
    t.expect(r.I2 == RDE(2) * x.E.derive(qf) - x.E * x.E, "I2 -> 2E' - E^2");
    t.expect(r.I3.is_zero(), "I3 -> 0");
  });

  criterion(9, "CLI determinism, exit codes and negative controls", [&](Tally& t) {
    const auto dir = std::filesystem::temp_directory_path() / ("trifold_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
      std::ofstream(dir / name) << text;
      return (dir / name).string();
    };
    const std::string good = write("good.json", R"({"f": "z^3 + z", "seed": 42, "random-trials": 2})");
    const Proc a = run_tool(good + " --format json"), b = run_tool(good + " --format json");
    t.expect(a.status == 0 && b.status == 0, "valid run exits 0");
    t.expect(!a.out.empty() && strip_timing(a.out) == strip_timing(b.out), "identical JSON for fixed config and seed");
    const Proc c = run_tool(good + " --format json --seed 43");
    t.expect(c.status == 0 && strip_timing(c.out) != strip_timing(a.out), "seed override changes the instances");
    t.expect(run_tool(write("bad_f.json", R"({"f": "z + 1"})")).status == 2, "degenerate f exits 2");
    t.expect(run_tool(write("bad_key.json", R"({"omgea": "symbolic"})")).status == 2, "unknown key exits 2");
    t.expect(run_tool(write("bad_json.json", "{")).status == 2, "malformed JSON exits 2");
    t.expect(run_tool(good + " --check nonsense").status == 2, "unknown --check exits 2");
    t.expect(run_tool((dir / "missing.json").string()).status == 2, "missing file exits 2");

    // Negative controls are fixtures, not runtime paths.
    testing::Gen g(909);
    TypeBSystem s = build_system(testing::random_matrix(g, -5, 5), FSpec::formal());
    s.H = hamiltonian(s.A + RDE(1), s.B, s.C, s.frame);
    cli::VerificationReport r;
    r.entries.push_back({"preservation", 0, verify_preservation(s)});
    t.expect(r.exit_code() == 1, "tampered A fails and maps to exit code 1");
    const Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
    t.expect(!verify_constants_match(om, l * om * l).passed(), "Lambda Omega Lambda changes the constants");
    t.expect(!verify_ABC_covariance_using(om, l, l.inverse().transpose()).passed(), "transposed inverse breaks covariance");
    std::filesystem::remove_all(dir);
  });

  const double total = seconds_since(suite_start);
  std::printf("total %.2f s (limit 180 s): %s\n", total, total < 180.0 ? "within" : "exceeded");
  return all_ok && total < 180.0 ? 0 : 1;
}
