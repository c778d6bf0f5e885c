#include "trifold/cli/run.hpp"

#include <functional>
#include <map>
#include <random>

#include "trifold/diffalg/errors.hpp"

namespace trifold::cli {
namespace {

using Rng = std::mt19937_64;

std::int64_t draw(Rng& g, std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(g); }

Matrix3 random_matrix(Rng& g, std::int64_t lo, std::int64_t hi) {
  std::array<std::array<Rational, 3>, 3> e;
  for (auto& row : e)
    for (auto& x : row) x = Rational(draw(g, lo, hi));
  return Matrix3(e);
}

Matrix3 random_invertible(Rng& g) {
  for (;;) {
    Matrix3 m = random_matrix(g, -3, 3);
    if (!m.det().is_zero()) return m;
  }
}

MobiusParameters random_mobius(Rng& g) {
  for (;;) {
    MobiusParameters m{RDE(draw(g, -4, 4)), RDE(draw(g, -4, 4)), RDE(draw(g, -4, 4)), RDE(draw(g, -4, 4))};
    if (!m.Delta().is_zero()) return m;
  }
}

using Results = std::vector<VerificationCheck>;

struct Context {
  const RunConfig& config;
  const Instance& inst;

  TypeBSystem system() const { return build_system(inst.omega, config.fspec, config.max_jet_order); }
  bool f_is_square() const {
    if (config.fspec.is_formal()) return false;
    const FramePtr zf = Frame::z_frame(config.max_jet_order);
    const RDE z = RDE::var(vars::z(), zf);
    return *config.fspec.f == z * z;
  }
};

std::optional<std::string> lambda_missing(const Context& c) {
  if (c.inst.lambda) return std::nullopt;
  return "GL(" + std::to_string(c.config.lambda.n) + ") lambda is not a 3x3 frame";
}

Results run_named(const std::string& check, const Context& c) {
  const Instance& in = c.inst;
  if (check == "preservation") {
    const TypeBSystem s = c.system();
    return {verify_preservation(s), verify_sectors(s)};
  }
  if (check == "conditions") {
    if (c.config.fspec.is_formal()) return {skipped_check("conditions", "needs a concrete f")};
    if (c.config.omega_symbolic) return {skipped_check("conditions", "needs a concrete omega")};
    const TypeBSystem s = c.system();
    if (s.A.is_zero()) return {skipped_check("conditions", "A vanishes identically; no q-space form")};
    Results out{verify_conditions(s), verify_intertwining(s)};
    if (in.index == 0) out.push_back(verify_intertwining_free(Frame::q_frame(c.config.max_jet_order)));
    return out;
  }
  if (check == "abc-covariance" || check == "adjoint" || check == "invariants" || check == "constants-invariance") {
    if (auto why = lambda_missing(c)) return {skipped_check(check, *why)};
    const Matrix3& l = *in.lambda;
    if (check == "abc-covariance") return {verify_ABC_covariance(in.omega, l)};
    if (check == "adjoint") return {verify_adjoint(in.omega, l)};
    if (check == "invariants") return {verify_wronskian_forms(l), verify_invariants(l)};
    return {verify_constants(in.omega), verify_invariance_of_constants(in.omega, l)};
  }
  if (check == "superalgebra-tier1") return {verify_superalgebra_tier1(c.system())};
  if (check == "superalgebra-tier2") {
    const TypeBSystem s = c.system();
    if (s.A.is_zero()) return {skipped_check("superalgebra-tier2", "A vanishes identically")};
    return {verify_superalgebra_tier2(s)};
  }
  if (check == "typea-limit") {
    if (!c.f_is_square()) return {skipped_check("typea-limit", "needs f = z^2")};
    return {verify_typea_limit(typeA_from_omega(in.omega))};
  }
  if (check == "transvectants") return {verify_transvectants(typeA_from_omega(in.omega))};
  if (check == "embedding") {
    const LambdaSpec& ls = c.config.lambda;
    const int n = ls.kind == LambdaSpec::Kind::GlN ? ls.n : 3;
    Results out;
    if (n == 3) out.push_back(verify_gl2_embedding(in.mobius));
    out.push_back(verify_glN_multiplicativity(n, in.mobius, in.mobius2));
    return out;
  }
  throw ConfigError("unknown check \"" + check + "\"");
}

}  // namespace

Instance make_instance(const RunConfig& c, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng g(seq);
  Instance in;
  in.index = index;
  // Draw every random component so the stream does not depend on the config.
  const Matrix3 om = random_matrix(g, -5, 5);
  const Matrix3 lam = random_invertible(g);
  const MobiusParameters m1 = random_mobius(g), m2 = random_mobius(g);
  in.omega = c.omega ? *c.omega : om;
  in.mobius = m1;
  in.mobius2 = m2;
  switch (c.lambda.kind) {
    case LambdaSpec::Kind::Random: in.lambda = lam; break;
    case LambdaSpec::Kind::Matrix: in.lambda = c.lambda.matrix; break;
    case LambdaSpec::Kind::Symbolic: in.lambda = Matrix3::symbolic_lambda(); break;
    case LambdaSpec::Kind::Gl2:
      in.mobius = c.lambda.mobius;
      in.lambda = gl2_embedding(in.mobius);
      break;
    case LambdaSpec::Kind::GlN:
      in.mobius = c.lambda.mobius;
      if (c.lambda.n == 3) in.lambda = gl2_embedding(in.mobius);
      break;
  }
  return in;
}

VerificationReport run(const RunConfig& config) {
  stats::reset_peak_terms();
  VerificationReport report;
  report.config = config.echo();
  report.max_jet_order = config.max_jet_order;

  std::vector<Instance> instances;
  for (int i = 0; i < config.trials; ++i) instances.push_back(make_instance(config, i));

  for (const auto& check : config.checks)
    for (const auto& inst : instances) {
      Results results;
      try {
        results = run_named(check, Context{config, inst});
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        VerificationCheck failed;
        failed.name = check;
        failed.status = CheckStatus::Fail;
        failed.residual = std::string("error: ") + e.what();
        results = {failed};
      }
      for (auto& r : results) report.entries.push_back({check, inst.index, std::move(r)});
    }

  if (!config.fspec.is_formal() && !config.omega_symbolic)
    for (const auto& inst : instances) {
      const TypeBSystem s = build_system(inst.omega, config.fspec, config.max_jet_order);
      if (s.A.is_zero()) continue;
      report.systems.push_back(render_system(qspace_functions(s).ewf(), inst.index));
    }

  report.peak_terms = stats::peak_terms();
  return report;
}

}  // namespace trifold::cli
