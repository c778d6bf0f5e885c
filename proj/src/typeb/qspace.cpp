#include "trifold/typeb/qspace.hpp"

#include "trifold/diffalg/errors.hpp"

namespace trifold {

EWF<RDE> free_EWF(const FramePtr& qframe) {
  return {RDE::var(vars::E(), qframe), RDE::var(vars::W(), qframe), RDE::var(vars::F(), qframe)};
}

QSpaceFunctions qspace_functions(const TypeBSystem& sys) {
  if (sys.A.is_zero()) throw DegenerateError("A vanishes identically, so z'(q) = 0");
  QSpaceFunctions q;
  q.ctx = SqrtContext::make(sys.A);
  const RDE inv_two_a = q.ctx->two_A.inverse();
  q.E = SqrtExt(RDE(), q.ctx->A_prime * inv_two_a, q.ctx);
  q.F = SqrtExt(RDE(), sys.f[3] / sys.f[2], q.ctx);
  q.W = SqrtExt(RDE(), -sys.Q * inv_two_a, q.ctx);
  return q;
}

std::array<RDE, 3> factor_shifts(const FrameTriple& t) {
  const RDE a = t.log_W21(), b = t.log_phi1();
  return {-a, a - b, b};
}

VerificationCheck verify_intertwining_free(const FramePtr& qframe) {
  return run_check("intertwining-free", [&](Residuals& r) {
    const auto x = free_EWF(qframe);
    const auto res = intertwining_residual(x, qframe);
    const auto c = condition_residuals(x);
    r.holds("residual order at most one", res.order() <= 1, "order " + std::to_string(res.order()));
    r.zero("coefficient of d + 2 R2", res.coeff(1) + RDE(2) * c.r2);
    const RDE expected = -c.r2.derive() - (RDE(2) * x.W - RDE(Rational(1, 2)) * x.F) * c.r2 - RDE(Rational(1, 6)) * c.r3;
    r.zero("scalar part against R2, R2', R3", res.coeff(0) - expected);
  });
}

VerificationCheck verify_intertwining(const TypeBSystem& sys) {
  return run_check("intertwining", [&](Residuals& r) {
    const auto q = qspace_functions(sys);
    const auto res = intertwining_residual(q.ewf());
    for (int k = 0; k <= std::max(res.order(), 0); ++k)
      r.zero("coefficient of d^" + std::to_string(k), res.coeff(static_cast<std::size_t>(k)));
  });
}

VerificationCheck verify_conditions(const TypeBSystem& sys) {
  return run_check("conditions", [&](Residuals& r) {
    const auto q = qspace_functions(sys);
    const auto c = condition_residuals(q.ewf());
    r.zero("cond2 even part", c.r2.even());
    r.zero("cond2 odd part", c.r2.odd());
    r.zero("cond3 even part", c.r3.even());
    r.zero("cond3 odd part", c.r3.odd());
  });
}

}  // namespace trifold
