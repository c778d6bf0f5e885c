#include "trifold/typeb/system.hpp"

#include "trifold/diffalg/errors.hpp"
#include "trifold/transform/transform.hpp"

namespace trifold {

RDE TypeBSystem::specialize(const RDE& x) const {
  return fspec.f ? substitute_f(x.in_frame(frame), *fspec.f) : x;
}

Operator hamiltonian(const RDE& A, const RDE& B, const RDE& C, const FramePtr& frame) {
  return Operator({-C, -B, -A}, frame);
}

namespace {

Operator specialize_op(const TypeBSystem& s, const Operator& op) {
  std::vector<RDE> c;
  for (const auto& x : op.coeffs()) c.push_back(s.specialize(x));
  return Operator(std::move(c), s.frame).with_prefactor(op.prefactor().power, op.prefactor().label);
}

}  // namespace

TypeBSystem build_system(const OmegaMatrix& omega, const FSpec& fspec, unsigned budget) {
  TypeBSystem s;
  s.omega = omega;
  s.frame = Frame::z_frame(budget);
  s.fspec = fspec;
  if (fspec.f) s.fspec.f = fspec.f->in_frame(s.frame);
  const FramePtr& zf = s.frame;
  for (unsigned k = 0; k < 4; ++k) s.f[k] = s.specialize(RDE::var(vars::f(k), zf));
  if (s.f[2].is_zero()) throw DegenerateError("f'' vanishes identically for f = " + s.fspec.to_string());

  ABC abc = matrix_form_ABC(omega, zf);
  s.A_f2 = s.specialize(abc.A_f2);
  s.A = s.A_f2 / s.f[2];
  s.B = s.specialize(abc.B);
  s.C = s.specialize(abc.C);
  s.Q = s.B + s.A.derive(zf) * RDE(Rational(1, 2));
  s.H = hamiltonian(s.A, s.B, s.C, zf);
  s.P_minus = specialize_op(s, gauged_supercharge_minus(zf));
  s.P_plus = specialize_op(s, gauged_supercharge_plus(zf));

  const RDE z = RDE::var(vars::z(), zf);
  s.sector_minus = {RDE(1), z, s.f[0]};
  const RDE inv = s.f[2].inverse();
  s.sector_plus = {inv, s.f[1] * inv, (z * s.f[1] - s.f[0]) * inv};
  return s;
}

VerificationCheck verify_preservation(const TypeBSystem& sys) {
  return run_check("preservation", [&](Residuals& r) {
    const Column3 phi{sys.sector_minus[0], sys.sector_minus[1], sys.sector_minus[2]};
    const Column3 om = sys.omega * phi;
    for (int i = 0; i < 3; ++i)
      r.zero("H phi_" + std::to_string(i + 1) + " + (Omega phi)_" + std::to_string(i + 1),
             sys.H.apply(phi[i]) + om[i]);
  });
}

VerificationCheck verify_sectors(const TypeBSystem& sys) {
  return run_check("sectors", [&](Residuals& r) {
    for (int i = 0; i < 3; ++i) {
      r.zero("P- on sector element " + std::to_string(i + 1), sys.P_minus.apply(sys.sector_minus[i]));
      r.zero("P+ on sector element " + std::to_string(i + 1), sys.P_plus.apply(sys.sector_plus[i]));
    }
  });
}

}  // namespace trifold
