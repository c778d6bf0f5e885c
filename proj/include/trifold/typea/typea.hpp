#pragma once

#include <array>
#include <vector>

#include "trifold/check.hpp"
#include "trifold/gl3/gl3.hpp"

namespace trifold {

/// Quartic A(z) = a4 z^4 + ... + a0, quadratic Q(z) = b2 z^2 + b1 z + b0 and
/// the constant R of a type A system.
struct TypeACoefficients {
  std::array<RDE, 5> a;  // a[i] multiplies z^i
  std::array<RDE, 3> b;
  RDE R;

  static TypeACoefficients symbolic();
  RDE A_poly(const FramePtr& zframe) const;
  RDE Q_poly(const FramePtr& zframe) const;
};

/// Parameters of z = (alpha w + beta) / (gamma w + delta).
struct MobiusParameters {
  RDE alpha = RDE(1), beta, gamma, delta = RDE(1);

  static MobiusParameters symbolic();
  RDE Delta() const { return alpha * delta - beta * gamma; }
  /// Parameters of the composite map z = m1(m2(u)).
  friend MobiusParameters compose(const MobiusParameters& m1, const MobiusParameters& m2);
};

/// Omega realizing the type A system with f = z^2.
OmegaMatrix omega_from_typeA(const TypeACoefficients& c);
/// Inverse of the above; throws NotInImageError when the recomputed matrix
/// disagrees with the input.
TypeACoefficients typeA_from_omega(const OmegaMatrix& omega);

/// -A d^2 - (Q - A'/2) d - A''/6 + Q' - R.
Operator typeA_hamiltonian(const TypeACoefficients& c, const FramePtr& zframe);

struct Transvectants {
  RDE D2, i2, j3, I12;
};
Transvectants transvectants(const TypeACoefficients& c);

VerificationCheck verify_typea_limit(const TypeACoefficients& c);
/// C0 = R, 3C1 = -i2 + 3D2, 27C2 = 2j3 + 18 I12 for omega_from_typeA(c).
VerificationCheck verify_transvectants(const TypeACoefficients& c);

/// Lambda of the induced action on <1, w, w^2>. Throws DegenerateError for Delta = 0.
Matrix3 gl2_embedding(const MobiusParameters& m);
/// f = w^2 frame of gl2_embedding(m).
FrameTriple gl2_frame(const MobiusParameters& m, unsigned budget = Frame::kDefaultBudget);

using MatrixN = std::vector<std::vector<RDE>>;
MatrixN multiply(const MatrixN& x, const MatrixN& y);
bool equal(const MatrixN& x, const MatrixN& y);
/// Action on <1, w, ..., w^{N-1}> from the binomial formula.
MatrixN glN_embedding(int n, const MobiusParameters& m);
/// Same matrix obtained by expanding (gamma w + delta)^{N-i} (alpha w + beta)^{i-1}.
MatrixN glN_by_expansion(int n, const MobiusParameters& m);

/// E + 2 gamma w'/(gamma w + delta), W, 0 in a q(w) frame.
EWF<RDE> typeA_EWF_transform(const MobiusParameters& m, const RDE& E, const RDE& W, const FramePtr& qwframe);

/// det = Delta^3, W21 = Delta phi1, N = 3 binomial formula, EWF transform
/// against the general rule with f = w^2, and the subgroup invariants check.
VerificationCheck verify_gl2_embedding(const MobiusParameters& m);
/// glN(m1 m2) = glN(m1) glN(m2) for the composite map.
VerificationCheck verify_glN_multiplicativity(int n, const MobiusParameters& m1, const MobiusParameters& m2);

}  // namespace trifold
