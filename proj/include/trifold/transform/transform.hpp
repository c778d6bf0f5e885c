#pragma once

#include "trifold/diffalg/matrix3.hpp"
#include "trifold/operators/linear_operator.hpp"
#include "trifold/transform/frame_triple.hpp"

namespace trifold {

/// Derivatives of z(w) = phi2/phi1 and f(z(w)) = phi3/phi1 with respect to w.
struct DerivativeConversions {
  RDE dz, d2z, d3z;
  RDE df, d2f, d3f;
};

/// Closed forms in terms of W_{2,1}, W_{3,1} and phi1.
DerivativeConversions derivative_conversions(const FrameTriple& t);
/// Oracle: differentiate the quotients directly.
DerivativeConversions direct_derivatives(const FrameTriple& t);

/// f'(z), f''(z), f'''(z) and z f'(z) - f(z) as functions of w.
struct ChainQuantities {
  RDE f1, f2, f3;
  RDE zf1_minus_f;
};

ChainQuantities chain_quantities(const FrameTriple& t);
/// Oracle: f_{k+1}(z) = (d/dw f_k(z)) / (dz/dw) starting from phi3/phi1.
ChainQuantities chain_quantities_direct(const FrameTriple& t);

/// Rewrites a z-frame value in the w-frame of t: z -> phi2/phi1, f_k -> k-th
/// z-derivative of phi3/phi1.
RDE to_frame(const RDE& x, const FrameTriple& t);

/// z-space value relabelled into the w-frame (z -> w, f(z) -> f(w)).
RDE relabel_z_to_w(const RDE& x, const FramePtr& wframe);

/// The gauged supercharges in the z-space: z'^3 (d - f'''/f'') d^2 and
/// -z'^3 d^2 (d + f'''/f''). The prefactor is detached with label "z'".
Operator gauged_supercharge_minus(const FramePtr& zframe);
Operator gauged_supercharge_plus(const FramePtr& zframe);

/// Three-factor forms in the w-frame (prefactor "w'^3" detached).
Operator transformed_supercharge_minus(const FrameTriple& t);
Operator transformed_supercharge_plus(const FrameTriple& t);

/// Gauges of the two conjugations: phi1 and phi1^3 W_{2,1}^{-2}.
RDE gauge_minus(const FrameTriple& t);
RDE gauge_plus(const FrameTriple& t);

/// Bracketed w-space factors multiplying w'(q) in the E and F relations:
/// E = w''/w' + e_bracket w', F = f_bracket w'.
struct EFBrackets {
  RDE e_bracket;
  RDE f_bracket;
};
EFBrackets EF_in_new_frame(const FrameTriple& t);

/// A, A f'', B, C from the parameter matrix. In the z-space route the
/// scalar products xi^T Omega phi0, zeta0^T Omega phi0, zeta0'^T Omega phi0
/// are used; with a frame, the W-vector route in w.
struct ABC {
  RDE A;
  RDE A_f2;  // only meaningful in the z route
  RDE B;
  RDE C;
  RDE Q() const;
  FramePtr frame;
};

ABC matrix_form_ABC(const Matrix3& omega, const FramePtr& zframe);
ABC matrix_form_ABC(const Matrix3& omega, const FrameTriple& t);

/// Scalar route: the explicit polynomial expansions in a_i, b_i, c_i.
ABC scalar_form_ABC(const Matrix3& omega, const FramePtr& zframe);

/// Transformation rule of A, B, C, Q under a frame change (substitution +
/// Wronskian factors). Input in the z-frame, output in t's w-frame.
struct ABCQ {
  RDE A, B, C, Q;
};
ABCQ transform_ABCQ(const ABC& z_side, const FrameTriple& t);

}  // namespace trifold
