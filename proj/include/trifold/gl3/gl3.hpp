#pragma once

#include "trifold/check.hpp"
#include "trifold/diffalg/matrix3.hpp"
#include "trifold/transform/frame_triple.hpp"
#include "trifold/typeb/qspace.hpp"
#include "trifold/typeb/system.hpp"

namespace trifold {

/// phi_i = l_i1 + l_i2 w + l_i3 f(w). Throws DegenerateError when det = 0.
FrameTriple gl3_frame(const Matrix3& lambda, unsigned budget = Frame::kDefaultBudget);

/// Closed forms of the Wronskians of a matrix frame, written with the
/// cofactors of lambda.
struct WronskianForms {
  RDE W21, W31, W32;
  RDE W3121;
  RDE Wp21, Wp31, Wp32;
};
WronskianForms wronskian_closed_forms(const Matrix3& lambda, const FramePtr& wframe);
/// The closed forms against the Wronskians computed from their definitions.
VerificationCheck verify_wronskian_forms(const Matrix3& lambda);

/// lambda^-1 omega lambda.
Matrix3 adjoint_transform(const Matrix3& omega, const Matrix3& lambda);

/// A, B, C, Q of the transformation rule against the matrix form of the
/// adjoint-transformed parameters, both in w.
VerificationCheck verify_ABC_covariance(const Matrix3& omega, const Matrix3& lambda);
/// Same, with the matrix used in place of lambda^-1 supplied by the caller.
VerificationCheck verify_ABC_covariance_using(const Matrix3& omega, const Matrix3& lambda, const Matrix3& lambda_inv);

/// Wronskian-vector form of the transformed A, B, C against the matrix form
/// of lambda^-1 omega lambda.
VerificationCheck verify_adjoint(const Matrix3& omega, const Matrix3& lambda);

/// Hatted E, W, F for a matrix frame. Inputs live in a q(w) frame; w'(q)
/// is the jet w_1 there.
EWF<RDE> transform_EWF(const EWF<RDE>& x, const FrameTriple& t, const FramePtr& qwframe);

/// J = (W21'' phi1 - W21' phi1' + W21 phi1'') f2 - W21' phi1 f3, with the
/// given second and third derivatives of f.
RDE j_function(const FrameTriple& t, const RDE& f2, const RDE& f3);
RDE j_function(const FrameTriple& t);

/// J = 0, phi1''' f'' = phi1'' f''' and invariance of I1, I2, I3 with E, W, F free.
VerificationCheck verify_invariants(const Matrix3& lambda);

/// C0, C1, C2 of the cubic (E + C0)^3 + C1 (E + C0) + C2.
struct SuperalgebraConstants {
  RDE C0, C1, C2;
};
SuperalgebraConstants superalgebra_constants(const Matrix3& omega);
/// Trace and determinant forms; det * Tr(omega^-1) is taken as the sum of
/// principal minors so singular matrices need no special case.
SuperalgebraConstants constants_from_traces(const Matrix3& omega);
/// Explicit forms = trace forms = characteristic polynomial coefficients.
VerificationCheck verify_constants(const Matrix3& omega);

/// (H + C0)^3 + C1 (H + C0) + C2 as an expanded operator.
Operator superalgebra_polynomial(const TypeBSystem& sys);
/// The monic sixth-order product (d + g)^2 (d + g + r)(d - r) d^2 with
/// g = (2A' + B)/A and r = f'''/f''.
Operator superalgebra_product(const TypeBSystem& sys);

/// Tier 1: the cubic annihilates the sector. Tier 2: -A^3 times the
/// product equals the cubic, i.e. the overall scalar is -(z')^6 = -8A^3.
VerificationCheck verify_superalgebra_tier1(const TypeBSystem& sys);
VerificationCheck verify_superalgebra_tier2(const TypeBSystem& sys);

VerificationCheck verify_invariance_of_constants(const Matrix3& omega, const Matrix3& lambda);
/// Constants of omega against those of an arbitrary second matrix.
VerificationCheck verify_constants_match(const Matrix3& omega, const Matrix3& other);

}  // namespace trifold
