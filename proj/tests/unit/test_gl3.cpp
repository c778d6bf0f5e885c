#include <chrono>

#include "doctest.h"
#include "support/frames.hpp"
#include "trifold/diffalg/errors.hpp"
#include "trifold/gl3/gl3.hpp"

using namespace trifold;

namespace {

const FramePtr ZF = Frame::z_frame();

RDE z() { return RDE::var(vars::z(), ZF); }

}  // namespace

TEST_CASE("matrix frames") {
  CHECK_THROWS_AS(gl3_frame(Matrix3::zero()), DegenerateError);
  FrameTriple id = gl3_frame(Matrix3::identity());
  CHECK(id.phi(1) == RDE(1));
  CHECK(id.W(2, 1) == RDE(1));
}

TEST_CASE("closed-form Wronskians") {
  CHECK(verify_wronskian_forms(Matrix3::identity()).passed());
  testing::Gen g(8);
  for (int i = 0; i < 5; ++i) CHECK(verify_wronskian_forms(testing::random_invertible(g)).passed());
  CHECK(verify_wronskian_forms(Matrix3::symbolic_lambda()).passed());
}

TEST_CASE("adjoint transform") {
  testing::Gen g(4);
  Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
  CHECK(adjoint_transform(om, Matrix3::identity()) == om);
  CHECK(l * adjoint_transform(om, l) == om * l);
  CHECK_THROWS_AS(adjoint_transform(om, Matrix3::zero()), DegenerateError);
}

TEST_CASE("A, B, C are covariant") {
  testing::Gen g(12);
  for (int i = 0; i < 4; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
    CHECK(verify_ABC_covariance(om, l).passed());
  }
  CHECK(verify_ABC_covariance(Matrix3::symbolic(), testing::random_invertible(g)).passed());
}

TEST_CASE("adjoint action on the parameters") {
  testing::Gen g(14);
  for (int i = 0; i < 3; ++i) {
    VerificationCheck c = verify_adjoint(testing::random_matrix(g, -5, 5), testing::random_invertible(g));
    INFO(c.residual);
    CHECK(c.passed());
  }
  CHECK(verify_adjoint(Matrix3::symbolic(), testing::random_invertible(g)).passed());
}

TEST_CASE("transposed inverse breaks covariance") {
  testing::Gen g(19);
  int detected = 0;
  for (int i = 0; i < 4; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
    if (l.inverse().transpose() == l.inverse()) continue;
    VerificationCheck c = verify_ABC_covariance_using(om, l, l.inverse().transpose());
    if (!c.passed()) ++detected;
  }
  CHECK(detected >= 3);
}

TEST_CASE("J and the invariants") {
  CHECK(verify_invariants(Matrix3::identity()).passed());
  testing::Gen g(23);
  for (int i = 0; i < 3; ++i) {
    VerificationCheck c = verify_invariants(testing::random_invertible(g));
    INFO(c.residual);
    CHECK(c.passed());
  }
  // A frame outside the matrix family.
  FramePtr wf = Frame::w_frame();
  const RDE w = RDE::var(vars::w(), wf), f = RDE::var(vars::f(), wf);
  FrameTriple t = FrameTriple::from_functions(RDE(1) + w * w, w, f, wf);
  CHECK_FALSE(j_function(t).is_zero());
}

TEST_CASE("constants") {
  CHECK(verify_constants(Matrix3::symbolic()).passed());
  auto k = superalgebra_constants(Matrix3::identity());
  CHECK(k.C0 == RDE(1));
  CHECK(k.C1.is_zero());
  CHECK(k.C2.is_zero());
  testing::Gen g(2);
  for (int i = 0; i < 5; ++i) CHECK(verify_constants(testing::random_matrix(g, -5, 5)).passed());
  // Singular matrix: the inverse-trace form is skipped, the rest still holds.
  std::array<std::array<Rational, 3>, 3> e{};
  e[0][1] = Rational(1);
  CHECK(verify_constants(Matrix3(e)).passed());
}

TEST_CASE("constants are invariant under conjugation") {
  testing::Gen g(6);
  for (int i = 0; i < 4; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
    CHECK(verify_invariance_of_constants(om, l).passed());
  }
  CHECK(verify_invariance_of_constants(Matrix3::symbolic(), testing::random_invertible(g)).passed());
  int detected = 0;
  for (int i = 0; i < 4; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5), l = testing::random_invertible(g);
    if (!verify_constants_match(om, l * om * l).passed()) ++detected;
  }
  CHECK(detected >= 3);
}

TEST_CASE("superalgebra cubic") {
  testing::Gen g(71);
  const RDE x = z();
  for (FSpec fs : {FSpec::formal(), FSpec::concrete(x * x * x), FSpec::concrete(x * x * x * x + x)}) {
    TypeBSystem sys = build_system(testing::random_invertible(g, -5, 5), fs);
    CHECK(verify_superalgebra_tier1(sys).passed());
    VerificationCheck t2 = verify_superalgebra_tier2(sys);
    INFO(t2.residual);
    CHECK(t2.passed());
  }
  // Wrong constants are caught.
  TypeBSystem sys = build_system(testing::random_invertible(g, -5, 5), FSpec::concrete(x * x * x));
  sys.omega = sys.omega + Matrix3::identity();
  CHECK_FALSE(verify_superalgebra_tier1(sys).passed());
}

TEST_CASE("independent E and F shifts do not preserve I2") {
  testing::Gen g(29);
  FrameTriple t = gl3_frame(testing::random_invertible(g));
  const FramePtr qw = Frame::qw_frame();
  const EWF<RDE> x = free_EWF(qw), hat = transform_EWF(x, t, qw);
  CHECK(invariants(hat).I1 == invariants(x).I1);
  CHECK_FALSE(invariants(hat).I2 == invariants(x).I2);
}
