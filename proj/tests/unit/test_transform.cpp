#include "doctest.h"
#include "support/frames.hpp"
#include "trifold/diffalg/errors.hpp"
#include "trifold/transform/transform.hpp"

using namespace trifold;

namespace {

const FramePtr ZF = Frame::z_frame();
const FramePtr WF = Frame::w_frame();

RDE wv(Var v) { return RDE::var(v, WF); }

Matrix3 unit_entry(int r, int c) {
  std::array<std::array<Rational, 3>, 3> e{};
  e[r][c] = Rational(1);
  return Matrix3(e);
}

std::vector<FrameTriple> sample_frames() {
  testing::Gen g(101);
  std::vector<FrameTriple> out{FrameTriple::formal()};
  for (int i = 0; i < 4; ++i) out.push_back(testing::frame_from_matrix(testing::random_invertible(g)));
  return out;
}

void check_same(const DerivativeConversions& a, const DerivativeConversions& b) {
  CHECK(a.dz == b.dz);
  CHECK(a.d2z == b.d2z);
  CHECK(a.d3z == b.d3z);
  CHECK(a.df == b.df);
  CHECK(a.d2f == b.d2f);
  CHECK(a.d3f == b.d3f);
}

}  // namespace

TEST_CASE("identity frame conversions") {
  FrameTriple id = FrameTriple::identity();
  auto dc = derivative_conversions(id);
  CHECK(dc.dz == RDE(1));
  CHECK(dc.d2z.is_zero());
  CHECK(dc.d2f == wv(vars::f(2)));
  auto cq = chain_quantities(id);
  CHECK(cq.f1 == wv(vars::f(1)));
  CHECK(cq.f2 == wv(vars::f(2)));
  CHECK(cq.f3 == wv(vars::f(3)));
}

TEST_CASE("conversion formulas agree with direct differentiation") {
  for (const auto& t : sample_frames()) {
    check_same(derivative_conversions(t), direct_derivatives(t));
    CHECK(derivative_conversions(t).dz == t.W(2, 1) / t.phi(1).pow(2));
    auto closed = chain_quantities(t), direct = chain_quantities_direct(t);
    CHECK(closed.f1 == direct.f1);
    CHECK(closed.f2 == direct.f2);
    CHECK(closed.f3 == direct.f3);
    CHECK(closed.zf1_minus_f == direct.zf1_minus_f);
  }
}

TEST_CASE("z f'(z) - f(z) by substitution") {
  testing::Gen g(7);
  for (int i = 0; i < 3; ++i) {
    FrameTriple t = testing::frame_from_matrix(testing::random_invertible(g));
    RDE x = RDE::var(vars::z(), ZF) * RDE::var(vars::f(1), ZF) - RDE::var(vars::f(0), ZF);
    CHECK(to_frame(x, t) == t.W(3, 2) / t.W(2, 1));
  }
}

TEST_CASE("second Wronskian of a matrix frame") {
  testing::Gen g(9);
  for (int i = 0; i < 4; ++i) {
    Matrix3 l = testing::random_invertible(g);
    FrameTriple t = testing::frame_from_matrix(l);
    CHECK(t.WW(3, 1, 2, 1) == l.det() * t.phi(1) * wv(vars::f(2)));
  }
}

TEST_CASE("degenerate frames are rejected") {
  CHECK_THROWS_AS(FrameTriple::from_functions(RDE(1), RDE(2), wv(vars::f()), WF), DegenerateError);
  CHECK_THROWS_AS(FrameTriple::from_functions(RDE(1), wv(vars::w()), RDE(3) * wv(vars::w()), WF), DegenerateError);
}

TEST_CASE("transformed supercharge minus") {
  FrameTriple id = FrameTriple::identity();
  RDE r = wv(vars::f(3)) / wv(vars::f(2));
  Operator expected = compose(Operator::first_order(-r, WF), Operator::d(WF, 2)).with_prefactor(3, "w'");
  CHECK(transformed_supercharge_minus(id) == expected);

  for (const auto& t : sample_frames()) {
    Operator p = transformed_supercharge_minus(t);
    CHECK(p.order() == 3);
    for (int i = 1; i <= 3; ++i) CHECK(p.apply(t.phi(i)).is_zero());
    if (!t.is_formal()) {
      // Something outside the span is not annihilated.
      CHECK_FALSE(p.apply(wv(vars::f()) * wv(vars::w())).is_zero());
    }
  }
}

TEST_CASE("transformed supercharge plus") {
  FrameTriple id = FrameTriple::identity();
  RDE r = wv(vars::f(3)) / wv(vars::f(2));
  Operator expected = (-compose(Operator::d(WF, 2), Operator::first_order(r, WF))).with_prefactor(3, "w'");
  CHECK(transformed_supercharge_plus(id) == expected);
  CHECK(transformed_supercharge_plus(id).apply(wv(vars::f(2)).inverse()).is_zero());

  for (const auto& t : sample_frames()) {
    Operator p = transformed_supercharge_plus(t);
    RDE s = t.phi(1) / t.WW(3, 1, 2, 1);
    CHECK(p.apply(s * t.W(2, 1)).is_zero());
    CHECK(p.apply(s * t.W(3, 1)).is_zero());
    CHECK(p.apply(s * t.W(3, 2)).is_zero());
  }
}

TEST_CASE("supercharges pull back to their transformed forms") {
  testing::Gen g(55);
  for (int i = 0; i < 3; ++i) {
    FrameTriple t = testing::frame_from_matrix(testing::random_invertible(g));
    Operator minus = pullback(gauged_supercharge_minus(ZF), {t.z_image(), t.f_image(), gauge_minus(t)}, t.frame());
    CHECK(minus == transformed_supercharge_minus(t));
    Operator plus = pullback(gauged_supercharge_plus(ZF), {t.z_image(), t.f_image(), gauge_plus(t)}, t.frame());
    CHECK(plus == transformed_supercharge_plus(t));
  }
}

TEST_CASE("E and F brackets") {
  auto id = EF_in_new_frame(FrameTriple::identity());
  CHECK(id.e_bracket.is_zero());
  CHECK(id.f_bracket == wv(vars::f(3)) / wv(vars::f(2)));
  RDE w = wv(vars::w());
  auto quad = EF_in_new_frame(FrameTriple::from_functions(RDE(1), w, w * w, WF));
  CHECK(quad.f_bracket.is_zero());
}

TEST_CASE("matrix form examples") {
  const RDE z = RDE::var(vars::z(), ZF), f0 = RDE::var(vars::f(0), ZF), f1 = RDE::var(vars::f(1), ZF);
  ABC zero = matrix_form_ABC(Matrix3::zero(), ZF);
  CHECK(zero.A.is_zero());
  CHECK(zero.B.is_zero());
  CHECK(zero.C.is_zero());

  ABC c2 = matrix_form_ABC(unit_entry(0, 2), ZF);
  CHECK(c2.A_f2 == z * f0 * f1 - f0 * f0);
  CHECK(c2.B == -z * f0);
  CHECK(c2.C == f0);

  ABC a0 = matrix_form_ABC(unit_entry(2, 0), ZF);
  CHECK(a0.A_f2 == RDE(1));
  CHECK(a0.B.is_zero());
  CHECK(a0.C.is_zero());
}

TEST_CASE("matrix route equals the explicit expansions for symbolic parameters") {
  Matrix3 om = Matrix3::symbolic();
  ABC m = matrix_form_ABC(om, ZF), s = scalar_form_ABC(om, ZF);
  CHECK(m.A == s.A);
  CHECK(m.B == s.B);
  CHECK(m.C == s.C);
}

TEST_CASE("W-vector route equals the transformation rule") {
  testing::Gen g(77);
  for (int i = 0; i < 3; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5);
    FrameTriple t = testing::frame_from_matrix(testing::random_invertible(g));
    ABC w_route = matrix_form_ABC(om, t);
    ABCQ rule = transform_ABCQ(matrix_form_ABC(om, ZF), t);
    CHECK(w_route.A == rule.A);
    CHECK(w_route.B == rule.B);
    CHECK(w_route.C == rule.C);
    CHECK(w_route.Q() == rule.Q);
  }
  FrameTriple t = FrameTriple::formal();
  Matrix3 om = testing::random_matrix(g, -5, 5);
  ABC w_route = matrix_form_ABC(om, t);
  ABCQ rule = transform_ABCQ(matrix_form_ABC(om, ZF), t);
  CHECK(w_route.A == rule.A);
  CHECK(w_route.C == rule.C);
}
