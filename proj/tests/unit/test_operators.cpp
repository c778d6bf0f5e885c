#include "doctest.h"
#include "support/frames.hpp"
#include "support/generators.hpp"
#include "trifold/operators/linear_operator.hpp"
#include "trifold/transform/transform.hpp"

using namespace trifold;

namespace {

const FramePtr ZF = Frame::z_frame();
const FramePtr QF = Frame::q_frame();
const FramePtr WF = Frame::w_frame();
const std::vector<Var> kZVars = {vars::z(), vars::f(0), vars::f(1)};

RDE rnd(testing::Gen& g, const FramePtr& fr = ZF) {
  return RDE::normalize(g.poly(kZVars, 3, 2), g.nonzero_poly(kZVars, 2, 1), fr);
}

Operator random_op(testing::Gen& g, int order) {
  std::vector<RDE> c;
  for (int k = 0; k <= order; ++k) c.push_back(rnd(g));
  if (c.back().is_zero()) c.back() = RDE(1);
  return Operator(c, ZF);
}

Operator hamiltonian(const ABC& abc) {
  return Operator({-abc.C, -abc.B, -abc.A}, abc.frame);
}

}  // namespace

TEST_CASE("composition follows Leibniz") {
  testing::Gen g(3);
  for (int i = 0; i < 10; ++i) {
    RDE a = rnd(g), b = rnd(g);
    Operator lhs = compose(Operator::first_order(a, ZF), Operator::first_order(b, ZF));
    Operator rhs({b.derive() + a * b, a + b, RDE(1)}, ZF);
    CHECK(lhs == rhs);
  }
  Operator d = Operator::d(ZF);
  RDE r = RDE::var(vars::f(3), ZF) / RDE::var(vars::f(2), ZF);
  Operator p = compose(Operator::first_order(-r, ZF), Operator::d(ZF, 2));
  CHECK(p.apply(RDE::var(vars::f(0), ZF)).is_zero());
  CHECK(p.order() == 3);
  // The three factors with E = W = F = 0 collapse to d^3.
  CHECK(Operator::product({Operator::d(QF), Operator::d(QF), Operator::d(QF)}) == Operator::d(QF, 3));
}

TEST_CASE("composition agrees with successive application and is associative") {
  testing::Gen g(8);
  for (int i = 0; i < 10; ++i) {
    Operator p = random_op(g, 2), q = random_op(g, 1), s = random_op(g, 1);
    RDE u = rnd(g);
    CHECK(compose(p, q).apply(u) == p.apply(q.apply(u)));
    CHECK(compose(compose(p, q), s) == compose(p, compose(q, s)));
    CHECK(compose(p, q).order() == p.order() + q.order());
  }
}

TEST_CASE("transposition") {
  RDE W = RDE::var(vars::W(), QF);
  CHECK(Operator::first_order(W, QF).transpose() == Operator({W, RDE(-1)}, QF));
  CHECK(Operator::d(ZF, 2).transpose() == Operator::d(ZF, 2));
  testing::Gen g(12);
  for (int i = 0; i < 8; ++i) {
    Operator p = random_op(g, 3), q = random_op(g, 1);
    CHECK(p.transpose().transpose() == p);
    CHECK(compose(p, q).transpose() == compose(q.transpose(), p.transpose()));
  }
}

TEST_CASE("application") {
  CHECK(Operator::d(ZF, 2).apply(RDE::var(vars::z(), ZF)).is_zero());
  RDE f2 = RDE::var(vars::f(2), ZF), f3 = RDE::var(vars::f(3), ZF);
  CHECK(Operator::first_order(-f3 / f2, ZF).apply(f2).is_zero());
  testing::Gen g(4);
  Matrix3 om = testing::random_matrix(g, -5, 5);
  ABC abc = matrix_form_ABC(om, ZF);
  CHECK(hamiltonian(abc).apply(RDE(1)) == -abc.C);
}

TEST_CASE("detached prefactor folds through its square") {
  RDE two_a = RDE::var(vars::z(), ZF) + RDE(3);
  Operator p = Operator::d(ZF).with_prefactor(1, "z'", two_a);
  Operator pp = compose(p, p);
  CHECK(pp.prefactor().power == 0);
  CHECK(pp == two_a * Operator::d(ZF, 2));
  Operator q = Operator::d(ZF).with_prefactor(3, "z'");
  CHECK(compose(q, q).prefactor().power == 6);
}

TEST_CASE("pullback under the identity frame is a relabelling") {
  FrameTriple id = FrameTriple::identity();
  PullbackData data{id.z_image(), id.f_image(), gauge_minus(id)};
  CHECK(pullback(Operator::d(ZF), data, id.frame()) == Operator::d(WF));
  testing::Gen g(21);
  Matrix3 om = testing::random_matrix(g, -5, 5);
  Operator hz = hamiltonian(matrix_form_ABC(om, ZF));
  Operator hw = pullback(hz, data, id.frame());
  std::vector<RDE> relabelled;
  for (const auto& c : hz.coeffs()) relabelled.push_back(relabel_z_to_w(c, WF));
  CHECK(hw == Operator(relabelled, WF));
}

TEST_CASE("pullback of the Hamiltonian matches the transformation rule") {
  testing::Gen g(33);
  for (int i = 0; i < 3; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5);
    FrameTriple t = testing::frame_from_matrix(testing::random_invertible(g));
    ABC abc = matrix_form_ABC(om, ZF);
    Operator hw = pullback(hamiltonian(abc), {t.z_image(), t.f_image(), gauge_minus(t)}, t.frame());
    ABCQ hat = transform_ABCQ(abc, t);
    CHECK(hw.coeff(0) == -hat.C);
    CHECK(hw.coeff(1) == -hat.B);
    CHECK(hw.coeff(2) == -hat.A);
  }
}

TEST_CASE("pullback is functorial for matrix frames") {
  testing::Gen g(47);
  for (int i = 0; i < 3; ++i) {
    Matrix3 l1 = testing::random_invertible(g, -2, 2), l2 = testing::random_invertible(g, -2, 2);
    Matrix3 om = testing::random_matrix(g, -3, 3);
    Operator hz = hamiltonian(matrix_form_ABC(om, ZF));
    FrameTriple t1 = testing::frame_from_matrix(l1), t2 = testing::frame_from_matrix(l2);
    Operator step1 = pullback(hz, {t1.z_image(), t1.f_image(), gauge_minus(t1)}, t1.frame());
    // Read the w-space result as a z-space operator again, then pull back by the second frame.
    std::vector<RDE> back;
    for (const auto& c : step1.coeffs())
      back.push_back(c.substitute(
          [](Var v) -> std::optional<RDE> {
            if (v.family() == Family::W) return RDE::var(vars::z(v.order()), ZF);
            return std::nullopt;
          },
          ZF));
    Operator step2 = pullback(Operator(back, ZF), {t2.z_image(), t2.f_image(), gauge_minus(t2)}, t2.frame());
    FrameTriple t12 = testing::frame_from_matrix(l1 * l2);
    Operator direct = pullback(hz, {t12.z_image(), t12.f_image(), gauge_minus(t12)}, t12.frame());
    CHECK(step2 == direct);
  }
}
