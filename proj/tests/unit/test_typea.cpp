#include "doctest.h"
#include "support/frames.hpp"
#include "trifold/diffalg/errors.hpp"
#include "trifold/typea/typea.hpp"

using namespace trifold;

namespace {

TypeACoefficients random_typeA(testing::Gen& g) {
  TypeACoefficients c;
  for (auto& x : c.a) x = RDE(g.integer(-5, 5));
  for (auto& x : c.b) x = RDE(g.integer(-5, 5));
  c.R = RDE(g.integer(-5, 5));
  return c;
}

MobiusParameters random_mobius(testing::Gen& g) {
  for (;;) {
    MobiusParameters m{RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4)), RDE(g.integer(-4, 4))};
    if (!m.Delta().is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("type A parameter dictionary") {
  CHECK(omega_from_typeA(TypeACoefficients{}) == Matrix3::zero());

  TypeACoefficients r{};
  r.R = RDE(3);
  Matrix3 om = omega_from_typeA(r);
  std::array<std::array<Rational, 3>, 3> e{};
  e[0][0] = Rational(3);
  e[2][2] = Rational(3);
  e[1][1] = Rational(3);
  CHECK(om == Matrix3(e));

  testing::Gen g(3);
  for (int i = 0; i < 4; ++i) CHECK(verify_typea_limit(random_typeA(g)).passed());
  CHECK(verify_typea_limit(TypeACoefficients::symbolic()).passed());
}

TEST_CASE("every matrix has a type A preimage") {
  testing::Gen g(9);
  for (int i = 0; i < 4; ++i) {
    Matrix3 om = testing::random_matrix(g, -5, 5);
    CHECK(omega_from_typeA(typeA_from_omega(om)) == om);
  }
  CHECK(omega_from_typeA(typeA_from_omega(Matrix3::symbolic())) == Matrix3::symbolic());
}

TEST_CASE("transvectants") {
  TypeACoefficients q{};
  q.b = {RDE(1), RDE(0), RDE(1)};
  CHECK(transvectants(q).D2 == RDE(4));

  TypeACoefficients quartic{};
  quartic.a[4] = RDE(1);
  CHECK(transvectants(quartic).i2.is_zero());
  CHECK(transvectants(quartic).j3.is_zero());

  CHECK(verify_transvectants(TypeACoefficients::symbolic()).passed());
  testing::Gen g(17);
  for (int i = 0; i < 3; ++i) CHECK(verify_transvectants(random_typeA(g)).passed());
}

TEST_CASE("the literal last term of I12 breaks the C2 reduction") {
  TypeACoefficients c = TypeACoefficients::symbolic();
  auto t = transvectants(c);
  RDE literal = t.I12 - RDE(6) * c.a[0] * c.b[2] * c.b[2] + RDE(6) * c.a[0] * c.b[0] * c.b[0];
  auto k = superalgebra_constants(omega_from_typeA(c));
  CHECK_FALSE(RDE(27) * k.C2 == RDE(2) * t.j3 + RDE(18) * literal);
}

TEST_CASE("GL(2) embedding") {
  CHECK(gl2_embedding(MobiusParameters{}) == Matrix3::identity());
  CHECK_THROWS_AS(gl2_embedding(MobiusParameters{RDE(1), RDE(2), RDE(2), RDE(4)}), DegenerateError);

  MobiusParameters s = MobiusParameters::symbolic();
  CHECK(gl2_embedding(s).det() == s.Delta().pow(3));

  testing::Gen g(23);
  for (int i = 0; i < 4; ++i) {
    VerificationCheck c = verify_gl2_embedding(random_mobius(g));
    INFO(c.residual);
    CHECK(c.passed());
  }
}

TEST_CASE("type A E W F transform") {
  const FramePtr qw = Frame::qw_frame();
  const RDE E = RDE::var(vars::E(), qw), W = RDE::var(vars::W(), qw);
  auto id = typeA_EWF_transform(MobiusParameters{}, E, W, qw);
  CHECK(id.E == E);
  CHECK(id.W == W);
  CHECK(id.F.is_zero());

  // Same shift written through z = (alpha w + beta)/(gamma w + delta).
  testing::Gen g(5);
  MobiusParameters m = random_mobius(g);
  const RDE w = RDE::var(vars::w(), qw);
  const RDE z = (m.alpha * w + m.beta) / (m.gamma * w + m.delta);
  auto hat = typeA_EWF_transform(m, E, W, qw);
  if (!m.gamma.is_zero()) CHECK(hat.E - E == RDE(-2) * m.gamma * z.derive(qw) / (m.gamma * z - m.alpha));

  // Factor shifts: the middle one vanishes and the outer ones are 2 gamma/(gamma w + delta).
  FrameTriple t = gl2_frame(m);
  auto sh = factor_shifts(t);
  const RDE wv = RDE::var(vars::w(), t.frame());
  const RDE expected = RDE(2) * m.gamma / (m.gamma * wv + m.delta);
  CHECK(sh[0] == -expected);
  CHECK(sh[1].is_zero());
  CHECK(sh[2] == expected);
}

TEST_CASE("GL(N) embedding") {
  testing::Gen g(31);
  for (int n = 2; n <= 5; ++n) {
    MatrixN id = glN_embedding(n, MobiusParameters{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(id[i][j] == RDE(i == j ? 1 : 0));
    MobiusParameters m = random_mobius(g);
    CHECK(equal(glN_embedding(n, m), glN_by_expansion(n, m)));
  }
  MobiusParameters m{RDE(2), RDE(3), RDE(5), RDE(7)};
  MatrixN two = glN_embedding(2, m);
  CHECK(two[0][0] == RDE(7));
  CHECK(two[0][1] == RDE(5));
  CHECK(two[1][0] == RDE(3));
  CHECK(two[1][1] == RDE(2));
  CHECK_THROWS_AS(glN_embedding(1, m), DegenerateError);

  MobiusParameters s = MobiusParameters::symbolic();
  MatrixN l3 = glN_embedding(3, s);
  Matrix3 l = gl2_embedding(s);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l3[i][j] == l(i, j));
}

TEST_CASE("the embedding is a homomorphism") {
  testing::Gen g(37);
  for (int n = 2; n <= 5; ++n) {
    int hom = 0, anti = 0;
    for (int trial = 0; trial < 10; ++trial) {
      MobiusParameters m1 = random_mobius(g), m2 = random_mobius(g);
      const MatrixN lhs = glN_embedding(n, compose(m1, m2));
      if (equal(lhs, multiply(glN_embedding(n, m1), glN_embedding(n, m2)))) ++hom;
      if (equal(lhs, multiply(glN_embedding(n, m2), glN_embedding(n, m1)))) ++anti;
      CHECK(verify_glN_multiplicativity(n, m1, m2).passed());
    }
    CHECK(hom == 10);
    CHECK(anti < 10);
  }
}
