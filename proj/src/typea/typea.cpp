#include "trifold/typea/typea.hpp"

#include "trifold/diffalg/errors.hpp"
#include "trifold/transform/transform.hpp"

namespace trifold {
namespace {

RDE sym(Var v) { return RDE(Poly::var(v)); }

RDE half(const RDE& x) { return x * RDE(Rational(1, 2)); }

Rational binomial(int m, int n) {
  if (n < 0 || m < n) return Rational(0);
  Rational r(1);
  for (int k = 1; k <= n; ++k) r = r * Rational(m - n + k) / Rational(k);
  return r;
}

void require_nondegenerate(const MobiusParameters& m) {
  if (m.Delta().is_zero()) throw DegenerateError("alpha delta - beta gamma vanishes");
}

// Coefficient vectors in w, lowest degree first.
using Coeffs = std::vector<RDE>;

Coeffs mul(const Coeffs& x, const Coeffs& y) {
  Coeffs out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

Coeffs power(const Coeffs& x, int e) {
  Coeffs out{RDE(1)};
  for (int i = 0; i < e; ++i) out = mul(out, x);
  return out;
}

}  // namespace

TypeACoefficients TypeACoefficients::symbolic() {
  TypeACoefficients c;
  for (unsigned i = 0; i < 5; ++i) c.a[i] = sym(vars::typea(i));
  for (unsigned i = 0; i < 3; ++i) c.b[i] = sym(vars::typea(5 + i));
  c.R = sym(vars::typea(8));
  return c;
}

RDE TypeACoefficients::A_poly(const FramePtr& zf) const {
  const RDE z = RDE::var(vars::z(), zf);
  RDE out;
  for (int i = 4; i >= 0; --i) out = out * z + a[i];
  return out.in_frame(zf);
}

RDE TypeACoefficients::Q_poly(const FramePtr& zf) const {
  const RDE z = RDE::var(vars::z(), zf);
  return ((b[2] * z + b[1]) * z + b[0]).in_frame(zf);
}

MobiusParameters MobiusParameters::symbolic() {
  return {sym(vars::mobius(0)), sym(vars::mobius(1)), sym(vars::mobius(2)), sym(vars::mobius(3))};
}

MobiusParameters compose(const MobiusParameters& m1, const MobiusParameters& m2) {
  return {m1.alpha * m2.alpha + m1.beta * m2.gamma, m1.alpha * m2.beta + m1.beta * m2.delta,
          m1.gamma * m2.alpha + m1.delta * m2.gamma, m1.gamma * m2.beta + m1.delta * m2.delta};
}

OmegaMatrix omega_from_typeA(const TypeACoefficients& t) {
  const auto& A = t.a;
  const auto& B = t.b;
  const RDE c0 = A[2] * RDE(Rational(1, 3)) - B[1] + t.R;
  std::array<std::array<RDE, 3>, 3> e;
  e[0] = {c0, A[3] - RDE(2) * B[2], RDE(2) * A[4]};
  e[1] = {half(-A[1] + RDE(2) * B[0]), -A[2] + B[1] + c0, half(-A[3] - RDE(2) * B[2])};
  e[2] = {RDE(2) * A[0], A[1] + RDE(2) * B[0], RDE(2) * B[1] + c0};
  return Matrix3(e);
}

TypeACoefficients typeA_from_omega(const OmegaMatrix& om) {
  TypeACoefficients t;
  const RDE quarter(Rational(1, 4));
  t.a[4] = half(om.c(2));
  t.a[0] = half(om.a(0));
  t.b[0] = (om.a(1) + RDE(2) * om.b(0)) * quarter;
  t.a[1] = half(om.a(1) - RDE(2) * om.b(0));
  t.b[2] = -(RDE(2) * om.b(2) + om.c(1)) * quarter;
  t.a[3] = half(om.c(1) - RDE(2) * om.b(2));
  t.b[1] = half(om.a(2) - om.c(0));
  t.a[2] = t.b[1] + om.c(0) - om.b(1);
  t.R = om.c(0) - t.a[2] * RDE(Rational(1, 3)) + t.b[1];
  if (!(omega_from_typeA(t) == om)) throw NotInImageError("matrix is not in the type A image");
  return t;
}

Operator typeA_hamiltonian(const TypeACoefficients& c, const FramePtr& zf) {
  const RDE A = c.A_poly(zf), Q = c.Q_poly(zf);
  const RDE A1 = A.derive(zf);
  return Operator({-A1.derive(zf) * RDE(Rational(1, 6)) + Q.derive(zf) - c.R, -(Q - half(A1)), -A}, zf);
}

Transvectants transvectants(const TypeACoefficients& c) {
  const auto& a = c.a;
  const auto& b = c.b;
  Transvectants t;
  t.D2 = RDE(4) * b[0] * b[2] - b[1] * b[1];
  t.i2 = RDE(12) * a[0] * a[4] - RDE(3) * a[1] * a[3] + a[2] * a[2];
  t.j3 = half(RDE(72) * a[0] * a[2] * a[4] - RDE(27) * a[0] * a[3] * a[3] - RDE(27) * a[1] * a[1] * a[4] +
              RDE(9) * a[1] * a[2] * a[3] - RDE(2) * a[2].pow(3));
  t.I12 = RDE(6) * a[4] * b[0] * b[0] - RDE(3) * a[3] * b[0] * b[1] + RDE(2) * a[2] * b[0] * b[2] +
          a[2] * b[1] * b[1] - RDE(3) * a[1] * b[1] * b[2] + RDE(6) * a[0] * b[2] * b[2];
  return t;
}

VerificationCheck verify_typea_limit(const TypeACoefficients& c) {
  return run_check("typea-limit", [&](Residuals& r) {
    const FramePtr zf = Frame::z_frame();
    const RDE z = RDE::var(vars::z(), zf);
    const TypeBSystem sys = build_system(omega_from_typeA(c), FSpec::concrete(z * z));
    const Operator diff = sys.H - typeA_hamiltonian(c, sys.frame);
    for (int k = 0; k <= 2; ++k) r.zero("coefficient of d^" + std::to_string(k), diff.coeff(k));
    const TypeACoefficients back = typeA_from_omega(sys.omega);
    for (int i = 0; i < 5; ++i) r.zero("round trip a" + std::to_string(i), back.a[i] - c.a[i]);
    for (int i = 0; i < 3; ++i) r.zero("round trip b" + std::to_string(i), back.b[i] - c.b[i]);
    r.zero("round trip R", back.R - c.R);
  });
}

VerificationCheck verify_transvectants(const TypeACoefficients& c) {
  return run_check("transvectants", [&](Residuals& r) {
    const auto k = superalgebra_constants(omega_from_typeA(c));
    const auto t = transvectants(c);
    r.zero("C0 - R", k.C0 - c.R);
    r.zero("3C1 + i2 - 3D2", RDE(3) * k.C1 + t.i2 - RDE(3) * t.D2);
    r.zero("27C2 - 2j3 - 18I12", RDE(27) * k.C2 - RDE(2) * t.j3 - RDE(18) * t.I12);
  });
}

Matrix3 gl2_embedding(const MobiusParameters& m) {
  require_nondegenerate(m);
  const RDE &al = m.alpha, &be = m.beta, &ga = m.gamma, &de = m.delta;
  std::array<std::array<RDE, 3>, 3> e;
  e[0] = {de * de, RDE(2) * ga * de, ga * ga};
  e[1] = {be * de, al * de + be * ga, al * ga};
  e[2] = {be * be, RDE(2) * al * be, al * al};
  return Matrix3(e);
}

FrameTriple gl2_frame(const MobiusParameters& m, unsigned budget) {
  const Matrix3 l = gl2_embedding(m);
  FramePtr wf = Frame::w_frame(budget);
  const RDE w = RDE::var(vars::w(), wf);
  auto row = [&](int i) { return (l(i, 0) + l(i, 1) * w + l(i, 2) * w * w).in_frame(wf); };
  return FrameTriple::from_functions(row(0), row(1), row(2), wf);
}

MatrixN multiply(const MatrixN& x, const MatrixN& y) {
  const std::size_t n = x.size();
  MatrixN out(n, std::vector<RDE>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!x[i][k].is_zero())
        for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

bool equal(const MatrixN& x, const MatrixN& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!(x[i][j] == y[i][j])) return false;
  return true;
}

MatrixN glN_embedding(int n, const MobiusParameters& m) {
  if (n < 2) throw DegenerateError("N must be at least 2");
  require_nondegenerate(m);
  MatrixN out(n, std::vector<RDE>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= j - 1; ++k) {
        const Rational c = binomial(n - i, j - k - 1) * binomial(i - 1, k);
        if (c.is_zero()) continue;
        out[i - 1][j - 1] += RDE(c) * m.alpha.pow(k) * m.beta.pow(i - k - 1) * m.gamma.pow(j - k - 1) *
                             m.delta.pow(n - i - j + k + 1);
      }
  return out;
}

MatrixN glN_by_expansion(int n, const MobiusParameters& m) {
  if (n < 2) throw DegenerateError("N must be at least 2");
  require_nondegenerate(m);
  const Coeffs num{m.beta, m.alpha}, den{m.delta, m.gamma};
  MatrixN out;
  for (int i = 1; i <= n; ++i) {
    Coeffs row = mul(power(den, n - i), power(num, i - 1));
    row.resize(n);
    out.push_back(row);
  }
  return out;
}

EWF<RDE> typeA_EWF_transform(const MobiusParameters& m, const RDE& E, const RDE& W, const FramePtr& qw) {
  require_nondegenerate(m);
  const RDE w = RDE::var(vars::w(), qw), w1 = RDE::var(vars::w(1), qw);
  return {E + RDE(2) * m.gamma * w1 / (m.gamma * w + m.delta), W, RDE()};
}

VerificationCheck verify_gl2_embedding(const MobiusParameters& m) {
  return run_check("embedding", [&](Residuals& r) {
    const Matrix3 l = gl2_embedding(m);
    r.zero("det - Delta^3", l.det() - m.Delta().pow(3));
    const FrameTriple t = gl2_frame(m);
    r.zero("W21 - Delta phi1", t.W(2, 1) - m.Delta() * t.phi(1));

    const MatrixN l3 = glN_embedding(3, m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.zero("binomial formula entry " + std::to_string(i + 1) + std::to_string(j + 1), l3[i][j] - l(i, j));

    const FramePtr qw = Frame::qw_frame();
    const RDE E = RDE::var(vars::E(), qw), W = RDE::var(vars::W(), qw);
    const EWF<RDE> general = transform_EWF({E, W, RDE()}, gl3_frame(l), qw);
    const RDE w = RDE::var(vars::w(), qw);
    const EWF<RDE> special = typeA_EWF_transform(m, E, W, qw);
    r.zero("E hat", substitute_f(general.E, w * w) - special.E);
    r.zero("W hat", substitute_f(general.W, w * w) - special.W);
    r.zero("F hat", substitute_f(general.F, w * w) - special.F);

    const VerificationCheck inv = verify_invariants(l);
    r.holds("gl3 invariants on the subgroup", inv.passed(), inv.residual);
  });
}

VerificationCheck verify_glN_multiplicativity(int n, const MobiusParameters& m1, const MobiusParameters& m2) {
  return run_check("embedding-multiplicativity", [&](Residuals& r) {
    const MatrixN lhs = glN_embedding(n, compose(m1, m2));
    const MatrixN rhs = multiply(glN_embedding(n, m1), glN_embedding(n, m2));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.zero("entry " + std::to_string(i + 1) + "," + std::to_string(j + 1), lhs[i][j] - rhs[i][j]);
  });
}

}  // namespace trifold
