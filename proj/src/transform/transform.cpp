#include "trifold/transform/transform.hpp"

#include "trifold/diffalg/errors.hpp"

namespace trifold {
namespace {

RDE derive_n(RDE x, const FramePtr& fr, unsigned n) {
  for (unsigned k = 0; k < n; ++k) x = x.derive(fr);
  return x;
}

/// f_k(z) as functions of w for k = 0..top.
std::vector<RDE> f_jets(const FrameTriple& t, unsigned top) {
  const FramePtr& fr = t.frame();
  const RDE inv_zw = t.z_image().derive(fr).inverse();
  std::vector<RDE> out{t.f_image()};
  for (unsigned k = 1; k <= top; ++k) out.push_back(out.back().derive(fr) * inv_zw);
  return out;
}

Operator d_plus(const RDE& a, const FramePtr& fr) { return Operator::first_order(a, fr); }

}  // namespace

DerivativeConversions derivative_conversions(const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const RDE p = t.phi(1), p1 = t.phi(1, 1), p2 = t.phi(1, 2);
  const RDE ip2 = p.pow(-2), ip3 = p.pow(-3), ip4 = p.pow(-4);
  auto conv = [&](const RDE& w) {
    RDE w1 = w.derive(fr), w2 = w1.derive(fr);
    return std::array<RDE, 3>{w * ip2, w1 * ip2 - RDE(2) * w * p1 * ip3,
                              w2 * ip2 - (RDE(4) * w1 * p1 + RDE(2) * w * p2) * ip3 + RDE(6) * w * p1 * p1 * ip4};
  };
  auto z = conv(t.W(2, 1));
  auto f = conv(t.W(3, 1));
  return {z[0], z[1], z[2], f[0], f[1], f[2]};
}

DerivativeConversions direct_derivatives(const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  RDE z = t.z_image(), f = t.f_image();
  return {derive_n(z, fr, 1), derive_n(z, fr, 2), derive_n(z, fr, 3),
          derive_n(f, fr, 1), derive_n(f, fr, 2), derive_n(f, fr, 3)};
}

ChainQuantities chain_quantities(const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const RDE w21 = t.W(2, 1), w31 = t.W(3, 1), w32 = t.W(3, 2);
  const RDE big = t.WW(3, 1, 2, 1);
  const RDE p = t.phi(1), p1 = t.phi(1, 1);
  const RDE w21d = w21.derive(fr), bigd = big.derive(fr);
  ChainQuantities q;
  q.f1 = w31 / w21;
  q.f2 = big * p * p / w21.pow(3);
  q.f3 = (bigd * p + RDE(2) * big * p1) * p.pow(3) / w21.pow(4) - RDE(3) * big * w21d * p.pow(4) / w21.pow(5);
  q.zf1_minus_f = w32 / w21;
  return q;
}

ChainQuantities chain_quantities_direct(const FrameTriple& t) {
  auto fj = f_jets(t, 3);
  return {fj[1], fj[2], fj[3], t.z_image() * fj[1] - fj[0]};
}

RDE to_frame(const RDE& x, const FrameTriple& t) {
  const unsigned top = x.contains_family(Family::F) ? x.max_order(Family::F) : 0;
  auto fj = f_jets(t, top);
  const RDE z = t.z_image();
  return x.substitute(
      [&](Var v) -> std::optional<RDE> {
        if (v.family() == Family::Z) return z;
        if (v.family() == Family::F) return fj[v.order()];
        return std::nullopt;
      },
      t.frame());
}

RDE relabel_z_to_w(const RDE& x, const FramePtr& wframe) {
  return x.substitute(
      [&](Var v) -> std::optional<RDE> {
        if (v.family() == Family::Z) return RDE::var(vars::w(v.order()), wframe);
        if (v.family() == Family::F) return RDE::var(v, wframe);
        return std::nullopt;
      },
      wframe);
}

Operator gauged_supercharge_minus(const FramePtr& zf) {
  RDE r = RDE::var(vars::f(3), zf) / RDE::var(vars::f(2), zf);
  return compose(d_plus(-r, zf), Operator::d(zf, 2)).with_prefactor(3, "z'");
}

Operator gauged_supercharge_plus(const FramePtr& zf) {
  RDE r = RDE::var(vars::f(3), zf) / RDE::var(vars::f(2), zf);
  return (-compose(Operator::d(zf, 2), d_plus(r, zf))).with_prefactor(3, "z'");
}

Operator transformed_supercharge_minus(const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const RDE a = t.log_W21(), b = t.log_phi1(), c = t.log_W3121();
  return Operator::product({d_plus(b + a - c, fr), d_plus(b - a, fr), d_plus(-b, fr)}).with_prefactor(3, "w'");
}

Operator transformed_supercharge_plus(const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const RDE a = t.log_W21(), b = t.log_phi1(), c = t.log_W3121();
  return (-Operator::product({d_plus(b, fr), d_plus(a - b, fr), d_plus(c - a - b, fr)})).with_prefactor(3, "w'");
}

RDE gauge_minus(const FrameTriple& t) { return t.phi(1); }

RDE gauge_plus(const FrameTriple& t) { return t.phi(1).pow(3) / t.W(2, 1).pow(2); }

EFBrackets EF_in_new_frame(const FrameTriple& t) {
  const RDE a = t.log_W21(), b = t.log_phi1(), c = t.log_W3121();
  return {a - RDE(2) * b, c - RDE(3) * a + RDE(2) * b};
}

RDE ABC::Q() const { return B + A.derive(frame) * RDE(Rational(1, 2)); }

ABC matrix_form_ABC(const Matrix3& omega, const FramePtr& zf) {
  const RDE z = RDE::var(vars::z(), zf), f0 = RDE::var(vars::f(0), zf), f1 = RDE::var(vars::f(1), zf);
  const RDE f2 = RDE::var(vars::f(2), zf);
  const Column3 phi0{RDE(1), z, f0};
  const Column3 xi{z * f1 - f0, -f1, RDE(1)};
  const Column3 zeta0{z, RDE(-1), RDE()};
  const Column3 zeta0d{RDE(1), RDE(), RDE()};
  const Column3 om = omega * phi0;
  ABC r;
  r.frame = zf;
  r.A_f2 = dot(xi, om).in_frame(zf);
  r.A = r.A_f2 / f2;
  r.B = (-dot(zeta0, om)).in_frame(zf);
  r.C = dot(zeta0d, om).in_frame(zf);
  return r;
}

ABC matrix_form_ABC(const Matrix3& omega, const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const Column3 phi{t.phi(1), t.phi(2), t.phi(3)};
  const Column3 wv{t.W(3, 2), -t.W(3, 1), t.W(2, 1)};
  const Column3 wd{wv[0].derive(fr), wv[1].derive(fr), wv[2].derive(fr)};
  const Column3 wpp{t.Wp(3, 2), -t.Wp(3, 1), t.Wp(2, 1)};
  const Column3 om = omega * phi;
  const RDE scale = t.phi(1) / t.WW(3, 1, 2, 1);
  ABC r;
  r.frame = fr;
  r.A = (scale * dot(wv, om)).in_frame(fr);
  r.B = (-scale * dot(wd, om)).in_frame(fr);
  r.C = (scale * dot(wpp, om)).in_frame(fr);
  return r;
}

ABC scalar_form_ABC(const Matrix3& o, const FramePtr& zf) {
  const RDE z = RDE::var(vars::z(), zf), f = RDE::var(vars::f(0), zf), f1 = RDE::var(vars::f(1), zf);
  const RDE f2 = RDE::var(vars::f(2), zf);
  ABC r;
  r.frame = zf;
  r.A_f2 = ((o.c(2) * z - o.b(2)) * f + o.c(1) * z * z + (o.c(0) - o.b(1)) * z - o.b(0)) * f1 -
           (o.c(2) * f + o.c(1) * z + o.c(0) - o.a(2)) * f + o.a(1) * z + o.a(0);
  r.A = r.A_f2 / f2;
  r.B = -(o.c(2) * z - o.b(2)) * f - o.c(1) * z * z - (o.c(0) - o.b(1)) * z + o.b(0);
  r.C = (o.c(2) * f + o.c(1) * z + o.c(0)).in_frame(zf);
  r.A_f2 = r.A_f2.in_frame(zf);
  r.B = r.B.in_frame(zf);
  return r;
}

ABCQ transform_ABCQ(const ABC& zs, const FrameTriple& t) {
  const FramePtr& fr = t.frame();
  const RDE A = to_frame(zs.A, t), B = to_frame(zs.B, t), C = to_frame(zs.C, t), Q = to_frame(zs.Q(), t);
  const RDE p = t.phi(1), p1 = t.phi(1, 1);
  const RDE w21 = t.W(2, 1), w21d = w21.derive(fr), wp21 = t.Wp(2, 1);
  const RDE p4 = p.pow(4);
  ABCQ r;
  r.A = A * p4 / w21.pow(2);
  r.B = B * p * p / w21 - A * w21d * p4 / w21.pow(3);
  r.C = C - B * p * p1 / w21 + A * wp21 * p4 / w21.pow(3);
  r.Q = Q * p * p / w21 - RDE(2) * A * (w21d / w21 - p1 / p) * p4 / w21.pow(2);
  return r;
}

}  // namespace trifold
