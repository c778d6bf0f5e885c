#pragma once

#include <array>

#include "trifold/operators/linear_operator.hpp"
#include "trifold/transform/frame_triple.hpp"
#include "trifold/typeb/system.hpp"

namespace trifold {

/// The three q-space functions. S is RDE (free jets in a q-frame) or SqrtExt.
template <class S>
struct EWF {
  S E, W, F;
};

/// E, W, F as free jets of the given q-frame.
EWF<RDE> free_EWF(const FramePtr& qframe);

/// E = A' s/(2A), F = (f'''/f'') s, W = -Q s/(2A) with s = z'(q), s^2 = 2A.
struct QSpaceFunctions {
  SqrtContextPtr ctx;
  SqrtExt E, W, F;

  EWF<SqrtExt> ewf() const { return {E, W, F}; }
};

/// Throws DegenerateError when A vanishes identically (z' = 0).
QSpaceFunctions qspace_functions(const TypeBSystem& sys);

template <class S>
struct Potentials {
  S plus, minus;
};

template <class S>
struct ConditionResiduals {
  S F1, F2;
  S r2, r3;
};

template <class S>
struct Invariants {
  S I1, I2, I3;
};

namespace detail {

template <class S>
S dq(const S& x) {
  return ScalarOps<S>::derive(x, nullptr);
}

template <class S>
S num(std::int64_t p, std::int64_t q = 1) {
  return S(Rational(p, q));
}

}  // namespace detail

template <class S>
Potentials<S> potentials(const EWF<S>& x) {
  using detail::dq;
  using detail::num;
  const S &E = x.E, &W = x.W, &F = x.F;
  const S Fd = dq(F);
  const S common = num<S>(1, 2) * W * W - num<S>(1, 3) * (num<S>(2) * dq(E) - E * E) -
                   num<S>(1, 6) * (num<S>(2) * Fd + num<S>(2) * W * F - num<S>(2) * E * F - F * F);
  const S odd = num<S>(1, 2) * (num<S>(3) * dq(W) - Fd);
  return {common + odd, common - odd};
}

template <class S>
ConditionResiduals<S> condition_residuals(const EWF<S>& x) {
  using detail::dq;
  using detail::num;
  const S &E = x.E, &W = x.W, &F = x.F;
  const S Fd = dq(F);
  const S bracket = Fd - num<S>(2) * W * F + num<S>(2) * E * F + F * F;
  ConditionResiduals<S> out;
  out.F1 = dq(W) + E * W - num<S>(1, 4) * bracket;
  out.F2 = dq(E) + E * E + num<S>(1, 2) * bracket;
  const S F1d = dq(out.F1), F2d = dq(out.F2);
  const S mix = F1d - F2d * num<S>(1, 6);
  out.r2 = dq(F1d) - E * F1d - F * num<S>(1, 2) * mix;
  const S v = dq(F2d) - E * F2d;
  out.r3 = dq(v) - (num<S>(2) * E + num<S>(3, 2) * F) * v +
           num<S>(3, 2) * (num<S>(2) * Fd - num<S>(2) * E * F - F * F) * mix;
  return out;
}

template <class S>
Invariants<S> invariants(const EWF<S>& x) {
  using detail::dq;
  using detail::num;
  const S &E = x.E, &W = x.W, &F = x.F;
  const S Ed = dq(E), Fd = dq(F);
  Invariants<S> out;
  out.I1 = W - num<S>(1, 3) * F;
  out.I2 = num<S>(2) * Ed + Fd - E * E - E * F - num<S>(1, 3) * F * F;
  out.I3 = dq(Fd) - Ed * F - num<S>(3) * E * Fd - num<S>(2) * F * Fd + num<S>(2) * E * E * F +
           num<S>(2) * E * F * F + num<S>(4, 9) * F * F * F;
  return out;
}

/// P31 = d + W - E - F, P32 = d + W, P33 = d + W + E.
template <class S>
std::array<LinearDiffOperator<S>, 3> supercharge_factors(const EWF<S>& x, const FramePtr& frame = nullptr) {
  using Op = LinearDiffOperator<S>;
  return {Op::first_order(x.W - x.E - x.F, frame), Op::first_order(x.W, frame), Op::first_order(x.W + x.E, frame)};
}

template <class S>
LinearDiffOperator<S> supercharge(const EWF<S>& x, const FramePtr& frame = nullptr) {
  auto f = supercharge_factors(x, frame);
  return LinearDiffOperator<S>::product({f[0], f[1], f[2]});
}

template <class S>
LinearDiffOperator<S> supercharge_from_invariants(const Invariants<S>& inv, const FramePtr& frame = nullptr) {
  using detail::dq;
  using detail::num;
  const S &I1 = inv.I1, &I2 = inv.I2, &I3 = inv.I3;
  const S I1d = dq(I1);
  const S c0 = dq(I1d) + num<S>(3) * I1 * I1d + I1 * I1 * I1 + I1 * I2 + num<S>(1, 2) * dq(I2) - num<S>(1, 6) * I3;
  const S c1 = num<S>(3) * I1d + num<S>(3) * I1 * I1 + I2;
  const S c2 = num<S>(3) * I1;
  return LinearDiffOperator<S>({c0, c1, c2, S(1)}, frame);
}

template <class S>
Potentials<S> potential_from_invariants(const Invariants<S>& inv) {
  using detail::dq;
  using detail::num;
  const S common = num<S>(1, 2) * inv.I1 * inv.I1 - num<S>(1, 3) * inv.I2;
  const S odd = num<S>(3, 2) * dq(inv.I1);
  return {common + odd, common - odd};
}

/// -d^2/2 + V.
template <class S>
LinearDiffOperator<S> schroedinger(const S& V, const FramePtr& frame = nullptr) {
  return LinearDiffOperator<S>({V, S(), detail::num<S>(-1, 2)}, frame);
}

/// P3- H- - H+ P3- with the potentials of the supercharge's E, W, F.
template <class S>
LinearDiffOperator<S> intertwining_residual(const EWF<S>& x, const FramePtr& frame = nullptr) {
  const auto P = supercharge(x, frame);
  const auto V = potentials(x);
  return compose(P, schroedinger(V.minus, frame)) - compose(schroedinger(V.plus, frame), P);
}

/// Additive shifts (coefficients of w'(q)) of P31, P32, P33 under a frame change.
std::array<RDE, 3> factor_shifts(const FrameTriple& t);

/// With free E, W, F and the potentials above the residual is
/// -2 r2 d - r2' - (2W - F/2) r2 - r3/6, so it vanishes iff r2 = r3 = 0.
VerificationCheck verify_intertwining_free(const FramePtr& qframe);
/// Intertwining on a constructed system: the residual operator vanishes.
VerificationCheck verify_intertwining(const TypeBSystem& sys);
/// r2 = r3 = 0 on the q-space functions, even and odd parts separately.
VerificationCheck verify_conditions(const TypeBSystem& sys);

}  // namespace trifold
