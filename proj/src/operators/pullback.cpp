#include "trifold/operators/linear_operator.hpp"

namespace trifold {

Operator pullback(const Operator& p, const PullbackData& data, const FramePtr& target) {
  RDE zw = data.z.derive(target);
  if (zw.is_zero()) throw FrameError("change of variable is not invertible: dz/dw vanishes identically");
  if (data.gauge.is_zero()) throw FrameError("pullback gauge vanishes identically");

  unsigned top = 0;
  for (const auto& c : p.coeffs())
    if (c.contains_family(Family::F)) top = std::max(top, c.max_order(Family::F));
  // f_{k+1}(z) = d_w f_k / z_w
  std::vector<RDE> fj{data.f};
  const RDE inv_zw = zw.inverse();
  for (unsigned k = 1; k <= top; ++k) fj.push_back(fj.back().derive(target) * inv_zw);

  auto image = [&](Var v) -> std::optional<RDE> {
    if (v.family() == Family::Z) {
      if (v.order() != 0) throw SubstitutionError("pullback: unexpected jet " + v.name());
      return data.z;
    }
    if (v.family() == Family::F) return fj[v.order()];
    return std::nullopt;
  };

  const Operator dz = Operator({RDE(), inv_zw}, target);
  Operator acc({}, target);
  Operator dk = Operator::scalar(RDE(1), target);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) dk = compose(dk, dz);
    const RDE& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    acc = acc + c.substitute(image, target) * dk;
  }
  Operator out = compose(compose(Operator::scalar(data.gauge, target), acc),
                         Operator::scalar(data.gauge.inverse(), target));
  const int m = p.prefactor().power;
  if (m != 0) {
    out = zw.pow(m) * out;
    out = out.with_prefactor(m, "w'");
  }
  return out;
}

}  // namespace trifold
