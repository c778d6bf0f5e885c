#include "trifold/diffalg/frame.hpp"

#include "trifold/diffalg/errors.hpp"

namespace trifold {
namespace {

void declare_parameters(auto&& set) {
  for (Family fam : {Family::Omega, Family::Lambda, Family::TypeA, Family::Mobius, Family::Symbol})
    set(fam, JetRule::Constant);
}

}  // namespace

JetRule Frame::rule(Family fam) const { return rules_[static_cast<std::size_t>(fam)].kind; }

FramePtr Frame::z_frame(unsigned budget) {
  auto fr = std::shared_ptr<Frame>(new Frame("z", Family::Z, budget));
  fr->set(Family::Z, JetRule::Base);
  fr->set(Family::F, JetRule::Free);
  declare_parameters([&](Family f, JetRule r) { fr->set(f, r); });
  return fr;
}

FramePtr Frame::w_frame(unsigned budget) {
  auto fr = std::shared_ptr<Frame>(new Frame("w", Family::W, budget));
  fr->set(Family::W, JetRule::Base);
  fr->set(Family::F, JetRule::Free);
  fr->set(Family::Phi, JetRule::Free);
  declare_parameters([&](Family f, JetRule r) { fr->set(f, r); });
  return fr;
}

FramePtr Frame::q_frame(unsigned budget) {
  auto fr = std::shared_ptr<Frame>(new Frame("q(z)", Family::Q, budget));
  fr->set(Family::Q, JetRule::Base);
  fr->set(Family::Z, JetRule::Free);
  fr->set(Family::F, JetRule::Composite, Family::Z);
  for (Family f : {Family::E, Family::Wsup, Family::Fsup, Family::Inv}) fr->set(f, JetRule::Free);
  declare_parameters([&](Family f, JetRule r) { fr->set(f, r); });
  return fr;
}

FramePtr Frame::qw_frame(unsigned budget) {
  auto fr = std::shared_ptr<Frame>(new Frame("q(w)", Family::Q, budget));
  fr->set(Family::Q, JetRule::Base);
  fr->set(Family::W, JetRule::Free);
  fr->set(Family::F, JetRule::Composite, Family::W);
  fr->set(Family::Phi, JetRule::Composite, Family::W);
  for (Family f : {Family::E, Family::Wsup, Family::Fsup, Family::Inv}) fr->set(f, JetRule::Free);
  declare_parameters([&](Family f, JetRule r) { fr->set(f, r); });
  return fr;
}

bool Frame::declares(Var v) const {
  switch (rule(v.family())) {
    case JetRule::Undeclared: return false;
    case JetRule::Base: return v.order() == 0;
    default: return true;
  }
}

Poly Frame::derive(Var v) const {
  const auto& r = rules_[static_cast<std::size_t>(v.family())];
  auto check_budget = [&]() {
    if (v.order() + 1 > budget_)
      throw BudgetError("derivative of " + v.name() + " exceeds jet-order budget " + std::to_string(budget_) +
                        " in frame " + name_);
  };
  switch (r.kind) {
    case JetRule::Undeclared:
      throw FrameError("jet " + v.name() + " is not declared in frame " + name_);
    case JetRule::Constant:
      return Poly();
    case JetRule::Base:
      if (v.order() != 0) throw FrameError("base variable " + v.name() + " has no higher jets in frame " + name_);
      return Poly(1);
    case JetRule::Free:
      check_budget();
      return Poly::var(v.next());
    case JetRule::Composite:
      check_budget();
      return Poly::var(v.next()) * Poly::var(Var(r.inner, 0, 1));
  }
  return Poly();
}

Poly Frame::derive(const Poly& p) const {
  Poly out;
  for (Var v : p.variables()) {
    Poly dv = derive(v);
    if (dv.is_zero()) continue;
    out += p.partial(v) * dv;
  }
  return out;
}

FramePtr combine_frames(const FramePtr& a, const FramePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw FrameError("cannot combine values from frames " + a->name() + " and " + b->name());
}

}  // namespace trifold
