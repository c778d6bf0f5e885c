#include "trifold/transform/frame_triple.hpp"

#include "trifold/diffalg/errors.hpp"

namespace trifold {
namespace {

constexpr unsigned kCached = 3;

std::shared_ptr<const std::array<std::vector<RDE>, 3>> tabulate(const std::array<RDE, 3>& phis, const FramePtr& fr) {
  auto t = std::make_shared<std::array<std::vector<RDE>, 3>>();
  for (int i = 0; i < 3; ++i) {
    (*t)[i].push_back(phis[i]);
    for (unsigned k = 1; k <= kCached; ++k) (*t)[i].push_back((*t)[i].back().derive(fr));
  }
  return t;
}

}  // namespace

FrameTriple FrameTriple::formal(unsigned budget) {
  FramePtr fr = Frame::w_frame(budget);
  FrameTriple t;
  t.frame_ = fr;
  t.formal_ = true;
  t.derivs_ = tabulate({RDE::var(vars::phi(1), fr), RDE::var(vars::phi(2), fr), RDE::var(vars::phi(3), fr)}, fr);
  t.check_nondegenerate();
  return t;
}

FrameTriple FrameTriple::identity(unsigned budget) {
  FramePtr fr = Frame::w_frame(budget);
  return from_functions(RDE(1), RDE::var(vars::w(), fr), RDE::var(vars::f(), fr), fr);
}

FrameTriple FrameTriple::from_functions(const RDE& phi1, const RDE& phi2, const RDE& phi3, FramePtr frame) {
  FrameTriple t;
  t.frame_ = frame;
  t.derivs_ = tabulate({phi1.in_frame(frame), phi2.in_frame(frame), phi3.in_frame(frame)}, frame);
  t.check_nondegenerate();
  return t;
}

RDE FrameTriple::phi(int i, unsigned k) const {
  const auto& col = derivs_->at(i - 1);
  if (k < col.size()) return col[k];
  RDE x = col.back();
  for (unsigned j = static_cast<unsigned>(col.size()) - 1; j < k; ++j) x = x.derive(frame_);
  return x;
}

RDE FrameTriple::W(int i, int j) const { return phi(i, 1) * phi(j, 0) - phi(i, 0) * phi(j, 1); }

RDE FrameTriple::Wp(int i, int j) const { return phi(i, 2) * phi(j, 1) - phi(i, 1) * phi(j, 2); }

RDE FrameTriple::WW(int i, int j, int k, int l) const {
  RDE a = W(i, j), b = W(k, l);
  return a.derive(frame_) * b - a * b.derive(frame_);
}

RDE FrameTriple::log_phi1() const { return phi(1, 1) / phi(1, 0); }

RDE FrameTriple::log_W21() const {
  RDE w = W(2, 1);
  return w.derive(frame_) / w;
}

RDE FrameTriple::log_W3121() const {
  RDE w = WW(3, 1, 2, 1);
  return w.derive(frame_) / w;
}

void FrameTriple::check_nondegenerate() const {
  if (phi(1).is_zero()) throw DegenerateError("degenerate frame: phi1 vanishes identically");
  if (W(2, 1).is_zero()) throw DegenerateError("degenerate frame: W_{2,1} vanishes identically");
  if (WW(3, 1, 2, 1).is_zero()) throw DegenerateError("degenerate frame: W_{31,21} vanishes identically");
}

}  // namespace trifold
