#pragma once

#include <array>
#include <memory>
#include <vector>

#include "trifold/diffalg/rde.hpp"

namespace trifold {

/// The basis (phi1, phi2, phi3) of the transformed sector, as functions of w,
/// with its Wronskians. Indices are 1-based as in the formulas.
class FrameTriple {
 public:
  /// phi_i left as free jets of w.
  static FrameTriple formal(unsigned budget = Frame::kDefaultBudget);
  /// (1, w, f(w)).
  static FrameTriple identity(unsigned budget = Frame::kDefaultBudget);
  /// Explicit functions in a w-frame. Throws DegenerateError when W_{2,1}
  /// or W_{31,21} vanishes identically.
  static FrameTriple from_functions(const RDE& phi1, const RDE& phi2, const RDE& phi3, FramePtr frame);

  const FramePtr& frame() const { return frame_; }
  bool is_formal() const { return formal_; }

  const RDE& phi(int i) const { return derivs_->at(i - 1)[0]; }
  /// k-th derivative of phi_i (orders up to 3 are cached).
  RDE phi(int i, unsigned k) const;

  /// W_{i,j} = phi_i' phi_j - phi_i phi_j'.
  RDE W(int i, int j) const;
  /// W_{i',j'} = phi_i'' phi_j' - phi_i' phi_j''.
  RDE Wp(int i, int j) const;
  /// W_{ij,kl} = W_{i,j}' W_{k,l} - W_{i,j} W_{k,l}'.
  RDE WW(int i, int j, int k, int l) const;

  /// phi_1'/phi_1, W_{2,1}'/W_{2,1}, W_{31,21}'/W_{31,21}.
  RDE log_phi1() const;
  RDE log_W21() const;
  RDE log_W3121() const;

  /// z = phi2/phi1 and f(z) = phi3/phi1.
  RDE z_image() const { return phi(2) / phi(1); }
  RDE f_image() const { return phi(3) / phi(1); }

 private:
  FrameTriple() = default;
  void check_nondegenerate() const;

  FramePtr frame_;
  bool formal_ = false;
  std::shared_ptr<const std::array<std::vector<RDE>, 3>> derivs_;
};

}  // namespace trifold
