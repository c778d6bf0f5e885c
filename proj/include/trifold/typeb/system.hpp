#pragma once

#include <array>
#include <optional>
#include <string>

#include "trifold/check.hpp"
#include "trifold/operators/linear_operator.hpp"
#include "trifold/typeb/omega.hpp"

namespace trifold {

/// The function f(z): left formal, or a concrete rational function of z.
struct FSpec {
  std::optional<RDE> f;

  static FSpec formal() { return {}; }
  static FSpec concrete(RDE f) { return {std::move(f)}; }
  bool is_formal() const { return !f.has_value(); }
  std::string to_string() const { return f ? f->to_string() : "formal"; }
};

/// Gauged type B system in the z-space.
struct TypeBSystem {
  OmegaMatrix omega;
  FSpec fspec;
  FramePtr frame;

  /// f, f', f'', f''' after specialization.
  std::array<RDE, 4> f;
  RDE A, A_f2, B, C, Q;
  /// -A d^2 - B d - C.
  Operator H;
  /// z'^3 (d - f'''/f'') d^2 and -z'^3 d^2 (d + f'''/f''), prefactor detached.
  Operator P_minus, P_plus;
  /// <1, z, f> and (1/f'') <1, f', z f' - f>.
  std::array<RDE, 3> sector_minus, sector_plus;

  /// Replaces the formal f by fspec (identity when formal).
  RDE specialize(const RDE& x) const;
};

/// Throws DegenerateError when f'' vanishes identically.
TypeBSystem build_system(const OmegaMatrix& omega, const FSpec& fspec, unsigned budget = Frame::kDefaultBudget);

Operator hamiltonian(const RDE& A, const RDE& B, const RDE& C, const FramePtr& frame);

/// H phi_i + (Omega phi)_i = 0 for phi = (1, z, f).
VerificationCheck verify_preservation(const TypeBSystem& sys);
/// The supercharges annihilate their sectors.
VerificationCheck verify_sectors(const TypeBSystem& sys);

}  // namespace trifold
