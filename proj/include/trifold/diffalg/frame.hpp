#pragma once

#include <array>
#include <memory>
#include <string>

#include "trifold/diffalg/jet.hpp"
#include "trifold/diffalg/polynomial.hpp"

namespace trifold {

/// How the frame's derivation acts on the jets of one family.
enum class JetRule : std::uint8_t {
  Undeclared,  // using the family in this frame is an error
  Constant,    // derivative zero
  Base,        // the base variable itself: d(x) = 1, no higher jets
  Free,        // g_k -> g_{k+1}
  Composite,   // g_k(u) -> g_{k+1} * u_1 (chain rule through family `inner`)
};

/// A derivation d/d(base) on differential polynomials. Immutable; shared by
/// pointer between every value that lives in it.
class Frame {
 public:
  static constexpr unsigned kDefaultBudget = 6;

  /// z-space: base z, f(z) free.
  static std::shared_ptr<const Frame> z_frame(unsigned budget = kDefaultBudget);
  /// w-space: base w, f(w) and the formal phi_i(w) free.
  static std::shared_ptr<const Frame> w_frame(unsigned budget = kDefaultBudget);
  /// q-space over z(q): z free, f composite through z, E W F I free.
  static std::shared_ptr<const Frame> q_frame(unsigned budget = kDefaultBudget);
  /// q-space over w(q): w free, f and phi composite through w, E W F I free.
  static std::shared_ptr<const Frame> qw_frame(unsigned budget = kDefaultBudget);

  const std::string& name() const { return name_; }
  Family base() const { return base_; }
  unsigned budget() const { return budget_; }
  JetRule rule(Family fam) const;

  bool declares(Var v) const;
  /// Derivative of a single jet; throws FrameError / BudgetError.
  Poly derive(Var v) const;
  Poly derive(const Poly& p) const;

  /// Jet of the base variable when the base is a plain variable (z, w), for
  /// building "the variable" of this frame.
  Var base_var() const { return Var(base_, 0, 0); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.name_ == b.name_ && a.budget_ == b.budget_; }

 private:
  struct Rule {
    JetRule kind = JetRule::Undeclared;
    Family inner = Family::Z;
  };
  Frame(std::string name, Family base, unsigned budget) : name_(std::move(name)), base_(base), budget_(budget) {}
  void set(Family fam, JetRule kind, Family inner = Family::Z) {
    rules_[static_cast<std::size_t>(fam)] = Rule{kind, inner};
  }

  std::string name_;
  Family base_;
  unsigned budget_;
  std::array<Rule, 16> rules_{};
};

using FramePtr = std::shared_ptr<const Frame>;

/// Frame of a binary operation: null means "frame-free constant".
FramePtr combine_frames(const FramePtr& a, const FramePtr& b);

}  // namespace trifold
