#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifold/diffalg/frame.hpp"
#include "trifold/diffalg/polynomial.hpp"

namespace trifold {

/// Denominator kept as a product of pairwise coprime primitive factors, each
/// with positive leading coefficient. Single variables are their own atoms.
using AtomList = std::vector<std::pair<Poly, unsigned>>;

/// Reduced quotient of differential polynomials living in a frame. A null
/// frame marks a value built only from numbers and parameters.
class RDE {
 public:
  RDE() = default;
  RDE(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RDE(std::int64_t c) : num_(c) {}     // NOLINT(google-explicit-constructor)
  explicit RDE(Poly p, FramePtr frame = nullptr);

  /// num / den, reduced. Throws DivisionError for den == 0.
  static RDE normalize(const Poly& num, const Poly& den, FramePtr frame = nullptr);
  static RDE var(Var v, FramePtr frame) { return RDE(Poly::var(v), std::move(frame)); }

  const FramePtr& frame() const { return frame_; }
  const Poly& numerator() const { return num_; }
  const AtomList& atoms() const { return den_; }
  Poly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// No variables at all (parameters count as variables).
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }
  bool contains_family(Family fam) const;
  unsigned max_order(Family fam) const;
  std::vector<Var> variables() const;
  std::size_t term_count() const;

  RDE operator-() const;
  friend RDE operator+(const RDE& a, const RDE& b);
  friend RDE operator-(const RDE& a, const RDE& b);
  friend RDE operator*(const RDE& a, const RDE& b);
  friend RDE operator/(const RDE& a, const RDE& b);
  RDE& operator+=(const RDE& o) { return *this = *this + o; }
  RDE& operator-=(const RDE& o) { return *this = *this - o; }
  RDE& operator*=(const RDE& o) { return *this = *this * o; }
  RDE& operator/=(const RDE& o) { return *this = *this / o; }
  RDE inverse() const;
  RDE pow(int e) const;

  /// Exact equality; a modular image may only short-circuit to false.
  /// Frames must be compatible (FrameError otherwise).
  friend bool equal(const RDE& a, const RDE& b);
  friend bool operator==(const RDE& a, const RDE& b) { return equal(a, b); }

  /// Derivative under the value's frame (or the given one).
  RDE derive() const;
  RDE derive(const FramePtr& frame) const;

  /// Replaces variables by RDE values; unmapped variables stay. The result
  /// lives in `target` (null keeps the current frame).
  RDE substitute(const std::function<std::optional<RDE>(Var)>& image, FramePtr target = nullptr) const;
  /// Same value viewed in another frame; every variable must be declared there.
  RDE in_frame(FramePtr target) const;

  std::optional<std::uint64_t> eval_mod(const ModPoint& pt, std::uint64_t p) const;

  std::string to_string() const;
  std::string latex() const;

 private:
  FramePtr frame_;
  Poly num_;
  AtomList den_;
};

bool equal(const RDE& a, const RDE& b);

/// Specializes the formal f of the frame's base variable to a concrete
/// function of that variable: f_k becomes the k-th derivative of target
/// (times the composite chain factors when the frame composes f).
RDE substitute_f(const RDE& x, const RDE& target);

std::ostream& operator<<(std::ostream& os, const RDE& x);

}  // namespace trifold
