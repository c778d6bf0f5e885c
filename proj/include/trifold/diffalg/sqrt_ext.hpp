#pragma once

#include <memory>
#include <string>

#include "trifold/diffalg/rde.hpp"

namespace trifold {

/// Shared data of a quadratic extension: s^2 = 2A(z), with A in the z-frame.
struct SqrtContext {
  RDE A;
  RDE A_prime;
  RDE two_A;

  static std::shared_ptr<const SqrtContext> make(const RDE& A);
};

using SqrtContextPtr = std::shared_ptr<const SqrtContext>;

/// even + odd * s. The derivation is d/dq with z' = s, so z'' = A'(z).
class SqrtExt {
 public:
  SqrtExt() = default;
  SqrtExt(std::int64_t c) : even_(c) {}       // NOLINT(google-explicit-constructor)
  SqrtExt(const Rational& c) : even_(c) {}    // NOLINT(google-explicit-constructor)
  SqrtExt(const RDE& even) : even_(even) {}   // NOLINT(google-explicit-constructor)
  SqrtExt(RDE even, RDE odd, SqrtContextPtr ctx);

  /// The adjoined element s = z'(q).
  static SqrtExt s(const SqrtContextPtr& ctx) { return SqrtExt(RDE(), RDE(1), ctx); }

  const RDE& even() const { return even_; }
  const RDE& odd() const { return odd_; }
  const SqrtContextPtr& context() const { return ctx_; }

  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_even() const { return odd_.is_zero(); }
  bool is_odd() const { return even_.is_zero(); }
  std::size_t term_count() const { return even_.term_count() + odd_.term_count(); }

  SqrtExt operator-() const;
  friend SqrtExt operator+(const SqrtExt& a, const SqrtExt& b);
  friend SqrtExt operator-(const SqrtExt& a, const SqrtExt& b);
  friend SqrtExt operator*(const SqrtExt& a, const SqrtExt& b);
  friend SqrtExt operator/(const SqrtExt& a, const SqrtExt& b);
  SqrtExt& operator+=(const SqrtExt& o) { return *this = *this + o; }
  SqrtExt& operator-=(const SqrtExt& o) { return *this = *this - o; }
  SqrtExt& operator*=(const SqrtExt& o) { return *this = *this * o; }
  SqrtExt inverse() const;
  SqrtExt pow(int e) const;

  friend bool operator==(const SqrtExt& a, const SqrtExt& b);

  /// d/dq (a + b s) = (2A b' + b A') + a' s.
  SqrtExt derive() const;

  std::string to_string() const;
  std::string latex() const;

 private:
  RDE even_;
  RDE odd_;
  SqrtContextPtr ctx_;
};

std::ostream& operator<<(std::ostream& os, const SqrtExt& x);

}  // namespace trifold
