#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace trifold {

/// Indeterminate families. The numeric value fixes the canonical variable
/// order (smaller key = larger variable in the monomial order).
enum class Family : std::uint8_t {
  Z = 1,        // z, the type B coordinate
  W = 2,        // w, the transformed coordinate
  Q = 3,        // q, physical coordinate (base only)
  F = 4,        // f, the defining function
  Phi = 5,      // phi_1..phi_3, formal frame functions
  E = 6,        // E(q)
  Wsup = 7,     // W(q), superpotential-like function
  Fsup = 8,     // F(q)
  Inv = 9,      // I_1..I_3 as free functions
  Omega = 10,   // Omega entries, index = 3*row + col
  Lambda = 11,  // Lambda entries, index = 3*row + col
  TypeA = 12,   // type A coefficients a4..a0, b2..b0, R
  Mobius = 13,  // alpha, beta, gamma, delta
  Symbol = 14,  // generic named parameter symbols (index only)
};

/// A jet variable: (family, index, order). Packed into 24 bits so that a
/// monomial factor (variable, exponent) fits a single 32-bit word.
class Var {
 public:
  constexpr Var() = default;
  constexpr Var(Family fam, unsigned index = 0, unsigned order = 0)
      : key_((static_cast<std::uint32_t>(fam) << 16) | ((index & 0xFFu) << 8) | (order & 0xFFu)) {}

  static constexpr Var from_key(std::uint32_t key) {
    Var v;
    v.key_ = key & 0xFFFFFFu;
    return v;
  }

  constexpr Family family() const { return static_cast<Family>(key_ >> 16); }
  constexpr unsigned index() const { return (key_ >> 8) & 0xFFu; }
  constexpr unsigned order() const { return key_ & 0xFFu; }
  constexpr std::uint32_t key() const { return key_; }

  constexpr Var with_order(unsigned o) const { return Var(family(), index(), o); }
  constexpr Var next() const { return with_order(order() + 1); }

  /// True for families whose derivative is zero in every frame.
  constexpr bool is_parameter() const {
    switch (family()) {
      case Family::Omega:
      case Family::Lambda:
      case Family::TypeA:
      case Family::Mobius:
      case Family::Symbol:
        return true;
      default:
        return false;
    }
  }

  friend constexpr bool operator==(Var a, Var b) { return a.key_ == b.key_; }
  friend constexpr auto operator<=>(Var a, Var b) { return a.key_ <=> b.key_; }

  std::string name() const;
  std::string latex() const;

 private:
  std::uint32_t key_ = 0;
};

namespace vars {
inline constexpr Var z(unsigned order = 0) { return Var(Family::Z, 0, order); }
inline constexpr Var w(unsigned order = 0) { return Var(Family::W, 0, order); }
inline constexpr Var f(unsigned order = 0) { return Var(Family::F, 0, order); }
inline constexpr Var phi(unsigned i, unsigned order = 0) { return Var(Family::Phi, i, order); }
inline constexpr Var E(unsigned order = 0) { return Var(Family::E, 0, order); }
inline constexpr Var W(unsigned order = 0) { return Var(Family::Wsup, 0, order); }
inline constexpr Var F(unsigned order = 0) { return Var(Family::Fsup, 0, order); }
inline constexpr Var I(unsigned i, unsigned order = 0) { return Var(Family::Inv, i, order); }
/// Omega entry at (row, col), rows (c0 c1 c2 / b0 b1 b2 / a0 a1 a2).
inline constexpr Var omega(unsigned row, unsigned col) { return Var(Family::Omega, 3 * row + col); }
inline constexpr Var lambda(unsigned row, unsigned col) { return Var(Family::Lambda, 3 * row + col); }
/// Type A coefficient slot: 0..4 -> a4..a0, 5..7 -> b2..b0, 8 -> R.
inline constexpr Var typea(unsigned slot) { return Var(Family::TypeA, slot); }
/// 0..3 -> alpha, beta, gamma, delta.
inline constexpr Var mobius(unsigned i) { return Var(Family::Mobius, i); }
inline constexpr Var symbol(unsigned i) { return Var(Family::Symbol, i); }
}  // namespace vars

}  // namespace trifold
