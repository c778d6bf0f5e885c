#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "trifold/diffalg/jet.hpp"
#include "trifold/diffalg/rational.hpp"

namespace trifold {

/// Power product of jet variables. Factors are packed as (var_key << 8 | exp),
/// sorted by variable key; exponents are at most 255.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 4>;

  Monomial() = default;
  static Monomial of(Var v, unsigned exp = 1);

  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(Var v) const;
  std::size_t size() const { return factors_.size(); }
  Var var_at(std::size_t i) const { return Var::from_key(factors_[i] >> 8); }
  unsigned exp_at(std::size_t i) const { return factors_[i] & 0xFFu; }

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  /// Component-wise minimum (monomial gcd).
  Monomial gcd(const Monomial& other) const;
  /// Monomial with the factor for v removed or its exponent lowered by one.
  Monomial without(Var v) const;
  Monomial lowered(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Degree-lexicographic order over the canonical variable order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  std::string to_string() const;
  std::string latex() const;

 private:
  Storage factors_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Deterministic evaluation points for modular images. Each variable gets a
/// pseudo-random residue derived from its key and a trial number.
struct ModPoint {
  std::uint64_t trial = 0;
  std::uint64_t value(Var v) const;
};

/// Sparse multivariate polynomial over Q, terms sorted by decreasing monomial.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Var v, unsigned exp = 1);
  static Poly monomial(const Monomial& m, const Rational& c);
  /// Takes ownership of unsorted, possibly duplicated terms.
  static Poly from_terms(std::vector<Term> terms);
  /// Terms must already be strictly decreasing with nonzero coefficients.
  static Poly from_sorted(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_value() const;
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

  /// Sorted list of variables that occur.
  std::vector<Var> variables() const;
  bool contains(Var v) const;
  bool contains_family(Family fam) const;
  unsigned degree_in(Var v) const;
  unsigned max_order(Family fam) const;
  /// Coefficients with respect to v, indexed by exponent.
  std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

  Poly partial(Var v) const;
  Poly pow(unsigned e) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& c);
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }
  friend Poly operator*(std::int64_t c, const Poly& a) { return a * Rational(c); }
  friend Poly operator*(const Poly& a, std::int64_t c) { return a * Rational(c); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly mul_monomial(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;
  /// this / (content * sign(lc)): integer coefficients, positive leading coefficient.
  Poly primitive() const;
  Monomial monomial_content() const;

  /// Image in Z/pZ; nullopt when a coefficient denominator vanishes mod p.
  std::optional<std::uint64_t> eval_mod(const ModPoint& pt, std::uint64_t p) const;
  /// Univariate image in v (coefficients indexed by exponent), all other
  /// variables evaluated at pt.
  std::optional<std::vector<std::uint64_t>> image_mod(Var v, const ModPoint& pt, std::uint64_t p) const;

  /// Evaluates with every variable mapped through `value`; T must be a ring
  /// with T(Rational) construction, + and *.
  template <class T>
  T evaluate(const std::function<T(Var)>& value, const T& zero) const;

  std::size_t hash() const;
  std::string to_string() const;
  std::string latex() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient n / d if d divides n, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& n, const Poly& d);

/// Modular test: true when n and d provably share no non-constant factor.
bool provably_coprime(const Poly& a, const Poly& b);

/// Cheap necessary condition for d | n using a univariate modular image.
bool image_divides(const Poly& n, const Poly& d);

/// Greatest common divisor over Q, primitive with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// ---------------------------------------------------------------------------

template <class T>
T Poly::evaluate(const std::function<T(Var)>& value, const T& zero) const {
  std::map<std::pair<std::uint32_t, unsigned>, T> powers;
  std::map<std::uint32_t, T> base;
  auto power_of = [&](Var v, unsigned e) -> const T& {
    auto key = std::make_pair(v.key(), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto bit = base.find(v.key());
    if (bit == base.end()) bit = base.emplace(v.key(), value(v)).first;
    T r = bit->second;
    for (unsigned i = 1; i < e; ++i) r = r * bit->second;
    return powers.emplace(key, std::move(r)).first->second;
  };
  T acc = zero;
  for (const auto& [m, c] : terms_) {
    T t = zero + T(c);
    for (std::size_t i = 0; i < m.size(); ++i) t = t * power_of(m.var_at(i), m.exp_at(i));
    acc = acc + t;
  }
  return acc;
}

/// Largest product computed so far, in terms; reported with check results.
namespace stats {
void note_terms(std::size_t n);
std::size_t peak_terms();
void reset_peak_terms();
}  // namespace stats

}  // namespace trifold
