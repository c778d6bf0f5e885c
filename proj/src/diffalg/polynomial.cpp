#include "trifold/diffalg/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include "trifold/diffalg/errors.hpp"
#include "trifold/diffalg/modular.hpp"

namespace trifold {

// ----------------------------------------------------------------------------
// Monomial

namespace {
constexpr std::uint32_t pack(std::uint32_t key, unsigned exp) { return (key << 8) | exp; }
constexpr std::uint32_t key_of(std::uint32_t packed) { return packed >> 8; }
constexpr unsigned exp_of(std::uint32_t packed) { return packed & 0xFFu; }

void check_exp(unsigned e) {
  if (e > 255) throw Error("monomial exponent exceeds 255");
}
}  // namespace

Monomial Monomial::of(Var v, unsigned exp) {
  Monomial m;
  if (exp == 0) return m;
  check_exp(exp);
  m.factors_.push_back(pack(v.key(), exp));
  m.degree_ = exp;
  return m;
}

unsigned Monomial::exponent(Var v) const {
  for (auto f : factors_)
    if (key_of(f) == v.key()) return exp_of(f);
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  std::size_t j = 0;
  for (auto f : factors_) {
    while (j < other.factors_.size() && key_of(other.factors_[j]) < key_of(f)) ++j;
    if (j == other.factors_.size() || key_of(other.factors_[j]) != key_of(f)) return false;
    if (exp_of(other.factors_[j]) < exp_of(f)) return false;
    ++j;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r;
  std::size_t j = 0;
  for (auto f : factors_) {
    unsigned e = exp_of(f);
    if (j < other.factors_.size() && key_of(other.factors_[j]) == key_of(f)) {
      e -= exp_of(other.factors_[j]);
      ++j;
    }
    if (e) {
      r.factors_.push_back(pack(key_of(f), e));
      r.degree_ += e;
    }
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    auto ka = key_of(factors_[i]), kb = key_of(other.factors_[j]);
    if (ka < kb) {
      ++i;
    } else if (kb < ka) {
      ++j;
    } else {
      unsigned e = std::min(exp_of(factors_[i]), exp_of(other.factors_[j]));
      r.factors_.push_back(pack(ka, e));
      r.degree_ += e;
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (auto f : factors_) {
    if (key_of(f) == v.key()) continue;
    r.factors_.push_back(f);
    r.degree_ += exp_of(f);
  }
  return r;
}

Monomial Monomial::lowered(Var v) const {
  Monomial r;
  for (auto f : factors_) {
    unsigned e = exp_of(f);
    if (key_of(f) == v.key()) --e;
    if (e) {
      r.factors_.push_back(pack(key_of(f), e));
      r.degree_ += e;
    }
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && key_of(a.factors_[i]) < key_of(b.factors_[j]))) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || key_of(b.factors_[j]) < key_of(a.factors_[i])) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      unsigned e = exp_of(a.factors_[i]) + exp_of(b.factors_[j]);
      check_exp(e);
      r.factors_.push_back(pack(key_of(a.factors_[i]), e));
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto ka = key_of(a.factors_[i]), kb = key_of(b.factors_[i]);
    if (ka != kb) return ka < kb ? std::strong_ordering::greater : std::strong_ordering::less;
    auto ea = exp_of(a.factors_[i]), eb = exp_of(b.factors_[i]);
    if (ea != eb) return ea <=> eb;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto f : factors_) {
    h ^= f;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += var_at(i).name();
    if (exp_at(i) > 1) s += "^" + std::to_string(exp_at(i));
  }
  return s;
}

std::string Monomial::latex() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::string v = var_at(i).latex();
    if (exp_at(i) > 1) {
      if (v.find('^') != std::string::npos) v = "{" + v + "}";
      v += "^{" + std::to_string(exp_at(i)) + "}";
    }
    if (i) s += " ";
    s += v;
  }
  return s;
}

// ----------------------------------------------------------------------------
// ModPoint

std::uint64_t ModPoint::value(Var v) const {
  std::uint64_t h = modp::splitmix64(v.key() * 0x9e3779b97f4a7c15ull ^ modp::splitmix64(trial + 0x51ed27));
  return h % modp::kPrime;
}

// ----------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Poly Poly::var(Var v, unsigned exp) { return monomial(Monomial::of(v, exp), Rational(1)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value of a non-constant polynomial");
  return terms_[0].second;
}

std::vector<Var> Poly::variables() const {
  std::vector<std::uint32_t> keys;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) keys.push_back(m.var_at(i).key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Var> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(Var::from_key(k));
  return out;
}

bool Poly::contains(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v)) return true;
  return false;
}

bool Poly::contains_family(Family fam) const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.var_at(i).family() == fam) return true;
  return false;
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

unsigned Poly::max_order(Family fam) const {
  unsigned o = 0;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.var_at(i).family() == fam) o = std::max(o, m.var_at(i).order());
  return o;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) buckets[m.exponent(v)].emplace_back(m.without(v), c);
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial x = Monomial::of(v, static_cast<unsigned>(e));
    for (const auto& [m, c] : coeffs[e].terms_) terms.emplace_back(m * x, c);
  }
  return from_terms(std::move(terms));
}

Poly Poly::partial(Var v) const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    if (e) terms.emplace_back(m.lowered(v), c * Rational(e));
  }
  return from_terms(std::move(terms));
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {
Poly merge(const Poly& a, const Poly& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.num_terms() + b.num_terms());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first > tb[j].first)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first > ta[i].first) {
      out.emplace_back(tb[j].first, subtract ? -tb[j].second : tb[j].second);
      ++j;
    } else {
      Rational c = subtract ? ta[i].second - tb[j].second : ta[i].second + tb[j].second;
      if (!c.is_zero()) out.emplace_back(ta[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted(std::move(out));
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
  return r;  // monomial order is multiplicative, so the order is preserved
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  stats::note_terms(terms.size());
  return Poly::from_terms(std::move(terms));
}

Poly operator*(const Poly& a, const Rational& c) {
  if (c.is_zero()) return Poly();
  Poly r = a;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class n = 0, d = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return Rational(mpq_class(n, d));
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.front().second.sign() < 0) c = -c;
  if (c.is_one()) return *this;
  return *this * c.inverse();
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().first;
  for (const auto& [m, c] : terms_) {
    if (g.is_one()) break;
    g = g.gcd(m);
  }
  return g;
}

namespace {
struct PointCache {
  const ModPoint& pt;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> values;
  std::uint64_t get(Var v) {
    for (const auto& [k, x] : values)
      if (k == v.key()) return x;
    std::uint64_t x = pt.value(v);
    values.emplace_back(v.key(), x);
    return x;
  }
};
}  // namespace

std::optional<std::uint64_t> Poly::eval_mod(const ModPoint& pt, std::uint64_t p) const {
  PointCache cache{pt, {}};
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    auto cm = c.mod(p);
    if (!cm) return std::nullopt;
    std::uint64_t t = *cm;
    for (std::size_t i = 0; i < m.size(); ++i) t = modp::mul(t, modp::pow(cache.get(m.var_at(i)), m.exp_at(i), p), p);
    acc = modp::add(acc, t, p);
  }
  return acc;
}

std::optional<std::vector<std::uint64_t>> Poly::image_mod(Var v, const ModPoint& pt, std::uint64_t p) const {
  PointCache cache{pt, {}};
  std::vector<std::uint64_t> out(degree_in(v) + 1, 0);
  for (const auto& [m, c] : terms_) {
    auto cm = c.mod(p);
    if (!cm) return std::nullopt;
    std::uint64_t t = *cm;
    unsigned ev = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.var_at(i) == v) {
        ev = m.exp_at(i);
        continue;
      }
      t = modp::mul(t, modp::pow(cache.get(m.var_at(i)), m.exp_at(i), p), p);
    }
    out[ev] = modp::add(out[ev], t, p);
  }
  return out;
}

std::size_t Poly::hash() const {
  std::size_t h = 0;
  for (const auto& [m, c] : terms_) h = h * 1000003u ^ (m.hash() + 31 * c.hash());
  return h;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += a.to_string();
    } else {
      if (!a.is_one()) s += (a.is_integer() ? a.to_string() : "(" + a.to_string() + ")") + "*";
      s += m.to_string();
    }
  }
  return s;
}

std::string Poly::latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string coef = a.is_integer() ? a.to_string()
                                      : "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
    if (m.is_one()) {
      s += coef;
    } else {
      if (!a.is_one()) s += coef + " ";
      s += m.latex();
    }
  }
  return s;
}

// ----------------------------------------------------------------------------
// Division and gcd

std::optional<Poly> divide_exact(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw DivisionError("polynomial division by zero");
  if (n.is_zero()) return Poly();
  if (d.is_constant()) return n * d.constant_value().inverse();
  const auto& [ld, lc] = d.leading();
  if (!ld.divides(n.leading().first)) return std::nullopt;
  if (!d.terms().back().first.divides(n.terms().back().first)) return std::nullopt;
  if (d.num_terms() == 1) {
    std::vector<Poly::Term> q;
    q.reserve(n.num_terms());
    Rational ic = lc.inverse();
    for (const auto& [m, c] : n.terms()) {
      if (!ld.divides(m)) return std::nullopt;
      q.emplace_back(m.quotient(ld), c * ic);
    }
    return Poly::from_terms(std::move(q));
  }
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& [m, c] : n.terms()) rem.emplace_hint(rem.end(), m, c);
  std::vector<Poly::Term> q;
  const Rational ilc = lc.inverse();
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!ld.divides(it->first)) return std::nullopt;
    Monomial qm = it->first.quotient(ld);
    Rational qc = it->second * ilc;
    rem.erase(it);
    for (std::size_t k = 1; k < d.num_terms(); ++k) {
      const auto& [dm, dc] = d.terms()[k];
      Monomial key = dm * qm;
      Rational delta = qc * dc;
      auto [jt, inserted] = rem.try_emplace(std::move(key), -delta);
      if (!inserted) {
        jt->second -= delta;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    q.emplace_back(std::move(qm), std::move(qc));
  }
  return Poly::from_terms(std::move(q));
}

namespace {

std::vector<Var> shared_variables(const Poly& a, const Poly& b) {
  auto va = a.variables(), vb = b.variables();
  std::vector<Var> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

constexpr int kTrials = 4;

}  // namespace

bool provably_coprime(const Poly& a, const Poly& b) {
  if ((a.is_constant() && !a.is_zero()) || (b.is_constant() && !b.is_zero())) return true;
  if (a.is_zero() || b.is_zero()) return false;
  for (Var v : shared_variables(a, b)) {
    const int da = static_cast<int>(a.degree_in(v));
    bool cleared = false;
    for (int t = 0; t < kTrials && !cleared; ++t) {
      ModPoint pt{static_cast<std::uint64_t>(t) * 7919 + v.key()};
      auto ia = a.image_mod(v, pt, modp::kPrime);
      auto ib = b.image_mod(v, pt, modp::kPrime);
      if (!ia || !ib) continue;
      modp::trim(*ia);
      if (modp::degree(*ia) != da) continue;
      auto g = modp::gcd(*ia, *ib);
      if (modp::degree(g) == 0) {
        cleared = true;
      } else {
        return false;
      }
    }
    if (!cleared) return false;
  }
  return true;
}

bool image_divides(const Poly& n, const Poly& d) {
  if (d.is_constant()) return true;
  if (n.is_zero()) return true;
  Var v = d.leading().first.var_at(0);
  const int dd = static_cast<int>(d.degree_in(v));
  for (int t = 0; t < kTrials; ++t) {
    ModPoint pt{static_cast<std::uint64_t>(t) * 104729 + 17};
    auto id = d.image_mod(v, pt, modp::kPrime);
    auto in = n.image_mod(v, pt, modp::kPrime);
    if (!id || !in) continue;
    modp::trim(*id);
    if (modp::degree(*id) != dd) continue;
    return modp::rem(*in, *id).empty();
  }
  return true;
}

namespace {

Poly content_in(const Poly& p, Var x);

Poly pseudo_remainder(const Poly& a, const Poly& b, Var x) {
  auto A = a.coefficients_in(x);
  auto B = b.coefficients_in(x);
  const std::size_t db = B.size() - 1;
  const Poly& lcb = B.back();
  while (!A.empty() && A.size() - 1 >= db) {
    Poly lca = A.back();
    const std::size_t shift = A.size() - 1 - db;
    for (auto& c : A) c = c * lcb;
    for (std::size_t i = 0; i <= db; ++i) A[shift + i] = A[shift + i] - lca * B[i];
    while (!A.empty() && A.back().is_zero()) A.pop_back();
  }
  return Poly::from_coefficients(x, A);
}

Poly primitive_in(const Poly& p, Var x) {
  Poly c = content_in(p, x);
  auto q = divide_exact(p, c);
  if (!q) throw Error("internal: content does not divide polynomial");
  return *q;
}

Poly content_in(const Poly& p, Var x) {
  auto coeffs = p.coefficients_in(x);
  Poly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g.is_zero() ? Poly(1) : g;
}

}  // namespace

namespace {

/// Coefficients of p viewed as a polynomial in the variables `outer`, smallest first.
std::vector<Poly> coefficients_over(const Poly& p, const std::vector<Var>& outer) {
  std::map<Monomial, std::vector<Poly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial keep, drop;
    for (std::size_t i = 0; i < m.size(); ++i) {
      bool out = std::binary_search(outer.begin(), outer.end(), m.var_at(i));
      (out ? keep : drop) = (out ? keep : drop) * Monomial::of(m.var_at(i), m.exp_at(i));
    }
    groups[keep].emplace_back(drop, c);
  }
  std::vector<Poly> out;
  out.reserve(groups.size());
  for (auto& [m, ts] : groups) out.push_back(Poly::from_terms(std::move(ts)));
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return x.num_terms() < y.num_terms(); });
  return out;
}

/// gcd(g, p) where p may involve variables g lacks.
Poly fold_gcd(Poly g, const Poly& p, const std::vector<Var>& extra) {
  for (const auto& c : coefficients_over(p, extra)) {
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

std::vector<Var> only_in(const Poly& a, const Poly& b) {
  auto va = a.variables(), vb = b.variables();
  std::vector<Var> out;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (provably_coprime(a, b)) return Poly(1);

  // Pull out the common monomial content first.
  Monomial mg = a.monomial_content().gcd(b.monomial_content());
  Poly mono = Poly::monomial(mg, Rational(1));
  Poly pa = mg.is_one() ? a.primitive() : divide_exact(a, mono)->primitive();
  Poly pb = mg.is_one() ? b.primitive() : divide_exact(b, mono)->primitive();
  if (pa.is_constant() || pb.is_constant()) return mono;
  if (pa.num_terms() < pb.num_terms()) std::swap(pa, pb);

  if (auto ea = only_in(pa, pb); !ea.empty()) return (mono * fold_gcd(pb, pa, ea)).primitive();
  if (auto eb = only_in(pb, pa); !eb.empty()) return (mono * fold_gcd(pa, pb, eb)).primitive();

  if (image_divides(pa, pb))
    if (divide_exact(pa, pb)) return (mono * pb).primitive();

  auto vars = pa.variables();
  Var x = vars.front();
  unsigned best = ~0u;
  for (Var v : vars) {
    unsigned d = std::max(pa.degree_in(v), pb.degree_in(v));
    if (d < best) best = d, x = v;
  }

  Poly ca = content_in(pa, x), cb = content_in(pb, x);
  Poly c = gcd(ca, cb);
  Poly r0 = primitive_in(pa, x), r1 = primitive_in(pb, x);
  if (r0.degree_in(x) < r1.degree_in(x)) std::swap(r0, r1);
  while (true) {
    Poly r = pseudo_remainder(r0, r1, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) {
      r1 = Poly(1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_in(r, x);
  }
  Poly g = r1.is_constant() ? Poly(1) : primitive_in(r1, x);
  return (mono * c * g).primitive();
}

namespace stats {
namespace {
std::atomic<std::size_t> peak{0};
}

void note_terms(std::size_t n) {
  std::size_t cur = peak.load(std::memory_order_relaxed);
  while (n > cur && !peak.compare_exchange_weak(cur, n, std::memory_order_relaxed)) {
  }
}
std::size_t peak_terms() { return peak.load(std::memory_order_relaxed); }
void reset_peak_terms() { peak.store(0, std::memory_order_relaxed); }
}  // namespace stats

}  // namespace trifold
