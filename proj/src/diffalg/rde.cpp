#include "trifold/diffalg/rde.hpp"

#include <algorithm>
#include <ostream>

#include "trifold/diffalg/errors.hpp"
#include "trifold/diffalg/modular.hpp"

namespace trifold {
namespace {

bool is_var_atom(const Poly& p) { return p.num_terms() == 1; }

bool atoms_coprime(const Poly& a, const Poly& b) {
  if (a == b) return false;
  // Non-monomial atoms carry no monomial content, so a variable atom cannot divide them.
  if (is_var_atom(a) || is_var_atom(b)) return true;
  return provably_coprime(a, b) || gcd(a, b).is_constant();
}

Poly expand(const AtomList& atoms) {
  Poly out(1);
  for (const auto& [a, e] : atoms) out *= a.pow(e);
  return out;
}

void sort_atoms(AtomList& atoms) {
  std::erase_if(atoms, [](const auto& ae) { return ae.second == 0; });
  std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
}

/// p = c * prod(atoms) with atoms primitive, positive leading coefficient,
/// monomial content split into variables.
std::pair<Rational, AtomList> split(const Poly& p) {
  Monomial m = p.monomial_content();
  AtomList atoms;
  for (std::size_t i = 0; i < m.size(); ++i) atoms.emplace_back(Poly::var(m.var_at(i)), m.exp_at(i));
  Poly rest = m.is_one() ? p : *divide_exact(p, Poly::monomial(m, Rational(1)));
  if (rest.is_constant()) return {rest.constant_value(), atoms};
  Poly prim = rest.primitive();
  Rational c = rest.leading().second / prim.leading().second;
  atoms.emplace_back(std::move(prim), 1);
  return {c, atoms};
}

/// Pairwise coprime refinement: every input is a product of powers of the
/// output, up to a constant.
std::vector<Poly> coprime_basis(std::vector<Poly> work) {
  std::vector<Poly> basis;
  while (!work.empty()) {
    Poly p = std::move(work.back());
    work.pop_back();
    if (p.is_constant()) continue;
    auto [c, parts] = split(p);
    if (parts.size() > 1) {
      for (auto& [a, e] : parts) work.push_back(std::move(a));
      continue;
    }
    p = std::move(parts.front().first);
    bool absorbed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Poly& b = basis[i];
      if (b == p) {
        absorbed = true;
        break;
      }
      if (atoms_coprime(b, p)) continue;
      Poly g = gcd(b, p);
      work.push_back(*divide_exact(b, g));
      work.push_back(*divide_exact(p, g));
      work.push_back(std::move(g));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      absorbed = true;
      break;
    }
    if (!absorbed) basis.push_back(std::move(p));
  }
  return basis;
}

/// Rewrites atoms over a basis. Returns k with prod(old) = k * prod(new).
Rational rewrite_over(AtomList& atoms, const std::vector<Poly>& basis) {
  std::vector<unsigned> exps(basis.size(), 0);
  Rational k(1);
  for (const auto& [a, e] : atoms) {
    auto hit = std::find(basis.begin(), basis.end(), a);
    if (hit != basis.end()) {
      exps[static_cast<std::size_t>(hit - basis.begin())] += e;
      continue;
    }
    Poly r = a;
    for (std::size_t i = 0; i < basis.size() && !r.is_constant(); ++i) {
      while (auto q = divide_exact(r, basis[i])) {
        exps[i] += e;
        r = std::move(*q);
        if (r.is_constant()) break;
      }
    }
    if (!r.is_constant()) throw Error("internal: atom does not factor over coprime basis");
    k *= r.constant_value().pow(static_cast<int>(e));
  }
  atoms.clear();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (exps[i]) atoms.emplace_back(basis[i], exps[i]);
  sort_atoms(atoms);
  return k;
}

bool compatible(const AtomList& a, const AtomList& b) {
  for (const auto& [pa, ea] : a)
    for (const auto& [pb, eb] : b)
      if (pa != pb && !atoms_coprime(pa, pb)) return false;
  return true;
}

/// Brings two denominators onto a common coprime basis; returns the constants
/// that must divide the respective numerators.
std::pair<Rational, Rational> unify(AtomList& a, AtomList& b) {
  if (compatible(a, b)) return {Rational(1), Rational(1)};
  std::vector<Poly> polys;
  for (const auto& [p, e] : a) polys.push_back(p);
  for (const auto& [p, e] : b) polys.push_back(p);
  auto basis = coprime_basis(std::move(polys));
  Rational ka = rewrite_over(a, basis);
  Rational kb = rewrite_over(b, basis);
  return {ka, kb};
}

/// Removes every common factor of num and the atoms. Atoms may be refined.
void cancel(Poly& num, AtomList& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
restart:
  for (auto& [a, e] : den) {
    while (e > 0) {
      if (num.is_constant()) break;
      if (is_var_atom(a)) {
        Var x = a.leading().first.var_at(0);
        if (num.monomial_content().exponent(x) == 0) break;
        num = *divide_exact(num, a);
        --e;
        continue;
      }
      if (image_divides(num, a)) {
        if (auto q = divide_exact(num, a)) {
          num = std::move(*q);
          --e;
          continue;
        }
      }
      if (provably_coprime(num, a)) break;
      Poly g = gcd(num, a);
      if (g.is_constant()) break;
      std::vector<Poly> polys{g};
      for (const auto& [p, pe] : den) polys.push_back(p);
      Rational k = rewrite_over(den, coprime_basis(std::move(polys)));
      num = num * k.inverse();
      goto restart;
    }
  }
  sort_atoms(den);
}

AtomList merge(const AtomList& a, const AtomList& b, bool use_max) {
  AtomList out = a;
  for (const auto& [p, e] : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& x) { return x.first == p; });
    if (it == out.end()) {
      out.emplace_back(p, e);
    } else {
      it->second = use_max ? std::max(it->second, e) : it->second + e;
    }
  }
  sort_atoms(out);
  return out;
}

/// prod(big) / prod(small) where every atom of small occurs in big.
Poly cofactor(const AtomList& big, const AtomList& small) {
  Poly out(1);
  for (const auto& [p, e] : big) {
    auto it = std::find_if(small.begin(), small.end(), [&](const auto& x) { return x.first == p; });
    unsigned have = it == small.end() ? 0 : it->second;
    if (e > have) out *= p.pow(e - have);
  }
  return out;
}

std::string wrap(const std::string& s, bool need) { return need ? "(" + s + ")" : s; }

}  // namespace

RDE::RDE(Poly p, FramePtr frame) : frame_(std::move(frame)), num_(std::move(p)) {}

RDE RDE::normalize(const Poly& num, const Poly& den, FramePtr frame) {
  if (den.is_zero()) throw DivisionError("normalize: zero denominator");
  return RDE(num, frame) / RDE(den, frame);
}

Poly RDE::denominator() const { return expand(den_); }

bool RDE::contains_family(Family fam) const {
  if (num_.contains_family(fam)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const auto& ae) { return ae.first.contains_family(fam); });
}

unsigned RDE::max_order(Family fam) const {
  unsigned m = num_.max_order(fam);
  for (const auto& [a, e] : den_) m = std::max(m, a.max_order(fam));
  return m;
}

std::vector<Var> RDE::variables() const {
  std::vector<Var> vs = num_.variables();
  for (const auto& [a, e] : den_) {
    auto av = a.variables();
    vs.insert(vs.end(), av.begin(), av.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::size_t RDE::term_count() const {
  std::size_t n = num_.num_terms();
  for (const auto& [a, e] : den_) n += a.num_terms();
  return n;
}

RDE RDE::operator-() const {
  RDE r = *this;
  r.num_ = -r.num_;
  return r;
}

RDE operator+(const RDE& a, const RDE& b) {
  RDE r;
  r.frame_ = combine_frames(a.frame_, b.frame_);
  if (a.is_zero()) {
    r.num_ = b.num_;
    r.den_ = b.den_;
    return r;
  }
  if (b.is_zero()) {
    r.num_ = a.num_;
    r.den_ = a.den_;
    return r;
  }
  if (a.den_.empty() && b.den_.empty()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    cancel(r.num_, r.den_);
    return r;
  }
  AtomList da = a.den_, db = b.den_;
  auto [ka, kb] = unify(da, db);
  AtomList l = merge(da, db, true);
  r.num_ = a.num_ * ka.inverse() * cofactor(l, da) + b.num_ * kb.inverse() * cofactor(l, db);
  r.den_ = std::move(l);
  cancel(r.num_, r.den_);
  return r;
}

RDE operator-(const RDE& a, const RDE& b) { return a + (-b); }

RDE operator*(const RDE& a, const RDE& b) {
  RDE r;
  r.frame_ = combine_frames(a.frame_, b.frame_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.den_.empty() && b.den_.empty()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly na = a.num_, nb = b.num_;
  AtomList da = a.den_, db = b.den_;
  if (!db.empty()) cancel(na, db);
  if (!da.empty()) cancel(nb, da);
  auto [ka, kb] = unify(da, db);
  r.num_ = na * nb * (ka * kb).inverse();
  r.den_ = merge(da, db, false);
  return r;
}

RDE RDE::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  RDE r;
  r.frame_ = frame_;
  auto [c, atoms] = split(num_);
  r.num_ = expand(den_) * c.inverse();
  r.den_ = std::move(atoms);
  sort_atoms(r.den_);
  return r;
}

RDE operator/(const RDE& a, const RDE& b) { return a * b.inverse(); }

RDE RDE::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RDE r;
  r.frame_ = frame_;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_;
  for (auto& [a, k] : r.den_) k *= static_cast<unsigned>(e);
  sort_atoms(r.den_);
  return r;
}

bool equal(const RDE& a, const RDE& b) {
  combine_frames(a.frame_, b.frame_);
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  for (std::uint64_t t = 0; t < 3; ++t) {
    ModPoint pt{0x5eed0000 + t};
    auto ea = a.eval_mod(pt, modp::kPrime);
    auto eb = b.eval_mod(pt, modp::kPrime);
    if (ea && eb && *ea != *eb) return false;
  }
  return (a - b).is_zero();
}

RDE RDE::derive() const { return derive(frame_); }

RDE RDE::derive(const FramePtr& frame) const {
  if (!frame) {
    for (Var v : variables())
      if (!v.is_parameter()) throw FrameError("cannot differentiate " + v.name() + " without a frame");
    return RDE();
  }
  combine_frames(frame_, frame);
  RDE r;
  r.frame_ = frame;
  Poly dn = frame->derive(num_);
  if (den_.empty()) {
    r.num_ = std::move(dn);
    return r;
  }
  // d(N / prod A_i^e_i) = (N' prod A_i - N sum e_i A_i' prod_{j!=i} A_j) / prod A_i^(e_i+1)
  Poly all(1);
  for (const auto& [a, e] : den_) all *= a;
  Poly top = dn * all;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly da = frame->derive(den_[i].first);
    if (da.is_zero()) continue;
    Poly others(1);
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) others *= den_[j].first;
    top -= num_ * da * others * Rational(static_cast<std::int64_t>(den_[i].second));
  }
  r.num_ = std::move(top);
  r.den_ = den_;
  for (auto& [a, e] : r.den_) ++e;
  cancel(r.num_, r.den_);
  return r;
}

RDE RDE::substitute(const std::function<std::optional<RDE>(Var)>& image, FramePtr target) const {
  FramePtr tf = target ? target : frame_;
  std::function<RDE(Var)> value = [&](Var v) -> RDE {
    if (auto r = image(v)) return *r;
    return RDE(Poly::var(v), tf);
  };
  RDE out = num_.evaluate<RDE>(value, RDE());
  if (!den_.empty()) {
    RDE d(1);
    for (const auto& [a, e] : den_) d *= a.evaluate<RDE>(value, RDE()).pow(static_cast<int>(e));
    if (d.is_zero()) throw DivisionError("substitution makes a denominator vanish");
    out = out / d;
  }
  out.frame_ = combine_frames(tf, out.frame_);
  return out;
}

RDE RDE::in_frame(FramePtr target) const {
  if (target)
    for (Var v : variables())
      if (!target->declares(v)) throw FrameError("jet " + v.name() + " is not declared in frame " + target->name());
  RDE r = *this;
  r.frame_ = std::move(target);
  return r;
}

std::optional<std::uint64_t> RDE::eval_mod(const ModPoint& pt, std::uint64_t p) const {
  auto n = num_.eval_mod(pt, p);
  if (!n) return std::nullopt;
  std::uint64_t d = 1;
  for (const auto& [a, e] : den_) {
    auto v = a.eval_mod(pt, p);
    if (!v || *v == 0) return std::nullopt;
    d = modp::mul(d, modp::pow(*v, e, p), p);
  }
  return modp::mul(*n, modp::inv(d, p), p);
}

std::string RDE::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string den;
  for (const auto& [a, e] : den_) {
    if (!den.empty()) den += "*";
    den += wrap(a.to_string(), a.num_terms() > 1 || (e > 1 && a.leading().first.degree() > 1));
    if (e > 1) den += "^" + std::to_string(e);
  }
  const bool single = den_.size() == 1 && (den_[0].second == 1 || den_[0].first.num_terms() > 1);
  return wrap(num_.to_string(), num_.num_terms() > 1) + "/" + wrap(den, !single);
}

std::string RDE::latex() const {
  if (den_.empty()) return num_.latex();
  std::string den;
  for (const auto& [a, e] : den_) {
    if (!den.empty()) den += " ";
    std::string s = a.latex();
    if (e > 1) {
      den += (a.num_terms() > 1 ? "\\left(" + s + "\\right)" : "{" + s + "}") + "^{" + std::to_string(e) + "}";
    } else {
      den += den_.size() > 1 && a.num_terms() > 1 ? "\\left(" + s + "\\right)" : s;
    }
  }
  if (num_.is_constant()) {
    // Keep a rational numerator flat: -p/(q den) rather than a nested fraction.
    const Rational c = num_.constant_value();
    const std::string q = c.denominator() == 1 ? "" : c.denominator().get_str() + " ";
    return std::string(c.sign() < 0 ? "-" : "") + "\\frac{" + c.numerator().get_str().substr(c.sign() < 0) + "}{" + q +
           den + "}";
  }
  return "\\frac{" + num_.latex() + "}{" + den + "}";
}

std::ostream& operator<<(std::ostream& os, const RDE& x) { return os << x.to_string(); }

RDE substitute_f(const RDE& x, const RDE& target) {
  const FramePtr& fr = x.frame();
  if (!fr) return x;
  Family over;
  switch (fr->rule(Family::F)) {
    case JetRule::Free: over = fr->base(); break;
    case JetRule::Composite: over = fr->base() == Family::Q ? (fr->rule(Family::Z) == JetRule::Free ? Family::Z : Family::W) : fr->base(); break;
    default: throw SubstitutionError("frame " + fr->name() + " has no formal f");
  }
  const Var base(over, 0, 0);
  for (Var v : target.variables())
    if (v != base && !v.is_parameter())
      throw SubstitutionError("substitute_f: target must be a function of " + base.name() + " only, found " + v.name());
  if (!x.contains_family(Family::F)) return x;
  FramePtr plain = over == Family::Z ? Frame::z_frame(fr->budget() + 1) : Frame::w_frame(fr->budget() + 1);
  const unsigned top = x.max_order(Family::F);
  std::vector<RDE> jets{target.in_frame(plain)};
  for (unsigned k = 1; k <= top; ++k) jets.push_back(jets.back().derive());
  return x.substitute(
      [&](Var v) -> std::optional<RDE> {
        if (v.family() != Family::F) return std::nullopt;
        return jets[v.order()].in_frame(fr);
      },
      fr);
}

}  // namespace trifold
