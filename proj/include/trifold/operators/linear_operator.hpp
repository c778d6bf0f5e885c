#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifold/diffalg/errors.hpp"
#include "trifold/diffalg/rde.hpp"
#include "trifold/diffalg/sqrt_ext.hpp"

namespace trifold {

/// Per-scalar hooks used by the operator template.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<RDE> {
  static RDE derive(const RDE& x, const FramePtr& frame) { return frame ? x.derive(frame) : x.derive(); }
  static bool equal(const RDE& a, const RDE& b) { return trifold::equal(a, b); }
  static std::size_t terms(const RDE& x) { return x.term_count(); }
};

template <>
struct ScalarOps<SqrtExt> {
  static SqrtExt derive(const SqrtExt& x, const FramePtr&) { return x.derive(); }
  static bool equal(const SqrtExt& a, const SqrtExt& b) { return a == b; }
  static std::size_t terms(const SqrtExt& x) { return x.term_count(); }
};

/// Detached scalar prefactor label^power (for example z'(q)^3). It commutes
/// with everything by convention; when label^2 is known, pairs fold into
/// the coefficients.
template <class S>
struct Prefactor {
  int power = 0;
  std::string label;
  std::optional<S> square;
};

/// Sum_k c_k d^k over one derivation, kept in expanded standard form.
template <class S>
class LinearDiffOperator {
 public:
  using Scalar = S;

  LinearDiffOperator() = default;
  explicit LinearDiffOperator(std::vector<S> coeffs, FramePtr frame = nullptr)
      : frame_(std::move(frame)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LinearDiffOperator scalar(const S& c, FramePtr frame = nullptr) { return LinearDiffOperator({c}, std::move(frame)); }
  /// d^k.
  static LinearDiffOperator d(FramePtr frame = nullptr, unsigned k = 1) {
    std::vector<S> c(k + 1, S());
    c[k] = S(1);
    return LinearDiffOperator(std::move(c), std::move(frame));
  }
  /// d + a.
  static LinearDiffOperator first_order(const S& a, FramePtr frame = nullptr) {
    return LinearDiffOperator({a, S(1)}, std::move(frame));
  }
  /// Left-to-right product of factors.
  static LinearDiffOperator product(const std::vector<LinearDiffOperator>& factors) {
    if (factors.empty()) return scalar(S(1));
    LinearDiffOperator out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = compose(out, factors[i]);
    return out;
  }

  const FramePtr& frame() const { return frame_; }
  const std::vector<S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  S coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(); }
  const Prefactor<S>& prefactor() const { return pre_; }

  LinearDiffOperator with_prefactor(int power, std::string label, std::optional<S> square = std::nullopt) const {
    LinearDiffOperator r = *this;
    r.pre_ = Prefactor<S>{power, std::move(label), std::move(square)};
    r.fold();
    return r;
  }
  /// Drops the detached prefactor.
  LinearDiffOperator bare() const {
    LinearDiffOperator r = *this;
    r.pre_ = Prefactor<S>{};
    return r;
  }

  friend LinearDiffOperator operator+(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    return combine(a, b, false);
  }
  friend LinearDiffOperator operator-(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    return combine(a, b, true);
  }
  LinearDiffOperator operator-() const {
    LinearDiffOperator r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  /// Left multiplication by a scalar.
  friend LinearDiffOperator operator*(const S& s, const LinearDiffOperator& p) {
    LinearDiffOperator r = p;
    for (auto& c : r.coeffs_) c = s * c;
    r.trim();
    return r;
  }

  /// P o Q via the generalized Leibniz rule.
  friend LinearDiffOperator compose(const LinearDiffOperator& p, const LinearDiffOperator& q) {
    FramePtr fr = combine_frames(p.frame_, q.frame_);
    LinearDiffOperator r;
    r.frame_ = fr;
    r.pre_ = merge_prefactors(p.pre_, q.pre_);
    if (p.is_zero() || q.is_zero()) return r;
    const std::size_t np = p.coeffs_.size() - 1, nq = q.coeffs_.size() - 1;
    // derivs[j][l] = l-th derivative of q_j
    std::vector<std::vector<S>> derivs(nq + 1);
    for (std::size_t j = 0; j <= nq; ++j) {
      derivs[j].push_back(q.coeffs_[j]);
      for (std::size_t l = 1; l <= np; ++l) {
        const S& prev = derivs[j].back();
        derivs[j].push_back(is_zero_scalar(prev) ? S() : ScalarOps<S>::derive(prev, fr));
      }
    }
    std::vector<S> out(np + nq + 1, S());
    for (std::size_t i = 0; i <= np; ++i) {
      if (is_zero_scalar(p.coeffs_[i])) continue;
      std::int64_t binom = 1;
      for (std::size_t l = 0; l <= i; ++l) {
        for (std::size_t j = 0; j <= nq; ++j) {
          const S& dq = derivs[j][l];
          if (is_zero_scalar(dq)) continue;
          out[i - l + j] += S(Rational(binom)) * p.coeffs_[i] * dq;
        }
        binom = binom * static_cast<std::int64_t>(i - l) / static_cast<std::int64_t>(l + 1);
      }
    }
    r.coeffs_ = std::move(out);
    r.trim();
    r.fold();
    return r;
  }

  /// Sum_k (-d)^k o c_k.
  LinearDiffOperator transpose() const {
    LinearDiffOperator r;
    r.frame_ = frame_;
    r.pre_ = pre_;
    LinearDiffOperator minus_d = LinearDiffOperator({S(), S(-1)}, frame_);
    LinearDiffOperator power = scalar(S(1), frame_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) power = compose(power, minus_d);
      if (!is_zero_scalar(coeffs_[k])) r = r + compose(power, scalar(coeffs_[k], frame_)).bare();
    }
    r.pre_ = pre_;
    return r;
  }

  /// Sum_k c_k u^(k); the detached prefactor is not applied.
  S apply(const S& u) const {
    S acc = S();
    S du = u;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) du = is_zero_scalar(du) ? S() : ScalarOps<S>::derive(du, frame_);
      if (!is_zero_scalar(coeffs_[k])) acc += coeffs_[k] * du;
    }
    return acc;
  }

  friend bool operator==(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    combine_frames(a.frame_, b.frame_);
    if (a.pre_.power != b.pre_.power) return false;
    if (a.pre_.power != 0 && a.pre_.label != b.pre_.label) return false;
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!ScalarOps<S>::equal(a.coeffs_[k], b.coeffs_[k])) return false;
    return true;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += ScalarOps<S>::terms(c);
    return n;
  }

  /// Descending powers of D, e.g. "z'^3 * [D^3 + (-f'''/f'')*D^2]".
  std::string to_string(const std::string& dname = "D") const {
    std::string body;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const S& c = coeffs_[k];
      if (is_zero_scalar(c)) continue;
      std::string cs = c.to_string();
      std::string dk = k == 0 ? "" : (k == 1 ? dname : dname + "^" + std::to_string(k));
      std::string term;
      if (k == 0) {
        term = cs;
      } else if (cs == "1") {
        term = dk;
      } else if (cs == "-1") {
        term = "-" + dk;
      } else {
        term = "(" + cs + ")*" + dk;
      }
      if (!body.empty()) body += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
      else body = term;
    }
    if (body.empty()) body = "0";
    if (pre_.power == 0) return body;
    return pre_.label + (pre_.power == 1 ? "" : "^" + std::to_string(pre_.power)) + " * [" + body + "]";
  }

  std::string latex(const std::string& var = "z") const {
    std::string body;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const S& c = coeffs_[k];
      if (is_zero_scalar(c)) continue;
      std::string cs = c.latex();
      std::string dk = k == 0 ? ""
                       : k == 1 ? "\\frac{\\mathrm{d}}{\\mathrm{d}" + var + "}"
                                : "\\frac{\\mathrm{d}^{" + std::to_string(k) + "}}{\\mathrm{d}" + var + "^{" +
                                      std::to_string(k) + "}}";
      std::string term;
      if (k == 0) {
        term = cs;
      } else if (cs == "1") {
        term = dk;
      } else if (cs == "-1") {
        term = "-" + dk;
      } else {
        term = "\\left(" + cs + "\\right)" + dk;
      }
      if (!body.empty()) body += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
      else body = term;
    }
    if (body.empty()) body = "0";
    if (pre_.power == 0) return body;
    return pre_.label + (pre_.power == 1 ? "" : "^{" + std::to_string(pre_.power) + "}") + "\\left[" + body + "\\right]";
  }

 private:
  static bool is_zero_scalar(const S& s) { return s.is_zero(); }

  static Prefactor<S> merge_prefactors(const Prefactor<S>& a, const Prefactor<S>& b) {
    if (a.power == 0) return b;
    if (b.power == 0) return a;
    if (a.label != b.label) throw FrameError("cannot combine prefactors " + a.label + " and " + b.label);
    Prefactor<S> r = a;
    r.power += b.power;
    if (!r.square) r.square = b.square;
    return r;
  }

  static LinearDiffOperator combine(const LinearDiffOperator& a, const LinearDiffOperator& b, bool subtract) {
    LinearDiffOperator r;
    r.frame_ = combine_frames(a.frame_, b.frame_);
    if (a.is_zero()) r.pre_ = b.pre_;
    else if (b.is_zero()) r.pre_ = a.pre_;
    else if (a.pre_.power != b.pre_.power || (a.pre_.power && a.pre_.label != b.pre_.label))
      throw FrameError("cannot add operators with different detached prefactors");
    else r.pre_ = a.pre_;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.assign(n, S());
    for (std::size_t k = 0; k < n; ++k) {
      S x = a.coeff(k), y = b.coeff(k);
      r.coeffs_[k] = subtract ? x - y : x + y;
    }
    r.trim();
    if (r.is_zero()) r.pre_ = Prefactor<S>{};
    return r;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void fold() {
    if (!pre_.square) return;
    while (pre_.power >= 2) {
      for (auto& c : coeffs_) c = *pre_.square * c;
      pre_.power -= 2;
    }
    while (pre_.power <= -2) {
      for (auto& c : coeffs_) c = c / *pre_.square;
      pre_.power += 2;
    }
    if (pre_.power == 0) pre_ = Prefactor<S>{};
  }

  FramePtr frame_;
  std::vector<S> coeffs_;
  Prefactor<S> pre_;
};

using Operator = LinearDiffOperator<RDE>;
using SqrtOperator = LinearDiffOperator<SqrtExt>;

/// Images of z and f in the new frame plus the conjugating gauge.
struct PullbackData {
  RDE z;      // z as a function of w
  RDE f;      // f(z) as a function of w
  RDE gauge;  // g in g P g^{-1}
};

/// g * P|_{z=z(w), f=f(w)} * g^{-1} with d/dz = (dz/dw)^{-1} d/dw. A z' prefactor
/// becomes w' with the (dz/dw)^m factor folded into the coefficients.
Operator pullback(const Operator& p, const PullbackData& data, const FramePtr& target);

}  // namespace trifold
