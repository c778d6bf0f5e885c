#include "trifold/diffalg/sqrt_ext.hpp"

#include <ostream>

#include "trifold/diffalg/errors.hpp"

namespace trifold {
namespace {

SqrtContextPtr pick(const SqrtContextPtr& a, const SqrtContextPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!equal(a->A, b->A)) throw FrameError("square-root elements from different extensions combined");
  return a;
}

const SqrtContext& need(const SqrtContextPtr& ctx) {
  if (!ctx) throw FrameError("square-root element has no extension context");
  return *ctx;
}

}  // namespace

std::shared_ptr<const SqrtContext> SqrtContext::make(const RDE& A) {
  auto ctx = std::make_shared<SqrtContext>();
  ctx->A = A.frame() ? A : A.in_frame(Frame::z_frame());
  ctx->A_prime = ctx->A.derive();
  ctx->two_A = ctx->A * RDE(2);
  return ctx;
}

SqrtExt::SqrtExt(RDE even, RDE odd, SqrtContextPtr ctx)
    : even_(std::move(even)), odd_(std::move(odd)), ctx_(std::move(ctx)) {}

SqrtExt SqrtExt::operator-() const { return SqrtExt(-even_, -odd_, ctx_); }

SqrtExt operator+(const SqrtExt& a, const SqrtExt& b) {
  return SqrtExt(a.even_ + b.even_, a.odd_ + b.odd_, pick(a.ctx_, b.ctx_));
}

SqrtExt operator-(const SqrtExt& a, const SqrtExt& b) {
  return SqrtExt(a.even_ - b.even_, a.odd_ - b.odd_, pick(a.ctx_, b.ctx_));
}

SqrtExt operator*(const SqrtExt& a, const SqrtExt& b) {
  auto ctx = pick(a.ctx_, b.ctx_);
  RDE even = a.even_ * b.even_;
  if (!a.odd_.is_zero() && !b.odd_.is_zero()) even += need(ctx).two_A * a.odd_ * b.odd_;
  RDE odd = a.even_ * b.odd_ + a.odd_ * b.even_;
  return SqrtExt(std::move(even), std::move(odd), ctx);
}

SqrtExt SqrtExt::inverse() const {
  if (odd_.is_zero()) return SqrtExt(even_.inverse(), RDE(), ctx_);
  const auto& c = need(ctx_);
  RDE norm = even_ * even_ - c.two_A * odd_ * odd_;
  if (norm.is_zero()) throw DivisionError("square-root element has zero norm");
  RDE inv = norm.inverse();
  return SqrtExt(even_ * inv, -odd_ * inv, ctx_);
}

SqrtExt operator/(const SqrtExt& a, const SqrtExt& b) { return a * b.inverse(); }

SqrtExt SqrtExt::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  SqrtExt r(RDE(1), RDE(), ctx_), base = *this;
  for (unsigned k = static_cast<unsigned>(e); k; k >>= 1) {
    if (k & 1) r *= base;
    if (k > 1) base *= base;
  }
  return r;
}

bool operator==(const SqrtExt& a, const SqrtExt& b) { return equal(a.even_, b.even_) && equal(a.odd_, b.odd_); }

SqrtExt SqrtExt::derive() const {
  FramePtr zf = even_.frame() ? even_.frame() : odd_.frame();
  if (!zf && ctx_) zf = ctx_->A.frame();
  RDE da = zf ? even_.derive(zf) : even_.derive();
  if (odd_.is_zero()) return SqrtExt(RDE(), da, ctx_);
  const auto& c = need(ctx_);
  RDE db = odd_.derive(c.A.frame());
  return SqrtExt(c.two_A * db + odd_ * c.A_prime, da, ctx_);
}

std::string SqrtExt::to_string() const {
  if (odd_.is_zero()) return even_.to_string();
  std::string odd = "(" + odd_.to_string() + ")*s";
  if (even_.is_zero()) return odd;
  return "(" + even_.to_string() + ") + " + odd;
}

std::string SqrtExt::latex() const {
  if (odd_.is_zero()) return even_.latex();
  std::string odd = "\\left(" + odd_.latex() + "\\right) s";
  if (even_.is_zero()) return odd;
  return even_.latex() + " + " + odd;
}

std::ostream& operator<<(std::ostream& os, const SqrtExt& x) { return os << x.to_string(); }

}  // namespace trifold
