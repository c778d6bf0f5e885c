#include "trifold/diffalg/modular.hpp"

#include <utility>

namespace trifold::modp {

std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly rem(UPoly a, const UPoly& b, std::uint64_t p) {
  trim(a);
  const int db = degree(b);
  const std::uint64_t ilc = inv(b.back(), p);
  while (degree(a) >= db) {
    const std::uint64_t c = mul(a.back(), ilc, p);
    const int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(c, b[i], p), p);
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace trifold::modp
